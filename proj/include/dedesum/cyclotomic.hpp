#ifndef DEDESUM_CYCLOTOMIC_HPP
#define DEDESUM_CYCLOTOMIC_HPP

#include <complex>
#include <string>
#include <vector>

#include "dedesum/arith.hpp"

namespace dedesum {

// Exact element of Q(zeta_m), stored on the group-algebra basis
// {zeta_m^0, ..., zeta_m^(m-1)}: value = sum coeffs[k] * zeta_m^k.
// The basis is redundant (the field has degree phi(m)), so equality and
// rationality extraction reduce modulo the m-th cyclotomic polynomial;
// arithmetic itself never reduces, which keeps hot loops cheap.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1) {}
  explicit Cyclotomic(long long order);
  Cyclotomic(long long order, std::vector<Rational> coeffs);
  Cyclotomic(const Rational& r)  // NOLINT: rationals embed implicitly
      : order_(1), coeffs_{r} {}

  static Cyclotomic root_of_unity(long long m, long long k);

  long long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Adds r * zeta_order^k in place; k is reduced mod order.
  void add_term(long long k, const Rational& r);

  bool is_zero() const;

 private:
  long long order_;
  std::vector<Rational> coeffs_;
};

// Re-expresses z in Q(zeta_m) for any multiple m of z.order().
Cyclotomic lift_to_order(const Cyclotomic& z, long long m);

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic operator-(const Cyclotomic& a);

Cyclotomic conjugate(const Cyclotomic& z);
Cyclotomic real_part(const Cyclotomic& z);

bool operator==(const Cyclotomic& a, const Cyclotomic& b);
inline bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

bool is_rational(const Cyclotomic& z);

// Exact rationality extraction; throws NotRational if z is irrational.
Rational to_rational(const Cyclotomic& z);

// Floating evaluation with zeta_m = exp(2*pi*i/m); cross-check use only.
std::complex<double> to_complex(const Cyclotomic& z);

// Canonical rendering of the reduced representation, e.g. "-1/2 + 1/3*zeta_5^2".
std::string to_string(const Cyclotomic& z);

// Coefficients of z reduced modulo Phi_m, low to high, length phi(order).
std::vector<Rational> reduced_coeffs(const Cyclotomic& z);

// Monic integer polynomial Phi_m, coefficients low to high.
struct CyclotomicPolynomial {
  long long order;
  std::vector<long long> coeffs;
  long long degree() const { return static_cast<long long>(coeffs.size()) - 1; }
};

// Computed by exact division of x^m - 1 by the proper-divisor product;
// results are memoized behind a lock.
const CyclotomicPolynomial& cyclotomic_polynomial(long long m);

}  // namespace dedesum

#endif
