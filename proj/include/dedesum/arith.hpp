#ifndef DEDESUM_ARITH_HPP
#define DEDESUM_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace dedesum {

// Exact fraction of arbitrary-precision integers. Always stored in lowest
// terms with a positive denominator, so equality is structural.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long long n) : q_(static_cast<long>(n)) {}  // NOLINT: implicit by design
  Rational(long long num, long long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den);

  static Rational from_string(const std::string& s);  // "a/b" or "a"

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  // Exact conversion to an integer; the value must be integral.
  mpz_class to_integer() const;

  double to_double() const { return q_.get_d(); }

  std::string str() const;  // "a/b", or "a" when the denominator is 1

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

struct PrimePower {
  long long prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Ordered list of (prime, exponent) with strictly increasing primes.
using Factorization = std::vector<PrimePower>;

inline constexpr long long kFactorizeCap = 10'000'000;

// gmpxx has no long long constructor; long is 64-bit on every supported target
inline mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }

long long gcd(long long a, long long b);
long long lcm(long long a, long long b);

// Complete prime factorization by trial division; n must be in [1, cap].
Factorization factorize(long long n);

// Moebius mu(n): 0 unless n is squarefree, otherwise (-1)^#prime factors.
int moebius(long long n);

long long euler_phi(long long n);

// All positive divisors of n, sorted ascending.
std::vector<long long> divisors(long long n);

bool is_prime(long long n);

// Kronecker symbol (a|n), the full extension of the Legendre/Jacobi symbol
// to all integers n (including n <= 0 and even n).
int kronecker(long long a, long long n);

long long mod_pow(long long base, long long exp, long long mod);

}  // namespace dedesum

#endif
