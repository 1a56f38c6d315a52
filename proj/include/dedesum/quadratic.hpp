#ifndef DEDESUM_QUADRATIC_HPP
#define DEDESUM_QUADRATIC_HPP

#include <optional>

#include "dedesum/characters.hpp"
#include "dedesum/dedekind.hpp"

namespace dedesum {

// Imaginary quadratic field Q(sqrt(-D)) of discriminant -D.
struct QuadraticField {
  long long D;
  int w;  // roots of unity: 6 for D=3, 4 for D=4, else 2
  DirichletCharacter chi;

  static QuadraticField for_discriminant(long long D);
};

enum class Oracle { none, forms, analytic, all };

struct ClassNumberReport {
  long long D = 0;
  long long h = 0;
  int w = 2;
  Rational exact_sum;  // sum chi(n) s(n,D) over units n
  std::optional<long long> forms_h;
  std::optional<double> analytic_h;
  bool oracles_agree = true;  // among the oracles that ran
};

// Exact class number from Dedekind sums: h^2 = (w^2/4) sum chi(n) s(n,D),
// with the square root extracted exactly and integrality asserted.
ClassNumberReport class_number(long long D, Oracle oracle = Oracle::none);

// sum_b chi(b) s(b,p) for prime p = 3 mod 4, p > 3; equals h^2 and
// 2 * residue_class_sum(p).
Rational class_number_squared_prime(long long p);

// True iff the class number of Q(sqrt(-p)) is odd; expected to always
// hold for prime p = 3 mod 4, p > 3.
bool parity_check(long long p);

// Independent oracle: count of reduced primitive binary quadratic forms
// (a,b,c) with b^2 - 4ac = -D, |b| <= a <= c, b >= 0 when |b| = a or a = c.
long long class_number_forms_oracle(long long D);

// Floating |L(1,chi)| via (pi/2f) |sum chi(n) cot(pi n/f)| for odd
// primitive chi; compensated extended-precision summation. Error budget
// f * 2^-46, far inside the 1e-6 rounding margin used by callers.
double l1_analytic_oracle(const DirichletCharacter& chi);

// Floating class-number estimate (w sqrt(D) / 2 pi) |L(1,chi_D)|;
// same D * 2^-46 budget.
double analytic_class_number_estimate(long long D);

}  // namespace dedesum

#endif
