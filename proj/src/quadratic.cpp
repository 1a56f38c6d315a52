#include "dedesum/quadratic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dedesum/errors.hpp"

namespace dedesum {

namespace {

long double cot_pi_frac(long long k, long long f) {
  if (2 * k == f) return 0.0L;
  long double sign = 1.0L;
  if (2 * k > f) {
    k = f - k;
    sign = -1.0L;
  }
  return sign / std::tan(std::numbers::pi_v<long double> *
                         static_cast<long double>(k) / static_cast<long double>(f));
}

int roots_of_unity_in_quadratic(long long D) {
  if (D == 3) return 6;
  if (D == 4) return 4;
  return 2;
}

}  // namespace

QuadraticField QuadraticField::for_discriminant(long long D) {
  return {D, roots_of_unity_in_quadratic(D), quadratic_field_character(D)};
}

ClassNumberReport class_number(long long D, Oracle oracle) {
  if (!is_fundamental_discriminant(D))
    throw std::domain_error("class_number: -D is not a fundamental discriminant");
  int w = roots_of_unity_in_quadratic(D);

  Rational sum(0);
  for (long long n = 1; n < D; ++n) {
    int chi = kronecker(-D, n);
    if (chi == 1)
      sum += dedekind_sum(n, D);
    else if (chi == -1)
      sum -= dedekind_sum(n, D);
  }

  // h^2 = (w^2/4) * sum; the square root must be a positive integer
  Rational h_squared = sum * Rational(static_cast<long long>(w) * w, 4);
  const mpz_class& den = h_squared.denominator();
  mpz_class num = h_squared.numerator();
  if (den != 1 || num <= 0 || mpz_perfect_square_p(num.get_mpz_t()) == 0) {
    std::ostringstream os;
    os << "class_number: (w^2/4)*sum = " << h_squared.str()
       << " is not the square of a positive integer (D=" << D << ")";
    throw InternalInconsistency(os.str());
  }
  mpz_class h;
  mpz_sqrt(h.get_mpz_t(), num.get_mpz_t());

  ClassNumberReport report;
  report.D = D;
  report.w = w;
  report.h = h.get_si();
  report.exact_sum = sum;

  if (oracle == Oracle::forms || oracle == Oracle::all) {
    report.forms_h = class_number_forms_oracle(D);
    if (*report.forms_h != report.h) report.oracles_agree = false;
  }
  if (oracle == Oracle::analytic || oracle == Oracle::all) {
    report.analytic_h = analytic_class_number_estimate(D);
    if (std::abs(*report.analytic_h - static_cast<double>(report.h)) >= 1e-6)
      report.oracles_agree = false;
  }
  return report;
}

Rational class_number_squared_prime(long long p) {
  if (!is_prime(p) || p % 4 != 3 || p <= 3)
    throw std::domain_error("class_number_squared_prime: p must be a prime > 3 with p = 3 mod 4");
  Rational sum(0);
  for (long long b = 1; b < p; ++b) {
    int chi = kronecker(b, p);
    if (chi == 1)
      sum += dedekind_sum(b, p);
    else
      sum -= dedekind_sum(b, p);
  }
  return sum;
}

bool parity_check(long long p) {
  if (!is_prime(p) || p % 4 != 3 || p <= 3)
    throw std::domain_error("parity_check: p must be a prime > 3 with p = 3 mod 4");
  return class_number(p).h % 2 == 1;
}

long long class_number_forms_oracle(long long D) {
  if (!is_fundamental_discriminant(D))
    throw std::domain_error("class_number_forms_oracle: -D is not a fundamental discriminant");
  long long count = 0;
  for (long long a = 1; 3 * a * a <= D; ++a) {
    for (long long b = -a; b <= a; ++b) {
      long long num = b * b + D;
      if (num % (4 * a) != 0) continue;
      long long c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && (-b == a || a == c)) continue;  // boundary forms counted once
      if (gcd(gcd(a, b), c) != 1) continue;
      ++count;
    }
  }
  return count;
}

double l1_analytic_oracle(const DirichletCharacter& chi) {
  if (!chi.is_odd()) throw std::domain_error("l1_analytic_oracle: character must be odd");
  if (!chi.is_primitive())
    throw std::domain_error("l1_analytic_oracle: character must be primitive");
  long long f = chi.modulus();
  if (f <= 2) throw std::domain_error("l1_analytic_oracle: modulus must exceed 2");

  long long r = chi.order();
  long double re = 0.0L, im = 0.0L, re_c = 0.0L, im_c = 0.0L;
  long double step = 2.0L * std::numbers::pi_v<long double> / static_cast<long double>(r);
  for (long long n = 1; n < f; ++n) {
    auto t = chi.rotation(n);
    if (!t) continue;
    long double cot = cot_pi_frac(n, f);
    long double tre = cot * std::cos(step * static_cast<long double>(*t));
    long double tim = cot * std::sin(step * static_cast<long double>(*t));
    long double y = tre - re_c, s = re + y;
    re_c = (s - re) - y;
    re = s;
    y = tim - im_c;
    s = im + y;
    im_c = (s - im) - y;
    im = s;
  }
  long double scale = std::numbers::pi_v<long double> / (2.0L * static_cast<long double>(f));
  return static_cast<double>(scale * std::sqrt(re * re + im * im));
}

double analytic_class_number_estimate(long long D) {
  if (!is_fundamental_discriminant(D))
    throw std::domain_error("analytic_class_number_estimate: -D is not a fundamental discriminant");
  // real character: the cotangent sum is real, evaluated via kronecker directly
  long double sum = 0.0L, comp = 0.0L;
  for (long long n = 1; n < D; ++n) {
    int chi = kronecker(-D, n);
    if (chi == 0) continue;
    long double term = static_cast<long double>(chi) * cot_pi_frac(n, D);
    long double y = term - comp, s = sum + y;
    comp = (s - sum) - y;
    sum = s;
  }
  long double l1 = std::numbers::pi_v<long double> /
                   (2.0L * static_cast<long double>(D)) * std::fabs(sum);
  int w = roots_of_unity_in_quadratic(D);
  return static_cast<double>(static_cast<long double>(w) *
                             std::sqrt(static_cast<long double>(D)) /
                             (2.0L * std::numbers::pi_v<long double>)*l1);
}

}  // namespace dedesum
