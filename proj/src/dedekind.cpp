#include "dedesum/dedekind.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dedesum {

namespace {

long long normalize_args(long long c, long long d) {
  if (d <= 0) throw std::domain_error("dedekind_sum: d must be >= 1");
  c %= d;
  if (c < 0) c += d;
  if (gcd(c, d) != 1)
    throw std::domain_error("dedekind_sum: arguments must be coprime");
  return c;
}

// cot(pi k / d) for 0 < k < d, reduced to (0, 1/2] so tan never sees an
// argument near pi
long double cot_pi_frac(long long k, long long d) {
  if (2 * k == d) return 0.0L;
  long double sign = 1.0L;
  if (2 * k > d) {
    k = d - k;
    sign = -1.0L;
  }
  long double x = std::numbers::pi_v<long double> * static_cast<long double>(k) /
                  static_cast<long double>(d);
  return sign / std::tan(x);
}

}  // namespace

Rational dedekind_sum(long long c, long long d) {
  c = normalize_args(c, d);
  Rational acc(0);
  const Rational quarter(1, 4);
  int sign = 1;
  while (d > 1) {
    // s(c,d) = -1/4 + (c^2 + d^2 + 1)/(12cd) - s(d mod c, c)
    Rational term =
        d < (1LL << 29)
            ? Rational(c * c + d * d + 1, 12 * c * d)
            : Rational(to_mpz(c) * to_mpz(c) + to_mpz(d) * to_mpz(d) + 1,
                       to_mpz(12) * to_mpz(c) * to_mpz(d));
    term -= quarter;
    acc += sign > 0 ? term : -term;
    long long next = d % c;
    d = c;
    c = next;
    sign = -sign;
  }
  return acc;
}

Rational dedekind_sum_sawtooth(long long c, long long d) {
  c = normalize_args(c, d);
  // ((n/d))((nc/d)) = (2n - d)(2r - d) / (4d^2) with r = nc mod d; the
  // sawtooth never hits an integer for 0 < n < d because gcd(c,d) = 1
  mpz_class num = 0;
  long long r = 0;
  for (long long n = 1; n < d; ++n) {
    r += c;
    if (r >= d) r -= d;
    num += to_mpz(2 * n - d) * to_mpz(2 * r - d);
  }
  return Rational(num, to_mpz(4 * d) * to_mpz(d));
}

double dedekind_sum_cotangent(long long c, long long d) {
  c = normalize_args(c, d);
  if (d < 2) throw std::domain_error("dedekind_sum_cotangent: d must be >= 2");
  long double sum = 0.0L, comp = 0.0L;
  long long r = 0;
  for (long long n = 1; n < d; ++n) {
    r += c;
    if (r >= d) r -= d;
    long double term = cot_pi_frac(n, d) * cot_pi_frac(r, d);
    long double y = term - comp;
    long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return static_cast<double>(sum / (4.0L * static_cast<long double>(d)));
}

Rational full_sum(long long d) {
  if (d < 2) throw std::domain_error("full_sum: d must be >= 2");
  Rational acc(0);
  for (long long c = 1; c < d; ++c)
    if (gcd(c, d) == 1) acc += dedekind_sum(c, d);
  return acc;
}

Rational residue_class_sum(long long p) {
  if (!is_prime(p) || p % 4 != 3 || p <= 3)
    throw std::domain_error("residue_class_sum: p must be a prime > 3 with p = 3 mod 4");
  Rational acc(0);
  for (long long c = 1; c < p; ++c)
    if (kronecker(c, p) == 1) acc += dedekind_sum(c, p);
  return acc;
}

Cyclotomic character_weighted_sum(const DirichletCharacter& chi, long long d) {
  long long f = chi.modulus();
  if (d < 1 || f % d != 0)
    throw std::domain_error("character_weighted_sum: d must divide the modulus");
  Cyclotomic acc(chi.order());
  for (long long b = 1; b <= f; ++b) {
    auto t = chi.rotation(b);
    if (!t) continue;
    acc.add_term(*t, dedekind_sum(b % d, d));
  }
  return acc;
}

}  // namespace dedesum
