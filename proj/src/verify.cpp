#include "dedesum/verify.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

#include "dedesum/abelian.hpp"
#include "dedesum/dedekind.hpp"
#include "dedesum/quadratic.hpp"

namespace dedesum::verify {

namespace {

void record(Result& r, bool ok, const std::string& counterexample) {
  ++r.checks;
  if (!ok) {
    if (r.violations == 0) r.first_counterexample = counterexample;
    ++r.violations;
  }
}

bool check_reciprocity_pair(long long c, long long d, Result& r) {
  Rational lhs = dedekind_sum(c, d) + dedekind_sum(d, c);
  Rational rhs = Rational(to_mpz(c) * to_mpz(c) + to_mpz(d) * to_mpz(d) + 1,
                          to_mpz(12) * to_mpz(c) * to_mpz(d)) -
                 Rational(1, 4);
  bool ok = lhs == rhs;
  std::ostringstream os;
  if (!ok)
    os << "c=" << c << " d=" << d << " s(c,d)+s(d,c)=" << lhs.str()
       << " expected " << rhs.str();
  record(r, ok, os.str());
  return ok;
}

}  // namespace

Result reciprocity(long long max_d, long long samples, std::uint64_t seed) {
  Result r;
  r.suite = "reciprocity";
  for (long long d = 1; d <= std::min<long long>(max_d, 100); ++d)
    for (long long c = 1; c <= d; ++c)
      if (gcd(c, d) == 1) check_reciprocity_pair(c, d, r);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> dist(2, max_d);
  for (long long i = 0; i < samples; ++i) {
    long long d = dist(rng);
    long long c = std::uniform_int_distribution<long long>(1, d)(rng);
    long long g = gcd(c, d);
    check_reciprocity_pair(c / g, d / g, r);
  }
  return r;
}

Result vanishing(long long max_f) {
  Result r;
  r.suite = "vanishing";
  for (long long f = 3; f <= max_f; ++f) {
    auto chars = all_characters(f);
    auto divs = divisors(f);
    for (const auto& chi : chars) {
      if (!chi.is_primitive()) continue;
      for (long long d : divs) {
        if (d == f) continue;
        Cyclotomic s = character_weighted_sum(chi, d);
        bool ok = s.is_zero();
        std::ostringstream os;
        if (!ok) {
          os << "f=" << f << " d=" << d << " chi exponents=(";
          for (size_t i = 0; i < chi.exponents().size(); ++i)
            os << (i ? "," : "") << chi.exponents()[i];
          os << ") S(chi,f,d)=" << to_string(s);
        }
        record(r, ok, os.str());
      }
    }
  }
  return r;
}

Result oracle_equivalence(long long max_d) {
  Result r;
  r.suite = "oracle-equivalence";
  for (long long d = 1; d <= max_d; ++d) {
    for (long long c = 0; c < std::max<long long>(d, 1); ++c) {
      if (gcd(c, d) != 1) continue;
      Rational fast = dedekind_sum(c, d);
      Rational saw = dedekind_sum_sawtooth(c, d);
      bool ok = fast == saw;
      // 6 d s(c,d) must be an integer
      ok = ok && (fast * Rational(6 * d)).is_integer();
      if (d >= 2) {
        double cot = dedekind_sum_cotangent(c, d);
        double tol = static_cast<double>(d) * std::pow(2.0, -40);
        ok = ok && std::abs(cot - fast.to_double()) < tol;
      }
      std::ostringstream os;
      if (!ok)
        os << "c=" << c << " d=" << d << " recursion=" << fast.str()
           << " sawtooth=" << saw.str();
      record(r, ok, os.str());
    }
  }
  return r;
}

Result parity(long long max_p) {
  Result r;
  r.suite = "parity";
  for (long long p = 7; p <= max_p; p += 4) {
    if (!is_prime(p)) continue;
    ClassNumberReport cn = class_number(p);
    Rational sum = class_number_squared_prime(p);
    Rational twice_residue = residue_class_sum(p) * Rational(2);
    bool ok = sum == Rational(cn.h * cn.h) && sum == twice_residue && cn.h % 2 == 1;
    std::ostringstream os;
    if (!ok)
      os << "p=" << p << " h=" << cn.h << " sum=" << sum.str()
         << " 2*S(H2,p)=" << twice_residue.str();
    record(r, ok, os.str());
  }
  return r;
}

Result l1sq_agreement(long long max_f, double tol) {
  Result r;
  r.suite = "l1sq";
  for (long long f = 3; f <= max_f; ++f) {
    for (const auto& chi : all_characters(f)) {
      if (!chi.is_odd() || !chi.is_primitive()) continue;
      double l1 = l1_analytic_oracle(chi);
      double lhs = static_cast<double>(f) / (std::numbers::pi * std::numbers::pi) * l1 * l1;
      std::complex<double> exact = to_complex(l1sq_scaled(chi));
      bool ok = std::abs(lhs - exact.real()) < tol && std::abs(exact.imag()) < tol;
      std::ostringstream os;
      if (!ok)
        os << "f=" << f << " (f/pi^2)L^2=" << lhs << " exact~" << exact.real();
      record(r, ok, os.str());
    }
  }
  return r;
}

}  // namespace dedesum::verify
