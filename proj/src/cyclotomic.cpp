#include "dedesum/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dedesum/errors.hpp"

namespace dedesum {

Cyclotomic::Cyclotomic(long long order) : order_(order) {
  if (order < 1) throw std::domain_error("Cyclotomic: order must be >= 1");
  coeffs_.resize(static_cast<size_t>(order));
}

Cyclotomic::Cyclotomic(long long order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 1) throw std::domain_error("Cyclotomic: order must be >= 1");
  if (coeffs_.size() != static_cast<size_t>(order))
    throw std::domain_error("Cyclotomic: coefficient count must equal order");
}

Cyclotomic Cyclotomic::root_of_unity(long long m, long long k) {
  if (m < 1) throw std::domain_error("root_of_unity: order must be >= 1");
  Cyclotomic z(m);
  z.add_term(k, Rational(1));
  return z;
}

void Cyclotomic::add_term(long long k, const Rational& r) {
  k %= order_;
  if (k < 0) k += order_;
  coeffs_[static_cast<size_t>(k)] += r;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : reduced_coeffs(*this))
    if (!c.is_zero()) return false;
  return true;
}

Cyclotomic lift_to_order(const Cyclotomic& z, long long m) {
  if (m == z.order()) return z;
  if (m < 1 || m % z.order() != 0)
    throw std::domain_error("lift_to_order: target must be a multiple of the order");
  long long scale = m / z.order();
  Cyclotomic out(m);
  for (long long k = 0; k < z.order(); ++k)
    out.add_term(k * scale, z.coeffs()[static_cast<size_t>(k)]);
  return out;
}

namespace {

std::pair<Cyclotomic, Cyclotomic> to_common_order(const Cyclotomic& a,
                                                  const Cyclotomic& b) {
  long long m = lcm(a.order(), b.order());
  return {lift_to_order(a, m), lift_to_order(b, m)};
}

}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  auto [x, y] = to_common_order(a, b);
  for (long long k = 0; k < x.order(); ++k)
    x.add_term(k, y.coeffs()[static_cast<size_t>(k)]);
  return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  return a + (-b);
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  auto [x, y] = to_common_order(a, b);
  long long m = x.order();
  Cyclotomic out(m);
  for (long long i = 0; i < m; ++i) {
    const Rational& ci = x.coeffs()[static_cast<size_t>(i)];
    if (ci.is_zero()) continue;
    for (long long j = 0; j < m; ++j) {
      const Rational& cj = y.coeffs()[static_cast<size_t>(j)];
      if (cj.is_zero()) continue;
      out.add_term(i + j, ci * cj);
    }
  }
  return out;
}

Cyclotomic operator-(const Cyclotomic& a) {
  std::vector<Rational> c(a.coeffs().size());
  for (size_t k = 0; k < c.size(); ++k) c[k] = -a.coeffs()[k];
  return Cyclotomic(a.order(), std::move(c));
}

Cyclotomic conjugate(const Cyclotomic& z) {
  Cyclotomic out(z.order());
  for (long long k = 0; k < z.order(); ++k)
    out.add_term(-k, z.coeffs()[static_cast<size_t>(k)]);
  return out;
}

Cyclotomic real_part(const Cyclotomic& z) {
  Cyclotomic sum = z + conjugate(z);
  std::vector<Rational> c(sum.coeffs().size());
  Rational half(1, 2);
  for (size_t k = 0; k < c.size(); ++k) c[k] = sum.coeffs()[k] * half;
  return Cyclotomic(sum.order(), std::move(c));
}

const CyclotomicPolynomial& cyclotomic_polynomial(long long m) {
  if (m < 1) throw std::domain_error("cyclotomic_polynomial: m must be >= 1");
  static std::map<long long, CyclotomicPolynomial> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(m); it != cache.end()) return it->second;

  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, exact division over Z.
  // Computed iteratively so the recursion never re-enters the lock.
  for (long long d : divisors(m)) {
    if (cache.contains(d)) continue;
    std::vector<long long> num(static_cast<size_t>(d) + 1, 0);
    num.front() = -1;
    num.back() = 1;
    for (long long e : divisors(d)) {
      if (e == d) continue;
      const auto& phi_e = cache.at(e).coeffs;
      // in-place long division by the monic phi_e
      size_t deg_q = num.size() - phi_e.size();
      std::vector<long long> quot(deg_q + 1, 0);
      for (size_t i = deg_q + 1; i-- > 0;) {
        long long lead = num[i + phi_e.size() - 1];
        quot[i] = lead;
        if (lead == 0) continue;
        for (size_t j = 0; j < phi_e.size(); ++j)
          num[i + j] -= lead * phi_e[j];
      }
      num = std::move(quot);
    }
    cache.emplace(d, CyclotomicPolynomial{d, std::move(num)});
  }
  return cache.at(m);
}

std::vector<Rational> reduced_coeffs(const Cyclotomic& z) {
  const auto& phi = cyclotomic_polynomial(z.order());
  std::vector<Rational> rem = z.coeffs();
  size_t deg_phi = phi.coeffs.size() - 1;
  for (size_t i = rem.size(); i-- > deg_phi;) {
    Rational lead = rem[i];
    if (lead.is_zero()) continue;
    rem[i] = Rational(0);
    for (size_t j = 0; j < deg_phi; ++j)
      rem[i - deg_phi + j] -= lead * Rational(phi.coeffs[j]);
  }
  rem.resize(deg_phi == 0 ? 1 : deg_phi);
  return rem;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return (a - b).is_zero();
}

bool is_rational(const Cyclotomic& z) {
  auto rem = reduced_coeffs(z);
  for (size_t k = 1; k < rem.size(); ++k)
    if (!rem[k].is_zero()) return false;
  return true;
}

Rational to_rational(const Cyclotomic& z) {
  auto rem = reduced_coeffs(z);
  for (size_t k = 1; k < rem.size(); ++k)
    if (!rem[k].is_zero()) throw NotRational(to_string(z));
  return rem[0];
}

std::complex<double> to_complex(const Cyclotomic& z) {
  // accumulate in long double; the result is a cross-check value
  long double re = 0, im = 0;
  long double step = 2.0L * std::numbers::pi_v<long double> /
                     static_cast<long double>(z.order());
  for (long long k = 0; k < z.order(); ++k) {
    const Rational& c = z.coeffs()[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    long double w = static_cast<long double>(c.to_double());
    re += w * std::cos(step * static_cast<long double>(k));
    im += w * std::sin(step * static_cast<long double>(k));
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::string to_string(const Cyclotomic& z) {
  auto rem = reduced_coeffs(z);
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < rem.size(); ++k) {
    if (rem[k].is_zero()) continue;
    Rational c = rem[k];
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    if (k == 0) {
      os << c.str();
    } else {
      if (!(c == Rational(1))) os << c.str() << "*";
      os << "zeta_" << z.order();
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace dedesum
