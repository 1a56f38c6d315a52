#include "dedesum/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace dedesum {

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num) / mpq_class(den);
  q_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::domain_error("Rational: cannot parse \"" + s + "\"");
  if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  q.canonicalize();
  return Rational(std::move(q));
}

mpz_class Rational::to_integer() const {
  if (!is_integer())
    throw std::domain_error("Rational: " + str() + " is not an integer");
  return q_.get_num();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

long long gcd(long long a, long long b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long lcm(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return std::llabs(a) / gcd(a, b) * std::llabs(b);
}

Factorization factorize(long long n) {
  if (n <= 0) throw std::domain_error("factorize: n must be >= 1");
  if (n > kFactorizeCap)
    throw std::domain_error("factorize: n exceeds the trial-division cap");
  Factorization out;
  for (long long p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

int moebius(long long n) {
  auto fact = factorize(n);
  for (const auto& pp : fact)
    if (pp.exponent > 1) return 0;
  return fact.size() % 2 == 0 ? 1 : -1;
}

long long euler_phi(long long n) {
  long long phi = 1;
  for (const auto& [p, e] : factorize(n)) {
    long long pe = 1;
    for (int i = 1; i < e; ++i) pe *= p;
    phi *= pe * (p - 1);
  }
  return phi;
}

std::vector<long long> divisors(long long n) {
  std::vector<long long> out{1};
  for (const auto& [p, e] : factorize(n)) {
    size_t base = out.size();
    long long pe = 1;
    for (int i = 0; i < e; ++i) {
      pe *= p;
      for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pe);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; p += (p == 2) ? 1 : 2)
    if (n % p == 0) return false;
  return true;
}

int kronecker(long long a, long long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && n % 2 == 0) return 0;
  int k = 1;
  // strip 2s from n; (a|2) is 0 for even a, +1 for a = +-1 mod 8, -1 otherwise
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  if (v % 2 == 1) {
    long long r = ((a % 8) + 8) % 8;
    if (r == 3 || r == 5) k = -k;
  }
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  // Jacobi symbol for odd positive n
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long long r = n % 8;
      if (r == 3 || r == 5) k = -k;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) k = -k;
    a %= n;
  }
  return n == 1 ? k : 0;
}

long long mod_pow(long long base, long long exp, long long mod) {
  if (mod <= 0) throw std::domain_error("mod_pow: modulus must be positive");
  unsigned long long b = static_cast<unsigned long long>(((base % mod) + mod) % mod);
  unsigned long long m = static_cast<unsigned long long>(mod);
  unsigned long long r = m == 1 ? 0 : 1;
  while (exp > 0) {
    if (exp & 1) r = static_cast<unsigned long long>((static_cast<__int128>(r) * b) % m);
    b = static_cast<unsigned long long>((static_cast<__int128>(b) * b) % m);
    exp >>= 1;
  }
  return static_cast<long long>(r);
}

}  // namespace dedesum
