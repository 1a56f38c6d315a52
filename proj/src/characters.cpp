#include "dedesum/characters.hpp"

#include <limits>
#include <stdexcept>

#include "dedesum/errors.hpp"

namespace dedesum {

namespace {

constexpr std::uint32_t kNonUnit = std::numeric_limits<std::uint32_t>::max();

long long primitive_root_mod_prime_power(long long p, int e) {
  Factorization pm1_factors = factorize(p - 1);
  long long g = 2;
  for (;; ++g) {
    bool ok = true;
    for (const auto& [q, _] : pm1_factors)
      if (mod_pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) break;
  }
  if (e == 1) return g;
  // g lifts to a primitive root mod p^e iff g^(p-1) != 1 mod p^2
  if (mod_pow(g, p - 1, p * p) == 1) g += p;
  return g;
}

long long mul_mod(long long a, long long b, long long m) {
  return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

}  // namespace

UnitGroup::UnitGroup(long long modulus) : modulus_(modulus) {
  if (modulus < 1) throw std::domain_error("UnitGroup: modulus must be >= 1");
  if (modulus > kModulusCap)
    throw std::domain_error("UnitGroup: modulus exceeds the lookup-table cap");
  phi_ = euler_phi(modulus);

  // local generators per prime power, CRT-lifted to residues mod modulus
  for (const auto& [p, e] : factorize(modulus)) {
    long long q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    long long cof = modulus / q;
    auto lift = [&](long long g_local) {
      if (cof == 1) return g_local % q;
      // x = 1 + cof*t with cof*t = g-1 mod q
      long long inv = mod_pow(cof % q, euler_phi(q) - 1, q);
      long long t = mul_mod(((g_local - 1) % q + q) % q, inv, q);
      return (1 + cof * t) % modulus_;
    };
    if (p == 2) {
      if (e == 1) continue;  // (Z/2)* trivial
      components_.push_back({lift(q - 1), 2});
      if (e >= 3) components_.push_back({lift(5), q / 4});
    } else {
      components_.push_back({lift(primitive_root_mod_prime_power(p, e)),
                             q / p * (p - 1)});
    }
  }

  exponent_ = 1;
  for (const auto& c : components_) exponent_ = lcm(exponent_, c.order);

  size_t k = components_.size();
  if (k > 0) {
    dlog_.assign(static_cast<size_t>(modulus) * k, kNonUnit);
    std::vector<std::uint32_t> digits(k, 0);
    long long v = 1 % modulus;
    for (;;) {
      for (size_t i = 0; i < k; ++i)
        dlog_[static_cast<size_t>(v) * k + i] = digits[i];
      size_t i = k;
      while (i-- > 0) {
        v = mul_mod(v, components_[i].generator, modulus);
        if (++digits[i] < components_[i].order) break;
        digits[i] = 0;
        if (i == 0) return;
      }
    }
  }
}

bool UnitGroup::is_unit(long long n) const {
  n %= modulus_;
  if (n < 0) n += modulus_;
  return gcd(n, modulus_) == 1;
}

std::span<const std::uint32_t> UnitGroup::dlog(long long n) const {
  n %= modulus_;
  if (n < 0) n += modulus_;
  size_t k = components_.size();
  if (k == 0) {
    if (gcd(n, modulus_) != 1)
      throw std::domain_error("UnitGroup::dlog: not a unit");
    return {};
  }
  const std::uint32_t* row = dlog_.data() + static_cast<size_t>(n) * k;
  if (row[0] == kNonUnit) throw std::domain_error("UnitGroup::dlog: not a unit");
  return {row, k};
}

std::shared_ptr<const UnitGroup> unit_group(long long f) {
  return std::make_shared<const UnitGroup>(f);
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> group,
                                       std::vector<long long> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  const auto& comps = group_->components();
  if (exponents_.size() != comps.size())
    throw std::domain_error("DirichletCharacter: one exponent per component required");
  order_ = 1;
  for (size_t i = 0; i < comps.size(); ++i) {
    long long o = comps[i].order;
    exponents_[i] = ((exponents_[i] % o) + o) % o;
    order_ = lcm(order_, o / gcd(exponents_[i], o));
  }
  auto t = rotation(group_->modulus() - 1);
  odd_ = t.has_value() && *t != 0;
}

std::optional<long long> DirichletCharacter::rotation(long long n) const {
  if (!group_->is_unit(n)) return std::nullopt;
  auto digits = group_->dlog(n);
  const auto& comps = group_->components();
  long long N = group_->exponent();
  __int128 t = 0;
  for (size_t i = 0; i < comps.size(); ++i)
    t += static_cast<__int128>(exponents_[i]) * digits[i] * (N / comps[i].order);
  long long tN = static_cast<long long>(t % N);
  long long step = N / order_;
  if (tN % step != 0)
    throw InternalInconsistency("character value outside its own order");
  return (tN / step) % order_;
}

Cyclotomic DirichletCharacter::operator()(long long n) const {
  auto t = rotation(n);
  if (!t) return Cyclotomic(order_);  // zero
  return Cyclotomic::root_of_unity(order_, *t);
}

long long DirichletCharacter::conductor() const {
  long long cached = conductor_.load(std::memory_order_acquire);
  if (cached != 0) return cached;
  long long f = modulus();
  long long result = f;
  for (long long d : dedesum::divisors(f)) {
    // chi must kill every unit x = 1 mod d
    bool trivial_on_kernel = true;
    for (long long x = 1 + d; x < f && trivial_on_kernel; x += d)
      if (group_->is_unit(x)) {
        auto t = rotation(x);
        if (*t != 0) trivial_on_kernel = false;
      }
    if (trivial_on_kernel) {
      result = d;
      break;
    }
  }
  conductor_.store(result, std::memory_order_release);
  return result;
}

DirichletCharacter DirichletCharacter::primitive_part() const {
  long long d = conductor();
  long long f = modulus();
  auto sub = unit_group(d);
  std::vector<long long> exps;
  exps.reserve(sub->components().size());
  for (const auto& comp : sub->components()) {
    // lift the subgroup generator to a unit mod f in the same class mod d
    long long x = comp.generator;
    while (gcd(x, f) != 1) x += d;
    long long t = *rotation(x);
    __int128 num = static_cast<__int128>(t) * comp.order;
    if (num % order_ != 0)
      throw InternalInconsistency("primitive part: value order does not divide component order");
    exps.push_back(static_cast<long long>(num / order_) % comp.order);
  }
  return DirichletCharacter(std::move(sub), std::move(exps));
}

DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b) {
  if (a.modulus() != b.modulus())
    throw std::domain_error("character product: moduli must match");
  std::vector<long long> exps(a.exponents().size());
  for (size_t i = 0; i < exps.size(); ++i)
    exps[i] = a.exponents()[i] + b.exponents()[i];
  return DirichletCharacter(a.group_ptr(), std::move(exps));
}

DirichletCharacter DirichletCharacter::conjugate() const {
  std::vector<long long> exps(exponents_.size());
  for (size_t i = 0; i < exps.size(); ++i) exps[i] = -exponents_[i];
  return DirichletCharacter(group_, std::move(exps));
}

std::vector<DirichletCharacter> all_characters(long long f) {
  auto group = unit_group(f);
  const auto& comps = group->components();
  std::vector<DirichletCharacter> out;
  out.reserve(static_cast<size_t>(group->phi()));
  std::vector<long long> exps(comps.size(), 0);
  for (;;) {
    out.emplace_back(group, exps);
    size_t i = comps.size();
    while (i-- > 0) {
      if (++exps[i] < comps[i].order) break;
      exps[i] = 0;
      if (i == 0) return out;
    }
    if (comps.empty()) return out;
  }
}

DirichletCharacter principal_character(long long f) {
  auto group = unit_group(f);
  return DirichletCharacter(group, std::vector<long long>(group->components().size(), 0));
}

bool is_fundamental_discriminant(long long D) {
  if (D < 3) return false;
  auto squarefree = [](long long n) {
    for (const auto& pp : factorize(n))
      if (pp.exponent > 1) return false;
    return true;
  };
  if (D % 4 == 3) return squarefree(D);
  if (D % 4 == 0) {
    long long m = D / 4;
    return (m % 4 == 1 || m % 4 == 2) && squarefree(m);
  }
  return false;
}

DirichletCharacter quadratic_field_character(long long D) {
  if (!is_fundamental_discriminant(D))
    throw std::domain_error("quadratic_field_character: -D is not a fundamental discriminant");
  auto group = unit_group(D);
  std::vector<long long> exps;
  exps.reserve(group->components().size());
  for (const auto& comp : group->components()) {
    int v = kronecker(-D, comp.generator);
    if (v == 1) {
      exps.push_back(0);
    } else if (v == -1) {
      if (comp.order % 2 != 0)
        throw InternalInconsistency("quadratic character needs an even component order");
      exps.push_back(comp.order / 2);
    } else {
      throw InternalInconsistency("kronecker symbol vanished on a unit");
    }
  }
  return DirichletCharacter(std::move(group), std::move(exps));
}

}  // namespace dedesum
