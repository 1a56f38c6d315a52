#ifndef DEDESUM_CHARACTERS_HPP
#define DEDESUM_CHARACTERS_HPP

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dedesum/cyclotomic.hpp"

namespace dedesum {

struct UnitGroupComponent {
  long long generator;  // residue mod the full modulus
  long long order;
};

// (Z/fZ)* decomposed into cyclic components via CRT over prime powers:
// one primitive root per odd prime power, (-1, 5) for 2^k with k >= 3,
// (-1) for 4, nothing for 2. Discrete logs are table lookups.
class UnitGroup {
 public:
  explicit UnitGroup(long long modulus);

  long long modulus() const { return modulus_; }
  long long phi() const { return phi_; }
  // lcm of the component orders (1 for the trivial group)
  long long exponent() const { return exponent_; }
  const std::vector<UnitGroupComponent>& components() const { return components_; }

  bool is_unit(long long n) const;
  // exponent tuple of n on the generators; n must be a unit
  std::span<const std::uint32_t> dlog(long long n) const;

  static constexpr long long kModulusCap = 1'000'000;

 private:
  long long modulus_;
  long long phi_;
  long long exponent_;
  std::vector<UnitGroupComponent> components_;
  std::vector<std::uint32_t> dlog_;  // flat [n*k .. n*k+k), sentinel = no unit
};

// A Dirichlet character mod f, encoded by one exponent per unit-group
// component: chi(g_i) = zeta_{o_i}^{e_i}. Immutable after construction.
class DirichletCharacter {
 public:
  DirichletCharacter(std::shared_ptr<const UnitGroup> group,
                     std::vector<long long> exponents);

  // the cached conductor lives in an atomic, so spell the copies out
  DirichletCharacter(const DirichletCharacter& o)
      : group_(o.group_),
        exponents_(o.exponents_),
        order_(o.order_),
        odd_(o.odd_),
        conductor_(o.conductor_.load(std::memory_order_relaxed)) {}
  DirichletCharacter(DirichletCharacter&& o) noexcept
      : group_(std::move(o.group_)),
        exponents_(std::move(o.exponents_)),
        order_(o.order_),
        odd_(o.odd_),
        conductor_(o.conductor_.load(std::memory_order_relaxed)) {}
  DirichletCharacter& operator=(const DirichletCharacter& o) {
    group_ = o.group_;
    exponents_ = o.exponents_;
    order_ = o.order_;
    odd_ = o.odd_;
    conductor_.store(o.conductor_.load(std::memory_order_relaxed),
                     std::memory_order_relaxed);
    return *this;
  }
  DirichletCharacter& operator=(DirichletCharacter&& o) noexcept {
    group_ = std::move(o.group_);
    exponents_ = std::move(o.exponents_);
    order_ = o.order_;
    odd_ = o.odd_;
    conductor_.store(o.conductor_.load(std::memory_order_relaxed),
                     std::memory_order_relaxed);
    return *this;
  }

  long long modulus() const { return group_->modulus(); }
  const UnitGroup& group() const { return *group_; }
  std::shared_ptr<const UnitGroup> group_ptr() const { return group_; }
  const std::vector<long long>& exponents() const { return exponents_; }

  long long order() const { return order_; }
  bool is_odd() const { return odd_; }
  bool is_principal() const { return order_ == 1; }

  long long conductor() const;  // computed once, cached
  bool is_primitive() const { return conductor() == modulus(); }
  // the inducing character modulo the conductor
  DirichletCharacter primitive_part() const;

  DirichletCharacter conjugate() const;

  // chi(n) as an exact cyclotomic number of order order()
  Cyclotomic operator()(long long n) const;

  // chi(n) = zeta_order^t, or nullopt when gcd(n, f) > 1
  std::optional<long long> rotation(long long n) const;

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
  }

  // pointwise product of characters with a common modulus
  friend DirichletCharacter operator*(const DirichletCharacter& a,
                                      const DirichletCharacter& b);

 private:
  std::shared_ptr<const UnitGroup> group_;
  std::vector<long long> exponents_;
  long long order_;
  bool odd_;
  mutable std::atomic<long long> conductor_{0};  // 0 = not yet computed
};

std::shared_ptr<const UnitGroup> unit_group(long long f);

// All phi(f) characters mod f, principal first, in lexicographic exponent order.
std::vector<DirichletCharacter> all_characters(long long f);

DirichletCharacter principal_character(long long f);

// True iff -D is the discriminant of an imaginary quadratic field.
bool is_fundamental_discriminant(long long D);

// The real odd primitive character mod D with chi(n) = kronecker(-D, n).
DirichletCharacter quadratic_field_character(long long D);

}  // namespace dedesum

#endif
