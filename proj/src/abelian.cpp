#include "dedesum/abelian.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dedesum/errors.hpp"

namespace dedesum {

namespace {

// canonical identity of a primitive character: (conductor, exponent vector)
using PrimitiveKey = std::pair<long long, std::vector<long long>>;

PrimitiveKey primitive_key(const DirichletCharacter& chi) {
  DirichletCharacter prim = chi.is_primitive() ? chi : chi.primitive_part();
  return {prim.modulus(), prim.exponents()};
}

}  // namespace

AbelianField field_from_characters(long long modulus,
                                   std::vector<DirichletCharacter> generators,
                                   std::optional<int> q_override) {
  auto group = unit_group(modulus);
  for (const auto& g : generators)
    if (g.modulus() != modulus)
      throw std::domain_error("field_from_characters: generator modulus mismatch");

  // close under multiplication (conjugation closure follows: chi^-1 is a power)
  std::map<std::vector<long long>, DirichletCharacter> closed;
  DirichletCharacter principal(group, std::vector<long long>(group->components().size(), 0));
  closed.emplace(principal.exponents(), principal);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& g : generators) {
      std::vector<DirichletCharacter> next;
      for (const auto& [_, chi] : closed) {
        DirichletCharacter prod = chi * g;
        if (!closed.contains(prod.exponents())) next.push_back(std::move(prod));
      }
      for (auto& chi : next) {
        closed.emplace(chi.exponents(), std::move(chi));
        grew = true;
      }
    }
  }

  AbelianField field;
  field.modulus = modulus;
  for (auto& [_, chi] : closed) field.group.push_back(chi);
  field.degree = static_cast<long long>(field.group.size());

  for (const auto& chi : field.group)
    if (chi.is_odd()) field.odd_primitive.push_back(chi.primitive_part());
  std::sort(field.odd_primitive.begin(), field.odd_primitive.end(),
            [](const DirichletCharacter& a, const DirichletCharacter& b) {
              if (a.modulus() != b.modulus()) return a.modulus() < b.modulus();
              return a.exponents() < b.exponents();
            });

  if (field.is_imaginary() &&
      2 * static_cast<long long>(field.odd_primitive.size()) != field.degree)
    throw InternalInconsistency("odd characters must be half of an imaginary field's group");

  field.w = roots_of_unity_count(field);

  if (q_override) {
    if (*q_override != 1 && *q_override != 2)
      throw std::domain_error("field_from_characters: Hasse index must be 1 or 2");
    field.hasse_q = *q_override;
    field.hasse_provenance = "user-supplied";
  } else if (field.is_imaginary()) {
    try {
      field.hasse_q = hasse_unit_index(field);
      field.hasse_provenance = "rule";
    } catch (const UndeterminedUnitIndex&) {
      // left unresolved; relative_class_number will refuse
    }
  }
  return field;
}

AbelianField cyclotomic_field(long long n) {
  if (n < 3 || n % 4 == 2)
    throw std::domain_error("cyclotomic_field: n must be >= 3 and not 2 mod 4");
  auto group = unit_group(n);
  std::vector<DirichletCharacter> gens;
  for (size_t i = 0; i < group->components().size(); ++i) {
    std::vector<long long> exps(group->components().size(), 0);
    exps[i] = 1;
    gens.emplace_back(group, std::move(exps));
  }
  return field_from_characters(n, std::move(gens));
}

long long roots_of_unity_count(const AbelianField& field) {
  std::set<PrimitiveKey> have;
  for (const auto& chi : field.group) have.insert(primitive_key(chi));

  long long best = 2;
  for (long long m : divisors(2 * field.modulus)) {
    if (m % 2 != 0 || m <= best) continue;
    bool contained = true;
    for (const auto& chi : all_characters(m)) {
      if (!have.contains(primitive_key(chi))) {
        contained = false;
        break;
      }
    }
    if (contained) best = m;
  }
  return best;
}

int hasse_unit_index(const AbelianField& field) {
  if (!field.is_imaginary())
    throw std::domain_error("hasse_unit_index: field must be imaginary");
  if (field.hasse_q && field.hasse_provenance == "user-supplied") return *field.hasse_q;

  if (field.degree == 2) return 1;  // imaginary quadratic

  bool cyclic_quartic = false;
  if (field.degree == 4)
    for (const auto& chi : field.group)
      if (chi.order() == 4) cyclic_quartic = true;
  if (cyclic_quartic) return 1;

  // K = Q(zeta_n) detection: degree phi(n) for n = lcm of the conductors
  long long n = 1;
  for (const auto& chi : field.group) n = lcm(n, chi.conductor());
  if (n > 2 && euler_phi(n) == field.degree)
    return factorize(n).size() == 1 ? 1 : 2;

  throw UndeterminedUnitIndex(
      "no rule determines the Hasse unit index for this field; pass it explicitly");
}

namespace {

void require_odd_primitive(const DirichletCharacter& chi, const char* who) {
  if (chi.modulus() <= 2)
    throw std::domain_error(std::string(who) + ": modulus must exceed 2");
  if (!chi.is_odd()) throw std::domain_error(std::string(who) + ": character must be odd");
  if (!chi.is_primitive())
    throw std::domain_error(std::string(who) + ": character must be primitive");
}

}  // namespace

Cyclotomic l1sq_scaled(const DirichletCharacter& chi) {
  require_odd_primitive(chi, "l1sq_scaled");
  long long f = chi.modulus();
  Cyclotomic acc(chi.order());
  for (long long n = 1; n < f; ++n) {
    auto t = chi.rotation(n);
    if (!t) continue;
    acc.add_term(*t, dedekind_sum(n, f));
  }
  return acc;
}

Cyclotomic l1sq_scaled_halfrange(const DirichletCharacter& chi) {
  require_odd_primitive(chi, "l1sq_scaled_halfrange");
  long long f = chi.modulus();
  Cyclotomic acc(chi.order());
  Rational half(1, 2);
  for (long long n = 1; 2 * n < f; ++n) {
    auto t = chi.rotation(n);
    if (!t) continue;
    Rational s = dedekind_sum(n, f) * half;
    acc.add_term(*t, s);
    acc.add_term(-*t, s);
  }
  return acc;
}

RelativeClassNumberReport relative_class_number(const AbelianField& field) {
  if (!field.is_imaginary())
    throw std::domain_error("relative_class_number: field must be imaginary");
  int q = field.hasse_q ? *field.hasse_q : hasse_unit_index(field);

  long long common_order = 1;
  for (const auto& chi : field.odd_primitive)
    common_order = lcm(common_order, chi.order());

  RelativeClassNumberReport report;
  report.hasse_q = q;
  report.w = field.w;

  Cyclotomic product = lift_to_order(Cyclotomic(Rational(1)), common_order);
  std::vector<bool> used(field.odd_primitive.size(), false);
  for (size_t i = 0; i < field.odd_primitive.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const DirichletCharacter& chi = field.odd_primitive[i];
    CharacterContribution contrib;
    contrib.conductor = chi.modulus();
    contrib.order = chi.order();
    if (chi.order() <= 2) {
      // real odd character: (sqrt(D)/2pi) L(1,chi) = h(D)/w(D), exactly
      ClassNumberReport cn = class_number(chi.modulus());
      contrib.conjugate_pair = false;
      contrib.rational_value = Rational(cn.h, cn.w);
      contrib.exact = contrib.rational_value.str();
      product = product * Cyclotomic(contrib.rational_value);
    } else {
      DirichletCharacter conj = chi.conjugate();
      bool found = false;
      for (size_t j = i + 1; j < field.odd_primitive.size(); ++j)
        if (!used[j] && field.odd_primitive[j] == conj) {
          used[j] = true;
          found = true;
          break;
        }
      if (!found)
        throw InternalInconsistency("X_K^- is not closed under conjugation");
      // the pair contributes (sqrt(f)/2pi)^2 |L(1,chi)|^2 = (1/4) l1sq_scaled
      Cyclotomic pair_value = l1sq_scaled(chi) * Cyclotomic(Rational(1, 4));
      contrib.conjugate_pair = true;
      contrib.exact = to_string(pair_value);
      product = product * pair_value;
    }
    report.contributions.push_back(std::move(contrib));
  }

  Cyclotomic total = product * Cyclotomic(Rational(static_cast<long long>(q) * field.w));
  Rational exact;
  try {
    exact = to_rational(total);
  } catch (const NotRational& e) {
    throw InternalInconsistency(
        std::string("relative class number did not reduce to a rational: ") + e.reduced);
  }
  report.exact_value = exact;
  if (!exact.is_integer() || exact.sign() <= 0) {
    std::ostringstream os;
    os << "relative class number " << exact.str() << " is not a positive integer";
    throw InternalInconsistency(os.str());
  }
  report.h_minus = exact.to_integer().get_si();

  // float cross-check over every chi in X_K^- individually
  long double fl = static_cast<long double>(q) * static_cast<long double>(field.w);
  for (const auto& chi : field.odd_primitive) {
    long double f_chi = static_cast<long double>(chi.modulus());
    fl *= std::sqrt(f_chi) / (2.0L * std::numbers::pi_v<long double>) *
          static_cast<long double>(l1_analytic_oracle(chi));
  }
  report.float_check = static_cast<double>(fl);
  if (std::llround(report.float_check) != report.h_minus)
    throw InternalInconsistency("floating relative-class-number oracle disagrees with the exact value");
  return report;
}

}  // namespace dedesum
