#ifndef DEDESUM_ABELIAN_HPP
#define DEDESUM_ABELIAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "dedesum/quadratic.hpp"

namespace dedesum {

// An imaginary abelian field given by a common modulus and a character
// subgroup X_K; X_K^- holds the odd members replaced by their primitive
// parts, sorted by (conductor, exponent vector).
struct AbelianField {
  long long modulus = 1;
  std::vector<DirichletCharacter> group;          // X_K, closed
  std::vector<DirichletCharacter> odd_primitive;  // X_K^-
  long long degree = 1;
  long long w = 2;  // roots of unity in K
  std::optional<int> hasse_q;
  std::string hasse_provenance;  // "rule" | "user-supplied" | "" (undetermined)

  bool is_imaginary() const { return !odd_primitive.empty(); }
};

// Closes the generated character group and derives X_K^-, degree, w, Q.
AbelianField field_from_characters(long long modulus,
                                   std::vector<DirichletCharacter> generators,
                                   std::optional<int> q_override = std::nullopt);

// The full cyclotomic field Q(zeta_n); requires n >= 3, n != 2 mod 4.
AbelianField cyclotomic_field(long long n);

// Largest m with Q(zeta_m) contained in K, via character-group inclusion
// over even divisors m of 2*modulus. Always even.
long long roots_of_unity_count(const AbelianField& field);

// Rule-determined Hasse unit index; throws UndeterminedUnitIndex when no
// rule applies and no override was supplied.
int hasse_unit_index(const AbelianField& field);

// Exact (f/pi^2)|L(1,chi)|^2 = sum_{n, gcd(n,f)=1} chi(n) s(n,f) for odd
// primitive chi mod f > 2.
Cyclotomic l1sq_scaled(const DirichletCharacter& chi);

// Half-range variant sum_{1 <= n < f/2} Re(chi(n)) s(n,f); exactly half
// of l1sq_scaled by the oddness pairing.
Cyclotomic l1sq_scaled_halfrange(const DirichletCharacter& chi);

struct CharacterContribution {
  long long conductor;
  long long order;
  bool conjugate_pair;     // true: (1/4)|L|^2-pair value; false: rational h/w route
  std::string exact;       // canonical exact rendering of the factor
  Rational rational_value; // set when the factor is rational (real route)
};

struct RelativeClassNumberReport {
  long long h_minus = 0;
  int hasse_q = 1;
  long long w = 2;
  Rational exact_value;  // Q * w * product, before the integrality assertion
  double float_check = 0.0;
  std::vector<CharacterContribution> contributions;
};

// h_K^- = Q w prod_{chi in X_K^-} (sqrt(f_chi)/2pi) L(1,chi), assembled
// exactly: conjugate pairs via (1/4) l1sq_scaled, real characters via the
// class-number route h/w; cross-checked against the floating product.
RelativeClassNumberReport relative_class_number(const AbelianField& field);

}  // namespace dedesum

#endif
