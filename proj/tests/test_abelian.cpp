#include <doctest.h>

#include <cmath>

#include "dedesum/abelian.hpp"
#include "dedesum/errors.hpp"

using namespace dedesum;

namespace {

DirichletCharacter quartic_mod5() { return DirichletCharacter(unit_group(5), {1}); }
DirichletCharacter quartic_mod13() { return DirichletCharacter(unit_group(13), {3}); }

}  // namespace

TEST_CASE("l1sq_scaled at quoted characters") {
  CHECK(to_rational(l1sq_scaled(quadratic_field_character(3))) == Rational(1, 9));
  CHECK(to_rational(l1sq_scaled(quartic_mod5())) == Rational(2, 5));
  CHECK(to_rational(l1sq_scaled(quadratic_field_character(7))) == Rational(1));

  CHECK_THROWS_AS(l1sq_scaled(principal_character(5)), std::domain_error);
  DirichletCharacter lifted(unit_group(9), {3});
  CHECK_THROWS_AS(l1sq_scaled(lifted), std::domain_error);
  // moduli <= 2 are outside the formula's domain
  CHECK_THROWS_AS(l1sq_scaled(principal_character(1)), std::domain_error);
  CHECK_THROWS_AS(l1sq_scaled_halfrange(principal_character(2)), std::domain_error);
}

TEST_CASE("half-range sums match the worked examples") {
  CHECK(to_rational(l1sq_scaled_halfrange(quartic_mod5())) == Rational(1, 5));
  CHECK(to_rational(l1sq_scaled_halfrange(quartic_mod13())) == Rational(1));
  CHECK(to_rational(l1sq_scaled_halfrange(quadratic_field_character(3))) == Rational(1, 18));
}

TEST_CASE("reality, conjugation invariance, and the doubling identity, f <= 60") {
  for (long long f = 3; f <= 60; ++f) {
    for (const auto& chi : all_characters(f)) {
      if (!chi.is_odd() || !chi.is_primitive()) continue;
      Cyclotomic full = l1sq_scaled(chi);
      CHECK(full == conjugate(full));
      CHECK(full == l1sq_scaled(chi.conjugate()));
      CHECK(l1sq_scaled_halfrange(chi) * Cyclotomic(Rational(2)) == full);
    }
  }
}

TEST_CASE("field_from_characters closes the group") {
  AbelianField q_zeta5 = field_from_characters(5, {quartic_mod5()});
  CHECK(q_zeta5.degree == 4);
  CHECK(q_zeta5.odd_primitive.size() == 2);
  CHECK(q_zeta5.is_imaginary());
  CHECK(q_zeta5.w == 10);

  AbelianField quartic13 = field_from_characters(13, {quartic_mod13()});
  CHECK(quartic13.degree == 4);
  CHECK(quartic13.odd_primitive.size() == 2);
  CHECK(quartic13.w == 2);

  AbelianField quad7 = field_from_characters(7, {quadratic_field_character(7)});
  CHECK(quad7.degree == 2);
  CHECK(quad7.w == 2);

  AbelianField rational_field = field_from_characters(12, {});
  CHECK(rational_field.degree == 1);
  CHECK_FALSE(rational_field.is_imaginary());

  CHECK_THROWS_AS(field_from_characters(10, {quartic_mod5()}), std::domain_error);
}

TEST_CASE("cyclotomic fields") {
  AbelianField z5 = cyclotomic_field(5);
  CHECK(z5.degree == 4);
  CHECK(z5.w == 10);

  AbelianField z4 = cyclotomic_field(4);
  CHECK(z4.degree == 2);
  CHECK(z4.w == 4);

  AbelianField z23 = cyclotomic_field(23);
  CHECK(z23.degree == 22);
  CHECK(z23.w == 46);
  CHECK(z23.odd_primitive.size() == 11);

  CHECK_THROWS_AS(cyclotomic_field(2), std::domain_error);
  CHECK_THROWS_AS(cyclotomic_field(6), std::domain_error);
  CHECK_THROWS_AS(cyclotomic_field(-5), std::domain_error);
}

TEST_CASE("roots of unity counts") {
  CHECK(roots_of_unity_count(cyclotomic_field(5)) == 10);
  CHECK(roots_of_unity_count(field_from_characters(13, {quartic_mod13()})) == 2);
  CHECK(roots_of_unity_count(field_from_characters(7, {quadratic_field_character(7)})) == 2);
  CHECK(roots_of_unity_count(cyclotomic_field(12)) == 12);
  CHECK(roots_of_unity_count(cyclotomic_field(9)) == 18);
}

TEST_CASE("Hasse unit index rules") {
  CHECK(hasse_unit_index(cyclotomic_field(5)) == 1);
  CHECK(hasse_unit_index(field_from_characters(13, {quartic_mod13()})) == 1);
  CHECK(hasse_unit_index(field_from_characters(23, {quadratic_field_character(23)})) == 1);
  CHECK(hasse_unit_index(cyclotomic_field(12)) == 2);
  CHECK(hasse_unit_index(cyclotomic_field(8)) == 1);   // prime power
  CHECK(hasse_unit_index(cyclotomic_field(15)) == 2);  // 15 = 3 * 5

  // imaginary biquadratic non-cyclotomic field: no rule applies
  auto g28 = unit_group(28);
  DirichletCharacter chi4_28(g28, {1, 0});   // odd: conductor 4 lift
  DirichletCharacter chi7_28(g28, {0, 3});   // odd: conductor 7 lift
  AbelianField biquad = field_from_characters(28, {chi4_28, chi7_28});
  REQUIRE(biquad.degree == 4);
  CHECK_FALSE(biquad.hasse_q.has_value());
  CHECK_THROWS_AS(hasse_unit_index(biquad), UndeterminedUnitIndex);
  CHECK_THROWS_AS(relative_class_number(biquad), UndeterminedUnitIndex);

  AbelianField with_override = field_from_characters(28, {chi4_28, chi7_28}, 2);
  CHECK(hasse_unit_index(with_override) == 2);
  RelativeClassNumberReport rel = relative_class_number(with_override);
  CHECK(rel.h_minus == 1);  // Q w (h(4)/w(4)) (h(7)/w(7)) = 2*4*(1/4)*(1/2)

  // a wrong override cannot produce an integer and must trip the guard
  AbelianField bad_override = field_from_characters(28, {chi4_28, chi7_28}, 1);
  CHECK_THROWS_AS(relative_class_number(bad_override), InternalInconsistency);

  CHECK_THROWS_AS(hasse_unit_index(field_from_characters(5, {})), std::domain_error);
}

TEST_CASE("relative class numbers of the worked examples") {
  RelativeClassNumberReport z5 = relative_class_number(cyclotomic_field(5));
  CHECK(z5.h_minus == 1);
  CHECK(z5.w == 10);
  CHECK(z5.hasse_q == 1);
  REQUIRE(z5.contributions.size() == 1);
  CHECK(z5.contributions[0].conjugate_pair);
  CHECK(z5.contributions[0].conductor == 5);

  RelativeClassNumberReport q13 =
      relative_class_number(field_from_characters(13, {quartic_mod13()}));
  CHECK(q13.h_minus == 1);
  CHECK(q13.w == 2);

  RelativeClassNumberReport q23 =
      relative_class_number(field_from_characters(23, {quadratic_field_character(23)}));
  CHECK(q23.h_minus == 3);

  RelativeClassNumberReport z23 = relative_class_number(cyclotomic_field(23));
  CHECK(z23.h_minus == 3);
  CHECK(std::llround(z23.float_check) == 3);

  RelativeClassNumberReport z12 = relative_class_number(cyclotomic_field(12));
  CHECK(z12.h_minus == 1);

  CHECK_THROWS_AS(relative_class_number(field_from_characters(12, {})), std::domain_error);
}

TEST_CASE("imaginary quadratic fields reduce to the class number, D <= 100") {
  for (long long D = 3; D <= 100; ++D) {
    if (!is_fundamental_discriminant(D)) continue;
    AbelianField field = field_from_characters(D, {quadratic_field_character(D)});
    RelativeClassNumberReport rel = relative_class_number(field);
    CHECK(rel.h_minus == class_number(D).h);
    CHECK(rel.h_minus >= 1);
  }
}
