#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dedesum/errors.hpp"
#include "dedesum/quadratic.hpp"

using namespace dedesum;

TEST_CASE("class numbers at quoted discriminants") {
  ClassNumberReport r3 = class_number(3);
  CHECK(r3.h == 1);
  CHECK(r3.w == 6);
  CHECK(r3.exact_sum == Rational(1, 9));  // s(1,3) - s(2,3) = 2/18

  ClassNumberReport r4 = class_number(4);
  CHECK(r4.h == 1);
  CHECK(r4.w == 4);
  CHECK(r4.exact_sum == Rational(1, 4));  // 8*s(1,4) = 1 with s(1,4) = 1/8

  CHECK(class_number(7).h == 1);
  CHECK(class_number(8).h == 1);
  CHECK(class_number(23).h == 3);
  CHECK(class_number(163).h == 1);

  CHECK_THROWS_AS(class_number(5), std::domain_error);
  CHECK_THROWS_AS(class_number(12), std::domain_error);
  CHECK_THROWS_AS(class_number(1), std::domain_error);
}

TEST_CASE("forms oracle") {
  CHECK(class_number_forms_oracle(3) == 1);    // only (1,1,1)
  CHECK(class_number_forms_oracle(4) == 1);    // only (1,0,1)
  CHECK(class_number_forms_oracle(23) == 3);   // (1,1,6), (2,+-1,3)
  CHECK(class_number_forms_oracle(163) == 1);
  CHECK(class_number_forms_oracle(15) == 2);
  CHECK_THROWS_AS(class_number_forms_oracle(9), std::domain_error);
}

TEST_CASE("formula equals forms oracle for fundamental -D <= 300") {
  for (long long D = 3; D <= 300; ++D) {
    if (!is_fundamental_discriminant(D)) continue;
    ClassNumberReport r = class_number(D, Oracle::all);
    CHECK(r.h == *r.forms_h);
    CHECK(std::abs(*r.analytic_h - static_cast<double>(r.h)) < 1e-6);
    CHECK(r.oracles_agree);
  }
}

TEST_CASE("prime h^2 identity") {
  CHECK(class_number_squared_prime(7) == Rational(1));
  CHECK(class_number_squared_prime(11) == Rational(1));
  CHECK(class_number_squared_prime(23) == Rational(9));
  CHECK_THROWS_AS(class_number_squared_prime(13), std::domain_error);
  CHECK_THROWS_AS(class_number_squared_prime(21), std::domain_error);
  CHECK_THROWS_AS(class_number_squared_prime(3), std::domain_error);

  for (long long p = 7; p <= 500; p += 4) {
    if (!is_prime(p)) continue;
    Rational sum = class_number_squared_prime(p);
    long long h = class_number(p).h;
    CHECK(sum == Rational(h * h));
    CHECK(sum == residue_class_sum(p) * Rational(2));
    CHECK(parity_check(p));
  }
}

TEST_CASE("parity at quoted primes") {
  CHECK(parity_check(7));
  CHECK(parity_check(23));
  CHECK(parity_check(163));
}

TEST_CASE("analytic L(1) oracle closed forms") {
  double l3 = l1_analytic_oracle(quadratic_field_character(3));
  CHECK(std::abs(l3 - std::numbers::pi / std::sqrt(27.0)) < 1e-12);
  CHECK(l3 == doctest::Approx(0.604599788));

  double l4 = l1_analytic_oracle(quadratic_field_character(4));
  CHECK(std::abs(l4 - std::numbers::pi / 4.0) < 1e-12);

  double l7 = l1_analytic_oracle(quadratic_field_character(7));
  CHECK(std::abs(l7 - std::numbers::pi / std::sqrt(7.0)) < 1e-12);
  CHECK(l7 == doctest::Approx(1.18742).epsilon(1e-5));

  CHECK_THROWS_AS(l1_analytic_oracle(principal_character(5)), std::domain_error);
  // even character: the quadratic character mod 8 attached to +8
  DirichletCharacter even_char(unit_group(8), {0, 1});
  REQUIRE_FALSE(even_char.is_odd());
  CHECK_THROWS_AS(l1_analytic_oracle(even_char), std::domain_error);
  // imprimitive odd character: lift of chi_{-3} to modulus 9
  DirichletCharacter lifted(unit_group(9), {3});
  REQUIRE(lifted.is_odd());
  CHECK_THROWS_AS(l1_analytic_oracle(lifted), std::domain_error);
}

TEST_CASE("QuadraticField assembly") {
  QuadraticField k3 = QuadraticField::for_discriminant(3);
  CHECK(k3.w == 6);
  QuadraticField k4 = QuadraticField::for_discriminant(4);
  CHECK(k4.w == 4);
  QuadraticField k7 = QuadraticField::for_discriminant(7);
  CHECK(k7.w == 2);
  CHECK(k7.chi.is_odd());
  CHECK(k7.chi.is_primitive());
}
