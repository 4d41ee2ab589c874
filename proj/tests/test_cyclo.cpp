#include <doctest.h>

#include <random>

#include "ngc/cyclo.hpp"
#include "ngc/errors.hpp"
#include "support/oracles.hpp"

using namespace ngc;

namespace {

CycloNum random_element(const FieldPtr& f, std::mt19937& rng, int max_terms) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<int> pos(0, f->degree() - 1);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  std::vector<mpq_class> c(static_cast<std::size_t>(f->degree()), mpq_class(0));
  const int k = count(rng);
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(pos(rng))] = mpq_class(num(rng), den(rng));
  return CycloNum(f, c);
}

}  // namespace

TEST_CASE("conductor must be even and at least 2") {
  CHECK_THROWS_AS(Conductor(3), Error);
  CHECK_THROWS_AS(Conductor(0), Error);
  CHECK(Conductor(16).value() == 16);
}

TEST_CASE("cyclotomic polynomial degree") {
  CHECK(make_field(16)->degree() == 8);
  CHECK(make_field(32)->degree() == 16);
  CHECK(make_field(12)->degree() == 4);
  CHECK(make_field(18)->degree() == 6);
  CHECK(make_field(2)->degree() == 1);
  const auto phi12 = make_field(12)->cyclotomic_polynomial();
  CHECK(phi12 == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("ring arithmetic examples") {
  const auto f = make_field(16);
  CHECK((CycloNum::root(f, 8) * CycloNum::root(f, 8)).is_one());

  const CycloNum s = CycloNum::root(f, 2) + CycloNum::root(f, 14);
  CHECK(oracle::close(oracle::to_complex(s * s), 2));
  CHECK(s * s == CycloNum::integer(f, 2));

  const CycloNum half = CycloNum::integer(f, 2).inverse();
  CHECK(half == CycloNum::rational(f, mpq_class(1, 2)));
  CHECK(half.coeffs()[0] == mpq_class(1, 2));
  CHECK(half.terms().size() == 1);
}

TEST_CASE("zero has all-zero coefficients and cannot be inverted") {
  const auto f = make_field(16);
  const CycloNum z(f);
  CHECK(z.is_zero());
  CHECK(z.coeffs().size() == 8);
  for (const auto& c : z.coeffs()) CHECK(c == 0);
  CHECK_THROWS_AS(z.inverse(), DivisionByZero);
  CHECK((CycloNum::root(f, 3) - CycloNum::root(f, 3)).is_zero());
}

TEST_CASE("conductor mismatch is rejected") {
  const CycloNum a = CycloNum::integer(make_field(16), 1);
  const CycloNum b = CycloNum::integer(make_field(32), 1);
  CHECK_THROWS_AS(a + b, ConductorMismatch);
  CHECK_THROWS_AS(a * b, ConductorMismatch);
  CHECK_THROWS_AS(CycloNum::embed(make_field(16), RootOfUnity(32, 1)), ConductorMismatch);
  CHECK_FALSE(a == b);
}

TEST_CASE("as_root_of_unity examples") {
  const auto f = make_field(16);
  CHECK(as_root_of_unity(CycloNum::integer(f, 1))->exponent == 0);
  CHECK(as_root_of_unity(CycloNum::embed(f, RootOfUnity(16, 5)))->exponent == 5);

  const CycloNum sqrt2 = CycloNum::root(f, 2) + CycloNum::root(f, 14);
  const CycloNum x = (CycloNum::integer(f, 1) + CycloNum::root(f, 4)) * sqrt2.inverse();
  const auto expected = oracle::exponent_of(oracle::to_complex(x), 16);
  REQUIRE(expected.has_value());
  CHECK(*expected == 2);
  CHECK(as_root_of_unity(x)->exponent == 2);

  CHECK_FALSE(as_root_of_unity(CycloNum::integer(f, 2)).has_value());
  CHECK_FALSE(as_root_of_unity(sqrt2).has_value());
  CHECK_FALSE(as_root_of_unity(CycloNum(f)).has_value());
}

TEST_CASE("principal square roots") {
  const auto f = make_field(16);
  CHECK(principal_sqrt_even_power(CycloNum::integer(f, 1)).is_one());
  CHECK(principal_sqrt_even_power(CycloNum::integer(f, -1)) == CycloNum::root(f, 4));
  CHECK(principal_sqrt_even_power(CycloNum::root(f, 2)) == CycloNum::root(f, 1));
  CHECK_THROWS_AS(principal_sqrt_even_power(CycloNum::root(f, 3)), NotAnEvenPowerRoot);
  CHECK_THROWS_AS(principal_sqrt_even_power(CycloNum::integer(f, 2)), NotAnEvenPowerRoot);
}

TEST_CASE("root orders") {
  const auto f = make_field(16);
  CHECK(root_order(CycloNum::integer(f, -1)) == 2);
  CHECK(root_order(CycloNum::root(f, 1)) == 16);
  CHECK(root_order(CycloNum::root(f, 4)) == 4);
  CHECK(root_order(CycloNum::integer(f, 1)) == 1);
  CHECK_FALSE(root_order(CycloNum::integer(f, 2)).has_value());
}

TEST_CASE("square roots of the group order") {
  CHECK(sqrt_group_order(make_field(8), 1).is_one());
  const auto f16 = make_field(16);
  CHECK(sqrt_group_order(f16, 2) == CycloNum::root(f16, 2) + CycloNum::root(f16, 14));
  CHECK(sqrt_group_order(make_field(32), 4) == CycloNum::integer(make_field(32), 2));
  for (int n = 0; n <= 4; ++n) {
    const int order = 1 << n;
    const auto f = make_field(8 * order);
    const CycloNum r = sqrt_group_order(f, order);
    CHECK(r * r == CycloNum::integer(f, order));
    CHECK(oracle::close(oracle::to_complex(r), std::sqrt(static_cast<long double>(order))));
  }
  CHECK_THROWS_AS(sqrt_group_order(make_field(24), 3), UnsupportedGroup);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(20240601);
  for (const int m : {16, 32, 12, 18, 6}) {
    const auto f = make_field(m);
    CAPTURE(m);
    for (int trial = 0; trial < 40; ++trial) {
      const CycloNum a = random_element(f, rng, 4);
      const CycloNum b = random_element(f, rng, 4);
      const CycloNum c = random_element(f, rng, 4);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == CycloNum(f));
      CHECK(oracle::close(oracle::to_complex(a * b), oracle::to_complex(a) * oracle::to_complex(b), 1e-9L));
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("monomial closure") {
  for (const int m : {16, 32, 12, 18}) {
    const auto f = make_field(m);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        CHECK(CycloNum::root(f, a) * CycloNum::root(f, b) == CycloNum::root(f, (a + b) % m));
      }
    }
  }
}

TEST_CASE("as_root_of_unity inverts embed") {
  for (const int m : {2, 4, 16, 32, 64, 12, 18}) {
    const auto f = make_field(m);
    for (int e = 0; e < m; ++e) {
      const auto r = as_root_of_unity(CycloNum::embed(f, RootOfUnity(m, e)));
      REQUIRE(r.has_value());
      CHECK(r->exponent == e);
      CHECK(CycloNum::root(f, e).pow(m).is_one());
    }
  }
}

TEST_CASE("principal square root squares back") {
  for (const int m : {16, 32, 64, 12}) {
    const auto f = make_field(m);
    for (int t = 0; 2 * t < m; ++t) {
      const CycloNum x = CycloNum::root(f, 2 * t);
      const CycloNum r = principal_sqrt_even_power(x);
      CHECK(r * r == x);
      CHECK(as_root_of_unity(r)->exponent == t);
    }
  }
}

TEST_CASE("powers and printing") {
  const auto f = make_field(16);
  const CycloNum z = CycloNum::root(f, 1);
  CHECK(z.pow(16).is_one());
  CHECK(z.pow(-1) == CycloNum::root(f, 15));
  CHECK(z.pow(0).is_one());
  CHECK(CycloNum::root(f, 9).to_string() == "-z");
  CHECK(CycloNum(f).to_string() == "0");
  const CycloNum tau = sqrt_group_order(f, 2).inverse();
  CHECK(tau.to_string() == "1/2*z^2 - 1/2*z^6");
}

TEST_CASE("RootOfUnity canonicalises its exponent") {
  CHECK(RootOfUnity(16, -1).exponent == 15);
  CHECK(RootOfUnity(16, 33).exponent == 1);
  CHECK(RootOfUnity(16, 3) == RootOfUnity(16, 19));
}
