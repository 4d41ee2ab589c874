#include <doctest.h>

#include <complex>
#include <random>

#include "ngc/braiding.hpp"
#include "ngc/errors.hpp"
#include "support/oracles.hpp"

using namespace ngc;

namespace {

using Complex = oracle::Complex;


MonoidalPtr z2(int tau_sign = 1) {
  const auto group = GroupSpec::elementary_2(1);
  return build_monoidal(group, Bicharacter::from_binary(group, {{1}}), tau_sign);
}

MonoidalPtr hyperbolic(int tau_sign = 1) {
  return build_monoidal(GroupSpec::elementary_2(2), hyperbolic_form(2), tau_sign);
}

std::vector<MonoidalPtr> categories(int max_rank) {
  std::vector<MonoidalPtr> out;
  for (int n = 1; n <= max_rank; ++n) {
    const auto group = GroupSpec::elementary_2(n);
    for (const auto& chi : enumerate_forms(n)) {
      for (const int sign : {1, -1}) out.push_back(build_monoidal(group, chi, sign));
    }
  }
  return out;
}

int exp_of(const CycloNum& x) {
  const auto r = as_root_of_unity(x);
  REQUIRE(r.has_value());
  return r->exponent;
}

Complex chi_c(const MonoidalData& cat, int a, int b) { return oracle::zeta(cat.conductor(), cat.chi_exp(a, b)); }

}  // namespace

TEST_CASE("params listing and printing") {
  const auto p = all_params(2);
  REQUIRE(p.size() == 8);
  CHECK(p[0].to_string() == "(+,+;+)");
  CHECK(p[1].to_string() == "(+,+;-)");
  CHECK(p[2].to_string() == "(+,-;+)");
  CHECK(p[7].to_string() == "(-,-;-)");
  CHECK(all_params(3).size() == 16);
}

TEST_CASE("golden Z/2 braiding") {
  const auto cat = z2();
  const auto b = construct_braiding(cat, BraidingParams{{1}, 1});
  CHECK(exp_of(b.sigma1(0)) == 0);
  CHECK(exp_of(b.sigma1(1)) == 4);
  CHECK(exp_of(b.sigma2(1)) == 4);
  CHECK(exp_of(b.sigma3(0)) == 1);
  CHECK(exp_of(b.sigma3(1)) == 13);
  CHECK(exp_of(b.sigma0(1, 1)) == 8);

  const auto twists = compute_twists(b);
  REQUIRE(twists.size() == 2);
  CHECK(exp_of(twists[0].theta_m) == 15);
  CHECK(exp_of(twists[1].theta_m) == 7);

  const auto neg = construct_braiding(cat, BraidingParams{{-1}, 1});
  CHECK(exp_of(neg.sigma1(1)) == 12);
  CHECK(exp_of(neg.sigma3(0)) == 7);

  const auto eps = construct_braiding(cat, BraidingParams{{1}, -1});
  CHECK(exp_of(eps.sigma3(0)) == 9);
}

TEST_CASE("construction formulas agree with a floating point re-derivation") {
  for (const auto& cat : categories(3)) {
    const int n = cat->group().rank();
    const int order = cat->order();
    const int m = cat->conductor();
    const Complex tau = oracle::to_complex(cat->tau());
    for (const auto& params : all_params(n)) {
      const auto b = construct_braiding(cat, params);
      std::vector<Complex> s1(static_cast<std::size_t>(order));
      for (int a = 0; a < order; ++a) {
        const auto gens = cat->group().decompose(cat->group().element(a));
        Complex v = 1;
        for (std::size_t i = 0; i < gens.size(); ++i) {
          const int gi = cat->group().index_of(cat->group().generator(gens[i]));
          v *= static_cast<long double>(params.delta[static_cast<std::size_t>(gens[i])]) *
               oracle::principal_sqrt(chi_c(*cat, gi, gi));
          for (std::size_t j = 0; j < i; ++j) {
            const int gj = cat->group().index_of(cat->group().generator(gens[j]));
            v *= chi_c(*cat, gj, gi);
          }
        }
        s1[static_cast<std::size_t>(a)] = v;
      }
      Complex sum = 0;
      for (const auto& v : s1) sum += v;
      const Complex s3_one = static_cast<long double>(params.epsilon) * oracle::principal_sqrt(tau * sum);
      for (int a = 0; a < order; ++a) {
        CHECK(oracle::close(oracle::to_complex(b.sigma1(a)), s1[static_cast<std::size_t>(a)], 1e-9L));
        CHECK(b.sigma2(a) == b.sigma1(a));
        CHECK(oracle::close(oracle::to_complex(b.sigma3(a)), s3_one * s1[static_cast<std::size_t>(a)] * chi_c(*cat, a, a), 1e-9L));
        for (int c = 0; c < order; ++c) CHECK(b.sigma0(a, c) == cat->chi(a, c));
      }
      CHECK(oracle::exponent_of(s3_one, m).has_value());
    }
  }
}

TEST_CASE("hyperbolic plane example") {
  const auto cat = hyperbolic();
  const auto b = construct_braiding(cat, BraidingParams{{1, 1}, 1});
  const int g1g2 = cat->group().index_of(GroupElement{{1, 1}});
  CHECK(b.sigma1(g1g2) == CycloNum::integer(cat->field(), -1));
  CycloNum sum(cat->field());
  for (int a = 0; a < cat->order(); ++a) sum += b.sigma1(a);
  CHECK(sum == CycloNum::integer(cat->field(), 2));
  CHECK(b.sigma3(0).is_one());
  const auto report = root_order_report(b);
  CHECK(report.max_order == 2);
  CHECK(report.refined);
  const auto neg = construct_braiding(hyperbolic(-1), BraidingParams{{1, 1}, 1});
  CHECK(neg.sigma3(0) == CycloNum::root(cat->field(), 8));
  CHECK(root_order_report(neg).max_order == 4);
  for (const auto& t : compute_twists(b)) {
    for (const auto& th : t.theta_g) CHECK(th.is_one());
  }
}

TEST_CASE("extract_invariants inverts construct_braiding") {
  for (const auto& cat : categories(3)) {
    for (const auto& params : all_params(cat->group().rank())) {
      CHECK(extract_invariants(construct_braiding(cat, params)) == params);
    }
  }
}

TEST_CASE("extract_invariants rejects non-unit quotients") {
  const auto cat = z2();
  const auto b = construct_braiding(cat, BraidingParams{{1}, 1});
  const SigmaLayout layout(cat->order());
  const auto bad = b.with_value(layout.sigma3(0), b.sigma3(0) * CycloNum::root(cat->field(), 4));
  CHECK_THROWS_AS(extract_invariants(bad), NonUnitInvariant);
  const auto bad1 = b.with_value(layout.sigma1(1), b.sigma1(1) * CycloNum::root(cat->field(), 4));
  CHECK_THROWS_AS(extract_invariants(bad1), NonUnitInvariant);
}

TEST_CASE("reduced verifier names the failing equation") {
  const auto cat = z2();
  const auto b = construct_braiding(cat, BraidingParams{{1}, 1});
  const SigmaLayout layout(cat->order());
  CHECK(verify_hexagons_reduced(b).passed);

  const auto s3 = b.with_value(layout.sigma3(1), -b.sigma3(1));
  const auto r3 = verify_hexagons_reduced(s3);
  CHECK_FALSE(r3.passed);
  CHECK_FALSE(r3.equation_holds(3));
  CHECK(r3.equation_holds(1));
  CHECK(r3.equation_holds(4));

  const auto s0 = b.with_value(layout.sigma0(1, 1), -b.sigma0(1, 1));
  const auto r0 = verify_hexagons_reduced(s0);
  CHECK_FALSE(r0.equation_holds(1));
  CHECK_FALSE(r0.failures.empty());
  CHECK(r0.failures.front().equation == 1);
  CHECK(r0.failures.front().witness == "a=1 b=1");

  const auto flipped_cat = std::make_shared<const MonoidalData>(cat->with_unchecked_tau(-cat->tau()));
  const BraidingData flipped(flipped_cat, {b.sigma0(0, 0), b.sigma0(0, 1), b.sigma0(1, 0), b.sigma0(1, 1)},
                             {b.sigma1(0), b.sigma1(1)}, {b.sigma2(0), b.sigma2(1)}, {b.sigma3(0), b.sigma3(1)});
  const auto rt = verify_hexagons_reduced(flipped);
  CHECK_FALSE(rt.equation_holds(5));
  CHECK_FALSE(rt.equation_holds(10));
  CHECK(rt.equation_holds(3));

  for (int k = 1; k <= 10; ++k) CHECK_FALSE(reduced_equation(k).empty());
  CHECK_THROWS(reduced_equation(11));
}

TEST_CASE("direct verifier on constructed and tampered braidings") {
  const auto cat = z2();
  const auto b = construct_braiding(cat, BraidingParams{{1}, 1});
  const auto ok = verify_hexagons_direct(b);
  CHECK(ok.passed);
  CHECK(ok.diagrams_checked == 54);

  const SigmaLayout layout(cat->order());
  const auto split = b.with_value(layout.sigma2(1), -b.sigma2(1));
  const auto bad = verify_hexagons_direct(split);
  CHECK_FALSE(bad.passed);
  REQUIRE_FALSE(bad.failures.empty());
  CHECK_FALSE(bad.failures.front().lhs == bad.failures.front().rhs);
  CHECK_FALSE(verify_hexagons_reduced(split).passed);
}

TEST_CASE("m,m,m hexagon sides match dense matrix products") {
  for (const auto& cat : categories(2)) {
    const int order = cat->order();
    const Complex tau = oracle::to_complex(cat->tau());
    for (const auto& params : all_params(cat->group().rank())) {
      const auto b = construct_braiding(cat, params);
      const auto [lhs, rhs] = mmm_hexagon_sides(b);
      REQUIRE(lhs.rows() == order);
      REQUIRE(lhs.cols() == order);
      for (int e = 0; e < order; ++e) {
        for (int f = 0; f < order; ++f) {
          Complex l = 0;
          for (int d = 0; d < order; ++d) {
            l += tau / chi_c(*cat, e, d) * oracle::to_complex(b.sigma2(d)) * tau / chi_c(*cat, d, f);
          }
          const Complex r = oracle::to_complex(b.sigma3(e)) * tau / chi_c(*cat, e, f) * oracle::to_complex(b.sigma3(f));
          const CycloNum* lv = lhs.entries().find(e, f);
          const CycloNum* rv = rhs.entries().find(e, f);
          CHECK(oracle::close(lv ? oracle::to_complex(*lv) : Complex{}, l, 1e-9L));
          CHECK(oracle::close(rv ? oracle::to_complex(*rv) : Complex{}, r, 1e-9L));
        }
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("braiding counts per category") {
  for (const auto& cat : categories(2)) {
    const auto list = enumerate_braidings(cat, 2);
    CHECK(list.size() == (std::size_t{1} << (cat->group().rank() + 1)));
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(list[i].data == list[j].data);
    }
  }
}

TEST_CASE("invalid parameters and non elementary groups") {
  const auto cat = z2();
  CHECK_THROWS_AS(construct_braiding(cat, BraidingParams{{1, 1}, 1}), InvalidForm);
  CHECK_THROWS_AS(construct_braiding(cat, BraidingParams{{2}, 1}), InvalidForm);
  CHECK_THROWS_AS(construct_braiding(cat, BraidingParams{{1}, 0}), InvalidForm);

  const GroupSpec z4({4});
  const auto cyclic = build_monoidal(z4, Bicharacter(z4, make_field(32), {{8}}), 1);
  CHECK_THROWS_AS(construct_braiding(cyclic, BraidingParams{{1}, 1}), NotBraidable);
  CHECK_THROWS_AS(enumerate_braidings(cyclic), NotBraidable);
}

TEST_CASE("twists") {
  for (const auto& cat : categories(3)) {
    for (const auto& params : all_params(cat->group().rank())) {
      const auto b = construct_braiding(cat, params);
      const auto twists = compute_twists(b);
      REQUIRE(twists.size() == 2);
      CHECK(twists[0].theta_m == -twists[1].theta_m);
      for (const auto& t : twists) {
        CHECK(check_twist(b, t).passed());
        CHECK(t.theta_g[0].is_one());
        for (int a = 0; a < cat->order(); ++a) CHECK(t.theta_g[static_cast<std::size_t>(a)] == cat->chi(a, a));
      }
    }
  }
}

TEST_CASE("exactly two candidate theta_m balance") {
  for (const auto& cat : categories(2)) {
    const auto b = construct_braiding(cat, all_params(cat->group().rank()).front());
    const auto base = compute_twists(b).front();
    int balanced = 0;
    for (int k = 0; k < cat->conductor(); ++k) {
      TwistData t = base;
      t.theta_m = CycloNum::root(cat->field(), k);
      if (check_twist(b, t).passed()) ++balanced;
    }
    CHECK(balanced == 2);
  }
}

TEST_CASE("root orders respect the bounds") {
  for (const auto& cat : categories(3)) {
    const bool diag_trivial = form_checks(cat->chi()).diag_trivial;
    for (const auto& params : all_params(cat->group().rank())) {
      const auto b = construct_braiding(cat, params);
      const auto report = root_order_report(b);
      CHECK(report.bound == 8 * cat->order());
      CHECK(report.within_bound);
      CHECK(report.refined == diag_trivial);
      for (const auto& v : b.variables()) {
        CHECK(v.pow(8 * cat->order()).is_one());
        if (diag_trivial) CHECK(v.pow(4 * cat->order()).is_one());
      }
      CHECK(b.sigma3(0).pow(8 * cat->order()).is_one());
    }
  }
  for (const int sign : {1, -1}) {
    for (const auto& params : all_params(1)) {
      const auto b = construct_braiding(z2(sign), params);
      CHECK(root_order_report(b).max_order == 16);
      CHECK(root_order(b.sigma3(0)) == 16);
      CHECK(root_order(b.sigma3(1)) == 16);
    }
  }
}

TEST_CASE("determinant matches a complex elimination") {
  std::mt19937 rng(7);
  const auto f = make_field(16);
  std::uniform_int_distribution<int> e(0, 15);
  std::uniform_int_distribution<int> z(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const int size = 1 + trial % 4;
    std::vector<std::vector<CycloNum>> a(static_cast<std::size_t>(size));
    std::vector<std::vector<Complex>> c(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) {
        const CycloNum v = z(rng) == 0 ? CycloNum(f) : CycloNum::root(f, e(rng)) + CycloNum::integer(f, z(rng));
        a[static_cast<std::size_t>(i)].push_back(v);
        c[static_cast<std::size_t>(i)].push_back(oracle::to_complex(v));
      }
    }
    CHECK(oracle::close(oracle::to_complex(determinant(a)), oracle::determinant(c), 1e-8L));
  }
}

TEST_CASE("determinant identity on every braiding up to rank three") {
  for (const auto& cat : categories(3)) {
    for (const auto& params : all_params(cat->group().rank())) {
      const auto d = determinant_identity(construct_braiding(cat, params));
      CHECK(d.holds);
      CHECK(d.det_a * d.det_s2 == d.det_s3 * d.det_s3);
    }
  }
}

TEST_CASE("symmetry properties of constructed braidings") {
  for (const auto& cat : categories(3)) {
    for (const auto& params : all_params(cat->group().rank())) {
      const auto b = construct_braiding(cat, params);
      CHECK(b.all_roots_of_unity());
      for (int a = 0; a < cat->order(); ++a) {
        CHECK(b.sigma1(a) == b.sigma2(a));
        for (int c = 0; c < cat->order(); ++c) CHECK((b.sigma0(a, c) * b.sigma0(c, a)).is_one());
      }
      CHECK(BraidingData::from_variables(cat, b.variables()) == b);
    }
  }
}

TEST_CASE("reduced and direct verifiers agree on single-entry mutants") {
  std::mt19937 rng(11);
  for (const auto& cat : categories(2)) {
    const HexagonSystem system(cat);
    const auto base = construct_braiding(cat, all_params(cat->group().rank()).back());
    const auto vars = base.variables();
    std::uniform_int_distribution<int> pick(0, static_cast<int>(vars.size()) - 1);
    for (int trial = 0; trial < 12; ++trial) {
      const int var = pick(rng);
      const CycloNum factor = trial % 2 == 0 ? CycloNum::integer(cat->field(), -1) : CycloNum::root(cat->field(), cat->conductor() / 4);
      const auto mutant = base.with_value(var, vars[static_cast<std::size_t>(var)] * factor);
      CHECK(verify_hexagons_reduced(mutant).passed == verify_hexagons_direct(mutant, &system).passed);
    }
  }
}
