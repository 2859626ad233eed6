#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "corpus.hpp"
#include "reesnorm/ideal.hpp"
#include "reesnorm/lambda.hpp"
#include "reesnorm/lattice.hpp"

using namespace reesnorm;
using testutil::as_set;
using testutil::vec;
using testutil::vecs;

namespace {

MonomialIdeal ideal_2_3_7() { return ideal_of_lambda(make_lambda_system(vec({2, 3, 7}))); }

}  // namespace

TEST_CASE("from_generators minimalizes and validates") {
  CHECK(from_generators(2, vecs({{2, 0}, {3, 1}})).generators() == vecs({{2, 0}}));
  const auto antichain = vecs({{0, 3}, {1, 2}, {2, 0}});
  CHECK(from_generators(2, antichain).generators() == antichain);
  CHECK(from_generators(2, vecs({{1, 2}, {2, 1}, {1, 1}})).generators() == vecs({{1, 1}}));

  CHECK_THROWS_AS(from_generators(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(from_generators(0, vecs({{1}})), std::invalid_argument);
  CHECK_THROWS_AS(from_generators(2, vecs({{1, 2, 3}})), std::invalid_argument);
  CHECK_THROWS_AS(from_generators(2, vecs({{1, -2}})), std::invalid_argument);
}

TEST_CASE("power of an ideal") {
  CHECK(power(from_generators(1, vecs({{1}})), Int(2)).generators() == vecs({{2}}));
  CHECK(power(from_generators(2, vecs({{2, 0}, {0, 3}})), Int(2)).generators() ==
        vecs({{0, 6}, {2, 3}, {4, 0}}));
  CHECK_THROWS_AS(power(from_generators(1, vecs({{1}})), Int(0)), std::invalid_argument);

  // I(2,3,1) squared contains (1,2,1) = (1,2,0) + (0,0,1).
  const auto ideal = ideal_of_lambda(make_lambda_system(vec({2, 3, 1})));
  CHECK(as_set(ideal.generators()) == as_set(vecs({{2, 0, 0}, {0, 3, 0}, {0, 0, 1}, {1, 2, 0}})));
  const auto sq = power(ideal, Int(2));
  CHECK(gamma_contains(sq, vec({1, 2, 1})));
  // Spot-check the power against its definition.
  CHECK(gamma_contains(sq, vec({4, 0, 0})));
  CHECK_FALSE(gamma_contains(sq, vec({2, 0, 0})));
}

TEST_CASE("product of ideals") {
  const auto a = from_generators(2, vecs({{2, 0}, {0, 3}}));
  CHECK(product(a, a) == power(a, Int(2)));
  const auto b = from_generators(2, vecs({{1, 1}}));
  CHECK(product(a, b).generators() == vecs({{1, 4}, {3, 1}}));
}

TEST_CASE("np_contains on fixed cases") {
  const auto a = from_generators(2, vecs({{2, 0}, {0, 3}}));
  for (const Vec& g : a.generators()) CHECK(np_contains(a, g, Int(1)));
  CHECK(np_contains(a, vec({1, 2}), Int(1)));
  CHECK_FALSE(np_contains(a, vec({1, 1}), Int(1)));
  CHECK_FALSE(np_contains(a, vec({-1, 5}), Int(1)));
  CHECK_THROWS_AS(np_contains(a, vec({1, 2}), Int(0)), std::invalid_argument);

  const auto j = from_generators(3, vecs({{2, 0, 0}, {0, 3, 0}, {0, 0, 7}}));
  CHECK(np_contains(j, vec({1, 2, 6}), Int(2)));
  CHECK_FALSE(np_contains(j, vec({1, 2, 5}), Int(2)));
}

TEST_CASE("integral_closure on fixed cases") {
  CHECK(integral_closure(from_generators(2, vecs({{2, 0}, {0, 3}}))).generators() ==
        vecs({{0, 3}, {1, 2}, {2, 0}}));
  const auto principal = from_generators(2, vecs({{3, 4}}));
  CHECK(integral_closure(principal) == principal);
  CHECK(integral_closure(from_generators(3, vecs({{2, 0, 0}, {0, 3, 0}, {0, 0, 7}}))) ==
        ideal_2_3_7());
}

TEST_CASE("is_integrally_closed on fixed cases") {
  CHECK_FALSE(is_integrally_closed(from_generators(2, vecs({{2, 0}, {0, 3}}))));
  CHECK(is_integrally_closed(ideal_2_3_7()));
  CHECK_FALSE(is_integrally_closed(power(ideal_2_3_7(), Int(2))));
}

TEST_CASE("is_normal with witnesses") {
  SUBCASE("(x^2, y^3) fails at m=1 with alpha=(1,2)") {
    const auto verdict = is_normal(from_generators(2, vecs({{2, 0}, {0, 3}})));
    REQUIRE_FALSE(verdict.normal);
    CHECK(verdict.m == 1);
    CHECK(verdict.alpha == vec({1, 2}));
  }
  SUBCASE("I(2,3,7) fails at m=2 with alpha=(1,2,6)") {
    const auto verdict = is_normal(ideal_2_3_7());
    REQUIRE_FALSE(verdict.normal);
    CHECK(verdict.m == 2);
    CHECK(verdict.alpha == vec({1, 2, 6}));
  }
  SUBCASE("I(2,3,5) is normal") {
    CHECK(is_normal(ideal_of_lambda(make_lambda_system(vec({2, 3, 5})))).normal);
  }
}

TEST_CASE("scale_by_monomial") {
  const auto a = from_generators(2, vecs({{2, 0}, {0, 3}}));
  CHECK(scale_by_monomial(a, vec({0, 0})) == a);
  CHECK(scale_by_monomial(from_generators(2, vecs({{2, 0}})), vec({0, 1})).generators() ==
        vecs({{2, 1}}));
  const Vec gamma = vec({1, 1});
  CHECK(integral_closure(scale_by_monomial(a, gamma)) ==
        scale_by_monomial(integral_closure(a), gamma));
}

TEST_CASE("PowerMembership matches the materialized power") {
  auto rng = testutil::seeded_rng(10);
  for (int trial = 0; trial < 40; ++trial) {
    const auto ideal = testutil::random_ideal(rng, 2 + trial % 2, 5, 4);
    for (long m = 1; m <= 3; ++m) {
      const auto pw = power(ideal, Int(m));
      PowerMembership membership(ideal, Int(m));
      for (int s = 0; s < 25; ++s) {
        const Vec alpha = testutil::random_vector(rng, ideal.n(), 5L * m);
        CHECK(membership.contains(alpha) == gamma_contains(pw, alpha));
      }
    }
  }
}

TEST_CASE("closure invariants on a random corpus") {
  auto rng = testutil::seeded_rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + trial % 3;
    const auto ideal = testutil::random_ideal(rng, n, 6, 4);
    const auto closed = integral_closure(ideal);

    // Idempotence.
    CHECK(integral_closure(closed) == closed);
    // Containment Gamma(I) subseteq Gamma(closure).
    for (const Vec& g : ideal.generators()) CHECK(gamma_contains(closed, g));
    // NP agreement between I and closure on sampled alpha.
    for (int s = 0; s < 10; ++s) {
      const Vec alpha = testutil::random_vector(rng, n, 8);
      CHECK(np_contains(ideal, alpha, Int(1)) == np_contains(closed, alpha, Int(1)));
    }
  }
}

TEST_CASE("power scaling: alpha in m*NP(I) iff alpha in NP(I^m)") {
  auto rng = testutil::seeded_rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 3;
    const auto ideal = testutil::random_ideal(rng, n, 4, 3);
    for (long m = 1; m <= 3; ++m) {
      const auto pw = power(ideal, Int(m));
      for (int s = 0; s < 10; ++s) {
        const Vec alpha = testutil::random_vector(rng, n, 4L * m);
        CHECK(np_contains(ideal, alpha, Int(m)) == np_contains(pw, alpha, Int(1)));
      }
    }
  }
}

TEST_CASE("normality extends to powers beyond n-1") {
  auto rng = testutil::seeded_rng(13);
  int premise_held = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + trial % 2;
    const auto ideal = testutil::random_ideal(rng, n, 5, 4);
    if (!is_normal(ideal).normal) continue;
    ++premise_held;
    for (long m = n; m <= 2 * n; ++m) {
      PowerMembership membership(ideal, Int(m));
      for (const Vec& alpha : closure_generators(ideal, Int(m))) {
        CHECK(membership.contains(alpha));
      }
    }
  }
  CHECK(premise_held > 10);  // the corpus must actually exercise the property
}

TEST_CASE("product of integrally closed ideals in two variables is closed") {
  auto rng = testutil::seeded_rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = integral_closure(testutil::random_ideal(rng, 2, 6, 4));
    const auto b = integral_closure(testutil::random_ideal(rng, 2, 6, 4));
    CHECK(is_integrally_closed(product(a, b)));
  }
}

TEST_CASE("closedness and normality are invariant under monomial scaling") {
  auto rng = testutil::seeded_rng(15);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 3;
    const auto ideal = testutil::random_ideal(rng, n, 5, 4);
    const Vec gamma = testutil::random_vector(rng, n, 4);
    const auto scaled = scale_by_monomial(ideal, gamma);
    CHECK(is_integrally_closed(ideal) == is_integrally_closed(scaled));
    CHECK(is_normal(ideal).normal == is_normal(scaled).normal);
  }
}
