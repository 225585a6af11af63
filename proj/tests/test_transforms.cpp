#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stieltjes/measure.hpp"
#include "stieltjes/transforms.hpp"
#include "reference_oracle.hpp"
#include "test_support.hpp"

using namespace stieltjes;
using testsup::R;
using testsup::V;

TEST_CASE("binomial_transform: point mass translation") {
  // delta_1 moments shifted by 1 become delta_2 moments
  MomentSequence b = binomial_transform(MomentSequence{V({"1", "1", "1", "1"})}, Rat(1));
  CHECK(b.moments == V({"1", "2", "4", "8"}));
}

TEST_CASE("binomial_transform: two-atom example shifted down") {
  MomentSequence b = binomial_transform(MomentSequence{V({"1", "3/2", "5/2", "9/2"})}, R("-1"));
  CHECK(b.moments == V({"1", "1/2", "1/2", "1/2"}));
}

TEST_CASE("binomial_transform: xi = 0 is the identity; empty input passes through") {
  MomentSequence a{V({"2", "-3", "7/5"})};
  CHECK(binomial_transform(a, Rat(0)) == a);
  CHECK(binomial_transform(MomentSequence{{}}, Rat(5)).moments.empty());
}

TEST_CASE("binomial_transform agrees with the table-based reference") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> len(1, 14);
    std::vector<Rat> a;
    int n = len(rng);
    for (int i = 0; i < n; ++i) a.push_back(testsup::rand_rat(rng, -12, 12, 7));
    Rat xi = testsup::rand_rat(rng, -8, 8, 5);
    CHECK(binomial_transform(MomentSequence{a}, xi).moments == refcheck::binomial(a, xi));
  }
}

TEST_CASE("group law: B_xi then B_-xi is the identity") {
  std::mt19937_64 rng(1618);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> len(1, 12);
    std::vector<Rat> a;
    int n = len(rng);
    for (int i = 0; i < n; ++i) a.push_back(testsup::rand_rat(rng, -10, 10, 6));
    Rat xi = testsup::rand_rat(rng, -9, 9, 6);
    Rat eta = testsup::rand_rat(rng, -9, 9, 6);
    MomentSequence m{a};
    CHECK(binomial_transform(binomial_transform(m, xi), -xi) == m);
    // composition adds the shifts
    CHECK(binomial_transform(binomial_transform(m, xi), eta) ==
          binomial_transform(m, xi + eta));
  }
}

TEST_CASE("j_shift: worked examples") {
  JCoefficients j{V({"1", "2", "2"}), V({"1", "1"})};
  JCoefficients shifted = j_shift(j, Rat(1));
  CHECK(shifted.gammas == V({"2", "3", "3"}));
  CHECK(shifted.betas == V({"1", "1"}));
  CHECK(j_shift(j, Rat(0)) == j);

  JCoefficients j2{V({"3/2", "3/2", "0"}), V({"1/4", "0"})};
  JCoefficients s2 = j_shift(j2, R("-1"));
  CHECK(s2.gammas == V({"1/2", "1/2", "-1"}));
  CHECK(s2.betas == V({"1/4", "0"}));
}

TEST_CASE("shift consistency: transformed series equals shifted J-fraction series") {
  std::mt19937_64 rng(90210);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> len(0, 9);
    std::vector<Rat> alphas = testsup::rand_nonneg_vector(rng, len(rng), 10, 7, 10);
    Rat c = testsup::rand_rat(rng, 1, 6, 3);
    Rat xi = testsup::rand_rat(rng, -7, 7, 5);
    SCoefficients s{c, alphas, false};
    for (int order : {0, 1, 5, 12, 20}) {
      MomentSequence lhs = binomial_transform(MomentSequence{s_expand(s, order).coeffs()}, xi);
      TruncatedSeries rhs = j_expand(j_shift(contract(s), xi), c, order);
      CHECK(lhs.moments == rhs.coeffs());
    }
  }
}

TEST_CASE("measure translation commutes with the transform") {
  for (std::uint64_t seed : {11u, 22u, 33u, 44u, 55u}) {
    DiscreteMeasure mu = random_measure(seed, 4, R("-2"), R("5"), 9);
    Rat xi = Rat(static_cast<int>(seed % 7) - 3, 2);
    MomentSequence direct = moments(translate(mu, xi), 9);
    MomentSequence via_transform = binomial_transform(moments(mu, 9), xi);
    CHECK(direct == via_transform);
  }
}
