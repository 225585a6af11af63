#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stieltjes/cf.hpp"
#include "test_support.hpp"

using namespace stieltjes;
using testsup::R;
using testsup::V;

TEST_CASE("s_expand: Catalan generating function from all-ones coefficients") {
  SCoefficients s{Rat(1), V({"1", "1", "1", "1", "1"}), false};
  CHECK(s_expand(s, 5) == TruncatedSeries(V({"1", "1", "2", "5", "14", "42"})));
  // deeper prefix against the convolution recurrence
  SCoefficients longer{Rat(1), std::vector<Rat>(20, Rat(1)), false};
  CHECK(s_expand(longer, 20).coeffs() == testsup::catalan(21));
}

TEST_CASE("s_expand: terminated three-coefficient fraction") {
  SCoefficients s{Rat(1), V({"3/2", "1/6", "4/3"}), true};
  CHECK(s_expand(s, 4) == TruncatedSeries(V({"1", "3/2", "5/2", "9/2", "17/2"})));
}

TEST_CASE("s_expand: zero constant gives the zero series") {
  SCoefficients s{Rat(0), {}, true};
  CHECK(s_expand(s, 6).is_zero());
}

TEST_CASE("s_expand ignores entries beyond a zero coefficient") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> len(1, 8);
    std::vector<Rat> alphas = testsup::rand_nonneg_vector(rng, len(rng), 12, 9);
    SCoefficients base{Rat(1), alphas, false};
    std::vector<Rat> padded = alphas;
    padded.push_back(Rat(0));
    for (int extra = 0; extra < 3; ++extra) padded.push_back(testsup::rand_rat(rng, -9, 9, 5));
    SCoefficients noisy{Rat(1), padded, false};
    int order = static_cast<int>(alphas.size());
    CHECK(s_expand(base, order) == s_expand(noisy, order));
  }
}

TEST_CASE("s_extract: Catalan and geometric examples") {
  SCoefficients catalan = s_extract(testsup::catalan_moments(6));
  CHECK(catalan.c == 1);
  CHECK(catalan.alphas == std::vector<Rat>(5, Rat(1)));
  CHECK_FALSE(catalan.terminated);

  SCoefficients geo = s_extract(MomentSequence{V({"1", "2", "4", "8"})});
  CHECK(geo.c == 1);
  CHECK(geo.alphas == V({"2"}));
  CHECK(geo.terminated);
}

TEST_CASE("s_extract: terminated two-atom example") {
  SCoefficients s = s_extract(MomentSequence{V({"1", "3/2", "5/2", "9/2", "17/2"})});
  CHECK(s.c == 1);
  CHECK(s.alphas == V({"3/2", "1/6", "4/3"}));
  CHECK(s.terminated);
}

TEST_CASE("s_extract edge cases and failures") {
  // zero prefix: the zero measure
  SCoefficients z = s_extract(MomentSequence{V({"0", "0", "0"})});
  CHECK(z.c == 0);
  CHECK(z.alphas.empty());
  CHECK(z.terminated);
  // single moment: just the constant
  SCoefficients one = s_extract(MomentSequence{V({"5"})});
  CHECK(one.c == 5);
  CHECK(one.alphas.empty());
  CHECK_FALSE(one.terminated);
  // negative mass and zero-leading failures
  CHECK_THROWS_AS(s_extract(MomentSequence{V({"-1", "1"})}), NotSFracRepresentable);
  CHECK_THROWS_AS(s_extract(MomentSequence{V({"0", "1", "0"})}), NotSFracRepresentable);
  // delta at 0 plus delta at 1: moments (2,1,1,1) extract fine
  SCoefficients d = s_extract(MomentSequence{V({"2", "1", "1", "1"})});
  CHECK(d.c == 2);
  CHECK(s_expand(d, 3) == TruncatedSeries(V({"2", "1", "1", "1"})));
  CHECK_THROWS_AS(s_extract(MomentSequence{{}}), std::invalid_argument);
}

TEST_CASE("s_extract returns negative coefficients rather than failing") {
  // a_1 < 0 cannot come from a positive measure but has a formal fraction
  SCoefficients s = s_extract(MomentSequence{V({"1", "-1", "1"})});
  CHECK(s.alphas[0] == R("-1"));
  CHECK(s_expand(s, 2) == TruncatedSeries(V({"1", "-1", "1"})));
}

TEST_CASE("round-trip: extract after expand recovers standard coefficients") {
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 80; ++trial) {
    std::uniform_int_distribution<int> len(0, 9);
    int m = len(rng);
    std::vector<Rat> alphas;
    for (int i = 0; i < m; ++i) alphas.push_back(testsup::rand_rat(rng, 1, 15, 8));  // strictly positive
    Rat c = testsup::rand_rat(rng, 1, 9, 4);
    SCoefficients in{c, alphas, false};
    SCoefficients out = s_extract(MomentSequence{s_expand(in, m + 1).coeffs()});
    CHECK(out.c == c);
    // m+2 moments determine at most m+1 coefficients; the first m must match
    REQUIRE(out.alphas.size() >= alphas.size());
    for (size_t i = 0; i < alphas.size(); ++i) CHECK(out.alphas[i] == alphas[i]);
  }
}

TEST_CASE("round-trip: terminated fractions are detected") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> len(1, 6);
    int m = len(rng);
    std::vector<Rat> alphas;
    for (int i = 0; i < m; ++i) alphas.push_back(testsup::rand_rat(rng, 1, 15, 8));
    SCoefficients in{Rat(1), alphas, true};
    // plenty of orders beyond the fraction depth
    SCoefficients out = s_extract(MomentSequence{s_expand(in, m + 4).coeffs()});
    CHECK(out.alphas == alphas);
    CHECK(out.terminated);
  }
}

TEST_CASE("standardness of extraction output") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> len(1, 7);
    int m = len(rng);
    std::vector<Rat> alphas;
    for (int i = 0; i < m; ++i) alphas.push_back(testsup::rand_rat(rng, 1, 10, 6));
    bool term = trial % 2 == 0;
    MomentSequence a{s_expand(SCoefficients{Rat(1), alphas, term}, m + 3).coeffs()};
    CHECK(is_standard(s_extract(a)));
  }
}

TEST_CASE("is_standard classification") {
  CHECK(is_standard(SCoefficients{Rat(1), V({"1", "2"}), false}));
  CHECK(is_standard(SCoefficients{Rat(1), V({"1", "0", "0"}), true}));
  CHECK_FALSE(is_standard(SCoefficients{Rat(1), V({"1", "0", "2"}), true}));   // zero then nonzero
  CHECK_FALSE(is_standard(SCoefficients{Rat(1), V({"1", "0"}), false}));       // zero, unterminated
  CHECK_FALSE(is_standard(SCoefficients{Rat(0), V({"1"}), true}));             // c = 0 with alphas
  CHECK(is_standard(SCoefficients{Rat(0), {}, true}));
  CHECK_FALSE(is_standard(SCoefficients{R("-1"), {}, false}));                 // negative constant
  CHECK_THROWS_AS(require_standard(SCoefficients{Rat(1), V({"0", "2"}), true}), NonStandardInput);
}

TEST_CASE("contract: worked examples") {
  JCoefficients j1 = contract(SCoefficients{Rat(1), std::vector<Rat>(5, Rat(1)), false});
  CHECK(j1.gammas == V({"1", "2", "2"}));
  CHECK(j1.betas == V({"1", "1"}));

  JCoefficients j2 = contract(SCoefficients{Rat(1), V({"3/2", "1/6", "4/3", "0"}), true});
  CHECK(j2.gammas == V({"3/2", "3/2", "0"}));
  CHECK(j2.betas == V({"1/4", "0"}));

  JCoefficients j3 = contract(SCoefficients{Rat(1), {}, false});
  CHECK(j3.gammas == V({"0"}));
  CHECK(j3.betas.empty());
}

TEST_CASE("j_expand: worked examples") {
  CHECK(j_expand(JCoefficients{V({"1", "2", "2"}), V({"1", "1"})}, Rat(1), 5) ==
        TruncatedSeries(V({"1", "1", "2", "5", "14", "42"})));
  CHECK(j_expand(JCoefficients{V({"0"}), {}}, Rat(1), 3) == TruncatedSeries(V({"1", "0", "0", "0"})));
  CHECK(j_expand(JCoefficients{V({"2"}), {}}, Rat(1), 3) == TruncatedSeries(V({"1", "2", "4", "8"})));
  CHECK(j_expand(JCoefficients{V({"1"}), {}}, Rat(0), 2).is_zero());
}

TEST_CASE("contraction identity at every order up to 30") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> len(0, 10);
    std::vector<Rat> alphas = testsup::rand_nonneg_vector(rng, len(rng), 12, 9, /*zero_percent=*/12);
    SCoefficients s{testsup::rand_rat(rng, 1, 5, 3), alphas, false};
    JCoefficients j = contract(s);
    for (int order : {0, 1, 2, 3, 7, 15, 30}) {
      CHECK(j_expand(j, s.c, order) == s_expand(s, order));
    }
  }
}
