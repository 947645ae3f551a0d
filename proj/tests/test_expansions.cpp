#include <gtest/gtest.h>

#include "weakeg/expansions.hpp"

using namespace weakeg;

namespace {

using WC = WeakComposition;

const Permutation kW = Permutation::parse("153264");
const Permutation kV = Permutation::parse("13625847");

}  // namespace

TEST(Stanley, FundamentalExpansionOf153264) {
  std::map<Composition, int> expected{{Composition{3, 1, 1}, 1}, {Composition{2, 2, 1}, 2}, {Composition{1, 3, 1}, 2},
                                      {Composition{3, 2}, 1},    {Composition{1, 2, 2}, 2}, {Composition{1, 1, 3}, 1},
                                      {Composition{2, 1, 2}, 1}, {Composition{2, 3}, 1}};
  EXPECT_EQ(stanley_fundamental_expansion(kW), expected);
  EXPECT_EQ(stanley_function(kW, 6), schur(Partition{3, 2}, 6) + schur(Partition{3, 1, 1}, 6));
}

TEST(Stanley, SmallCases) {
  EXPECT_EQ(stanley_function(Permutation::identity(3), 3), Polynomial::one(3));
  // 321 has reduced words (1,2,1) and (2,1,2), with Des (1,2) and (2,1).
  EXPECT_EQ(stanley_function(Permutation::parse("321"), 4),
            fundamental_qsym(Composition{1, 2}, 4) + fundamental_qsym(Composition{2, 1}, 4));
}

TEST(Schubert, SlideExpansionOf153264) {
  std::map<WC, int> expected{{WC{0, 3, 1, 0, 1}, 1}, {WC{2, 2, 0, 0, 1}, 1}, {WC{1, 3, 0, 0, 1}, 1},
                             {WC{0, 3, 2, 0, 0}, 1}, {WC{2, 2, 1, 0, 0}, 1}, {WC{1, 3, 1, 0, 0}, 1},
                             {WC{2, 3, 0, 0, 0}, 1}};
  EXPECT_EQ(schubert_slide_expansion(kW), expected);
  auto s = schubert(kW);
  EXPECT_EQ(s, key_polynomial(WC{0, 3, 1, 0, 1}) + key_polynomial(WC{0, 3, 2, 0, 0}));
  EXPECT_EQ(s, schubert_oracle(kW));
  EXPECT_EQ(schubert(Permutation::identity(4)), Polynomial::one());
}

TEST(Expansions, Goldens153264) {
  EXPECT_EQ(schur_expansion(kW), (std::vector<Partition>{Partition{3, 1, 1}, Partition{3, 2}}));
  auto d = demazure_expansion(kW);
  EXPECT_EQ(d, (std::vector<WC>{WC{0, 3, 1, 0, 1}, WC{0, 3, 2, 0, 0}}));
  EXPECT_EQ(demazure_expansion(kW, YamanouchiRoute::definition), d);
  EXPECT_EQ(schur_expansion(Permutation::identity(3)), std::vector<Partition>{Partition{}});
  EXPECT_EQ(demazure_expansion(Permutation::identity(3)), std::vector<WC>{WC::zeros(2)});
}

TEST(Expansions, Goldens13625847) {
  std::vector<Partition> shapes{Partition{3, 2, 1, 1}, Partition{3, 2, 2}, Partition{3, 3, 1}, Partition{4, 1, 1, 1},
                                Partition{4, 2, 1}};
  std::sort(shapes.begin(), shapes.end());
  EXPECT_EQ(schur_expansion(kV), shapes);
  std::vector<WC> keys{WC{0, 1, 3, 0, 1, 2, 0}, WC{0, 2, 3, 0, 0, 2, 0}, WC{0, 3, 3, 0, 0, 1, 0},
                       WC{0, 1, 4, 0, 1, 1, 0}, WC{0, 2, 4, 0, 0, 1, 0}};
  std::sort(keys.begin(), keys.end());
  EXPECT_EQ(demazure_expansion(kV), keys);
  EXPECT_EQ(demazure_expansion(kV, YamanouchiRoute::definition), keys);
  EXPECT_EQ(schubert(kV), key_sum(keys, 7));
}

// Identity A at two truncations, identity B, both Demazure routes, and the
// per-class refinement.
TEST(Expansions, IdentitiesOverS5) {
  for (const auto& w : all_permutations(5)) {
    const int m = w.length() + 1;
    auto shapes = schur_expansion(w);
    EXPECT_EQ(stanley_function(w, m), schur_sum(shapes, m)) << w.str();
    EXPECT_EQ(stanley_function(w, m + 1), schur_sum(shapes, m + 1)) << w.str();
    auto keys = demazure_expansion(w);
    EXPECT_EQ(keys, demazure_expansion(w, YamanouchiRoute::definition)) << w.str();
    EXPECT_EQ(schubert(w), key_sum(keys, schubert_variables(w))) << w.str();
    EXPECT_EQ(shapes.size(), ck_classes(w).size());
    EXPECT_EQ(keys.size(), shapes.size());
    std::vector<Partition> sorted_keys;
    for (const auto& a : keys) sorted_keys.push_back(sort_parts(a));
    std::sort(sorted_keys.begin(), sorted_keys.end());
    EXPECT_EQ(sorted_keys, shapes) << w.str();
  }
}

TEST(Expansions, OracleIdentityOverS6) {
  for (const auto& w : all_permutations(6)) EXPECT_EQ(schubert(w), schubert_oracle(w)) << w.str();
}

// Prepending zeros: truncating to the new leading variables approaches the
// symmetric targets, with monomial sets growing with m.
TEST(Stability, SlideAndKeyPolynomials) {
  for (auto a : {WC{0, 3, 0, 2}, WC{3, 0, 2}}) {
    std::size_t slide_prev = 0, key_prev = 0;
    for (int m = 1; m <= 3; ++m) {
      auto slide = fundamental_slide(a.prepend_zeros(m)).truncated(m);
      auto key = key_polynomial(a.prepend_zeros(m)).truncated(m);
      EXPECT_EQ(slide, fundamental_qsym(flat(a), m)) << a.str() << " m=" << m;
      EXPECT_EQ(key, schur(sort_parts(a), m)) << a.str() << " m=" << m;
      EXPECT_GE(slide.size(), slide_prev);
      EXPECT_GE(key.size(), key_prev);
      slide_prev = slide.size();
      key_prev = key.size();
    }
  }
}
