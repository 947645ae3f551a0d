#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "weakeg/tableau.hpp"

using namespace weakeg;

namespace {

Tableau key2(std::vector<int> top, std::vector<int> bottom) { return Tableau::key({{4, top}, {2, bottom}}); }

// SKT(0,3,0,2), labelled A to E.
const Tableau kA = key2({2, 1}, {5, 4, 3});
const Tableau kB = key2({3, 1}, {5, 4, 2});
const Tableau kC = key2({5, 1}, {4, 3, 2});
const Tableau kD = key2({5, 3}, {4, 2, 1});
const Tableau kE = key2({5, 4}, {3, 2, 1});

void for_each_weak(int len, int total, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> b(len, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == len) {
      if (left == 0) f(b);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      b[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, total);
}

// Every bijective filling of the shape, filtered by the given predicate.
std::set<Tableau> brute_fillings(const std::vector<int>& shape, ShapeKind kind,
                                 const std::function<bool(const Tableau&)>& keep) {
  int n = 0;
  for (int v : shape) n += v;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  std::set<Tableau> out;
  do {
    std::map<int, Tableau::Row> rows;
    int k = 0;
    for (std::size_t r = 0; r < shape.size(); ++r)
      for (int c = 0; c < shape[r]; ++c) rows[static_cast<int>(r) + 1].push_back(perm[k++]);
    Tableau t(kind, rows);
    if (keep(t)) out.insert(t);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// The key tableau condition read literally: for every pair of cells in a
// column with the upper entry smaller, look for a larger entry right of the
// lower one.
bool literal_skt(const Tableau& t) {
  for (const auto& [i, r] : t.rows())
    for (std::size_t c = 1; c < r.size(); ++c)
      if (r[c] >= r[c - 1]) return false;
  for (const auto& [hi, rh] : t.rows())
    for (const auto& [lo, rl] : t.rows()) {
      if (lo >= hi) continue;
      for (std::size_t c = 0; c < std::min(rh.size(), rl.size()); ++c) {
        if (rh[c] >= rl[c]) continue;
        bool found = false;
        for (std::size_t d = c + 1; d < rl.size(); ++d) found = found || rl[d] > rh[c];
        if (!found) return false;
      }
    }
  return true;
}

// Monomial expansion of s_lambda(x_1..x_m) from semistandard fillings.
Polynomial ssyt_schur(const Partition& lambda, int m) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda.parts[r]; ++c) cells.emplace_back(r, c);
  std::map<std::pair<int, int>, int> fill;
  Polynomial out(m);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      Exponent e(m, 0);
      for (auto& [cell, v] : fill) ++e[v - 1];
      out.add_term(e, 1);
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, fill[{r, c - 1}]);
    if (r > 0) lo = std::max(lo, fill[{r - 1, c}] + 1);
    for (int v = lo; v <= m; ++v) {
      fill[{r, c}] = v;
      rec(k + 1);
    }
    fill.erase({r, c});
  };
  rec(0);
  return out;
}

// kappa_a through Demazure operators pi_i f = d_i(x_i f).
Polynomial demazure_oracle(std::vector<int> a) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i + 1 < n; ++i) {
    if (a[i] < a[i + 1]) {
      std::swap(a[i], a[i + 1]);
      auto f = demazure_oracle(a);
      return divided_difference(Polynomial::variable(i + 1, n) * f, i + 1).extended(n);
    }
  }
  return Polynomial::monomial(a);
}

}  // namespace

TEST(Syt, Shape32) {
  auto all = enumerate_syt(Partition{3, 2});
  ASSERT_EQ(all.size(), 5u);
  std::map<Tableau, Composition> expected{
      {Tableau::young({{1, 2, 3}, {4, 5}}), {3, 2}}, {Tableau::young({{1, 2, 4}, {3, 5}}), {2, 2, 1}},
      {Tableau::young({{1, 3, 4}, {2, 5}}), {1, 3, 1}}, {Tableau::young({{1, 3, 5}, {2, 4}}), {1, 2, 2}},
      {Tableau::young({{1, 2, 5}, {3, 4}}), {2, 3}}};
  for (const auto& t : all) {
    ASSERT_TRUE(expected.count(t)) << t.str();
    EXPECT_EQ(syt_descent_composition(t), expected.at(t));
  }
  EXPECT_EQ(enumerate_syt(Partition{4}).size(), 1u);
  EXPECT_EQ(syt_descent_composition(Tableau::young({{1, 2, 3, 4}})), Composition{4});
  EXPECT_EQ(syt_descent_composition(Tableau::young({{1}, {2}, {3}})), (Composition{1, 1, 1}));
  EXPECT_THROW(syt_descent_composition(Tableau::young({{2, 1}})), std::invalid_argument);
}

TEST(Syt, MatchesBruteForce) {
  for (auto lambda : {Partition{2, 2}, Partition{3, 1, 1}, Partition{2, 2, 1}, Partition{3, 2, 1}}) {
    auto fast = enumerate_syt(lambda);
    auto brute = brute_fillings(lambda.parts, ShapeKind::young, is_standard_young);
    EXPECT_EQ(std::set<Tableau>(fast.begin(), fast.end()), brute) << lambda.str();
  }
  EXPECT_EQ(enumerate_syt(Partition{2, 2}).size(), 2u);
}

TEST(Schur, Goldens) {
  Polynomial expected(6);
  for (auto alpha : {Composition{2, 3}, Composition{1, 2, 2}, Composition{1, 3, 1}, Composition{3, 2}, Composition{2, 2, 1}})
    expected += fundamental_qsym(alpha, 6);
  EXPECT_EQ(schur(Partition{3, 2}, 6), expected);
  Polynomial linear(4);
  for (int i = 1; i <= 4; ++i) linear += Polynomial::variable(i, 4);
  EXPECT_EQ(schur(Partition{1}, 4), linear);
  auto s21 = schur(Partition{2, 1}, 3);
  EXPECT_EQ(s21, ssyt_schur(Partition{2, 1}, 3));
  Coefficient total = 0;
  for (const auto& [e, c] : s21.terms()) total += c;
  EXPECT_EQ(total, 8);
}

TEST(Schur, MatchesSemistandardOracle) {
  for (auto lambda : {Partition{3, 2}, Partition{2, 2, 1}, Partition{3, 1, 1}, Partition{4, 2}})
    for (int m = 1; m <= 4; ++m) EXPECT_EQ(schur(lambda, m), ssyt_schur(lambda, m)) << lambda.str() << m;
}

TEST(Skt, Shape0302) {
  auto all = enumerate_skt(WeakComposition{0, 3, 0, 2});
  ASSERT_EQ(all.size(), 5u);
  std::map<Tableau, MaybeVirtual> expected{{kE, WeakComposition{0, 3, 0, 2}},
                                           {kD, WeakComposition{2, 2, 0, 1}},
                                           {kC, WeakComposition{1, 3, 0, 1}},
                                           {kB, kVirtual},
                                           {kA, WeakComposition{2, 3, 0, 0}}};
  for (const auto& t : all) {
    ASSERT_TRUE(expected.count(t)) << t.str();
    EXPECT_EQ(skt_weak_descent_composition(t, 4), expected.at(t)) << t.str();
  }
  EXPECT_EQ(enumerate_skt(WeakComposition{4}).size(), 1u);
  EXPECT_EQ(enumerate_skt(WeakComposition{4}).front(), Tableau::key({{1, {4, 3, 2, 1}}}));
  EXPECT_EQ(enumerate_skt(WeakComposition{1, 1}).size(), 1u);
  EXPECT_EQ(enumerate_skt(WeakComposition{1, 1}).front(), Tableau::key({{1, {1}}, {2, {2}}}));
}

TEST(Skt, MatchesLiteralDefinition) {
  for (int len = 1; len <= 4; ++len)
    for (int total = 1; total <= 5; ++total)
      for_each_weak(len, total, [&](const std::vector<int>& a) {
        auto fast = enumerate_skt(WeakComposition(a));
        auto brute = brute_fillings(a, ShapeKind::key, literal_skt);
        EXPECT_EQ(std::set<Tableau>(fast.begin(), fast.end()), brute) << WeakComposition(a).str();
        for (const auto& t : fast) EXPECT_TRUE(is_standard_key(t));
      });
}

TEST(Skt, EquinumerousWithSyt) {
  for (int len = 1; len <= 4; ++len)
    for (int total = 1; total <= 6; ++total)
      for_each_weak(len, total, [&](const std::vector<int>& a) {
        WeakComposition wa(a);
        EXPECT_EQ(enumerate_skt(wa).size(), enumerate_syt(sort_parts(wa)).size()) << wa.str();
      });
}

TEST(Skt, AtMostOnePerRearrangement) {
  for (int len = 1; len <= 4; ++len)
    for (int total = 1; total <= 6; ++total)
      for_each_weak(len, total, [&](const std::vector<int>& a) {
        WeakComposition wa(a);
        auto target = sort_parts(wa);
        std::map<WeakComposition, int> seen;
        for (const auto& t : enumerate_skt(wa)) {
          auto d = skt_weak_descent_composition(t, len);
          if (d && sort_parts(*d) == target) EXPECT_EQ(++seen[*d], 1) << wa.str() << " " << d->str();
        }
      });
}

TEST(Skt, CanonicalFilling) {
  EXPECT_EQ(canonical_skt(WeakComposition{0, 3, 0, 2}), kE);
  EXPECT_EQ(canonical_skt(WeakComposition{1}), Tableau::key({{1, {1}}}));
  WeakComposition a{0, 2, 3, 0, 0, 2};
  EXPECT_EQ(skt_weak_descent_composition(canonical_skt(a), 6), a);
  for (int len = 1; len <= 4; ++len)
    for (int total = 0; total <= 5; ++total)
      for_each_weak(len, total, [&](const std::vector<int>& b) {
        WeakComposition wb(b);
        EXPECT_EQ(skt_weak_descent_composition(canonical_skt(wb), len), wb);
      });
}

TEST(KeyPolynomial, Goldens) {
  Polynomial expected = fundamental_slide(WeakComposition{0, 3, 0, 2}) + fundamental_slide(WeakComposition{2, 2, 0, 1}) +
                        fundamental_slide(WeakComposition{1, 3, 0, 1}) + fundamental_slide(WeakComposition{2, 3, 0, 0});
  EXPECT_EQ(key_polynomial(WeakComposition{0, 3, 0, 2}), expected);
  EXPECT_EQ(key_polynomial(WeakComposition{3, 0, 0}), Polynomial::monomial({3, 0, 0}));
}

TEST(KeyPolynomial, MatchesDemazureOperators) {
  for (int len = 1; len <= 4; ++len)
    for (int total = 0; total <= 5; ++total)
      for_each_weak(len, total, [&](const std::vector<int>& a) {
        EXPECT_EQ(key_polynomial(WeakComposition(a)), demazure_oracle(a)) << WeakComposition(a).str();
      });
}

TEST(DualEquivalence, Shape32Edges) {
  auto a = Tableau::young({{1, 2, 5}, {3, 4}}), b = Tableau::young({{1, 3, 5}, {2, 4}}),
       c = Tableau::young({{1, 3, 4}, {2, 5}}), d = Tableau::young({{1, 2, 4}, {3, 5}}),
       e = Tableau::young({{1, 2, 3}, {4, 5}});
  EXPECT_EQ(dual_equivalence(a, 2), b);
  EXPECT_EQ(dual_equivalence(a, 3), b);
  EXPECT_EQ(dual_equivalence(a, 4), a);
  EXPECT_EQ(dual_equivalence(b, 4), c);
  EXPECT_EQ(dual_equivalence(c, 2), d);
  EXPECT_EQ(dual_equivalence(c, 3), c);
  EXPECT_EQ(dual_equivalence(d, 3), e);
  EXPECT_EQ(dual_equivalence(d, 4), e);
  EXPECT_EQ(dual_equivalence(e, 2), e);
  EXPECT_THROW(dual_equivalence(a, 1), std::out_of_range);
  EXPECT_THROW(dual_equivalence(a, 5), std::out_of_range);
}

TEST(DualEquivalence, InvolutionsAndFarCommutation) {
  for (int n = 3; n <= 7; ++n) {
    std::vector<Partition> shapes;
    std::function<void(int, int, std::vector<int>&)> parts = [&](int left, int max, std::vector<int>& acc) {
      if (left == 0) {
        shapes.emplace_back(acc);
        return;
      }
      for (int p = std::min(left, max); p >= 1; --p) {
        acc.push_back(p);
        parts(left - p, p, acc);
        acc.pop_back();
      }
    };
    std::vector<int> acc;
    parts(n, n, acc);
    for (const auto& lambda : shapes)
      for (const auto& t : enumerate_syt(lambda))
        for (int i = 2; i < n; ++i) {
          auto u = dual_equivalence(t, i);
          EXPECT_TRUE(is_standard_young(u));
          EXPECT_EQ(u.row_lengths(), t.row_lengths());
          EXPECT_EQ(dual_equivalence(u, i), t);
          for (int j = i + 3; j < n; ++j) EXPECT_EQ(dual_equivalence(dual_equivalence(t, i), j), dual_equivalence(dual_equivalence(t, j), i));
        }
  }
}

TEST(WeakDualEquivalence, Shape0302Edges) {
  EXPECT_EQ(weak_dual_equivalence(kA, 2), kB);
  EXPECT_EQ(weak_dual_equivalence(kA, 3), kB);
  EXPECT_EQ(weak_dual_equivalence(kA, 4), kA);
  EXPECT_EQ(weak_dual_equivalence(kB, 4), kC);
  EXPECT_EQ(weak_dual_equivalence(kC, 2), kD);
  EXPECT_EQ(weak_dual_equivalence(kC, 3), kC);
  EXPECT_EQ(weak_dual_equivalence(kD, 3), kE);
  EXPECT_EQ(weak_dual_equivalence(kD, 4), kE);
  EXPECT_EQ(weak_dual_equivalence(kE, 2), kE);
  EXPECT_THROW(weak_dual_equivalence(kA, 5), std::out_of_range);
}

TEST(WeakDualEquivalence, InvolutionsAndPhiIntertwining) {
  for (int len = 1; len <= 5; ++len)
    for (int total = 3; total <= 6; ++total)
      for_each_weak(len, total, [&](const std::vector<int>& a) {
        WeakComposition wa(a);
        for (const auto& t : enumerate_skt(wa)) {
          for (int i = 2; i < total; ++i) {
            auto u = weak_dual_equivalence(t, i);
            EXPECT_TRUE(is_standard_key(u));
            EXPECT_EQ(u.key_shape(len), wa);
            EXPECT_EQ(weak_dual_equivalence(u, i), t) << t.str() << i;
            EXPECT_EQ(phi(u), dual_equivalence(phi(t), total - i + 1)) << t.str() << " i=" << i;
          }
        }
      });
}

TEST(Phi, BijectionOntoSyt) {
  EXPECT_TRUE(is_standard_young(phi(kE)));
  EXPECT_EQ(phi(kE).row_lengths(), (std::vector<int>{3, 2}));
  EXPECT_EQ(phi(Tableau::key({{1, {3, 2, 1}}})), Tableau::young({{1, 2, 3}}));
  for (int len = 1; len <= 4; ++len)
    for (int total = 1; total <= 6; ++total)
      for_each_weak(len, total, [&](const std::vector<int>& a) {
        WeakComposition wa(a);
        auto lambda = sort_parts(wa);
        std::set<Tableau> image;
        for (const auto& t : enumerate_skt(wa)) {
          auto y = phi(t);
          EXPECT_TRUE(is_standard_young(y));
          EXPECT_EQ(y.row_lengths(), lambda.parts);
          image.insert(y);
        }
        auto syt = enumerate_syt(lambda);
        EXPECT_EQ(image, std::set<Tableau>(syt.begin(), syt.end())) << wa.str();
      });
}
