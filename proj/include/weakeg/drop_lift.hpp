#pragma once

// Drop and lift moves on increasing factorizations of reduced words, the
// drop to the increasing Young tableau of a Coxeter-Knuth class, the
// canonical lifting path to its Yamanouchi word, and Yamanouchi tests.

#include <algorithm>
#include <vector>

#include "weakeg/core.hpp"
#include "weakeg/coxeter_knuth.hpp"
#include "weakeg/tableau.hpp"
#include "weakeg/word_stats.hpp"

namespace weakeg {

using LetterRow = std::vector<Letter>;

/// An increasing decomposition (rho^(k) | ... | rho^(1)). rows[0] is the
/// bottom row rho^(1); rows may be empty.
struct IncreasingRows {
  std::vector<LetterRow> rows;

  static IncreasingRows from_word(const ReducedWord& rho) { return {run_decomposition(rho).runs}; }

  /// Rows listed bottom to top.
  static IncreasingRows from_rows(std::vector<LetterRow> bottom_up) {
    for (const auto& r : bottom_up)
      for (std::size_t c = 1; c < r.size(); ++c)
        if (r[c] <= r[c - 1]) throw std::invalid_argument("rows must strictly increase");
    return {std::move(bottom_up)};
  }

  int count() const { return static_cast<int>(rows.size()); }

  /// Reading word: rows left to right, top row first.
  ReducedWord word() const {
    std::vector<Letter> w;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return ReducedWord(std::move(w));
  }

  Tableau tableau() const { return Tableau::young(rows); }

  void trim() {
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
  }

  /// Partition shape, strictly increasing rows and columns.
  bool is_increasing_young() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].empty()) return false;
      if (i && rows[i].size() > rows[i - 1].size()) return false;
      for (std::size_t c = 0; c < rows[i].size(); ++c) {
        if (c && rows[i][c] <= rows[i][c - 1]) return false;
        if (i && rows[i][c] <= rows[i - 1][c]) return false;
      }
    }
    return true;
  }

  friend bool operator==(const IncreasingRows&, const IncreasingRows&) = default;
  friend auto operator<=>(const IncreasingRows& a, const IncreasingRows& b) { return a.rows <=> b.rows; }

  std::string str() const {
    std::string out;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) out += "(" + detail::join(*it, ",") + ")";
    return out;
  }
};

// ---------------------------------------------------------------------------
// Drop
// ---------------------------------------------------------------------------

/// tau = tau^(0) x_1 tau^(1) ... x_k tau^(k), sigma = sigma^(0) ... sigma^(k+1).
struct DropFactorization {
  std::vector<LetterRow> tau_blocks;    // k+1 blocks
  std::vector<LetterRow> sigma_blocks;  // k+2 blocks
  std::vector<Letter> unsupported;
};

namespace detail {

inline void require_reduced_pair(const LetterRow& tau, const LetterRow& sigma) {
  std::vector<Letter> w = tau;
  w.insert(w.end(), sigma.begin(), sigma.end());
  if (!is_reduced(ReducedWord(w))) throw std::invalid_argument("concatenation is not a reduced word");
}

inline void require_increasing(const LetterRow& r) {
  for (std::size_t c = 1; c < r.size(); ++c)
    if (r[c] <= r[c - 1]) throw std::invalid_argument("word is not increasing");
}

}  // namespace detail

/// Drop alignment of sigma below tau: scanning left to right, a letter of
/// tau that is not larger than the next letter of sigma is unsupported, as
/// is every letter of tau past the end of sigma.
inline DropFactorization drop_align(const LetterRow& sigma, const LetterRow& tau) {
  detail::require_increasing(sigma);
  detail::require_increasing(tau);
  detail::require_reduced_pair(tau, sigma);
  DropFactorization f;
  f.tau_blocks.emplace_back();
  f.sigma_blocks.emplace_back();
  std::size_t si = 0;
  for (Letter t : tau) {
    if (si < sigma.size() && t > sigma[si]) {
      f.tau_blocks.back().push_back(t);
      f.sigma_blocks.back().push_back(sigma[si++]);
    } else {
      f.unsupported.push_back(t);
      f.tau_blocks.emplace_back();
      f.sigma_blocks.emplace_back();
    }
  }
  f.sigma_blocks.emplace_back(sigma.begin() + static_cast<std::ptrdiff_t>(si), sigma.end());
  return f;
}

/// drop(tau sigma) as the pair (new tau, new sigma).
inline std::pair<LetterRow, LetterRow> drop_pair(const LetterRow& tau, const LetterRow& sigma) {
  auto f = drop_align(sigma, tau);
  LetterRow top, bottom = f.sigma_blocks[0];
  for (const auto& b : f.tau_blocks) top.insert(top.end(), b.begin(), b.end());
  for (std::size_t j = 1; j <= f.unsupported.size(); ++j) {
    const Letter x = f.unsupported[j - 1];
    const LetterRow& tb = f.tau_blocks[j];
    LetterRow sb = f.sigma_blocks[j];
    if (!tb.empty() && x == tb[0] - 1) {
      for (std::size_t i = 0; i < sb.size() && tb[i] == x + static_cast<int>(i) + 1 && sb[i] == x + static_cast<int>(i); ++i)
        ++sb[i];
    }
    bottom.push_back(x);
    bottom.insert(bottom.end(), sb.begin(), sb.end());
  }
  const auto& last = f.sigma_blocks.back();
  bottom.insert(bottom.end(), last.begin(), last.end());
  return {top, bottom};
}

/// drop_i: replaces rows i+1 and i by drop of their concatenation.
inline IncreasingRows drop_i(IncreasingRows rows, int i) {
  if (i < 1 || i >= rows.count()) throw std::out_of_range("drop row " + std::to_string(i));
  auto [top, bottom] = drop_pair(rows.rows[i], rows.rows[i - 1]);
  rows.rows[i] = std::move(top);
  rows.rows[i - 1] = std::move(bottom);
  return rows;
}

inline ReducedWord drop_i(const ReducedWord& rho, int i) { return drop_i(IncreasingRows::from_word(rho), i).word(); }

/// Applies drop_i (smallest effective i first) until every drop_i fixes the
/// rows, then removes empty top rows.
inline IncreasingRows drop_full(IncreasingRows rows) {
  while (true) {
    bool moved = false;
    for (int i = 1; i < rows.count() && !moved; ++i) {
      auto next = drop_i(rows, i);
      if (next != rows) {
        rows = std::move(next);
        moved = true;
      }
    }
    if (!moved) break;
  }
  rows.trim();
  return rows;
}

inline ReducedWord drop_full(const ReducedWord& rho) { return drop_full(IncreasingRows::from_word(rho)).word(); }

// ---------------------------------------------------------------------------
// Lift
// ---------------------------------------------------------------------------

/// tau = tau^(0) tau^(1) ... tau^(k+1), sigma = sigma^(1) x_1 sigma^(2) ... x_k sigma^(k+1).
/// Letters of sigma left of the last letter of tau in the alignment stay in sigma^(1).
struct LiftFactorization {
  std::vector<LetterRow> tau_blocks;    // k+2 blocks, tau^(0) first
  std::vector<LetterRow> sigma_blocks;  // k+1 blocks, sigma^(1) first
  std::vector<Letter> unblocked;
};

/// Lift alignment of tau above sigma: scanning right to left, a letter of
/// sigma larger than the next letter of tau is unblocked.
inline LiftFactorization lift_align(const LetterRow& tau, const LetterRow& sigma) {
  detail::require_increasing(sigma);
  detail::require_increasing(tau);
  detail::require_reduced_pair(tau, sigma);
  std::vector<LetterRow> tb{{}}, sb{{}};
  std::vector<Letter> xs;
  int ti = static_cast<int>(tau.size()) - 1;
  int si = static_cast<int>(sigma.size()) - 1;
  while (si >= 0 && ti >= 0) {
    if (tau[ti] >= sigma[si]) {
      tb.back().insert(tb.back().begin(), tau[ti--]);
      sb.back().insert(sb.back().begin(), sigma[si--]);
    } else {
      xs.push_back(sigma[si--]);
      tb.emplace_back();
      sb.emplace_back();
    }
  }
  // blocks were collected right to left
  std::reverse(tb.begin(), tb.end());
  std::reverse(sb.begin(), sb.end());
  std::reverse(xs.begin(), xs.end());
  sb.front().insert(sb.front().begin(), sigma.begin(), sigma.begin() + (si + 1));
  LiftFactorization f;
  f.tau_blocks.emplace_back(tau.begin(), tau.begin() + (ti + 1));
  f.tau_blocks.insert(f.tau_blocks.end(), tb.begin(), tb.end());
  f.sigma_blocks = std::move(sb);
  f.unblocked = std::move(xs);
  return f;
}

/// lift(tau sigma) as the pair (new tau, new sigma).
inline std::pair<LetterRow, LetterRow> lift_pair(const LetterRow& tau, const LetterRow& sigma) {
  auto f = lift_align(tau, sigma);
  // Unaligned letters of sigma or an equal pair in the first block admit no
  // lift factorization; the pair is then left unchanged.
  const auto& t1 = f.tau_blocks[1];
  const auto& s1 = f.sigma_blocks[0];
  if (!f.unblocked.empty() && t1.size() != s1.size()) return {tau, sigma};
  for (std::size_t i = 0; i < t1.size(); ++i)
    if (t1[i] == s1[i]) return {tau, sigma};
  LetterRow top = f.tau_blocks[0], bottom = f.sigma_blocks[0];
  top.insert(top.end(), f.tau_blocks[1].begin(), f.tau_blocks[1].end());
  for (std::size_t j = 1; j <= f.unblocked.size(); ++j) {
    const Letter x = f.unblocked[j - 1];
    const LetterRow& tn = f.tau_blocks[j + 1];
    LetterRow sn = f.sigma_blocks[j];
    if (!sn.empty() && x == sn[0] - 1) {
      for (std::size_t i = 0; i < sn.size() && tn[i] == x + static_cast<int>(i) + 1 && sn[i] == x + static_cast<int>(i) + 1; ++i)
        --sn[i];
    }
    top.push_back(x);
    top.insert(top.end(), tn.begin(), tn.end());
    bottom.insert(bottom.end(), sn.begin(), sn.end());
  }
  return {top, bottom};
}

/// lift_i: replaces rows i+1 and i by lift of their concatenation.
inline IncreasingRows lift_i(IncreasingRows rows, int i) {
  if (i < 1 || i >= rows.count()) throw std::out_of_range("lift row " + std::to_string(i));
  auto [top, bottom] = lift_pair(rows.rows[i], rows.rows[i - 1]);
  rows.rows[i] = std::move(top);
  rows.rows[i - 1] = std::move(bottom);
  return rows;
}

inline ReducedWord lift_i(const ReducedWord& rho, int i) { return lift_i(IncreasingRows::from_word(rho), i).word(); }

struct LiftPath {
  IncreasingRows result;
  std::vector<int> steps;                        // lift indices in the order applied
  std::vector<std::pair<int, int>> sequences;    // the lifting sequences [i_k, j_k]
};

/// Canonical lifting path from an increasing Young tableau: repeatedly apply
/// the faithful lifting sequence lift_[i,j] with j maximal, then i minimal.
inline LiftPath lift_canonical(const IncreasingRows& start) {
  if (!start.is_increasing_young()) throw std::invalid_argument("lift needs an increasing Young tableau");
  LiftPath path{start, {}, {}};
  const int k = start.count();
  while (true) {
    int best_j = 0, best_i = 0;
    for (int i = 1; i < k; ++i) {
      IncreasingRows cur = path.result;
      int j = i - 1;
      while (j + 1 < k) {
        auto next = lift_i(cur, j + 1);
        if (next == cur) break;
        cur = std::move(next);
        ++j;
      }
      if (j >= i && j > best_j) {
        best_j = j;
        best_i = i;
      }
    }
    if (!best_j) break;
    for (int s = best_i; s <= best_j; ++s) {
      path.result = lift_i(path.result, s);
      path.steps.push_back(s);
    }
    path.sequences.emplace_back(best_i, best_j);
  }
  return path;
}

/// Word form; rho must have an increasing Young descent tableau.
inline ReducedWord lift_canonical(const ReducedWord& rho) {
  return lift_canonical(IncreasingRows::from_word(rho)).result.word();
}

// ---------------------------------------------------------------------------
// Yamanouchi words
// ---------------------------------------------------------------------------

/// Definitional test: rho is non-virtual and its weak descent composition is
/// dominated by that of every non-virtual Coxeter-Knuth equivalent word.
inline bool is_yamanouchi_oracle(const ReducedWord& rho) {
  const int n = rho.max_letter();
  auto d = weak_descent_composition(rho, n);
  if (!d) return false;
  for (const auto& sigma : ck_class(rho)) {
    auto e = weak_descent_composition(sigma, n);
    if (e && !dominates(*e, *d)) return false;
  }
  return true;
}

/// Constructive test: rho equals the lift of the drop of rho.
inline bool is_yamanouchi(const ReducedWord& rho) { return lift_canonical(drop_full(rho)) == rho; }

/// YR(w), one word per Coxeter-Knuth class, from the increasing Young
/// representatives. Sorted length-lexicographically.
inline std::vector<ReducedWord> yamanouchi_words(const Permutation& w) {
  WordSet out;
  for_each_reduced_word(w, [&](std::span<const Letter> s) {
    ReducedWord rho(std::vector<Letter>(s.begin(), s.end()));
    if (IncreasingRows::from_word(rho).is_increasing_young()) out.insert(lift_canonical(rho));
  });
  return {out.begin(), out.end()};
}

/// Words of R(w) whose descent tableau is an increasing Young tableau.
inline std::vector<ReducedWord> increasing_words(const Permutation& w) {
  WordSet out;
  for_each_reduced_word(w, [&](std::span<const Letter> s) {
    ReducedWord rho(std::vector<Letter>(s.begin(), s.end()));
    if (IncreasingRows::from_word(rho).is_increasing_young()) out.insert(rho);
  });
  return {out.begin(), out.end()};
}

}  // namespace weakeg
