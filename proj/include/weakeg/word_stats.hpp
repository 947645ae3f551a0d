#pragma once

// Run decomposition of a word, its descent composition and descent
// tableau, and the weak versions of both.

#include <vector>

#include "weakeg/core.hpp"
#include "weakeg/tableau.hpp"

namespace weakeg {

/// Maximal increasing runs. runs[0] is rho^(1), the rightmost run; each
/// run lists its letters left to right.
struct RunDecomposition {
  std::vector<std::vector<Letter>> runs;

  int count() const { return static_cast<int>(runs.size()); }
  const std::vector<Letter>& run(int i) const { return runs.at(i - 1); }  // one-based

  std::string str() const {
    std::string out = "(";
    for (int i = count(); i >= 1; --i) {
      out += detail::join(run(i), ",");
      if (i > 1) out += "|";
    }
    return out + ")";
  }
};

inline RunDecomposition run_decomposition(const ReducedWord& rho) {
  RunDecomposition d;
  auto w = rho.letters();
  std::vector<std::vector<Letter>> left_to_right;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i == 0 || w[i] <= w[i - 1]) left_to_right.emplace_back();
    left_to_right.back().push_back(w[i]);
  }
  d.runs.assign(left_to_right.rbegin(), left_to_right.rend());
  return d;
}

/// Des(rho) = (|rho^(1)|, ..., |rho^(k)|).
inline Composition descent_composition(const ReducedWord& rho) {
  std::vector<int> parts;
  for (const auto& r : run_decomposition(rho).runs) parts.push_back(static_cast<int>(r.size()));
  return Composition(std::move(parts));
}

/// D(rho): rho^(i) placed in row i.
inline Tableau descent_tableau(const ReducedWord& rho) {
  auto d = run_decomposition(rho);
  return Tableau::young(d.runs);
}

namespace detail {

// r-hat: r_k = min rho^(k), then r_i = min(min rho^(i), r_{i+1} - 1).
inline std::vector<int> weak_rows(const RunDecomposition& d) {
  const int k = d.count();
  std::vector<int> hat(k);
  for (int i = k - 1; i >= 0; --i) {
    int r = d.runs[i].front();
    hat[i] = i == k - 1 ? r : std::min(r, hat[i + 1] - 1);
  }
  return hat;
}

}  // namespace detail

/// des(rho) as a weak composition of length n, or virtual. The default
/// length is the largest letter.
inline MaybeVirtual weak_descent_composition(const ReducedWord& rho, int n) {
  if (rho.empty()) return WeakComposition::zeros(n);
  auto d = run_decomposition(rho);
  auto hat = detail::weak_rows(d);
  if (hat.front() <= 0) return kVirtual;
  std::vector<int> parts(n, 0);
  for (int i = 0; i < d.count(); ++i) {
    if (hat[i] > n) throw std::invalid_argument("weak descent composition longer than requested length");
    parts[hat[i] - 1] = static_cast<int>(d.runs[i].size());
  }
  return WeakComposition(std::move(parts));
}

inline MaybeVirtual weak_descent_composition(const ReducedWord& rho) {
  return weak_descent_composition(rho, rho.max_letter());
}

/// 𝔻(rho): rho^(i) placed in row r-hat_i. Row indices may be <= 0, in
/// which case the tableau is virtual.
inline Tableau weak_descent_tableau(const ReducedWord& rho) {
  auto d = run_decomposition(rho);
  auto hat = detail::weak_rows(d);
  std::map<int, Tableau::Row> rows;
  for (int i = 0; i < d.count(); ++i) rows[hat[i]] = d.runs[i];
  return Tableau::key(std::move(rows));
}

}  // namespace weakeg
