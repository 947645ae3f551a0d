#pragma once

// Edelman-Greene insertion and the weak insertion built from drop, EG
// insertion and the canonical lift, with their recording tableaux.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "weakeg/core.hpp"
#include "weakeg/coxeter_knuth.hpp"
#include "weakeg/drop_lift.hpp"
#include "weakeg/tableau.hpp"
#include "weakeg/word_stats.hpp"

namespace weakeg {

struct CorrespondencePair {
  Tableau insertion;
  Tableau recording;
  friend bool operator==(const CorrespondencePair&, const CorrespondencePair&) = default;
  friend bool operator<(const CorrespondencePair& a, const CorrespondencePair& b) {
    if (a.insertion == b.insertion) return a.recording < b.recording;
    return a.insertion < b.insertion;
  }
};

/// Successive tableaux after each inserted letter, letters taken left to right.
struct CorrespondenceTrace {
  std::vector<Letter> letters;
  std::vector<Tableau> insertion;
  std::vector<Tableau> recording;
};

namespace detail {

inline void require_insertable(const ReducedWord& row_word, Letter x) {
  if (x < 1) throw std::invalid_argument("letters must be positive");
  if (!is_reduced(row_word.appended(x)))
    throw std::invalid_argument("inserting " + std::to_string(x) + " into " + row_word.str() + " is not reduced");
}

}  // namespace detail

/// EG insertion of x into an increasing Young tableau; returns the new rows
/// and the added cell.
inline std::pair<IncreasingRows, Cell> eg_insert(IncreasingRows p, Letter x) {
  if (!p.is_increasing_young()) throw std::invalid_argument("EG insertion needs an increasing Young tableau");
  detail::require_insertable(p.word(), x);
  for (std::size_t r = 0;; ++r) {
    if (r == p.rows.size()) p.rows.emplace_back();
    auto& row = p.rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return {p, Cell{static_cast<int>(r) + 1, static_cast<int>(row.size())}};
    }
    const Letter bumped = *it;
    const bool keep = bumped == x + 1 && std::binary_search(row.begin(), row.end(), x);
    if (!keep) *it = x;
    x = bumped;
  }
}

/// (P(rho), Q(rho)); Q gets entry j for the j-th letter from the left.
inline CorrespondencePair eg_correspondence(const ReducedWord& rho, CorrespondenceTrace* trace = nullptr) {
  require_reduced(rho, "EG correspondence");
  IncreasingRows p;
  Tableau q(ShapeKind::young);
  if (trace) *trace = {};
  int entry = 0;
  for (Letter x : rho.letters()) {
    auto [next, cell] = eg_insert(p, x);
    p = std::move(next);
    auto row = q.row(cell.row);
    row.push_back(++entry);
    q.set_row(cell.row, row);
    if (trace) {
      trace->letters.push_back(x);
      trace->insertion.push_back(p.tableau());
      trace->recording.push_back(q);
    }
  }
  return {p.tableau(), q};
}

/// Weak insertion on the row form of a Yamanouchi tableau: drop, EG insert,
/// canonical lift.
inline IncreasingRows weak_insert(const IncreasingRows& p, Letter x) {
  auto young = drop_full(p);
  auto inserted = eg_insert(young, x).first;
  auto lifted = lift_canonical(inserted).result;
  lifted.trim();
  return lifted;
}

/// Weak insertion on a Yamanouchi key tableau.
inline Tableau weak_insert(const Tableau& p, Letter x) {
  std::vector<LetterRow> rows;
  for (const auto& [i, r] : p.rows()) rows.push_back(r);
  auto lifted = weak_insert(IncreasingRows::from_rows(std::move(rows)), x);
  return weak_descent_tableau(lifted.word());
}

/// (P~(rho), Q~(rho)); Q~ gets entry i for rho_i, so entries decrease in
/// insertion order.
inline CorrespondencePair weak_correspondence(const ReducedWord& rho, CorrespondenceTrace* trace = nullptr) {
  require_reduced(rho, "weak correspondence");
  IncreasingRows p;
  Tableau shape = Tableau::key({});
  Tableau q = Tableau::key({});
  if (trace) *trace = {};
  int entry = rho.size();
  for (Letter x : rho.letters()) {
    p = weak_insert(p, x);
    Tableau next = weak_descent_tableau(p.word());
    int grown = 0, count = 0;
    for (const auto& [i, r] : next.rows()) {
      const auto before = static_cast<int>(shape.row(i).size());
      if (static_cast<int>(r.size()) == before + 1) {
        grown = i;
        ++count;
      } else if (static_cast<int>(r.size()) != before) {
        count = -1;
        break;
      }
    }
    if (count != 1 || next.size() != shape.size() + 1)
      throw std::logic_error("weak insertion shapes are not nested at " + rho.str());
    auto row = q.row(grown);
    row.push_back(entry--);
    q.set_row(grown, row);
    shape = std::move(next);
    if (trace) {
      trace->letters.push_back(x);
      trace->insertion.push_back(shape);
      trace->recording.push_back(q);
    }
  }
  return {shape, q};
}

/// Checks both recording equivariances for the pair (sigma, tau) at index i:
/// sigma = d_{n-i+1}(tau) iff P agrees and Q(sigma) = d_i(Q(tau)), and
/// sigma = d_i(tau) iff P~ agrees and Q~(sigma) = d~_i(Q~(tau)).
inline bool recording_equivariance_check(const ReducedWord& sigma, const ReducedWord& tau, int i) {
  const int n = tau.size();
  if (sigma.size() != n || i <= 1 || i >= n) return false;
  auto eg_s = eg_correspondence(sigma), eg_t = eg_correspondence(tau);
  auto wk_s = weak_correspondence(sigma), wk_t = weak_correspondence(tau);
  const bool classical = (sigma == ck_involution(tau, n - i + 1)) ==
                         (eg_s.insertion == eg_t.insertion && eg_s.recording == dual_equivalence(eg_t.recording, i));
  const bool weak = (sigma == ck_involution(tau, i)) ==
                    (wk_s.insertion == wk_t.insertion && wk_s.recording == weak_dual_equivalence(wk_t.recording, i));
  return classical && weak;
}

}  // namespace weakeg
