#pragma once

// Elementary Coxeter-Knuth involutions and Coxeter-Knuth classes.

#include <queue>
#include <set>
#include <vector>

#include "weakeg/core.hpp"

namespace weakeg {

/// d_i for 1 < i < l, positions counted from the right.
inline ReducedWord ck_involution(const ReducedWord& rho, int i) {
  if (i <= 1 || i >= rho.size()) throw std::out_of_range("Coxeter-Knuth position " + std::to_string(i));
  const int lo = rho.at(i - 1), mid = rho.at(i), hi = rho.at(i + 1);
  if (hi == lo) return braid(rho, i);
  if ((lo > hi && hi > mid) || (lo < hi && hi < mid)) return commutation(rho, i - 1);
  if ((hi > lo && lo > mid) || (hi < lo && lo < mid)) return commutation(rho, i);
  return rho;
}

/// Closure of rho under every d_i, in length-lexicographic order.
inline std::vector<ReducedWord> ck_class(const ReducedWord& rho) {
  WordSet seen{rho};
  std::queue<ReducedWord> todo;
  todo.push(rho);
  while (!todo.empty()) {
    ReducedWord cur = todo.front();
    todo.pop();
    for (int i = 2; i < cur.size(); ++i) {
      ReducedWord next = ck_involution(cur, i);
      if (seen.insert(next).second) todo.push(next);
    }
  }
  return {seen.begin(), seen.end()};
}

/// R(w) split into Coxeter-Knuth classes, ordered by their first word.
inline std::vector<std::vector<ReducedWord>> ck_classes(const Permutation& w) {
  std::vector<std::vector<ReducedWord>> out;
  WordSet done;
  for (const auto& rho : reduced_words(w)) {
    if (done.count(rho)) continue;
    auto cls = ck_class(rho);
    done.insert(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return LengthLex{}(a.front(), b.front()); });
  return out;
}

}  // namespace weakeg
