#pragma once

// Generating functions of reduced words: Stanley symmetric functions and
// Schubert polynomials in the fundamental bases, and their Schur and
// Demazure expansions.

#include <map>
#include <vector>

#include "weakeg/core.hpp"
#include "weakeg/coxeter_knuth.hpp"
#include "weakeg/drop_lift.hpp"
#include "weakeg/polynomial.hpp"
#include "weakeg/tableau.hpp"
#include "weakeg/word_stats.hpp"

namespace weakeg {

/// Number of variables for Schubert polynomials of w: one less than its rank.
inline int schubert_variables(const Permutation& w) { return std::max(w.rank() - 1, 0); }

/// Des(rho) over R(w) with multiplicities.
inline std::map<Composition, int> stanley_fundamental_expansion(const Permutation& w) {
  std::map<Composition, int> out;
  for_each_reduced_word(w, [&](std::span<const Letter> s) {
    ++out[descent_composition(ReducedWord(std::vector<Letter>(s.begin(), s.end())))];
  });
  return out;
}

/// Non-virtual des(rho) over R(w) with multiplicities.
inline std::map<WeakComposition, int> schubert_slide_expansion(const Permutation& w) {
  const int n = schubert_variables(w);
  std::map<WeakComposition, int> out;
  for_each_reduced_word(w, [&](std::span<const Letter> s) {
    auto d = weak_descent_composition(ReducedWord(std::vector<Letter>(s.begin(), s.end())), n);
    if (d) ++out[*d];
  });
  return out;
}

/// The Stanley symmetric function of w in m variables.
inline Polynomial stanley_function(const Permutation& w, int m) {
  Polynomial out(m);
  for (const auto& [alpha, k] : stanley_fundamental_expansion(w)) out += fundamental_qsym(alpha, m) * Coefficient(k);
  return out;
}

/// The Schubert polynomial of w as a sum of fundamental slide polynomials.
inline Polynomial schubert(const Permutation& w) {
  Polynomial out(schubert_variables(w));
  for (const auto& [a, k] : schubert_slide_expansion(w)) out += fundamental_slide(a) * Coefficient(k);
  return out;
}

/// Shapes of the increasing Young tableaux with reduced reading word for w,
/// sorted; each is one Schur term.
inline std::vector<Partition> schur_expansion(const Permutation& w) {
  std::vector<Partition> out;
  for (const auto& rho : increasing_words(w)) out.push_back(sort_parts(WeakComposition(descent_composition(rho).parts)));
  std::sort(out.begin(), out.end());
  return out;
}

enum class YamanouchiRoute { lift, definition };

/// Yamanouchi words of w found by scanning each Coxeter-Knuth class.
inline std::vector<ReducedWord> yamanouchi_words_by_definition(const Permutation& w) {
  std::vector<ReducedWord> out;
  for (const auto& cls : ck_classes(w))
    for (const auto& rho : cls)
      if (is_yamanouchi_oracle(rho)) out.push_back(rho);
  std::sort(out.begin(), out.end(), LengthLex{});
  return out;
}

/// des of the Yamanouchi words of w, sorted; each is one key polynomial term.
inline std::vector<WeakComposition> demazure_expansion(const Permutation& w,
                                                       YamanouchiRoute route = YamanouchiRoute::lift) {
  const int n = schubert_variables(w);
  auto words = route == YamanouchiRoute::lift ? yamanouchi_words(w) : yamanouchi_words_by_definition(w);
  std::vector<WeakComposition> out;
  for (const auto& rho : words) {
    auto d = weak_descent_composition(rho, n);
    if (!d) throw std::logic_error("virtual Yamanouchi word " + rho.str());
    out.push_back(*d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Polynomial schur_sum(const std::vector<Partition>& shapes, int m) {
  Polynomial out(m);
  for (const auto& lambda : shapes) out += schur(lambda, m);
  return out;
}

inline Polynomial key_sum(const std::vector<WeakComposition>& weights, int n) {
  Polynomial out(n);
  for (const auto& a : weights) out += key_polynomial(a);
  return out;
}

}  // namespace weakeg
