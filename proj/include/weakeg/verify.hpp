#pragma once

// Exhaustive identity checks over all permutations up to a given rank, run
// per permutation on a worker pool and merged in canonical order.

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "weakeg/core.hpp"
#include "weakeg/coxeter_knuth.hpp"
#include "weakeg/drop_lift.hpp"
#include "weakeg/expansions.hpp"
#include "weakeg/insertion.hpp"
#include "weakeg/io.hpp"
#include "weakeg/tableau.hpp"
#include "weakeg/word_stats.hpp"

namespace weakeg {

struct VerifyRecord {
  std::string identity;
  int rank = 0;
  Permutation permutation;
  bool passed = false;
  std::optional<std::string> witness;
};

/// nullopt on success, otherwise a counterexample description.
using IdentityCheck = std::function<std::optional<std::string>(const Permutation&)>;

namespace detail {

inline std::string first_word(const Permutation& w) {
  auto words = reduced_words(w);
  return words.empty() ? "()" : words.front().str();
}

inline std::optional<std::string> check_stanley_schur(const Permutation& w) {
  const int m = w.length() + 1;
  auto shapes = schur_expansion(w);
  for (int k : {m, m + 1})
    if (stanley_function(w, k) != schur_sum(shapes, k)) return first_word(w) + " m=" + std::to_string(k);
  return std::nullopt;
}

inline std::optional<std::string> check_schubert_key(const Permutation& w) {
  auto keys = demazure_expansion(w);
  if (keys != demazure_expansion(w, YamanouchiRoute::definition)) return first_word(w) + " routes differ";
  if (schubert(w) != key_sum(keys, schubert_variables(w))) return first_word(w);
  return std::nullopt;
}

inline std::optional<std::string> check_oracle(const Permutation& w) {
  if (schubert(w) != schubert_oracle(w)) return first_word(w);
  return std::nullopt;
}

inline std::optional<std::string> check_fibers(const Permutation& w) {
  const int n = schubert_variables(w);
  auto words = reduced_words(w);
  std::set<CorrespondencePair> eg_images, weak_images;
  std::map<Tableau, std::set<ReducedWord>> eg_fibers, weak_fibers;
  for (const auto& rho : words) {
    auto eg = eg_correspondence(rho);
    auto wk = weak_correspondence(rho);
    if (!eg_images.insert(eg).second || !weak_images.insert(wk).second) return rho.str() + " collision";
    eg_fibers[eg.insertion].insert(rho);
    weak_fibers[wk.insertion].insert(rho);
    auto des = descent_composition(rho).parts;
    std::reverse(des.begin(), des.end());
    if (!is_standard_young(eg.recording) || syt_descent_composition(eg.recording) != Composition(des))
      return rho.str() + " EG recording";
    if (!is_standard_key(wk.recording) || wk.recording.key_shape(n) != wk.insertion.key_shape(n) ||
        skt_weak_descent_composition(wk.recording, n) != weak_descent_composition(rho, n))
      return rho.str() + " weak recording";
  }
  std::set<std::set<ReducedWord>> classes, eg_parts, weak_parts;
  for (const auto& cls : ck_classes(w)) classes.emplace(cls.begin(), cls.end());
  for (const auto& [t, f] : eg_fibers) eg_parts.insert(f);
  for (const auto& [t, f] : weak_fibers) weak_parts.insert(f);
  if (eg_parts != classes) return first_word(w) + " EG fibers";
  if (weak_parts != classes) return first_word(w) + " weak fibers";
  std::size_t eg_target = 0, weak_target = 0;
  for (const auto& inc : increasing_words(w))
    eg_target += enumerate_syt(sort_parts(WeakComposition(descent_composition(inc).parts))).size();
  for (const auto& yam : yamanouchi_words(w)) weak_target += enumerate_skt(*weak_descent_composition(yam, n)).size();
  if (eg_target != words.size() || weak_target != words.size()) return first_word(w) + " not onto";
  return std::nullopt;
}

inline std::optional<std::string> check_nil_hecke(const Permutation& w) {
  for (const auto& rho : reduced_words(w)) {
    auto t = IncreasingRows::from_word(rho);
    const int k = t.count();
    for (int i = 1; i < k; ++i) {
      if (drop_i(drop_i(t, i), i) != drop_i(t, i)) return rho.str();
      for (int j = i + 2; j < k; ++j)
        if (drop_i(drop_i(t, i), j) != drop_i(drop_i(t, j), i)) return rho.str();
      if (i + 1 < k && drop_i(drop_i(drop_i(t, i), i + 1), i) != drop_i(drop_i(drop_i(t, i + 1), i), i + 1))
        return rho.str();
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> check_yamanouchi(const Permutation& w) {
  for (const auto& rho : reduced_words(w))
    if (is_yamanouchi(rho) != is_yamanouchi_oracle(rho)) return rho.str();
  return std::nullopt;
}

inline std::optional<std::string> check_phi(const Permutation& w) {
  for (const auto& rho : reduced_words(w)) {
    const auto q = weak_correspondence(rho).recording;
    const int k = q.size();
    if (!is_standard_young(phi(q))) return rho.str();
    for (int i = 2; i < k; ++i) {
      auto u = weak_dual_equivalence(q, i);
      if (!is_standard_key(u) || weak_dual_equivalence(u, i) != q) return rho.str();
      if (phi(u) != dual_equivalence(phi(q), k - i + 1)) return rho.str();
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Named checks in canonical order.
inline const std::vector<std::pair<std::string, IdentityCheck>>& identity_checks() {
  static const std::vector<std::pair<std::string, IdentityCheck>> checks{
      {"A", detail::check_stanley_schur},      {"B", detail::check_schubert_key},
      {"C", detail::check_oracle},             {"fibers", detail::check_fibers},
      {"nil-hecke", detail::check_nil_hecke},  {"yamanouchi", detail::check_yamanouchi},
      {"phi", detail::check_phi}};
  return checks;
}

/// Permutations new at each rank 1..max_rank: the identity at rank 1, then
/// those with w(n) != n.
inline std::vector<Permutation> verification_permutations(int max_rank) {
  std::vector<Permutation> out;
  if (max_rank >= 1) out.push_back(Permutation::identity(1));
  for (int n = 2; n <= max_rank; ++n)
    for (auto& w : all_permutations(n))
      if (w(n) != n) out.push_back(std::move(w));
  return out;
}

/// Runs the named identities (all when empty) over every permutation up to
/// max_rank. Output order is (rank, permutation, identity) regardless of jobs.
inline std::vector<VerifyRecord> verify(int max_rank, std::vector<std::string> identities = {}, int jobs = 1) {
  const auto& all = identity_checks();
  std::vector<std::pair<std::string, IdentityCheck>> chosen;
  if (identities.empty()) chosen = all;
  for (const auto& name : identities) {
    auto it = std::find_if(all.begin(), all.end(), [&](const auto& c) { return c.first == name; });
    if (it == all.end()) throw std::invalid_argument("unknown identity '" + name + "'");
    if (std::none_of(chosen.begin(), chosen.end(), [&](const auto& c) { return c.first == name; }))
      chosen.push_back(*it);
  }
  std::sort(chosen.begin(), chosen.end(), [&](const auto& a, const auto& b) {
    auto pos = [&](const std::string& s) {
      return std::find_if(all.begin(), all.end(), [&](const auto& c) { return c.first == s; }) - all.begin();
    };
    return pos(a.first) < pos(b.first);
  });

  const auto perms = verification_permutations(max_rank);
  std::vector<std::vector<VerifyRecord>> slots(perms.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < perms.size();) {
      const auto& w = perms[k];
      for (const auto& [name, check] : chosen) {
        VerifyRecord r{name, w.rank(), w, false, std::nullopt};
        try {
          r.witness = check(w);
        } catch (const std::exception& e) {
          r.witness = std::string("exception: ") + e.what();
        }
        r.passed = !r.witness;
        slots[k].push_back(std::move(r));
      }
    }
  };
  const int n_threads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<VerifyRecord> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

inline Json to_json(const VerifyRecord& r) {
  Json out{{"identity", r.identity},
           {"rank", r.rank},
           {"permutation", r.permutation.str()},
           {"status", r.passed ? "pass" : "fail"}};
  if (r.witness) out["witness"] = *r.witness;
  return out;
}

}  // namespace weakeg
