#pragma once

// Permutations, reduced words and the integer sequences that index the
// bases (weak compositions, compositions, partitions), together with the
// elementary Coxeter moves on words.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace weakeg {

using Letter = int;

namespace detail {

inline std::string join(std::span<const int> xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Parses "1,2,3", "(1,2,3)", "[1,2,3]" or "()" into integers.
inline std::vector<int> parse_int_list(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && ((text.front() == '(' && text.back() == ')') ||
                           (text.front() == '[' && text.back() == ']'))) {
    text = text.substr(1, text.size() - 2);
  }
  std::vector<int> out;
  text = trim(text);
  if (text.empty()) return out;
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed integer list: '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Permutation
// ---------------------------------------------------------------------------

/// A permutation of {1..n} in one-line notation. The rank n is carried
/// explicitly, so trailing fixed points are significant.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> one_line) : word_(std::move(one_line)) {
    std::vector<bool> seen(word_.size() + 1, false);
    for (int v : word_) {
      if (v < 1 || v > static_cast<int>(word_.size()) || seen[v]) {
        throw std::invalid_argument("not a permutation of 1.." + std::to_string(word_.size()));
      }
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return Permutation(std::move(w));
  }

  static Permutation longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Permutation(std::move(w));
  }

  /// Accepts "153264" (digits, rank <= 9) or "1,5,3,2,6,4".
  static Permutation parse(std::string_view text) {
    text = detail::trim(text);
    if (text.find(',') != std::string_view::npos) {
      return Permutation(detail::parse_int_list(text));
    }
    std::vector<int> w;
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("malformed permutation: '" + std::string(text) + "'");
      w.push_back(c - '0');
    }
    if (w.empty()) throw std::invalid_argument("empty permutation");
    return Permutation(std::move(w));
  }

  int rank() const { return static_cast<int>(word_.size()); }
  std::span<const int> word() const { return word_; }

  /// One-based value w_i.
  int operator()(int i) const { return word_.at(i - 1); }

  /// Number of inversions.
  int length() const {
    int inv = 0;
    for (std::size_t i = 0; i < word_.size(); ++i)
      for (std::size_t j = i + 1; j < word_.size(); ++j)
        if (word_[i] > word_[j]) ++inv;
    return inv;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < word_.size(); ++i)
      if (word_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  /// w composed with s_i on the right: swaps positions i and i+1.
  Permutation swapped(int i) const {
    Permutation out = *this;
    std::swap(out.word_.at(i - 1), out.word_.at(i));
    return out;
  }

  bool has_descent(int i) const { return word_.at(i - 1) > word_.at(i); }

  /// 1^m x w: shifts every value by m and prepends 1..m.
  Permutation shifted(int m) const {
    std::vector<int> w(m);
    for (int i = 0; i < m; ++i) w[i] = i + 1;
    for (int v : word_) w.push_back(v + m);
    return Permutation(std::move(w));
  }

  std::string str() const {
    if (rank() <= 9) {
      std::string s;
      for (int v : word_) s += static_cast<char>('0' + v);
      return s;
    }
    return detail::join(word_, ",");
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

/// All permutations of rank n in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// ---------------------------------------------------------------------------
// ReducedWord
// ---------------------------------------------------------------------------

/// A word in the simple transpositions, stored left to right as printed:
/// letters()[0] is rho_l and letters().back() is rho_1. Positions
/// are counted from the right end, so at(1) is the last letter.
class ReducedWord {
 public:
  ReducedWord() = default;
  explicit ReducedWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  ReducedWord(std::initializer_list<Letter> letters) : letters_(letters) {}

  static ReducedWord parse(std::string_view text) { return ReducedWord(detail::parse_int_list(text)); }

  std::span<const Letter> letters() const { return letters_; }
  std::vector<Letter>& mutable_letters() { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  /// rho_p, with p = 1 the rightmost letter.
  Letter at(int p) const {
    if (p < 1 || p > size()) throw std::out_of_range("word position " + std::to_string(p));
    return letters_[letters_.size() - p];
  }
  Letter& at(int p) {
    if (p < 1 || p > size()) throw std::out_of_range("word position " + std::to_string(p));
    return letters_[letters_.size() - p];
  }

  Letter max_letter() const { return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end()); }

  /// The word with x appended on the right (a new rho_1).
  ReducedWord appended(Letter x) const {
    ReducedWord out = *this;
    out.letters_.push_back(x);
    return out;
  }

  std::string str() const { return "(" + detail::join(letters_, ",") + ")"; }

  auto operator<=>(const ReducedWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Length-lexicographic order used for every canonical listing of words.
struct LengthLex {
  bool operator()(const ReducedWord& a, const ReducedWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using WordSet = std::set<ReducedWord, LengthLex>;

/// Evaluates s_{rho_l} ... s_{rho_1} in S_n.
inline Permutation apply_word(const ReducedWord& rho, int n) {
  Permutation w = Permutation::identity(n);
  auto letters = rho.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (*it < 1 || *it >= n) {
      throw std::out_of_range("letter " + std::to_string(*it) + " out of range for rank " + std::to_string(n));
    }
    w = w.swapped(*it);
  }
  return w;
}

/// The smallest rank in which every letter of rho is a valid generator.
inline int natural_rank(const ReducedWord& rho) { return rho.max_letter() + 1; }

inline bool is_reduced(const ReducedWord& rho) {
  Permutation w = Permutation::identity(natural_rank(rho));
  auto letters = rho.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (*it < 1) return false;
    // appending a swap on the left of the product lengthens w iff no descent there
    if (w.has_descent(*it)) return false;
    w = w.swapped(*it);
  }
  return true;
}

inline void require_reduced(const ReducedWord& rho, std::string_view what) {
  if (!is_reduced(rho)) throw std::invalid_argument(std::string(what) + ": word " + rho.str() + " is not reduced");
}

namespace detail {

inline void reduced_words_rec(Permutation& w, std::vector<Letter>& prefix, std::vector<ReducedWord>& out) {
  bool any = false;
  for (int d = 1; d < w.rank(); ++d) {
    if (!w.has_descent(d)) continue;
    any = true;
    prefix.push_back(d);
    Permutation u = w.swapped(d);
    reduced_words_rec(u, prefix, out);
    prefix.pop_back();
  }
  if (!any) out.emplace_back(prefix);
}

template <typename Visit>
void visit_reduced_words_rec(const Permutation& w, std::vector<Letter>& prefix, Visit& visit) {
  bool any = false;
  for (int d = 1; d < w.rank(); ++d) {
    if (!w.has_descent(d)) continue;
    any = true;
    prefix.push_back(d);
    visit_reduced_words_rec(w.swapped(d), prefix, visit);
    prefix.pop_back();
  }
  if (!any) visit(std::span<const Letter>(prefix));
}

}  // namespace detail

/// R(w), built by peeling descents off the leftmost letter. Sorted
/// lexicographically.
inline std::vector<ReducedWord> reduced_words(const Permutation& w) {
  std::vector<ReducedWord> out;
  std::vector<Letter> prefix;
  Permutation u = w;
  detail::reduced_words_rec(u, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Streams R(w) without materialising it; visit receives a span of letters.
template <typename Visit>
void for_each_reduced_word(const Permutation& w, Visit&& visit) {
  std::vector<Letter> prefix;
  detail::visit_reduced_words_rec(w, prefix, visit);
}

// ---------------------------------------------------------------------------
// Coxeter moves. rho_1 is the rightmost letter.
// ---------------------------------------------------------------------------

/// c_j: exchanges rho_j and rho_{j+1} when they commute.
inline ReducedWord commutation(const ReducedWord& rho, int j) {
  if (j < 1 || j >= rho.size()) throw std::out_of_range("commutation position " + std::to_string(j));
  ReducedWord out = rho;
  if (std::abs(rho.at(j) - rho.at(j + 1)) > 1) std::swap(out.at(j), out.at(j + 1));
  return out;
}

/// b_j: rho_{j+1} rho_j rho_{j-1} -> rho_j rho_{j+1} rho_j when rho_{j+1} = rho_{j-1}.
inline ReducedWord braid(const ReducedWord& rho, int j) {
  if (j <= 1 || j >= rho.size()) throw std::out_of_range("braid position " + std::to_string(j));
  ReducedWord out = rho;
  if (rho.at(j + 1) == rho.at(j - 1)) {
    out.at(j + 1) = rho.at(j);
    out.at(j) = rho.at(j + 1);
    out.at(j - 1) = rho.at(j);
  }
  return out;
}

struct CoxeterEdge {
  enum class Kind { commutation, braid };
  ReducedWord from;
  ReducedWord to;
  Kind kind;
  int position;
};

struct CoxeterGraph {
  std::vector<ReducedWord> nodes;  // sorted
  std::vector<CoxeterEdge> edges;  // each undirected edge once, from < to

  bool connected() const {
    if (nodes.empty()) return true;
    std::map<ReducedWord, std::vector<ReducedWord>> adj;
    for (const auto& e : edges) {
      adj[e.from].push_back(e.to);
      adj[e.to].push_back(e.from);
    }
    std::set<ReducedWord> seen{nodes.front()};
    std::queue<ReducedWord> todo;
    todo.push(nodes.front());
    while (!todo.empty()) {
      auto cur = todo.front();
      todo.pop();
      for (const auto& nb : adj[cur])
        if (seen.insert(nb).second) todo.push(nb);
    }
    return seen.size() == nodes.size();
  }
};

/// R(w) with every nontrivial c_j and b_j edge.
inline CoxeterGraph coxeter_graph(const Permutation& w) {
  CoxeterGraph g;
  g.nodes = reduced_words(w);
  for (const auto& rho : g.nodes) {
    for (int j = 1; j < rho.size(); ++j) {
      auto c = commutation(rho, j);
      if (rho < c) g.edges.push_back({rho, c, CoxeterEdge::Kind::commutation, j});
    }
    for (int j = 2; j < rho.size(); ++j) {
      auto b = braid(rho, j);
      if (rho < b) g.edges.push_back({rho, b, CoxeterEdge::Kind::braid, j});
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Integer sequences
// ---------------------------------------------------------------------------

/// Sequence of nonnegative integers of a fixed length.
struct WeakComposition {
  std::vector<int> parts;

  WeakComposition() = default;
  explicit WeakComposition(std::vector<int> p) : parts(std::move(p)) {
    for (int v : parts)
      if (v < 0) throw std::invalid_argument("weak composition has a negative part");
  }
  WeakComposition(std::initializer_list<int> p) : WeakComposition(std::vector<int>(p)) {}

  static WeakComposition zeros(int n) { return WeakComposition(std::vector<int>(n, 0)); }

  int length() const { return static_cast<int>(parts.size()); }
  int size() const {
    int s = 0;
    for (int v : parts) s += v;
    return s;
  }
  int operator[](int i) const { return parts.at(i - 1); }  // one-based

  /// Same composition padded with zeros (or with trailing zeros removed) to length n.
  WeakComposition resized(int n) const {
    for (int i = n; i < length(); ++i)
      if (parts[i] != 0) throw std::invalid_argument("cannot drop a nonzero part when resizing");
    auto p = parts;
    p.resize(n, 0);
    return WeakComposition(std::move(p));
  }

  WeakComposition trimmed() const {
    int n = length();
    while (n > 0 && parts[n - 1] == 0) --n;
    return resized(n);
  }

  /// 0^m x a.
  WeakComposition prepend_zeros(int m) const {
    std::vector<int> p(m, 0);
    p.insert(p.end(), parts.begin(), parts.end());
    return WeakComposition(std::move(p));
  }

  std::string str() const { return "(" + detail::join(parts, ",") + ")"; }
  auto operator<=>(const WeakComposition&) const = default;
};

/// des values may be virtual; std::nullopt plays the role of the empty symbol.
using MaybeVirtual = std::optional<WeakComposition>;
inline constexpr std::nullopt_t kVirtual = std::nullopt;

inline std::string to_string(const MaybeVirtual& a) { return a ? a->str() : std::string("virtual"); }

/// Sequence of positive integers.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int v : parts)
      if (v < 1) throw std::invalid_argument("composition part must be positive");
  }
  Composition(std::initializer_list<int> p) : Composition(std::vector<int>(p)) {}

  int length() const { return static_cast<int>(parts.size()); }
  int size() const {
    int s = 0;
    for (int v : parts) s += v;
    return s;
  }
  std::string str() const { return "(" + detail::join(parts, ",") + ")"; }
  auto operator<=>(const Composition&) const = default;
};

/// Weakly decreasing sequence of positive integers.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 1) throw std::invalid_argument("partition part must be positive");
      if (i && parts[i] > parts[i - 1]) throw std::invalid_argument("partition must be weakly decreasing");
    }
  }
  Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

  int length() const { return static_cast<int>(parts.size()); }
  int size() const {
    int s = 0;
    for (int v : parts) s += v;
    return s;
  }
  std::string str() const { return "(" + detail::join(parts, ",") + ")"; }
  auto operator<=>(const Partition&) const = default;
};

inline Composition flat(const WeakComposition& a) {
  std::vector<int> p;
  for (int v : a.parts)
    if (v) p.push_back(v);
  return Composition(std::move(p));
}

inline Partition sort_parts(const WeakComposition& a) {
  std::vector<int> p;
  for (int v : a.parts)
    if (v) p.push_back(v);
  std::sort(p.rbegin(), p.rend());
  return Partition(std::move(p));
}

/// Reads a composition as a partition if it is weakly decreasing.
inline std::optional<Partition> as_partition(const Composition& c) {
  if (!std::is_sorted(c.parts.rbegin(), c.parts.rend())) return std::nullopt;
  return Partition(c.parts);
}

/// beta refines alpha: every partial sum of alpha is a partial sum of beta.
inline bool refines(const Composition& beta, const Composition& alpha) {
  if (beta.size() != alpha.size()) return false;
  std::size_t j = 0;
  int sb = 0, sa = 0;
  for (int part : alpha.parts) {
    sa += part;
    while (j < beta.parts.size() && sb < sa) sb += beta.parts[j++];
    if (sb != sa) return false;
  }
  return true;
}

/// b >= a in dominance: prefix sums of b never fall below those of a.
inline bool dominates(const WeakComposition& b, const WeakComposition& a) {
  if (b.length() != a.length()) throw std::invalid_argument("dominance needs equal lengths");
  int sb = 0, sa = 0;
  for (int i = 0; i < a.length(); ++i) {
    sb += b.parts[i];
    sa += a.parts[i];
    if (sb < sa) return false;
  }
  return true;
}

}  // namespace weakeg
