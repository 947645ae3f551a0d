#pragma once

// Exact sparse polynomials in x_1..x_n with arbitrary-precision integer
// coefficients, the fundamental quasisymmetric and fundamental slide
// polynomials, and divided differences.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

#include "weakeg/core.hpp"

namespace weakeg {

using Coefficient = boost::multiprecision::cpp_int;
using Exponent = std::vector<int>;

/// Sparse polynomial. Exponent vectors all have length nvars(); a
/// polynomial in fewer variables is treated as one in more (padding with
/// zero exponents), so arithmetic and equality align variable counts.
class Polynomial {
 public:
  using Terms = std::map<Exponent, Coefficient>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(const Coefficient& c, int nvars = 0) {
    Polynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }
  static Polynomial one(int nvars = 0) { return constant(1, nvars); }

  static Polynomial monomial(Exponent e, const Coefficient& c = 1) {
    Polynomial p(static_cast<int>(e.size()));
    p.add_term(std::move(e), c);
    return p;
  }

  /// x_i in n variables.
  static Polynomial variable(int i, int nvars) {
    Exponent e(nvars, 0);
    e.at(i - 1) = 1;
    return monomial(std::move(e));
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of x^e (zero if absent); e is padded or must fit.
  Coefficient coefficient(Exponent e) const {
    if (static_cast<int>(e.size()) > nvars_) {
      for (std::size_t i = nvars_; i < e.size(); ++i)
        if (e[i]) return 0;
    }
    e.resize(nvars_, 0);
    auto it = terms_.find(e);
    return it == terms_.end() ? Coefficient(0) : it->second;
  }

  void add_term(Exponent e, const Coefficient& c) {
    if (c == 0) return;
    if (static_cast<int>(e.size()) > nvars_) extend(static_cast<int>(e.size()));
    e.resize(nvars_, 0);
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Pads every exponent vector with zeros up to n variables.
  void extend(int n) {
    if (n <= nvars_) return;
    Terms grown;
    for (auto& [e, c] : terms_) {
      Exponent f = e;
      f.resize(n, 0);
      grown.emplace(std::move(f), c);
    }
    terms_ = std::move(grown);
    nvars_ = n;
  }

  Polynomial extended(int n) const {
    Polynomial p = *this;
    p.extend(n);
    return p;
  }

  /// Sets x_{m+1}, x_{m+2}, ... to zero and keeps m variables.
  Polynomial truncated(int m) const {
    Polynomial p(m);
    for (const auto& [e, c] : terms_) {
      bool keep = true;
      for (int i = m; i < nvars_; ++i)
        if (e[i]) keep = false;
      if (!keep) continue;
      Exponent f = e;
      f.resize(m, 0);
      p.add_term(std::move(f), c);
    }
    return p;
  }

  /// Interchanges x_i and x_{i+1}.
  Polynomial swapped(int i) const {
    Polynomial p(std::max(nvars_, i + 1));
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      f.resize(p.nvars_, 0);
      std::swap(f[i - 1], f[i]);
      p.add_term(std::move(f), c);
    }
    return p;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int v : e) s += v;
      d = std::max(d, s);
    }
    return d;
  }

  /// Lexicographically largest exponent (the leading term).
  std::pair<Exponent, Coefficient> leading_term() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return *terms_.rbegin();
  }

  Polynomial& operator+=(const Polynomial& o) {
    extend(o.nvars_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    extend(o.nvars_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Coefficient& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Coefficient& k) { return a *= k; }
  friend Polynomial operator*(const Coefficient& k, Polynomial a) { return a *= k; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    int n = std::max(a.nvars_, b.nvars_);
    Polynomial p(n);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(n, 0);
        for (int i = 0; i < a.nvars_; ++i) e[i] += ea[i];
        for (int i = 0; i < b.nvars_; ++i) e[i] += eb[i];
        p.add_term(std::move(e), ca * cb);
      }
    }
    return p;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ == b.nvars_) return a.terms_ == b.terms_;
    int n = std::max(a.nvars_, b.nvars_);
    return a.extended(n).terms_ == b.extended(n).terms_;
  }

  /// Human-readable form, terms in descending lexicographic order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Coefficient mag = c < 0 ? Coefficient(-c) : c;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (int i = 0; i < static_cast<int>(e.size()); ++i) {
        if (!e[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(i + 1);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        out += mag.str();
      } else {
        if (mag != 1) out += mag.str() + "*";
        out += mono;
      }
    }
    return out;
  }

 private:
  int nvars_ = 0;
  Terms terms_;
};

namespace detail {

// Depth-first placement of the blocks of a composition into variable slots.
// Partial sums of `targets` must all be hit by the running sum of b; when
// `floor` is non-empty the running sum must also dominate it.
inline void place_blocks(std::vector<int>& b, int pos, int running, const std::vector<int>& targets,
                         std::size_t next_target, const std::vector<int>& floor, Polynomial& out) {
  const int m = static_cast<int>(b.size());
  const int total = targets.empty() ? 0 : targets.back();
  if (running == total) {
    for (int i = pos; i < m; ++i) b[i] = 0;
    // remaining prefix constraints are met since running already equals the total
    out.add_term(b, 1);
    return;
  }
  if (pos == m) return;
  int remaining_blocks = static_cast<int>(targets.size() - next_target);
  if (remaining_blocks > m - pos) return;
  int hi = targets[next_target] - running;
  int lo = floor.empty() ? 0 : std::max(0, floor[pos] - running);
  for (int v = lo; v <= hi; ++v) {
    b[pos] = v;
    int r = running + v;
    std::size_t nt = next_target + (r == targets[next_target] ? 1 : 0);
    place_blocks(b, pos + 1, r, targets, nt, floor, out);
  }
  b[pos] = 0;
}

inline std::vector<int> partial_sums(std::span<const int> parts) {
  std::vector<int> s;
  int acc = 0;
  for (int v : parts) {
    if (!v) continue;
    acc += v;
    s.push_back(acc);
  }
  return s;
}

}  // namespace detail

/// F_alpha(x_1..x_m): sum of x^b over weak compositions b of length m
/// with flat(b) refining alpha.
inline Polynomial fundamental_qsym(const Composition& alpha, int m) {
  Polynomial out(m);
  std::vector<int> b(m, 0);
  detail::place_blocks(b, 0, 0, detail::partial_sums(alpha.parts), 0, {}, out);
  return out;
}

/// Fundamental slide polynomial of a (in len(a) variables); zero when virtual.
inline Polynomial fundamental_slide(const MaybeVirtual& a) {
  if (!a) return Polynomial();
  const int n = a->length();
  Polynomial out(n);
  std::vector<int> floor(n);
  int acc = 0;
  for (int i = 0; i < n; ++i) floor[i] = (acc += a->parts[i]);
  std::vector<int> b(n, 0);
  detail::place_blocks(b, 0, 0, detail::partial_sums(a->parts), 0, floor, out);
  return out;
}

/// Divided difference (f - s_i f) / (x_i - x_{i+1}), computed monomial by monomial.
inline Polynomial divided_difference(const Polynomial& f, int i) {
  if (i < 1) throw std::invalid_argument("divided difference index must be positive");
  Polynomial out(std::max(f.nvars(), i + 1));
  for (const auto& [e0, c] : f.terms()) {
    Exponent e = e0;
    e.resize(out.nvars(), 0);
    int a = e[i - 1], b = e[i];
    if (a == b) continue;
    int lo = std::min(a, b), gap = std::abs(a - b);
    Coefficient sign = a > b ? Coefficient(c) : Coefficient(-c);
    for (int k = 0; k < gap; ++k) {
      e[i - 1] = lo + gap - 1 - k;
      e[i] = lo + k;
      out.add_term(e, sign);
    }
  }
  return out;
}

/// Schubert polynomial from the top class x_1^{n-1} x_2^{n-2} ... by
/// divided differences. Used as an independent check of the slide formula.
inline Polynomial schubert_oracle(const Permutation& w) {
  const int n = w.rank();
  const int nv = std::max(n - 1, 0);
  // Walk up to w0 by ascents, then come back down applying divided differences.
  std::vector<int> path;
  Permutation u = w;
  while (true) {
    int asc = 0;
    for (int i = 1; i < n; ++i)
      if (!u.has_descent(i)) {
        asc = i;
        break;
      }
    if (!asc) break;
    path.push_back(asc);
    u = u.swapped(asc);
  }
  Exponent top(nv);
  for (int i = 0; i < nv; ++i) top[i] = n - 1 - i;
  Polynomial p = Polynomial::monomial(top);
  for (auto it = path.rbegin(); it != path.rend(); ++it) p = divided_difference(p, *it);
  return p.extended(nv);
}

}  // namespace weakeg
