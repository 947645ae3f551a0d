#pragma once

// Young and key tableaux: standard enumerations, descent statistics, the
// elementary (weak) dual equivalence involutions and the map Phi from
// standard key tableaux to standard Young tableaux.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weakeg/core.hpp"
#include "weakeg/polynomial.hpp"

namespace weakeg {

enum class ShapeKind { young, key };

struct Cell {
  int row = 0;  // row index, bottom row of a Young diagram is 1
  int col = 0;  // one-based column
  auto operator<=>(const Cell&) const = default;
};

/// A filling of left-justified rows. Rows are keyed by their index; only
/// non-empty rows are stored, so equality is equality of fillings. Young
/// tableaux use rows 1..k; key tableaux may use any index, and a row at
/// index <= 0 marks a virtual weak descent tableau.
class Tableau {
 public:
  using Row = std::vector<int>;

  Tableau() = default;
  explicit Tableau(ShapeKind kind) : kind_(kind) {}
  Tableau(ShapeKind kind, std::map<int, Row> rows) : kind_(kind) {
    for (auto& [i, r] : rows)
      if (!r.empty()) rows_.emplace(i, std::move(r));
  }

  /// Young tableau from rows listed bottom to top.
  static Tableau young(const std::vector<Row>& bottom_up) {
    Tableau t(ShapeKind::young);
    for (std::size_t i = 0; i < bottom_up.size(); ++i)
      if (!bottom_up[i].empty()) t.rows_[static_cast<int>(i) + 1] = bottom_up[i];
    return t;
  }

  static Tableau key(std::map<int, Row> rows) { return Tableau(ShapeKind::key, std::move(rows)); }

  ShapeKind kind() const { return kind_; }
  const std::map<int, Row>& rows() const { return rows_; }

  const Row& row(int i) const {
    static const Row empty;
    auto it = rows_.find(i);
    return it == rows_.end() ? empty : it->second;
  }

  void set_row(int i, Row r) {
    if (r.empty())
      rows_.erase(i);
    else
      rows_[i] = std::move(r);
  }

  int size() const {
    int n = 0;
    for (const auto& [i, r] : rows_) n += static_cast<int>(r.size());
    return n;
  }
  bool empty() const { return rows_.empty(); }

  int top_row() const { return rows_.empty() ? 0 : rows_.rbegin()->first; }
  int bottom_row() const { return rows_.empty() ? 1 : rows_.begin()->first; }

  bool is_virtual() const { return !rows_.empty() && rows_.begin()->first <= 0; }

  /// Row reading word: left to right along rows, from the top row down.
  ReducedWord reading_word() const {
    std::vector<Letter> w;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) w.insert(w.end(), it->second.begin(), it->second.end());
    return ReducedWord(std::move(w));
  }

  /// Row lengths at rows 1..n (key shape). Rows at index <= 0 are rejected.
  WeakComposition key_shape(int n) const {
    std::vector<int> p(std::max(n, 0), 0);
    for (const auto& [i, r] : rows_) {
      if (i < 1 || i > n) throw std::invalid_argument("row index outside 1.." + std::to_string(n));
      p[i - 1] = static_cast<int>(r.size());
    }
    return WeakComposition(std::move(p));
  }
  WeakComposition key_shape() const { return key_shape(top_row()); }

  /// Row lengths bottom to top over rows 1..top_row().
  std::vector<int> row_lengths() const {
    std::vector<int> p;
    for (int i = 1; i <= top_row(); ++i) p.push_back(static_cast<int>(row(i).size()));
    return p;
  }

  std::optional<Cell> find(int entry) const {
    for (const auto& [i, r] : rows_)
      for (std::size_t c = 0; c < r.size(); ++c)
        if (r[c] == entry) return Cell{i, static_cast<int>(c) + 1};
    return std::nullopt;
  }

  /// entry -> cell for a bijective filling of 1..n.
  std::vector<Cell> positions() const {
    std::vector<Cell> pos(size() + 1);
    for (const auto& [i, r] : rows_)
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (r[c] < 1 || r[c] > size()) throw std::invalid_argument("filling is not a bijection onto 1..n");
        pos[r[c]] = Cell{i, static_cast<int>(c) + 1};
      }
    return pos;
  }

  /// Interchanges the entries a and b.
  Tableau exchanged(int a, int b) const {
    Tableau t = *this;
    for (auto& [i, r] : t.rows_)
      for (int& v : r) {
        if (v == a)
          v = b;
        else if (v == b)
          v = a;
      }
    return t;
  }

  /// Text rendering in the French convention, top row first. Key tableaux
  /// carry their row index in front of a bar.
  std::string str() const {
    if (rows_.empty()) return "(empty)\n";
    std::string out;
    int top = top_row(), bottom = std::min(bottom_row(), kind_ == ShapeKind::young ? 1 : bottom_row());
    int width = 1;
    for (const auto& [i, r] : rows_)
      for (int v : r) width = std::max<int>(width, static_cast<int>(std::to_string(v).size()));
    for (int i = top; i >= bottom; --i) {
      std::string line;
      if (kind_ == ShapeKind::key) {
        std::string idx = std::to_string(i);
        line += std::string(idx.size() < 3 ? 3 - idx.size() : 0, ' ') + idx + " |";
      }
      for (int v : row(i)) {
        std::string s = std::to_string(v);
        line += " " + std::string(width - s.size(), ' ') + s;
      }
      out += line + "\n";
    }
    return out;
  }

  friend bool operator==(const Tableau& a, const Tableau& b) { return a.kind_ == b.kind_ && a.rows_ == b.rows_; }
  friend bool operator<(const Tableau& a, const Tableau& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    return a.rows_ < b.rows_;
  }

 private:
  ShapeKind kind_ = ShapeKind::young;
  std::map<int, Row> rows_;
};

// ---------------------------------------------------------------------------
// Young tableaux
// ---------------------------------------------------------------------------

/// Rows strictly increase left to right and columns bottom to top; the
/// shape is a partition.
inline bool is_increasing_young(const Tableau& t) {
  std::vector<int> len = t.row_lengths();
  for (std::size_t i = 0; i < len.size(); ++i) {
    if (len[i] == 0) return false;
    if (i && len[i] > len[i - 1]) return false;
  }
  for (int i = 1; i <= t.top_row(); ++i) {
    const auto& r = t.row(i);
    for (std::size_t c = 1; c < r.size(); ++c)
      if (r[c] <= r[c - 1]) return false;
    if (i > 1) {
      const auto& below = t.row(i - 1);
      for (std::size_t c = 0; c < r.size(); ++c)
        if (r[c] <= below[c]) return false;
    }
  }
  return true;
}

inline bool is_standard_young(const Tableau& t) {
  if (!is_increasing_young(t)) return false;
  std::vector<bool> seen(t.size() + 1, false);
  for (const auto& [i, r] : t.rows())
    for (int v : r) {
      if (v < 1 || v > t.size() || seen[v]) return false;
      seen[v] = true;
    }
  return true;
}

namespace detail {

inline void syt_rec(const std::vector<int>& shape, std::vector<std::vector<int>>& rows, int next, int n,
                    std::vector<Tableau>& out) {
  if (next > n) {
    out.push_back(Tableau::young(rows));
    return;
  }
  for (std::size_t r = 0; r < shape.size(); ++r) {
    int len = static_cast<int>(rows[r].size());
    if (len >= shape[r]) continue;
    if (r > 0 && len >= static_cast<int>(rows[r - 1].size())) continue;
    rows[r].push_back(next);
    syt_rec(shape, rows, next + 1, n, out);
    rows[r].pop_back();
  }
}

}  // namespace detail

/// SYT(lambda), sorted.
inline std::vector<Tableau> enumerate_syt(const Partition& lambda) {
  std::vector<Tableau> out;
  std::vector<std::vector<int>> rows(lambda.parts.size());
  detail::syt_rec(lambda.parts, rows, 1, lambda.size(), out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Des(T): i is a descent when i+1 lies weakly left of i.
inline Composition syt_descent_composition(const Tableau& t) {
  if (!is_standard_young(t)) throw std::invalid_argument("descent composition needs a standard Young tableau");
  auto pos = t.positions();
  const int n = t.size();
  std::vector<int> parts;
  int run = 0;
  for (int i = 1; i <= n; ++i) {
    ++run;
    if (i == n || pos[i + 1].col <= pos[i].col) {
      parts.push_back(run);
      run = 0;
    }
  }
  return Composition(std::move(parts));
}

/// s_lambda(x_1..x_m) as the sum of F_{Des(T)} over SYT(lambda).
inline Polynomial schur(const Partition& lambda, int m) {
  Polynomial out(m);
  std::map<Composition, int> counts;
  for (const auto& t : enumerate_syt(lambda)) ++counts[syt_descent_composition(t)];
  for (const auto& [alpha, k] : counts) out += fundamental_qsym(alpha, m) * Coefficient(k);
  if (lambda.size() == 0) return Polynomial::one(m);
  return out;
}

/// Elementary dual equivalence d_i on a standard Young tableau, 1 < i < n.
inline Tableau dual_equivalence(const Tableau& t, int i) {
  const int n = t.size();
  if (i <= 1 || i >= n) throw std::out_of_range("dual equivalence index " + std::to_string(i));
  auto word = t.reading_word();
  auto letters = word.letters();
  auto where = [&](int v) { return std::find(letters.begin(), letters.end(), v) - letters.begin(); };
  auto between = [](long a, long b, long c) { return (b < a && a < c) || (c < a && a < b); };
  long pm = where(i - 1), p0 = where(i), pp = where(i + 1);
  if (between(pp, p0, pm)) return t.exchanged(i - 1, i);
  if (between(pm, p0, pp)) return t.exchanged(i, i + 1);
  return t;
}

// ---------------------------------------------------------------------------
// Key tableaux
// ---------------------------------------------------------------------------

/// Bijective filling of rows 1..len(a) with decreasing rows and the column
/// condition: whenever i sits above k in a column with i < k, some entry j
/// right of k has i < j.
inline bool is_standard_key(const Tableau& t) {
  const int n = t.size();
  std::vector<bool> seen(n + 1, false);
  for (const auto& [i, r] : t.rows()) {
    if (i < 1) return false;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (r[c] < 1 || r[c] > n || seen[r[c]]) return false;
      seen[r[c]] = true;
      if (c && r[c] >= r[c - 1]) return false;
    }
  }
  for (const auto& [hi, rh] : t.rows())
    for (const auto& [lo, rl] : t.rows()) {
      if (lo >= hi) continue;
      for (std::size_t c = 0; c < rh.size() && c < rl.size(); ++c) {
        int above = rh[c], below = rl[c];
        if (above < below) {
          // rows decrease, so the cell immediately right of k holds the largest candidate
          if (c + 1 >= rl.size() || rl[c + 1] <= above) return false;
        }
      }
    }
  return true;
}

namespace detail {

struct SktSearch {
  std::vector<int> shape;               // shape[r-1] = a_r
  std::vector<std::vector<int>> rows;   // rows[r-1]
  std::vector<Tableau> out;

  void run(int v) {
    if (v == 0) {
      std::map<int, Tableau::Row> m;
      for (std::size_t r = 0; r < rows.size(); ++r) m[static_cast<int>(r) + 1] = rows[r];
      out.push_back(Tableau::key(std::move(m)));
      return;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int c = static_cast<int>(rows[r].size());
      if (c >= shape[r]) continue;
      // every already-filled cell below in this column needs its right neighbour filled
      bool ok = true;
      for (std::size_t lower = 0; lower < r && ok; ++lower) {
        if (static_cast<int>(rows[lower].size()) > c && static_cast<int>(rows[lower].size()) <= c + 1) ok = false;
      }
      if (!ok) continue;
      rows[r].push_back(v);
      run(v - 1);
      rows[r].pop_back();
    }
  }
};

}  // namespace detail

/// SKT(a), built by placing n, n-1, ..., 1 with both conditions checked as
/// cells are filled. Sorted.
inline std::vector<Tableau> enumerate_skt(const WeakComposition& a) {
  detail::SktSearch s;
  s.shape = a.parts;
  s.rows.assign(a.parts.size(), {});
  s.run(a.size());
  std::sort(s.out.begin(), s.out.end());
  return s.out;
}

/// T_a: entries n..1 left to right along rows, starting with the top row.
inline Tableau canonical_skt(const WeakComposition& a) {
  std::map<int, Tableau::Row> rows;
  int v = a.size();
  for (int r = a.length(); r >= 1; --r)
    for (int c = 0; c < a[r]; ++c) rows[r].push_back(v--);
  return Tableau::key(std::move(rows));
}

/// Weak descent composition of a standard key tableau, as a composition of
/// length n (default: the top row index). i is a descent when i+1 lies
/// weakly right of i.
inline MaybeVirtual skt_weak_descent_composition(const Tableau& t, int n = -1) {
  if (!is_standard_key(t)) throw std::invalid_argument("weak descent composition needs a standard key tableau");
  if (n < 0) n = t.top_row();
  const int size = t.size();
  if (size == 0) return WeakComposition::zeros(n);
  auto pos = t.positions();
  // runs of size..1; runs.front() holds 1 (tau^(1))
  std::vector<std::pair<int, int>> runs;  // (length, min row)
  int len = 0, min_row = 0;
  for (int v = size; v >= 1; --v) {
    min_row = len == 0 ? pos[v].row : std::min(min_row, pos[v].row);
    ++len;
    if (v == 1 || pos[v].col >= pos[v - 1].col) {
      runs.emplace_back(len, min_row);
      len = 0;
    }
  }
  std::reverse(runs.begin(), runs.end());
  const int k = static_cast<int>(runs.size());
  std::vector<int> hat(k);
  hat[k - 1] = runs[k - 1].second;
  for (int i = k - 2; i >= 0; --i) hat[i] = std::min(runs[i].second, hat[i + 1] - 1);
  if (hat[0] <= 0) return kVirtual;
  std::vector<int> parts(n, 0);
  for (int i = 0; i < k; ++i) {
    if (hat[i] > n) throw std::invalid_argument("weak descent composition longer than requested length");
    parts[hat[i] - 1] = runs[i].first;
  }
  return WeakComposition(std::move(parts));
}

/// kappa_a as the sum of slide polynomials over SKT(a), in len(a) variables.
inline Polynomial key_polynomial(const WeakComposition& a) {
  std::map<WeakComposition, int> counts;
  for (const auto& t : enumerate_skt(a)) {
    auto d = skt_weak_descent_composition(t, a.length());
    if (d) ++counts[*d];
  }
  Polynomial out(a.length());
  for (const auto& [b, k] : counts) out += fundamental_slide(b) * Coefficient(k);
  return out;
}

/// Elementary weak dual equivalence on a standard key tableau, 1 < i < n.
/// The cells of i-1, i, i+1 are ordered by column reading order: columns
/// left to right, each column read from the bottom up.
inline Tableau weak_dual_equivalence(const Tableau& t, int i) {
  const int n = t.size();
  if (i <= 1 || i >= n) throw std::out_of_range("weak dual equivalence index " + std::to_string(i));
  auto pos = t.positions();
  std::array<int, 3> e{i - 1, i, i + 1};
  std::sort(e.begin(), e.end(), [&](int a, int b) {
    if (pos[a].col != pos[b].col) return pos[a].col < pos[b].col;
    return pos[a].row < pos[b].row;
  });
  const Cell u = pos[e[0]], v = pos[e[1]], w = pos[e[2]];
  if (u.row == w.row && v.row != u.row) {
    // rotate the three entries so that i lands in the shared row
    for (int shift : {1, 2}) {
      std::array<int, 3> rot{e[(0 + shift) % 3], e[(1 + shift) % 3], e[(2 + shift) % 3]};
      if (rot[1] == i) continue;
      Tableau out = t;
      std::map<int, Tableau::Row> rows = t.rows();
      rows[u.row][u.col - 1] = rot[0];
      rows[v.row][v.col - 1] = rot[1];
      rows[w.row][w.col - 1] = rot[2];
      Tableau cand = Tableau::key(std::move(rows));
      if (is_standard_key(cand)) return cand;
    }
    throw std::logic_error("no standard rotation for weak dual equivalence");
  }
  if (e[1] == i + 1) return t.exchanged(i - 1, i);
  if (e[1] == i - 1) return t.exchanged(i, i + 1);
  return t;
}

/// Phi: drop entries of a standard key tableau to partition shape, replace
/// i by n-i+1 and sort each column upward.
inline Tableau phi(const Tableau& t) {
  const int n = t.size();
  std::map<int, std::vector<int>> columns;
  for (const auto& [i, r] : t.rows())
    for (std::size_t c = 0; c < r.size(); ++c) columns[static_cast<int>(c) + 1].push_back(n - r[c] + 1);
  std::vector<Tableau::Row> rows;
  for (auto& [c, col] : columns) {
    std::sort(col.begin(), col.end());
    if (rows.size() < col.size()) rows.resize(col.size());
    for (std::size_t r = 0; r < col.size(); ++r) rows[r].push_back(col[r]);
  }
  return Tableau::young(rows);
}

}  // namespace weakeg
