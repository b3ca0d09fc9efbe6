#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsorep/qnum.hpp"

namespace qsorep {

// All pattern entries are stored as doubled integers (2*m), so integral
// and half-integral values are exact and share one code path.  The parity
// of a doubled entry is the parity class of the representation.

/// Highest weight m_n = (m_{1,n}, ..., m_{floor(n/2),n}) with flavor tag.
struct HighestWeight {
  int n = 0;                 // rank parameter of so_n, n >= 3
  Flavor flavor = Flavor::classical;
  std::vector<int> twice;    // doubled entries, size floor(n/2)
};

/// Sign vector eps = (eps_2, ..., eps_n) for nonclassical representations.
struct SignVector {
  std::vector<int> eps;      // eps[i] = eps_{i+2}, each +1 or -1

  int at(int k) const {      // eps_k, k in [2, n]
    return eps.at(static_cast<std::size_t>(k - 2));
  }
  bool valid_for(int n) const {
    if (static_cast<int>(eps.size()) != n - 1) return false;
    for (int e : eps)
      if (e != 1 && e != -1) return false;
    return true;
  }
};

namespace detail {

// Interlacing chain between row k (upper) and row k-1 (lower).
// Odd k = 2p+1 over even row 2p:  m_{1,k} >= m_{1,k-1} >= m_{2,k} >= ...
//   >= m_{p,k} >= m_{p,k-1} >= -m_{p,k} (classical) or 1/2 (nonclassical).
// Even k = 2p over odd row 2p-1: same interleaving, last lower bound
//   |m_{p,k}| (classical) or m_{p,k} (nonclassical).
inline bool chain_ok(int k, const std::vector<int>& upper,
                     const std::vector<int>& lower, Flavor flavor) {
  const int p = k / 2;
  const bool odd = (k % 2 == 1);
  const int nlower = odd ? p : p - 1;
  int prev = upper[0];
  for (int j = 0; j < nlower; ++j) {
    if (j > 0) {
      if (prev < upper[j]) return false;
      prev = upper[j];
    }
    if (prev < lower[j]) return false;
    prev = lower[j];
  }
  int last;
  if (odd)
    last = (flavor == Flavor::classical) ? -upper[p - 1] : 1;
  else
    last = (flavor == Flavor::classical) ? std::abs(upper[p - 1]) : upper[p - 1];
  if (nlower > 0) return prev >= last;
  // Row of length zero: still require the chain head to dominate nothing.
  return true;
}

inline bool nonincreasing(const std::vector<int>& row) {
  for (std::size_t i = 1; i < row.size(); ++i)
    if (row[i - 1] < row[i]) return false;
  return true;
}

inline bool uniform_parity(const std::vector<int>& row) {
  for (std::size_t i = 1; i < row.size(); ++i)
    if (((row[i] ^ row[0]) & 1) != 0) return false;
  return true;
}

}  // namespace detail

/// True iff the dominance conditions of the weight's flavor hold:
/// nonincreasing entries of one parity class, with the tail bounded by 0
/// (classical odd n), by |m_p| (classical even n, sign free), or by 1/2
/// (nonclassical, all entries half-integral).
inline bool validate_weight(const HighestWeight& w) {
  const int p = w.n / 2;
  if (w.n < 3) return false;
  if (static_cast<int>(w.twice.size()) != p) return false;
  if (!detail::uniform_parity(w.twice)) return false;
  if (w.flavor == Flavor::nonclassical) {
    if ((w.twice[0] & 1) == 0) return false;  // must be half-integral
    if (!detail::nonincreasing(w.twice)) return false;
    return w.twice[static_cast<std::size_t>(p) - 1] >= 1;
  }
  if (!detail::nonincreasing(w.twice)) return false;
  if (w.n % 2 == 1) return w.twice[static_cast<std::size_t>(p) - 1] >= 0;
  // Even n: last entry may be negative, bounded by the one before it.
  if (p >= 2 &&
      w.twice[static_cast<std::size_t>(p) - 2] <
          std::abs(w.twice[static_cast<std::size_t>(p) - 1]))
    return false;
  return true;
}

/// Gel'fand-Tsetlin tableau: rows m_n, m_{n-1}, ..., m_2, row k holding
/// floor(k/2) doubled entries, plus the flavor the betweenness conditions
/// are taken in.
class GTPattern {
 public:
  GTPattern(int n, Flavor flavor, std::vector<std::vector<int>> rows)
      : n_(n), flavor_(flavor), rows_(std::move(rows)) {}

  int n() const { return n_; }
  Flavor flavor() const { return flavor_; }

  /// Row m_k, k in [2, n].
  const std::vector<int>& row(int k) const {
    return rows_.at(static_cast<std::size_t>(n_ - k));
  }
  std::vector<int>& row(int k) {
    return rows_.at(static_cast<std::size_t>(n_ - k));
  }

  /// Entry m_{j,k} (doubled), 1-based j.
  int entry(int j, int k) const { return row(k).at(static_cast<std::size_t>(j - 1)); }

  const std::vector<std::vector<int>>& rows() const { return rows_; }

  /// Canonical comparison key: concatenation of rows m_{n-1}, ..., m_2
  /// (top row is fixed by the weight).
  std::vector<int> key() const {
    std::vector<int> out;
    for (std::size_t i = 1; i < rows_.size(); ++i)
      out.insert(out.end(), rows_[i].begin(), rows_[i].end());
    return out;
  }

  bool valid() const {
    if (static_cast<int>(rows_.size()) != n_ - 1) return false;
    for (int k = n_; k >= 2; --k)
      if (static_cast<int>(row(k).size()) != k / 2) return false;
    HighestWeight w{n_, flavor_, row(n_)};
    if (!validate_weight(w)) return false;
    for (int k = n_; k >= 3; --k)
      if (!detail::chain_ok(k, row(k), row(k - 1), flavor_)) return false;
    return true;
  }

  bool operator==(const GTPattern& other) const {
    return n_ == other.n_ && flavor_ == other.flavor_ && rows_ == other.rows_;
  }

 private:
  int n_;
  Flavor flavor_;
  std::vector<std::vector<int>> rows_;  // rows_[0] = m_n, ..., back() = m_2
};

/// l-coordinates, doubled: l_{j,2p+1} = m_{j,2p+1} + p - j + 1 and
/// l_{j,2p} = m_{j,2p} + p - j.
inline int lcoord(const GTPattern& pat, int j, int k) {
  const int p = k / 2;
  const int m = pat.entry(j, k);
  return (k % 2 == 1) ? m + 2 * (p - j + 1) : m + 2 * (p - j);
}

struct LCoords {
  std::vector<std::vector<int>> twice;  // same layout as GTPattern rows
};

inline LCoords lcoords(const GTPattern& pat) {
  LCoords out;
  for (int k = pat.n(); k >= 2; --k) {
    std::vector<int> row;
    for (int j = 1; j <= k / 2; ++j) row.push_back(lcoord(pat, j, k));
    out.twice.push_back(std::move(row));
  }
  return out;
}

/// All tableaux with top row w under the flavor's betweenness conditions,
/// sorted in canonical order.  Per-entry ranges are independent intervals,
/// so the recursion enumerates each row as a box product.
inline std::vector<GTPattern> enumerate_patterns(const HighestWeight& w) {
  if (!validate_weight(w))
    throw std::invalid_argument("enumerate_patterns: invalid highest weight");
  std::vector<GTPattern> out;
  std::vector<std::vector<int>> rows{w.twice};

  // Emit all rows of index k-1 below the current row of index k.
  auto rec = [&](auto&& self, int k) -> void {
    if (k == 2) {
      out.emplace_back(w.n, w.flavor, rows);
      return;
    }
    const std::vector<int>& upper = rows.back();
    const int p = k / 2;
    const bool odd = (k % 2 == 1);
    const int m = (k - 1) / 2;  // entries in row k-1
    std::vector<int> lo(m), hi(m);
    for (int j = 0; j < m; ++j) {
      hi[j] = upper[j];
      if (odd) {
        lo[j] = (j + 1 < p) ? upper[j + 1]
                            : (w.flavor == Flavor::classical ? -upper[p - 1] : 1);
      } else {
        lo[j] = (j + 1 < p - 1)
                    ? upper[j + 1]
                    : (w.flavor == Flavor::classical ? std::abs(upper[p - 1])
                                                     : upper[p - 1]);
      }
    }
    std::vector<int> cur(m);
    auto fill = [&](auto&& fillself, int j) -> void {
      if (j == m) {
        rows.push_back(cur);
        self(self, k - 1);
        rows.pop_back();
        return;
      }
      for (int v = lo[j]; v <= hi[j]; v += 2) {
        cur[static_cast<std::size_t>(j)] = v;
        fillself(fillself, j + 1);
      }
    };
    fill(fill, 0);
  };
  rec(rec, w.n);

  std::sort(out.begin(), out.end(),
            [](const GTPattern& a, const GTPattern& b) { return a.key() < b.key(); });
  return out;
}

/// Tableau with m_{j,k} replaced by m_{j,k} +/- 1, or nullopt when the
/// result violates the flavor's betweenness conditions.  Operator builders
/// consume nullopt as "term absent".
inline std::optional<GTPattern> shift(const GTPattern& pat, int k, int j, int delta) {
  if (k >= pat.n() || k < 2 || j < 1 || j > k / 2)
    throw std::invalid_argument("shift: row/index out of range");
  if (delta != 1 && delta != -1)
    throw std::invalid_argument("shift: delta must be +1 or -1");
  GTPattern moved = pat;
  moved.row(k)[static_cast<std::size_t>(j - 1)] += 2 * delta;
  if (!detail::chain_ok(k + 1, moved.row(k + 1), moved.row(k), pat.flavor()))
    return std::nullopt;
  if (k >= 3 &&
      !detail::chain_ok(k, moved.row(k), moved.row(k - 1), pat.flavor()))
    return std::nullopt;
  return moved;
}

/// Position of p under the canonical order of an enumerated basis.
inline std::size_t index_of(const GTPattern& p, const std::vector<GTPattern>& basis) {
  const auto key = p.key();
  auto it = std::lower_bound(
      basis.begin(), basis.end(), key,
      [](const GTPattern& a, const std::vector<int>& k) { return a.key() < k; });
  if (it == basis.end() || !(*it == p))
    throw std::out_of_range("index_of: pattern not in basis");
  return static_cast<std::size_t>(it - basis.begin());
}

}  // namespace qsorep
