#ifndef BMAT_MATROID_HPP
#define BMAT_MATROID_HPP

// Binary matroids held in standard form [I_r | D] with a label per column.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bmat/errors.hpp"
#include "bmat/gf2.hpp"

namespace bmat {

using Label = int;
using Subset = std::set<Label>;

/// Set of element positions (bit p is the element in column p).
using ElemMask = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

inline int popcount(ElemMask m) { return std::popcount(m); }

/// Rank of a set of GF(2) vectors given as words.
inline int rank_of_vectors(const std::vector<std::uint64_t>& vectors) {
  std::vector<std::uint64_t> basis;
  for (auto v : vectors) {
    for (auto b : basis) v = std::min(v, v ^ b);
    if (v != 0) basis.push_back(v);
  }
  return static_cast<int>(basis.size());
}

class Matroid {
 public:
  Matroid() = default;

  /// Builds from row words over `n` columns. Rows are reduced to standard
  /// form: pivots are taken from `preferred` first and then greedily left to
  /// right, and zero rows are dropped when `allow_rank_drop` is set.
  static Matroid from_rows(std::vector<std::uint64_t> rows, std::size_t n, std::vector<Label> labels,
                           bool allow_rank_drop, const std::vector<std::size_t>& preferred = {}) {
    if (n > kMaxElements) throw InputError("matroids are limited to 64 elements");
    if (labels.size() != n) throw InputError("label count does not match column count");
    {
      auto sorted = labels;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("duplicate element labels");
    }
    std::vector<std::size_t> order = preferred;
    for (std::size_t c = 0; c < n; ++c)
      if (std::find(preferred.begin(), preferred.end(), c) == preferred.end()) order.push_back(c);

    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (auto c : order) {
      if (next == rows.size()) break;
      std::size_t p = next;
      while (p < rows.size() && !((rows[p] >> c) & 1U)) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[next]);
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (i != next && ((rows[i] >> c) & 1U)) rows[i] ^= rows[next];
      pivots.push_back(c);
      ++next;
    }
    if (next < rows.size() && !allow_rank_drop) throw StructuralError("matrix is not of full row rank");
    rows.resize(next);

    std::vector<std::size_t> col_order = pivots;
    ElemMask pivot_mask = 0;
    for (auto c : pivots) pivot_mask |= ElemMask{1} << c;
    for (std::size_t c = 0; c < n; ++c)
      if (!((pivot_mask >> c) & 1U)) col_order.push_back(c);

    Matroid m;
    m.rank_ = next;
    m.cols_.assign(n, 0);
    m.labels_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      auto c = col_order[k];
      std::uint64_t col = 0;
      for (std::size_t i = 0; i < next; ++i)
        if ((rows[i] >> c) & 1U) col |= std::uint64_t{1} << i;
      m.cols_[k] = col;
      m.labels_[k] = labels[c];
    }
    return m;
  }

  /// Builds directly from columns that are already in standard form.
  static Matroid from_standard_columns(std::size_t rank, std::vector<std::uint64_t> cols, std::vector<Label> labels) {
    if (cols.size() != labels.size()) throw InputError("label count does not match column count");
    if (rank > cols.size()) throw InputError("rank exceeds size");
    for (std::size_t i = 0; i < rank; ++i)
      if (cols[i] != (std::uint64_t{1} << i)) throw StructuralError("columns are not in standard form");
    std::vector<std::uint64_t> rows(rank, 0);
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t i = 0; i < rank; ++i)
        if ((cols[c] >> i) & 1U) rows[i] |= std::uint64_t{1} << c;
    return from_rows(std::move(rows), cols.size(), std::move(labels), false);
  }

  std::size_t size() const noexcept { return cols_.size(); }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t corank() const noexcept { return cols_.size() - rank_; }

  const std::vector<Label>& labels() const noexcept { return labels_; }
  Label label(std::size_t pos) const { return labels_.at(pos); }

  bool has_label(Label l) const { return std::find(labels_.begin(), labels_.end(), l) != labels_.end(); }

  std::size_t position(Label l) const {
    auto it = std::find(labels_.begin(), labels_.end(), l);
    if (it == labels_.end()) throw InputError("unknown element label " + std::to_string(l));
    return static_cast<std::size_t>(it - labels_.begin());
  }

  Label max_label() const { return labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end()); }

  /// Column at `pos` as a word over rows (bit i is row i).
  std::uint64_t column(std::size_t pos) const { return cols_.at(pos); }
  const std::vector<std::uint64_t>& columns() const noexcept { return cols_; }

  BitVector column_vector(std::size_t pos) const { return BitVector::from_word(rank_, column(pos)); }

  /// Row i of the D block, one coordinate per non-basis column.
  BitVector d_row(std::size_t i) const {
    BitVector v(corank());
    for (std::size_t t = 0; t < corank(); ++t) v.set(t, (cols_[rank_ + t] >> i) & 1U);
    return v;
  }

  BitMatrix matrix() const {
    BitMatrix m(rank_, size());
    for (std::size_t c = 0; c < size(); ++c)
      for (std::size_t i = 0; i < rank_; ++i)
        if ((cols_[c] >> i) & 1U) m.set(i, c);
    return m;
  }

  BitMatrix d_block() const {
    BitMatrix m(rank_, corank());
    for (std::size_t t = 0; t < corank(); ++t)
      for (std::size_t i = 0; i < rank_; ++i)
        if ((cols_[rank_ + t] >> i) & 1U) m.set(i, t);
    return m;
  }

  /// Row words over positions (bit p is column p).
  std::vector<std::uint64_t> row_words() const {
    std::vector<std::uint64_t> rows(rank_, 0);
    for (std::size_t c = 0; c < size(); ++c)
      for (std::size_t i = 0; i < rank_; ++i)
        if ((cols_[c] >> i) & 1U) rows[i] |= std::uint64_t{1} << c;
    return rows;
  }

  ElemMask ground() const noexcept {
    return size() == 64 ? ~ElemMask{0} : ((ElemMask{1} << size()) - 1);
  }

  ElemMask mask(const Subset& s) const {
    ElemMask m = 0;
    for (Label l : s) m |= ElemMask{1} << position(l);
    return m;
  }

  Subset subset(ElemMask m) const {
    Subset s;
    for (std::size_t p = 0; p < size(); ++p)
      if ((m >> p) & 1U) s.insert(labels_[p]);
    return s;
  }

  int rank_of(ElemMask x) const {
    std::uint64_t basis[64];
    int count = 0;
    while (x != 0) {
      auto p = static_cast<std::size_t>(std::countr_zero(x));
      x &= x - 1;
      std::uint64_t v = cols_[p];
      for (int k = 0; k < count; ++k) v = std::min(v, v ^ basis[k]);
      if (v != 0) basis[count++] = v;
    }
    return count;
  }

  int rank_of(const Subset& s) const { return rank_of(mask(s)); }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.rank_ == b.rank_ && a.cols_ == b.cols_ && a.labels_ == b.labels_;
  }

 private:
  std::size_t rank_ = 0;
  std::vector<std::uint64_t> cols_;
  std::vector<Label> labels_;
};

/// Matroid represented by `matrix`, re-standardized if needed. Default labels are 1..n.
inline Matroid make_matroid(const BitMatrix& matrix, std::optional<std::vector<Label>> labels = std::nullopt) {
  std::size_t n = matrix.cols();
  if (n > kMaxElements) throw InputError("matroids are limited to 64 elements");
  std::vector<Label> lab;
  if (labels) {
    lab = *labels;
  } else {
    for (std::size_t i = 0; i < n; ++i) lab.push_back(static_cast<Label>(i + 1));
  }
  std::vector<std::uint64_t> rows(matrix.rows(), 0);
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (matrix.get(i, j)) rows[i] |= std::uint64_t{1} << j;
  return Matroid::from_rows(std::move(rows), n, std::move(lab), false);
}

/// Same matroid with `labels[p]` on position p.
inline Matroid relabel(const Matroid& m, std::vector<Label> labels) {
  return Matroid::from_rows(m.row_words(), m.size(), std::move(labels), false);
}

/// [I_r | D] on labels (b, d) becomes [I_{n-r} | D^T] on labels (d, b).
inline Matroid dual(const Matroid& m) {
  std::size_t r = m.rank();
  std::size_t k = m.corank();
  std::vector<std::uint64_t> cols(m.size(), 0);
  std::vector<Label> labels;
  for (std::size_t t = 0; t < k; ++t) {
    cols[t] = std::uint64_t{1} << t;
    labels.push_back(m.label(r + t));
  }
  for (std::size_t i = 0; i < r; ++i) {
    std::uint64_t col = 0;
    for (std::size_t t = 0; t < k; ++t)
      if ((m.column(r + t) >> i) & 1U) col |= std::uint64_t{1} << t;
    cols[k + i] = col;
    labels.push_back(m.label(i));
  }
  return Matroid::from_standard_columns(k, std::move(cols), std::move(labels));
}

/// Minor by position masks; see remove().
inline Matroid remove_mask(const Matroid& m, ElemMask del, ElemMask con) {
  if (del & con) throw InputError("an element is both deleted and contracted");
  if ((del | con) == m.ground() && m.size() > 0) throw InputError("minor would have an empty ground set");

  auto rows = m.row_words();
  std::vector<bool> drop_row(rows.size(), false);
  for (std::size_t p = 0; p < m.size(); ++p) {
    if (!((con >> p) & 1U)) continue;
    std::size_t pivot = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!drop_row[i] && ((rows[i] >> p) & 1U)) {
        pivot = i;
        break;
      }
    if (pivot == rows.size()) continue;  // loop in the current minor
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != pivot && ((rows[i] >> p) & 1U)) rows[i] ^= rows[pivot];
    drop_row[pivot] = true;
  }

  std::vector<std::size_t> keep;
  std::vector<Label> labels;
  for (std::size_t p = 0; p < m.size(); ++p)
    if (!(((del | con) >> p) & 1U)) {
      keep.push_back(p);
      labels.push_back(m.label(p));
    }
  std::vector<std::uint64_t> new_rows;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (drop_row[i]) continue;
    std::uint64_t w = 0;
    for (std::size_t k = 0; k < keep.size(); ++k)
      if ((rows[i] >> keep[k]) & 1U) w |= std::uint64_t{1} << k;
    new_rows.push_back(w);
  }
  return Matroid::from_rows(std::move(new_rows), keep.size(), std::move(labels), true);
}

/// Minor m \ deletions / contractions, keeping the original labels.
inline Matroid remove(const Matroid& m, const Subset& deletions, const Subset& contractions) {
  for (Label l : deletions)
    if (contractions.count(l)) throw InputError("element " + std::to_string(l) + " both deleted and contracted");
  return remove_mask(m, m.mask(deletions), m.mask(contractions));
}

namespace detail {

/// Keeps the minimal non-empty sets of `supports`.
inline std::vector<ElemMask> minimal_supports(std::vector<ElemMask> supports) {
  std::sort(supports.begin(), supports.end(), [](ElemMask a, ElemMask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  std::vector<ElemMask> minimal;
  for (auto s : supports) {
    if (s == 0) continue;
    bool dominated = std::any_of(minimal.begin(), minimal.end(), [s](ElemMask c) { return (c & s) == c; });
    if (!dominated) minimal.push_back(s);
  }
  return minimal;
}

/// Every element of the span of `generators`, walked in Gray-code order.
inline std::vector<ElemMask> span(const std::vector<ElemMask>& generators) {
  if (generators.size() > 24) throw InputError("span too large to enumerate");
  std::vector<ElemMask> out;
  out.reserve(std::size_t{1} << generators.size());
  ElemMask cur = 0;
  out.push_back(cur);
  for (std::size_t i = 1; i < (std::size_t{1} << generators.size()); ++i) {
    cur ^= generators[static_cast<std::size_t>(std::countr_zero(i))];
    out.push_back(cur);
  }
  return out;
}

}  // namespace detail

/// Fundamental circuits of [I_r | D]; they span the cycle space.
inline std::vector<ElemMask> cycle_generators(const Matroid& m) {
  std::vector<ElemMask> gens;
  for (std::size_t t = m.rank(); t < m.size(); ++t) gens.push_back((ElemMask{1} << t) | m.column(t));
  return gens;
}

/// Rows of [I_r | D]; they span the cocycle space.
inline std::vector<ElemMask> cocycle_generators(const Matroid& m) { return m.row_words(); }

/// Circuits as position masks, ordered by size then mask.
inline std::vector<ElemMask> circuit_masks(const Matroid& m) {
  return detail::minimal_supports(detail::span(cycle_generators(m)));
}

inline std::vector<ElemMask> cocircuit_masks(const Matroid& m) {
  return detail::minimal_supports(detail::span(cocycle_generators(m)));
}

inline std::vector<Subset> circuits(const Matroid& m) {
  std::vector<Subset> out;
  for (auto c : circuit_masks(m)) out.push_back(m.subset(c));
  return out;
}

inline std::vector<Subset> cocircuits(const Matroid& m) {
  std::vector<Subset> out;
  for (auto c : cocircuit_masks(m)) out.push_back(m.subset(c));
  return out;
}

struct UnionFlags {
  bool union_of_circuits = false;
  bool union_of_cocircuits = false;
};

/// Whether every element of `a` lies in a circuit (resp. cocircuit) inside `a`.
///
/// x is in a circuit inside a iff r(a - x) = r(a); x is in a cocircuit inside
/// a iff x is not a loop of M / (E - a).
inline UnionFlags is_union_of_circuits_and_cocircuits(const Matroid& m, const Subset& a) {
  ElemMask am = m.mask(a);
  ElemMask rest = m.ground() & ~am;
  int ra = m.rank_of(am);
  int rrest = m.rank_of(rest);
  UnionFlags flags{true, true};
  for (ElemMask x = am; x != 0; x &= x - 1) {
    ElemMask e = x & (~x + 1);
    if (m.rank_of(am & ~e) != ra) flags.union_of_circuits = false;
    if (m.rank_of(rest | e) == rrest) flags.union_of_cocircuits = false;
  }
  return flags;
}

struct TrianglesAndTriads {
  std::vector<Subset> triangles;
  std::vector<Subset> triads;
};

inline TrianglesAndTriads triangles_and_triads(const Matroid& m) {
  TrianglesAndTriads out;
  for (auto c : circuit_masks(m))
    if (std::popcount(c) == 3) out.triangles.push_back(m.subset(c));
  for (auto c : cocircuit_masks(m))
    if (std::popcount(c) == 3) out.triads.push_back(m.subset(c));
  return out;
}

struct Simplicity {
  bool is_simple = false;
  bool is_cosimple = false;
};

inline bool is_simple(const Matroid& m) {
  auto cols = m.columns();
  if (std::find(cols.begin(), cols.end(), std::uint64_t{0}) != cols.end()) return false;
  std::sort(cols.begin(), cols.end());
  return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

inline Simplicity simplicity(const Matroid& m) { return {is_simple(m), is_simple(dual(m))}; }

}  // namespace bmat

#endif  // BMAT_MATROID_HPP
