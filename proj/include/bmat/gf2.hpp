#ifndef BMAT_GF2_HPP
#define BMAT_GF2_HPP

// Dense linear algebra over GF(2) with bit-packed storage.
//
// Row-major matrices pack each row into 64-bit words; padding bits past the
// last column are always zero. Everything here is a value type and every
// operation is a pure function of its arguments.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bmat/errors.hpp"

namespace bmat {

namespace detail {

inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

inline constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << (i % kWordBits); }

}  // namespace detail

/// A fixed-length vector over GF(2).
///
/// Coordinates are 0-based internally. The bracket notation used throughout
/// the tools writes coordinate 0 first, so `[1110]` has coordinates 0, 1 and 2
/// set. Ordering compares coordinate 0 first, which makes the order agree with
/// reading the bracket string as a binary number.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t len) : len_(len), words_(detail::words_for(len), 0) {}

  BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
    std::size_t i = 0;
    for (int b : bits) set(i++, b != 0);
  }

  /// Parses `[0110]` or `0110`. Whitespace inside the brackets is ignored.
  static BitVector from_bracket(std::string_view text) {
    std::string digits;
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && text[begin] == ' ') ++begin;
    while (end > begin && text[end - 1] == ' ') --end;
    if (begin < end && text[begin] == '[') {
      if (text[end - 1] != ']') throw InputError("unterminated bracket vector: " + std::string(text));
      ++begin;
      --end;
    }
    for (std::size_t i = begin; i < end; ++i) {
      char c = text[i];
      if (c == '0' || c == '1') {
        digits.push_back(c);
      } else if (c != ' ') {
        throw InputError("bad character in bracket vector: " + std::string(text));
      }
    }
    BitVector v(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) v.set(i, digits[i] == '1');
    return v;
  }

  /// Builds a vector from the low `len` bits of `word` (bit i is coordinate i).
  static BitVector from_word(std::size_t len, std::uint64_t word) {
    if (len > detail::kWordBits) throw InputError("from_word: length exceeds 64");
    BitVector v(len);
    if (len > 0) {
      std::uint64_t mask = len == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1);
      v.words_[0] = word & mask;
    }
    return v;
  }

  std::size_t size() const noexcept { return len_; }

  bool get(std::size_t i) const {
    check(i);
    return (words_[i / detail::kWordBits] & detail::bit(i)) != 0;
  }

  void set(std::size_t i, bool value = true) {
    check(i);
    if (value) {
      words_[i / detail::kWordBits] |= detail::bit(i);
    } else {
      words_[i / detail::kWordBits] &= ~detail::bit(i);
    }
  }

  void flip(std::size_t i) {
    check(i);
    words_[i / detail::kWordBits] ^= detail::bit(i);
  }

  std::size_t weight() const noexcept {
    std::size_t w = 0;
    for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
  }

  bool is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  /// Low 64 coordinates packed as a word (bit i is coordinate i).
  std::uint64_t to_word() const {
    if (len_ > detail::kWordBits) throw InputError("to_word: length exceeds 64");
    return words_.empty() ? 0 : words_[0];
  }

  BitVector& operator^=(const BitVector& other) {
    if (other.len_ != len_) throw InputError("BitVector xor: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }

  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  /// Dot product over GF(2).
  bool dot(const BitVector& other) const {
    if (other.len_ != len_) throw InputError("BitVector dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return (std::popcount(acc) & 1) != 0;
  }

  /// Copy without coordinate `i`.
  BitVector without(std::size_t i) const {
    check(i);
    BitVector out(len_ - 1);
    for (std::size_t j = 0, k = 0; j < len_; ++j) {
      if (j == i) continue;
      out.set(k++, get(j));
    }
    return out;
  }

  /// Copy with `value` appended as a new last coordinate.
  BitVector appended(bool value) const {
    BitVector out(len_ + 1);
    for (std::size_t j = 0; j < len_; ++j) out.set(j, get(j));
    out.set(len_, value);
    return out;
  }

  std::string to_bracket() const {
    std::string s = "[";
    for (std::size_t i = 0; i < len_; ++i) s.push_back(get(i) ? '1' : '0');
    s.push_back(']');
    return s;
  }

  friend bool operator==(const BitVector& a, const BitVector& b) {
    return a.len_ == b.len_ && a.words_ == b.words_;
  }

  /// Shorter vectors sort first; equal lengths compare coordinate 0 first.
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
    if (a.len_ != b.len_) return a.len_ <=> b.len_;
    for (std::size_t i = 0; i < a.len_; ++i) {
      bool x = a.get(i);
      bool y = b.get(i);
      if (x != y) return x ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }

 private:
  void check(std::size_t i) const {
    if (i >= len_) throw InputError("BitVector index out of range");
  }

  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense rows x cols matrix over GF(2), row-major with packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(detail::words_for(cols)), data_(rows * stride_, 0) {}

  /// Each string is one row of '0'/'1' characters.
  static BitMatrix from_strings(const std::vector<std::string>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InputError("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) {
        char c = rows[i][j];
        if (c != '0' && c != '1') throw InputError("matrix entries must be 0 or 1");
        m.set(i, j, c == '1');
      }
    }
    return m;
  }

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  /// Builds a matrix whose columns are the given vectors (all of length `rows`).
  static BitMatrix from_columns(std::size_t rows, const std::vector<BitVector>& columns) {
    BitMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw InputError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m.set(i, j, columns[j].get(i));
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t i, std::size_t j) const {
    check(i, j);
    return (data_[i * stride_ + j / detail::kWordBits] & detail::bit(j)) != 0;
  }

  void set(std::size_t i, std::size_t j, bool value = true) {
    check(i, j);
    auto& word = data_[i * stride_ + j / detail::kWordBits];
    if (value) {
      word |= detail::bit(j);
    } else {
      word &= ~detail::bit(j);
    }
  }

  BitVector row(std::size_t i) const {
    BitVector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v.set(j, get(i, j));
    return v;
  }

  BitVector column(std::size_t j) const {
    BitVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.set(i, get(i, j));
    return v;
  }

  /// row[dst] ^= row[src], word at a time.
  void add_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < stride_; ++w) data_[dst * stride_ + w] ^= data_[src * stride_ + w];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < stride_; ++w) std::swap(data_[a * stride_ + w], data_[b * stride_ + w]);
  }

  bool row_is_zero(std::size_t i) const {
    for (std::size_t w = 0; w < stride_; ++w)
      if (data_[i * stride_ + w] != 0) return false;
    return true;
  }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (get(i, j)) t.set(j, i);
    return t;
  }

  /// Columns in `order` (0-based), in that order.
  BitMatrix select_columns(const std::vector<std::size_t>& order) const {
    BitMatrix out(rows_, order.size());
    for (std::size_t k = 0; k < order.size(); ++k)
      for (std::size_t i = 0; i < rows_; ++i)
        if (get(i, order[k])) out.set(i, k);
    return out;
  }

  /// this * v over GF(2).
  BitVector times(const BitVector& v) const {
    if (v.size() != cols_) throw InputError("matrix-vector shape mismatch");
    BitVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.set(i, row(i).dot(v));
    return out;
  }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out(rows_, std::string(cols_, '0'));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (get(i, j)) out[i][j] = '1';
    return out;
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw InputError("BitMatrix index out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

namespace detail {

/// Result of Gauss-Jordan elimination: the reduced matrix and, for each
/// pivot row i, the column holding its leading 1.
struct Reduced {
  BitMatrix matrix;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form. Columns listed in `preferred` are tried as
/// pivots first (in that order), then all remaining columns left to right.
inline Reduced reduce(BitMatrix m, const std::vector<std::size_t>& preferred = {}) {
  std::vector<std::size_t> order = preferred;
  std::vector<bool> seen(m.cols(), false);
  for (auto c : preferred) seen[c] = true;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!seen[c]) order.push_back(c);

  Reduced out;
  std::size_t next = 0;
  for (std::size_t c : order) {
    if (next == m.rows()) break;
    std::size_t pivot = next;
    while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, next);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != next && m.get(i, c)) m.add_row(i, next);
    out.pivot_columns.push_back(c);
    ++next;
  }
  out.matrix = std::move(m);
  return out;
}

}  // namespace detail

inline std::size_t rank(const BitMatrix& m) { return detail::reduce(m).pivot_columns.size(); }

/// GF(2) rank of the listed columns. Indices are 1-based.
inline std::size_t rank_subset(const BitMatrix& m, const std::vector<int>& cols) {
  std::vector<std::size_t> order;
  order.reserve(cols.size());
  for (int c : cols) {
    if (c < 1 || static_cast<std::size_t>(c) > m.cols())
      throw InputError("column index " + std::to_string(c) + " out of range");
    order.push_back(static_cast<std::size_t>(c - 1));
  }
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  return rank(m.select_columns(order));
}

struct StandardForm {
  BitMatrix matrix;
  /// column_order[k] is the 1-based original index of output column k.
  std::vector<int> column_order;
};

/// Row-reduces `m` to [I_r | D] after moving a basis to the front.
///
/// With no basis given, the basis is chosen greedily left to right. A given
/// basis may be partial; it is completed greedily. Non-basis columns keep
/// their original relative order.
inline StandardForm standard_form(const BitMatrix& m, const std::optional<std::vector<int>>& basis = std::nullopt) {
  std::vector<std::size_t> preferred;
  if (basis) {
    for (int c : *basis) {
      if (c < 1 || static_cast<std::size_t>(c) > m.cols())
        throw InputError("basis column " + std::to_string(c) + " out of range");
      auto idx = static_cast<std::size_t>(c - 1);
      if (std::find(preferred.begin(), preferred.end(), idx) != preferred.end())
        throw InputError("basis column repeated");
      preferred.push_back(idx);
    }
    if (preferred.size() > m.rows()) throw InputError("basis has more columns than the matrix has rows");
  }
  auto red = detail::reduce(m, preferred);
  if (red.pivot_columns.size() < m.rows()) throw StructuralError("matrix is not of full row rank");
  for (std::size_t k = 0; k < preferred.size(); ++k)
    if (red.pivot_columns[k] != preferred[k]) throw InputError("basis columns are dependent");

  std::vector<std::size_t> order = red.pivot_columns;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : order) is_pivot[c] = true;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) order.push_back(c);

  StandardForm out;
  out.matrix = red.matrix.select_columns(order);
  for (auto c : order) out.column_order.push_back(static_cast<int>(c) + 1);
  return out;
}

/// A basis of {v : m v = 0}; always has cols - rank(m) vectors.
inline std::vector<BitVector> cycle_space_basis(const BitMatrix& m) {
  auto red = detail::reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivot_columns) is_pivot[c] = true;
  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector v(m.cols());
    v.set(f);
    for (std::size_t i = 0; i < red.pivot_columns.size(); ++i)
      if (red.matrix.get(i, f)) v.set(red.pivot_columns[i]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace bmat

#endif  // BMAT_GF2_HPP
