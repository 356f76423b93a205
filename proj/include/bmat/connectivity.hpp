#ifndef BMAT_CONNECTIVITY_HPP
#define BMAT_CONNECTIVITY_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "bmat/errors.hpp"
#include "bmat/matroid.hpp"

namespace bmat {

/// Memoized rank function over position masks, for exhaustive sweeps.
class RankCache {
 public:
  explicit RankCache(const Matroid& m) : m_(m) {
    if (m.size() <= 22) table_.assign(std::size_t{1} << m.size(), -1);
  }

  int operator()(ElemMask x) const {
    if (table_.empty()) return m_.rank_of(x);
    auto& slot = table_[x];
    if (slot < 0) slot = static_cast<std::int8_t>(m_.rank_of(x));
    return slot;
  }

  int lambda(ElemMask x) const {
    ElemMask rest = m_.ground() & ~x;
    return (*this)(x) + (*this)(rest) - static_cast<int>(m_.rank());
  }

 private:
  const Matroid& m_;
  mutable std::vector<std::int8_t> table_;
};

inline int lambda_mask(const Matroid& m, ElemMask x) {
  return m.rank_of(x) + m.rank_of(m.ground() & ~x) - static_cast<int>(m.rank());
}

/// Connectivity function r(X) + r(E - X) - r(M).
inline int lambda(const Matroid& m, const Subset& x) { return lambda_mask(m, m.mask(x)); }

struct Separation {
  Subset side_a;
  Subset side_b;
  int order = 0;
  int lambda_value = 0;
  bool exact = false;
  bool minimal = false;

  friend bool operator==(const Separation&, const Separation&) = default;
};

inline Separation classify_separation(const Matroid& m, const Subset& a, int k) {
  ElemMask am = m.mask(a);
  ElemMask bm = m.ground() & ~am;
  int size_a = popcount(am);
  int size_b = popcount(bm);
  if (size_a < k || size_b < k) throw NotASeparationError("both sides need at least k elements");
  Separation s;
  s.side_a = m.subset(am);
  s.side_b = m.subset(bm);
  s.order = k;
  s.lambda_value = lambda_mask(m, am);
  if (s.lambda_value > k - 1) throw NotASeparationError("lambda exceeds k - 1");
  s.exact = s.lambda_value == k - 1;
  s.minimal = s.exact && (size_a == k || size_b == k);
  return s;
}

/// True iff m has no k-separation for any k <= n - 1.
inline bool is_n_connected(const Matroid& m, int n) {
  if (n < 2) throw InputError("connectivity order must be at least 2");
  if (m.size() < 2) return true;
  RankCache rank(m);
  // Sides are taken without the last element; the other side is the complement.
  ElemMask top = ElemMask{1} << (m.size() - 1);
  ElemMask ground = m.ground();
  for (ElemMask a = 1; a < top; ++a) {
    int s = std::min(popcount(a), popcount(ground & ~a));
    int bound = std::min(s, n - 1);
    if (rank.lambda(a) < bound) return false;
  }
  return true;
}

/// 3-connected with lambda(A) >= 3 whenever both sides have at least 4 elements.
inline bool is_internally_4_connected(const Matroid& m) {
  if (!is_n_connected(m, 3)) return false;
  if (m.size() < 2) return true;
  RankCache rank(m);
  ElemMask top = ElemMask{1} << (m.size() - 1);
  ElemMask ground = m.ground();
  for (ElemMask a = 1; a < top; ++a) {
    if (popcount(a) < 4 || popcount(ground & ~a) < 4) continue;
    if (rank.lambda(a) < 3) return false;
  }
  return true;
}

/// min lambda(X) over a <= X <= E - b.
inline int bridging_value(const Matroid& m, const Subset& a, const Subset& b) {
  ElemMask am = m.mask(a);
  ElemMask bm = m.mask(b);
  if (am & bm) throw InputError("bridging sides overlap");
  ElemMask free = m.ground() & ~(am | bm);
  int best = lambda_mask(m, am);
  // Walk all submasks of `free`.
  for (ElemMask s = free; s != 0; s = (s - 1) & free) best = std::min(best, lambda_mask(m, am | s));
  return best;
}

/// All exact 3-separations with both sides of size at least 4, one entry per
/// unordered pair. side_a is the lexicographically smaller side, or with
/// `require_unions` the side that is both a union of circuits and a union of
/// cocircuits (separations with no such side are dropped).
inline std::vector<Separation> nonminimal_exact_3seps(const Matroid& m, bool require_unions) {
  std::vector<Separation> out;
  if (m.size() < 8) return out;
  RankCache rank(m);
  ElemMask ground = m.ground();
  ElemMask top = ElemMask{1} << (m.size() - 1);
  for (ElemMask a = 1; a < top; ++a) {
    ElemMask b = ground & ~a;
    if (popcount(a) < 4 || popcount(b) < 4) continue;
    if (rank.lambda(a) != 2) continue;
    Subset sa = m.subset(a);
    Subset sb = m.subset(b);
    if (sb < sa) std::swap(sa, sb);
    if (require_unions) {
      auto qualifies = [&](const Subset& s) {
        auto f = is_union_of_circuits_and_cocircuits(m, s);
        return f.union_of_circuits && f.union_of_cocircuits;
      };
      bool qa = qualifies(sa);
      bool qb = qualifies(sb);
      if (!qa && !qb) continue;
      if (!qa) std::swap(sa, sb);
    }
    Separation s;
    s.side_a = std::move(sa);
    s.side_b = std::move(sb);
    s.order = 3;
    s.lambda_value = 2;
    s.exact = true;
    s.minimal = false;
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Separation& x, const Separation& y) { return x.side_a < y.side_a; });
  return out;
}

}  // namespace bmat

#endif  // BMAT_CONNECTIVITY_HPP
