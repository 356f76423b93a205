#ifndef BMAT_MINOR_HPP
#define BMAT_MINOR_HPP

// Minor detection and excluded-minor class membership.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bmat/isomorphism.hpp"
#include "bmat/matroid.hpp"

namespace bmat {

struct MinorWitness {
  Subset deletions;
  Subset contractions;
};

struct MinorResult {
  bool found = false;
  std::optional<MinorWitness> witness;
};

namespace detail {

/// Precomputed data for repeated "is this an N-minor" questions.
struct MinorTarget {
  explicit MinorTarget(Matroid target)
      : matroid(std::move(target)), header(colour_elements(matroid).header), key(canonical_key(matroid)) {}

  bool matches(const Matroid& candidate) const {
    if (candidate.size() != matroid.size() || candidate.rank() != matroid.rank()) return false;
    if (colour_elements(candidate).header != header) return false;
    return canonical_key(candidate) == key;
  }

  Matroid matroid;
  std::vector<std::uint64_t> header;
  std::string key;
};

inline ElemMask next_subset_same_size(ElemMask s) {
  ElemMask c = s & (~s + 1);
  ElemMask r = s + c;
  return (((r ^ s) >> 2) / c) | r;
}

/// Calls visit(mask) for every subset of `pool` with `count` elements.
template <typename Visit>
bool for_each_subset_of(ElemMask pool, int count, Visit&& visit) {
  std::vector<ElemMask> bits;
  for (ElemMask x = pool; x; x &= x - 1) bits.push_back(x & (~x + 1));
  auto n = static_cast<int>(bits.size());
  if (count > n) return false;
  if (count == 0) return visit(ElemMask{0});
  for (ElemMask pick = (ElemMask{1} << count) - 1; pick < (ElemMask{1} << n); pick = next_subset_same_size(pick)) {
    ElemMask s = 0;
    for (ElemMask y = pick; y; y &= y - 1) s |= bits[static_cast<std::size_t>(std::countr_zero(y))];
    if (visit(s)) return true;
  }
  return false;
}

inline MinorResult find_minor(const Matroid& m, const MinorTarget& target) {
  const Matroid& n = target.matroid;
  MinorResult result;
  if (n.size() > m.size() || n.rank() > m.rank() || n.corank() > m.corank()) return result;
  auto contract_count = static_cast<int>(m.rank() - n.rank());
  auto delete_count = static_cast<int>(m.corank() - n.corank());
  int target_rank = static_cast<int>(n.rank());
  // Contract an independent set C and delete a coindependent set D, with
  // |C| = r(M) - r(N) and |D| = r*(M) - r*(N).
  for_each_subset_of(m.ground(), contract_count, [&](ElemMask con) {
    if (m.rank_of(con) != contract_count) return false;
    ElemMask rest = m.ground() & ~con;
    return for_each_subset_of(rest, delete_count, [&](ElemMask del) {
      if (m.rank_of((rest & ~del) | con) - contract_count != target_rank) return false;
      Matroid minor = remove_mask(m, del, con);
      if (!target.matches(minor)) return false;
      result.found = true;
      result.witness = MinorWitness{m.subset(del), m.subset(con)};
      return true;
    });
  });
  return result;
}

}  // namespace detail

/// Whether m has a minor isomorphic to n, with a witness when it does.
inline MinorResult has_minor(const Matroid& m, const Matroid& n) {
  return detail::find_minor(m, detail::MinorTarget(n));
}

/// Membership in EX[excluded...], memoized per representation.
///
/// The cache is keyed by the exact standard-form matrix (labels ignored), so
/// the same child reached from different generators or labelings is tested
/// once. Safe to share across threads.
class ExcludedMinorFilter {
 public:
  explicit ExcludedMinorFilter(const std::vector<Matroid>& excluded) {
    for (const auto& x : excluded) targets_.emplace_back(x);
  }

  /// Index into the excluded list of the first excluded minor m contains.
  std::optional<std::size_t> first_excluded_minor(const Matroid& m) const {
    std::string key = signature(m);
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < targets_.size() && !hit; ++i)
      if (detail::find_minor(m, targets_[i]).found) hit = i;
    std::lock_guard lock(mutex_);
    cache_.emplace(std::move(key), hit);
    return hit;
  }

  bool in_class(const Matroid& m) const { return !first_excluded_minor(m).has_value(); }

  std::size_t size() const noexcept { return targets_.size(); }

 private:
  static std::string signature(const Matroid& m) {
    std::string s;
    s.push_back(static_cast<char>(m.rank()));
    for (auto c : m.columns())
      for (int b = 0; b < 8; ++b) s.push_back(static_cast<char>((c >> (8 * b)) & 0xFF));
    return s;
  }

  std::vector<detail::MinorTarget> targets_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, std::optional<std::size_t>> cache_;
};

/// True iff m has no minor isomorphic to any matroid in `excluded`.
inline bool in_class(const Matroid& m, const std::vector<Matroid>& excluded) {
  return ExcludedMinorFilter(excluded).in_class(m);
}

}  // namespace bmat

#endif  // BMAT_MINOR_HPP
