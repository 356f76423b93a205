#ifndef BMAT_ISOMORPHISM_HPP
#define BMAT_ISOMORPHISM_HPP

// Canonical keys for binary matroids.
//
// A binary matroid is fixed by any basis B together with the matrix D of
// fundamental-circuit coordinates, so
//
//   key(M) = min over bases B and over orderings of B and E - B of D_B
//
// is a complete isomorphism invariant. Elements are first coloured by the
// sizes of the circuits and cocircuits through them; orderings only permute
// elements within a colour, and only bases with the smallest colour profile
// are tried. Ties are broken purely by comparing encoded words.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bmat/gf2.hpp"
#include "bmat/matroid.hpp"
#include "bmat/parallel.hpp"

namespace bmat {

namespace detail {

/// Per-element counts of circuits and cocircuits through it, by size.
inline std::vector<std::vector<std::uint32_t>> element_invariants(const Matroid& m) {
  std::size_t n = m.size();
  std::vector<std::vector<std::uint32_t>> inv(n, std::vector<std::uint32_t>(2 * (n + 1), 0));
  for (auto c : circuit_masks(m)) {
    auto size = static_cast<std::size_t>(std::popcount(c));
    for (ElemMask x = c; x; x &= x - 1) ++inv[static_cast<std::size_t>(std::countr_zero(x))][size];
  }
  for (auto c : cocircuit_masks(m)) {
    auto size = static_cast<std::size_t>(std::popcount(c));
    for (ElemMask x = c; x; x &= x - 1) ++inv[static_cast<std::size_t>(std::countr_zero(x))][n + 1 + size];
  }
  return inv;
}

struct Colouring {
  std::vector<std::uint32_t> colour;  // per position
  std::vector<std::uint64_t> header;  // isomorphism-invariant summary
};

inline Colouring colour_elements(const Matroid& m) {
  auto inv = element_invariants(m);
  auto distinct = inv;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Colouring out;
  out.colour.resize(m.size());
  std::vector<std::uint64_t> counts(distinct.size(), 0);
  for (std::size_t p = 0; p < m.size(); ++p) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), inv[p]);
    out.colour[p] = static_cast<std::uint32_t>(it - distinct.begin());
    ++counts[out.colour[p]];
  }
  out.header = {m.rank(), m.size(), distinct.size()};
  for (std::size_t c = 0; c < distinct.size(); ++c) {
    out.header.push_back(counts[c]);
    out.header.insert(out.header.end(), distinct[c].begin(), distinct[c].end());
  }
  return out;
}

/// Calls visit() for every ordering that permutes `items` only inside
/// consecutive runs of equal `keys`.
template <typename Visit>
void for_each_grouped_permutation(std::vector<std::size_t>& items, const std::vector<std::uint32_t>& keys,
                                  Visit&& visit) {
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t i = 0; i < items.size();) {
    std::size_t j = i;
    while (j < items.size() && keys[j] == keys[i]) ++j;
    if (j - i > 1) runs.emplace_back(i, j);
    i = j;
  }
  for (auto [b, e] : runs) std::sort(items.begin() + static_cast<std::ptrdiff_t>(b), items.begin() + static_cast<std::ptrdiff_t>(e));
  for (;;) {
    visit();
    std::size_t r = 0;
    for (; r < runs.size(); ++r) {
      auto [b, e] = runs[r];
      if (std::next_permutation(items.begin() + static_cast<std::ptrdiff_t>(b), items.begin() + static_cast<std::ptrdiff_t>(e))) break;
    }
    if (r == runs.size()) return;
  }
}

inline void append_words(std::string& out, const std::vector<std::uint64_t>& words) {
  for (auto w : words)
    for (int b = 7; b >= 0; --b) out.push_back(static_cast<char>((w >> (8 * b)) & 0xFF));
}

}  // namespace detail

/// Byte string equal for two matroids iff they are isomorphic.
inline std::string canonical_key(const Matroid& m) {
  auto colouring = detail::colour_elements(m);
  const auto& colour = colouring.colour;
  std::size_t n = m.size();
  std::size_t r = m.rank();
  std::size_t k = n - r;
  // Permute the shorter side of D and sort the longer one.
  bool permute_basis = r <= k;

  std::string key;
  detail::append_words(key, colouring.header);
  if (r == 0 || k == 0) return key;

  auto rows = m.row_words();
  std::vector<std::uint64_t> best;
  bool have_best = false;
  std::vector<std::uint64_t> best_profile;

  // Enumerate r-subsets of positions with Gosper's hack.
  ElemMask limit = ElemMask{1} << n;
  for (ElemMask basis = (ElemMask{1} << r) - 1; basis < limit;) {
    if (m.rank_of(basis) == static_cast<int>(r)) {
      std::vector<std::size_t> in_basis;
      std::vector<std::size_t> outside;
      for (std::size_t p = 0; p < n; ++p) ((basis >> p) & 1U ? in_basis : outside).push_back(p);
      auto by_colour = [&](std::size_t a, std::size_t b) { return colour[a] != colour[b] ? colour[a] < colour[b] : a < b; };
      std::sort(in_basis.begin(), in_basis.end(), by_colour);
      std::sort(outside.begin(), outside.end(), by_colour);

      auto& permuted = permute_basis ? in_basis : outside;
      auto& sorted = permute_basis ? outside : in_basis;
      std::vector<std::uint64_t> profile;
      std::vector<std::uint32_t> permuted_colours;
      for (auto p : permuted) {
        profile.push_back(colour[p]);
        permuted_colours.push_back(colour[p]);
      }
      for (auto p : sorted) profile.push_back(colour[p]);
      std::sort(profile.begin() + static_cast<std::ptrdiff_t>(permuted.size()), profile.end());

      if (!have_best || profile <= best_profile) {
        if (!have_best || profile < best_profile) {
          best_profile = profile;
          best.clear();
          have_best = false;
        }
        // Re-express every column in terms of this basis: after reducing with
        // the basis as pivots, row i has its leading 1 in column in_basis[i].
        std::vector<std::uint64_t> red = rows;
        for (std::size_t i = 0; i < r; ++i) {
          std::size_t c = in_basis[i];
          std::size_t piv = i;
          while (!((red[piv] >> c) & 1U)) ++piv;
          std::swap(red[piv], red[i]);
          for (std::size_t j = 0; j < r; ++j)
            if (j != i && ((red[j] >> c) & 1U)) red[j] ^= red[i];
        }
        // entry(b, x): coordinate of non-basis x on basis element b.
        std::vector<std::size_t> basis_row(n, 0);
        for (std::size_t i = 0; i < r; ++i) basis_row[in_basis[i]] = i;
        auto entry = [&](std::size_t b, std::size_t x) -> std::uint64_t { return (red[basis_row[b]] >> x) & 1U; };

        std::vector<std::uint64_t> candidate(profile.size());
        std::vector<std::uint64_t> codes(sorted.size());
        detail::for_each_grouped_permutation(permuted, permuted_colours, [&] {
          for (std::size_t s = 0; s < sorted.size(); ++s) {
            std::uint64_t code = colour[sorted[s]];
            for (auto p : permuted)
              code = (code << 1) | (permute_basis ? entry(p, sorted[s]) : entry(sorted[s], p));
            codes[s] = code;
          }
          std::sort(codes.begin(), codes.end());
          std::copy(profile.begin(), profile.begin() + static_cast<std::ptrdiff_t>(permuted.size()), candidate.begin());
          std::copy(codes.begin(), codes.end(), candidate.begin() + static_cast<std::ptrdiff_t>(permuted.size()));
          if (!have_best || candidate < best) {
            best = candidate;
            have_best = true;
          }
        });
      }
    }
    ElemMask c = basis & (~basis + 1);
    ElemMask rr = basis + c;
    basis = (((rr ^ basis) >> 2) / c) | rr;
  }
  detail::append_words(key, best_profile);
  detail::append_words(key, best);
  return key;
}

inline bool are_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  return canonical_key(a) == canonical_key(b);
}

struct IsoClass {
  std::string canonical_key;
  Matroid representative;
  std::vector<BitVector> members;
};

struct Candidate {
  BitVector generator;
  Matroid matroid;
};

/// Groups candidates by isomorphism class. Classes are ordered by their least
/// generator; members are listed in ascending order.
inline std::vector<IsoClass> partition_into_classes(const std::vector<Candidate>& candidates, unsigned threads = 1) {
  std::vector<std::string> keys(candidates.size());
  parallel_for(candidates.size(), threads, [&](std::size_t i) { keys[i] = canonical_key(candidates[i].matroid); });

  std::vector<std::size_t> order(candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return candidates[a].generator < candidates[b].generator; });

  std::vector<IsoClass> classes;
  std::map<std::string, std::size_t> index;
  for (auto i : order) {
    auto [it, inserted] = index.emplace(keys[i], classes.size());
    if (inserted) classes.push_back(IsoClass{keys[i], candidates[i].matroid, {}});
    classes[it->second].members.push_back(candidates[i].generator);
  }
  return classes;
}

}  // namespace bmat

#endif  // BMAT_ISOMORPHISM_HPP
