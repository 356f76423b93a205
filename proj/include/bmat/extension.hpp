#ifndef BMAT_EXTENSION_HPP
#define BMAT_EXTENSION_HPP

// Single-element extensions and coextensions of binary matroids.
//
// Extensions append a column to D and label it one past the largest label.
// Coextensions append a row to D together with a new identity column placed
// right after I_r; the new element gets label r + 1 and every label above r
// moves up by one.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bmat/isomorphism.hpp"
#include "bmat/matroid.hpp"
#include "bmat/minor.hpp"
#include "bmat/parallel.hpp"

namespace bmat {

enum class GrowthKind { Extension, Coextension };

inline const char* to_string(GrowthKind k) { return k == GrowthKind::Extension ? "extension" : "coextension"; }

struct GrowthStep {
  GrowthKind kind = GrowthKind::Extension;
  BitVector vector;
  Matroid parent;
  Matroid child;
  Label new_label = 0;
};

namespace detail {

/// All vectors of `len` coordinates, weight >= 2, not in `existing`, ascending.
inline std::vector<BitVector> vectors_avoiding(std::size_t len, const std::vector<BitVector>& existing) {
  if (len > 24) throw InputError("candidate space too large to enumerate");
  std::vector<BitVector> out;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << len); ++w) {
    if (std::popcount(w) < 2) continue;
    auto v = BitVector::from_word(len, w);
    if (std::find(existing.begin(), existing.end(), v) != existing.end()) continue;
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// New label given to the element added by a coextension.
inline Label coextension_label(const Matroid& m) { return static_cast<Label>(m.rank()) + 1; }

/// Where label `l` of m ends up after a coextension.
inline Label shift_for_coextension(const Matroid& m, Label l) {
  return l > static_cast<Label>(m.rank()) ? l + 1 : l;
}

inline Subset shift_for_coextension(const Matroid& m, const Subset& s) {
  Subset out;
  for (Label l : s) out.insert(shift_for_coextension(m, l));
  return out;
}

/// Columns that give simple single-element extensions: nonzero and not
/// already present. Since [I_r | D] holds every unit vector this is the same
/// as "at least two ones and not a column of D".
inline std::vector<BitVector> extension_candidates(const Matroid& m) {
  std::vector<BitVector> existing;
  for (std::size_t p = 0; p < m.size(); ++p) existing.push_back(m.column_vector(p));
  return detail::vectors_avoiding(m.rank(), existing);
}

/// Rows that give cosimple single-element coextensions: at least two ones
/// and not already a row of D.
inline std::vector<BitVector> coextension_candidates(const Matroid& m) {
  std::vector<BitVector> existing;
  for (std::size_t i = 0; i < m.rank(); ++i) existing.push_back(m.d_row(i));
  return detail::vectors_avoiding(m.corank(), existing);
}

inline Matroid extend(const Matroid& m, const BitVector& col) {
  if (col.size() != m.rank()) throw InputError("extension column must have r coordinates");
  if (col.weight() < 2) throw InputError("extension column " + col.to_bracket() + " has fewer than two ones");
  for (std::size_t p = 0; p < m.size(); ++p)
    if (m.column_vector(p) == col) throw InputError("extension column " + col.to_bracket() + " is already present");
  auto cols = m.columns();
  cols.push_back(col.to_word());
  auto labels = m.labels();
  labels.push_back(m.max_label() + 1);
  return Matroid::from_standard_columns(m.rank(), std::move(cols), std::move(labels));
}

inline Matroid coextend(const Matroid& m, const BitVector& row) {
  if (row.size() != m.corank()) throw InputError("coextension row must have n - r coordinates");
  if (row.weight() < 2) throw InputError("coextension row " + row.to_bracket() + " has fewer than two ones");
  for (std::size_t i = 0; i < m.rank(); ++i)
    if (m.d_row(i) == row) throw InputError("coextension row " + row.to_bracket() + " is already present");
  std::size_t r = m.rank();
  std::vector<std::uint64_t> cols;
  std::vector<Label> labels;
  for (std::size_t i = 0; i < r; ++i) {
    cols.push_back(m.column(i));
    labels.push_back(shift_for_coextension(m, m.label(i)));
  }
  cols.push_back(std::uint64_t{1} << r);
  labels.push_back(coextension_label(m));
  for (std::size_t t = 0; t < m.corank(); ++t) {
    std::uint64_t c = m.column(r + t);
    if (row.get(t)) c |= std::uint64_t{1} << r;
    cols.push_back(c);
    labels.push_back(shift_for_coextension(m, m.label(r + t)));
  }
  return Matroid::from_standard_columns(r + 1, std::move(cols), std::move(labels));
}

inline GrowthStep grow(const Matroid& m, GrowthKind kind, const BitVector& v) {
  GrowthStep step;
  step.kind = kind;
  step.vector = v;
  step.parent = m;
  if (kind == GrowthKind::Extension) {
    step.child = extend(m, v);
    step.new_label = m.max_label() + 1;
  } else {
    step.child = coextend(m, v);
    step.new_label = coextension_label(m);
  }
  return step;
}

inline std::vector<BitVector> growth_candidates(const Matroid& m, GrowthKind kind) {
  return kind == GrowthKind::Extension ? extension_candidates(m) : coextension_candidates(m);
}

struct GrowthOptions {
  /// Children containing any of these as a minor are discarded.
  std::vector<Matroid> excluded;
  unsigned threads = 1;
};

/// Every candidate child, optionally filtered by excluded minors, grouped
/// into isomorphism classes.
inline std::vector<IsoClass> enumerate_growth_classes(const Matroid& m, GrowthKind kind,
                                                      const GrowthOptions& options = {}) {
  auto vectors = growth_candidates(m, kind);
  std::vector<std::optional<Candidate>> slots(vectors.size());
  ExcludedMinorFilter filter(options.excluded);
  parallel_for(vectors.size(), options.threads, [&](std::size_t i) {
    auto child = kind == GrowthKind::Extension ? extend(m, vectors[i]) : coextend(m, vectors[i]);
    if (filter.size() == 0 || filter.in_class(child)) slots[i] = Candidate{vectors[i], std::move(child)};
  });
  std::vector<Candidate> kept;
  for (auto& s : slots)
    if (s) kept.push_back(std::move(*s));
  return partition_into_classes(kept, options.threads);
}

enum class RowKind { AppendedParentRow, IdentityRow, InSeriesRow, Outside };

inline const char* to_string(RowKind k) {
  switch (k) {
    case RowKind::AppendedParentRow: return "appended-parent-row";
    case RowKind::IdentityRow: return "identity-row";
    case RowKind::InSeriesRow: return "in-series-row";
    case RowKind::Outside: return "outside";
  }
  return "unknown";
}

/// Sorts a coextension row of a single-element extension `type_one` of
/// `parent` (new element `e_label`) into the three row shapes:
///   - the row minus its e-coordinate is itself a coextension row of parent;
///   - the row minus its e-coordinate is a unit vector and the e-coordinate is 1;
///   - the row is a row of type_one's D with the e-coordinate flipped.
/// Anything else is reported as Outside.
inline RowKind classify_second_step_row(const Matroid& type_one, const Matroid& parent, Label e_label,
                                        const BitVector& row) {
  if (remove(type_one, {e_label}, {}) != parent)
    throw InputError("type_one with e deleted is not the parent matroid");
  std::size_t e_pos = type_one.position(e_label);
  if (e_pos < type_one.rank()) throw InputError("e must be a non-basis element");
  auto candidates = coextension_candidates(type_one);
  if (std::find(candidates.begin(), candidates.end(), row) == candidates.end())
    throw InputError("row " + row.to_bracket() + " is not a cosimple coextension row");

  std::size_t e_coord = e_pos - type_one.rank();
  BitVector rest = row.without(e_coord);
  bool last = row.get(e_coord);

  auto parent_rows = coextension_candidates(parent);
  if (std::find(parent_rows.begin(), parent_rows.end(), rest) != parent_rows.end()) return RowKind::AppendedParentRow;
  if (rest.weight() == 1 && last) return RowKind::IdentityRow;
  for (std::size_t i = 0; i < type_one.rank(); ++i) {
    BitVector d = type_one.d_row(i);
    if (d.without(e_coord) == rest && d.get(e_coord) != last) return RowKind::InSeriesRow;
  }
  return RowKind::Outside;
}

}  // namespace bmat

#endif  // BMAT_EXTENSION_HPP
