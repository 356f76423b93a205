#ifndef BMAT_CATALOG_HPP
#define BMAT_CATALOG_HPP

// Named binary matroids.
//
// Matrix entries are transcribed [I_r | D] displays with labels 1..n. Derived
// entries are built at first use from the generators that define them, so a
// transcription error in a parent shows up in every child's tests.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bmat/errors.hpp"
#include "bmat/extension.hpp"
#include "bmat/gf2.hpp"
#include "bmat/matroid.hpp"

namespace bmat {

enum class Provenance { PaperMatrix, DerivedConstruction };

struct CatalogEntry {
  std::string name;
  Matroid matroid;
  Provenance provenance = Provenance::PaperMatrix;
  std::string notes;
};

namespace detail {

/// [I_r | D] from the rows of D.
inline Matroid standard_matrix(const std::vector<std::string>& d_rows) {
  std::size_t r = d_rows.size();
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < r; ++i) {
    std::string row(r, '0');
    row[i] = '1';
    rows.push_back(row + d_rows[i]);
  }
  return make_matroid(BitMatrix::from_strings(rows));
}

/// Cycle matroid of a graph on vertices 0..v-1 from its vertex-edge incidence
/// matrix with the last vertex's row dropped. Edge i gets label i + 1.
inline Matroid cycle_matroid(int vertices, const std::vector<std::pair<int, int>>& edges) {
  BitMatrix incidence(static_cast<std::size_t>(vertices - 1), edges.size());
  for (std::size_t j = 0; j < edges.size(); ++j) {
    auto [u, w] = edges[j];
    if (u < vertices - 1) incidence.set(static_cast<std::size_t>(u), j);
    if (w < vertices - 1) incidence.set(static_cast<std::size_t>(w), j);
  }
  return make_matroid(incidence);
}

/// K5 with edges in lexicographic order 01, 02, 03, 04, 12, 13, 14, 23, 24, 34.
inline Matroid k5() {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 5; ++u)
    for (int w = u + 1; w < 5; ++w) edges.emplace_back(u, w);
  return cycle_matroid(5, edges);
}

/// K3,3 with parts {0,1,2} and {3,4,5}; edge (i, 3 + j) is label 3i + j + 1.
inline Matroid k33() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) edges.emplace_back(i, 3 + j);
  return cycle_matroid(6, edges);
}

inline std::map<std::string, CatalogEntry> build_catalog() {
  std::map<std::string, CatalogEntry> cat;
  auto paper = [&](const std::string& name, const std::vector<std::string>& d_rows, std::string notes = {}) {
    cat[name] = CatalogEntry{name, standard_matrix(d_rows), Provenance::PaperMatrix, std::move(notes)};
  };
  auto derived = [&](const std::string& name, Matroid m, std::string notes) {
    cat[name] = CatalogEntry{name, std::move(m), Provenance::DerivedConstruction, std::move(notes)};
  };
  auto m = [&](const std::string& name) -> const Matroid& { return cat.at(name).matroid; };
  auto v = [](const char* bracket) { return BitVector::from_bracket(bracket); };

  paper("F7", {"0111", "1011", "1101"}, "Fano plane PG(2,2)");
  paper("F7*", {"011", "101", "110", "111"});
  paper("AG(3,2)", {"0111", "1011", "1101", "1110"}, "self-dual");
  paper("S8", {"0111", "1011", "1101", "1111"}, "self-dual");
  paper("P9", {"01111", "10111", "11010", "11110"});
  paper("S10", {"011111", "101110", "110100", "111101"}, "internally 4-connected");
  paper("E4", {"01111", "10111", "11010", "11110", "01001"}, "self-dual");
  paper("E5", {"01111", "10111", "11010", "11110", "10100"}, "self-dual, internally 4-connected");
  paper("T12", {"110001", "100011", "000111", "001110", "011100", "111000"}, "self-dual, 4-connected");
  paper("PG(3,2)", {"00001111111", "01110001111", "10110110011", "11011010101"}, "every nonzero vector of GF(2)^4");

  derived("P9*", dual(m("P9")), "dual of P9");
  derived("S10*", dual(m("S10")), "dual of S10");
  derived("Z4", extend(m("S8"), v("[1110]")), "S8 extended by column [1110]");
  derived("Z4*", dual(m("Z4")), "dual of Z4");
  derived("D1", extend(m("P9"), v("[1110]")), "P9 extended by column [1110]");
  derived("D3", extend(m("P9"), v("[0011]")), "P9 extended by column [0011]");
  derived("E1", coextend(m("P9"), v("[11000]")), "P9 coextended by row [11000]");
  derived("E2", coextend(m("P9"), v("[11011]")), "P9 coextended by row [11011]");
  derived("E3", coextend(m("P9"), v("[11001]")), "P9 coextended by row [11001]");
  derived("E6", coextend(m("P9"), v("[00101]")), "P9 coextended by row [00101]");
  derived("E6*", coextend(m("P9"), v("[00111]")), "P9 coextended by row [00111]");
  derived("E7", coextend(m("P9"), v("[00011]")), "P9 coextended by row [00011]");
  derived("T12/e", extend(m("E4"), v("[11011]")), "E4 extended by column [11011]");
  derived("T12\\e", coextend(m("E4"), v("[01010]")), "E4 coextended by row [01010]");
  derived("M(K5)", k5(), "cycle matroid of K5, edges in lexicographic vertex order");
  derived("M*(K5)", dual(m("M(K5)")), "dual of M(K5)");
  derived("M(K3,3)", k33(), "cycle matroid of K3,3, edge (a_i, b_j) labelled 3i + j + 1");
  derived("M*(K3,3)", dual(m("M(K3,3)")), "dual of M(K3,3)");
  return cat;
}

inline const std::map<std::string, CatalogEntry>& catalog_registry() {
  static const std::map<std::string, CatalogEntry> registry = build_catalog();
  return registry;
}

}  // namespace detail

namespace catalog {

inline const CatalogEntry& get(const std::string& name) {
  const auto& reg = detail::catalog_registry();
  auto it = reg.find(name);
  if (it == reg.end()) throw InputError("unknown catalog matroid: " + name);
  return it->second;
}

inline const Matroid& matroid(const std::string& name) { return get(name).matroid; }

/// Catalog names in sorted order.
inline std::vector<std::string> list() {
  std::vector<std::string> names;
  for (const auto& [name, entry] : detail::catalog_registry()) names.push_back(name);
  return names;
}

}  // namespace catalog

}  // namespace bmat

#endif  // BMAT_CATALOG_HPP
