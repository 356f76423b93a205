#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "bmat/catalog.hpp"
#include "bmat/connectivity.hpp"
#include "bmat/extension.hpp"
#include "bmat/isomorphism.hpp"
#include "oracles.hpp"

using namespace bmat;

namespace {

BitVector v(const char* s) { return BitVector::from_bracket(s); }

std::vector<std::string> brackets(const std::vector<BitVector>& vs) {
  std::vector<std::string> out;
  for (const auto& x : vs) out.push_back(x.to_bracket());
  return out;
}

/// Nonzero vectors of GF(2)^len that are not columns of m, by exhaustion.
std::size_t brute_extension_count(const Matroid& m) {
  std::set<std::uint64_t> present(m.columns().begin(), m.columns().end());
  std::size_t count = 0;
  for (std::uint64_t w = 1; w < (std::uint64_t{1} << m.rank()); ++w)
    if (!present.count(w)) ++count;
  return count;
}

/// Contract the element a coextension added and move labels back down.
Matroid undo_coextension(const Matroid& child, const Matroid& parent) {
  Label f = coextension_label(parent);
  auto minor = remove(child, {}, {f});
  std::vector<Label> labels;
  for (Label l : minor.labels()) labels.push_back(l > f ? l - 1 : l);
  return relabel(minor, labels);
}

bool some_single_removal_matches(const Matroid& big, const Matroid& target, bool contract) {
  for (Label l : big.labels()) {
    auto minor = contract ? remove(big, {}, {l}) : remove(big, {l}, {});
    if (are_isomorphic(minor, target)) return true;
  }
  return false;
}

std::vector<std::vector<std::string>> class_lists(const std::vector<IsoClass>& classes) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : classes) out.push_back(brackets(c.members));
  return out;
}

}  // namespace

TEST(ExtensionCandidates, F7Star) {
  const auto& m = catalog::matroid("F7*");
  auto c = extension_candidates(m);
  EXPECT_EQ(c.size(), 8u);
  EXPECT_EQ(c.size(), brute_extension_count(m));
  EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
}

TEST(ExtensionCandidates, F7IsFull) { EXPECT_TRUE(extension_candidates(catalog::matroid("F7")).empty()); }

TEST(ExtensionCandidates, P9) {
  // Rank 4: 15 nonzero vectors less 4 unit and 5 D columns.
  const auto& p9 = catalog::matroid("P9");
  EXPECT_EQ(extension_candidates(p9).size(), 6u);
  EXPECT_EQ(brute_extension_count(p9), 6u);
}

TEST(ExtensionCandidates, CountFormula) {
  for (const auto& name : catalog::list()) {
    const auto& m = catalog::matroid(name);
    if (!is_simple(m)) continue;
    std::size_t non_unit = 0;
    for (std::size_t p = m.rank(); p < m.size(); ++p)
      if (std::popcount(m.column(p)) >= 2) ++non_unit;
    std::size_t expected = (std::size_t{1} << m.rank()) - 1 - m.rank() - non_unit;
    EXPECT_EQ(extension_candidates(m).size(), expected) << name;
    EXPECT_EQ(extension_candidates(m).size(), brute_extension_count(m)) << name;
  }
}

TEST(Extend, F7StarToAG32) { EXPECT_TRUE(are_isomorphic(extend(catalog::matroid("F7*"), v("[1110]")), catalog::matroid("AG(3,2)"))); }

TEST(Extend, S8ToZ4) {
  auto z4 = extend(catalog::matroid("S8"), v("[1110]"));
  EXPECT_TRUE(are_isomorphic(z4, catalog::matroid("Z4")));
  EXPECT_EQ(z4.label(8), 9);
}

TEST(Extend, E4ToT12ContractE) {
  auto m = extend(catalog::matroid("E4"), v("[11011]"));
  EXPECT_TRUE(some_single_removal_matches(catalog::matroid("T12"), m, true));
}

TEST(Extend, InvalidColumns) {
  const auto& p9 = catalog::matroid("P9");
  EXPECT_THROW(extend(p9, v("[0100]")), InputError);
  EXPECT_THROW(extend(p9, v("[0111]")), InputError);  // column 5 of P9
  EXPECT_THROW(extend(p9, v("[011]")), InputError);
}

TEST(Extend, RemoveRestoresParent) {
  for (const auto& name : catalog::list()) {
    const auto& m = catalog::matroid(name);
    for (const auto& col : extension_candidates(m)) {
      auto child = extend(m, col);
      EXPECT_EQ(child.size(), m.size() + 1);
      EXPECT_EQ(remove(child, {m.max_label() + 1}, {}), m) << name << " " << col.to_bracket();
    }
  }
}

TEST(CoextensionCandidates, P9) { EXPECT_EQ(coextension_candidates(catalog::matroid("P9")).size(), 22u); }

TEST(CoextensionCandidates, F7MatchesDual) {
  const auto& f7 = catalog::matroid("F7");
  EXPECT_EQ(coextension_candidates(f7), extension_candidates(dual(f7)));
  EXPECT_EQ(coextension_candidates(f7).size(), 8u);
}

TEST(CoextensionCandidates, E4HasRowForC) {
  auto c = coextension_candidates(catalog::matroid("E4"));
  EXPECT_NE(std::find(c.begin(), c.end(), v("[11000]")), c.end());
}

TEST(Coextend, E4ToT12DeleteE) {
  auto m = coextend(catalog::matroid("E4"), v("[01010]"));
  EXPECT_TRUE(some_single_removal_matches(catalog::matroid("T12"), m, false));
}

TEST(Coextend, P9ToE5) { EXPECT_TRUE(are_isomorphic(coextend(catalog::matroid("P9"), v("[01011]")), catalog::matroid("E5"))); }

TEST(Coextend, LabelShift) {
  const auto& p9 = catalog::matroid("P9");
  auto m = coextend(p9, v("[11000]"));
  EXPECT_EQ(m.rank(), 5u);
  EXPECT_EQ(m.labels(), (std::vector<Label>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
  EXPECT_EQ(shift_for_coextension(p9, Subset{1, 2, 5, 6}), (Subset{1, 2, 6, 7}));
  EXPECT_EQ(coextension_label(p9), 5);
}

TEST(Coextend, NewElementCocircuit) {
  // The new element with the elements marked by the row forms a cocircuit.
  const auto& e4 = catalog::matroid("E4");
  for (const auto& row : coextension_candidates(e4)) {
    auto child = coextend(e4, row);
    Subset expected{coextension_label(e4)};
    for (std::size_t t = 0; t < row.size(); ++t)
      if (row.get(t)) expected.insert(shift_for_coextension(e4, e4.label(e4.rank() + t)));
    auto cos = cocircuits(child);
    EXPECT_NE(std::find(cos.begin(), cos.end(), expected), cos.end()) << row.to_bracket();
  }
}

TEST(Coextend, ContractRestoresParent) {
  for (const auto& name : catalog::list()) {
    const auto& m = catalog::matroid(name);
    for (const auto& row : coextension_candidates(m)) {
      auto child = coextend(m, row);
      EXPECT_EQ(child.rank(), m.rank() + 1);
      EXPECT_EQ(undo_coextension(child, m), m) << name << " " << row.to_bracket();
    }
  }
}

TEST(Coextend, InvalidRows) {
  const auto& p9 = catalog::matroid("P9");
  EXPECT_THROW(coextend(p9, v("[01000]")), InputError);
  EXPECT_THROW(coextend(p9, v("[01111]")), InputError);  // first row of P9's D
}

TEST(GrowthClasses, P9Extensions) {
  auto classes = enumerate_growth_classes(catalog::matroid("P9"), GrowthKind::Extension);
  ASSERT_EQ(classes.size(), 3u);
  auto lists = class_lists(classes);
  EXPECT_EQ(lists[0], (std::vector<std::string>{"[0011]"}));
  EXPECT_EQ(lists[1], (std::vector<std::string>{"[0101]", "[0110]", "[1001]", "[1010]"}));
  EXPECT_EQ(lists[2], (std::vector<std::string>{"[1110]"}));
  EXPECT_TRUE(are_isomorphic(classes[0].representative, catalog::matroid("D3")));
  EXPECT_TRUE(are_isomorphic(classes[1].representative, catalog::matroid("S10")));
  EXPECT_TRUE(are_isomorphic(classes[2].representative, catalog::matroid("D1")));
}

TEST(GrowthClasses, E5ExtensionsFromP9Row) {
  // The generator lists read off E5 presented as P9 coextended by [01011].
  auto e5 = coextend(catalog::matroid("P9"), v("[01011]"));
  auto classes = enumerate_growth_classes(e5, GrowthKind::Extension);
  ASSERT_EQ(classes.size(), 7u);
  auto lists = class_lists(classes);
  std::sort(lists.begin(), lists.end());
  std::vector<std::vector<std::string>> expected = {
      {"[00011]", "[00101]", "[10010]", "[10100]"},
      {"[00110]", "[10001]"},
      {"[00111]", "[10011]", "[10101]", "[10110]"},
      {"[01001]", "[01100]", "[01111]", "[11101]"},
      {"[01010]", "[11000]", "[11011]", "[11110]"},
      {"[01011]", "[11100]"},
      {"[01101]"},
  };
  EXPECT_EQ(lists, expected);
}

TEST(GrowthClasses, DisplayedE5Multiplicities) {
  auto classes = enumerate_growth_classes(catalog::matroid("E5"), GrowthKind::Extension);
  ASSERT_EQ(classes.size(), 7u);
  std::multiset<std::size_t> sizes;
  for (const auto& c : classes) sizes.insert(c.members.size());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{4, 2, 4, 4, 4, 2, 1}));
}

TEST(GrowthClasses, AG32HasOnlyZ4) {
  auto classes = enumerate_growth_classes(catalog::matroid("AG(3,2)"), GrowthKind::Extension);
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_TRUE(are_isomorphic(classes[0].representative, catalog::matroid("Z4")));
}

TEST(GrowthClasses, ExcludedMinorFilter) {
  GrowthOptions o;
  o.excluded = {catalog::matroid("S10"), catalog::matroid("S10*")};
  auto classes = enumerate_growth_classes(catalog::matroid("P9"), GrowthKind::Extension, o);
  auto lists = class_lists(classes);
  EXPECT_EQ(lists, (std::vector<std::vector<std::string>>{{"[0011]"}, {"[1110]"}}));
}

TEST(GrowthClasses, DualityOfKeys) {
  for (const auto& name : {"F7", "S8", "P9", "E4", "AG(3,2)"}) {
    const auto& m = catalog::matroid(name);
    std::set<std::string> co, dualised;
    for (const auto& c : enumerate_growth_classes(m, GrowthKind::Coextension)) co.insert(canonical_key(dual(c.representative)));
    for (const auto& c : enumerate_growth_classes(dual(m), GrowthKind::Extension)) dualised.insert(c.canonical_key);
    EXPECT_EQ(co, dualised) << name;
  }
}

TEST(GrowthClasses, ChildrenOfThreeConnectedStayThreeConnected) {
  for (const auto& name : catalog::list()) {
    const auto& m = catalog::matroid(name);
    if (m.size() > 12 || !is_n_connected(m, 3)) continue;
    for (auto kind : {GrowthKind::Extension, GrowthKind::Coextension})
      for (const auto& g : growth_candidates(m, kind))
        EXPECT_TRUE(is_n_connected(grow(m, kind, g).child, 3)) << name << " " << g.to_bracket();
  }
}

TEST(Grow, StepFields) {
  const auto& p9 = catalog::matroid("P9");
  auto e = grow(p9, GrowthKind::Extension, v("[1110]"));
  EXPECT_EQ(e.new_label, 10);
  EXPECT_EQ(e.child.size(), 10u);
  auto c = grow(p9, GrowthKind::Coextension, v("[11000]"));
  EXPECT_EQ(c.new_label, 5);
  EXPECT_EQ(c.child.rank(), 5u);
  EXPECT_EQ(c.parent, p9);
}

TEST(SecondStepRow, TableRows) {
  const auto& e4 = catalog::matroid("E4");
  auto a = extend(e4, v("[10110]"));
  EXPECT_EQ(classify_second_step_row(a, e4, 11, v("[001101]")), RowKind::AppendedParentRow);
  EXPECT_EQ(classify_second_step_row(a, e4, 11, v("[110100]")), RowKind::InSeriesRow);
  EXPECT_EQ(classify_second_step_row(a, e4, 11, v("[001001]")), RowKind::IdentityRow);
}

TEST(SecondStepRow, TaxonomyCoversEveryRow) {
  const auto& e4 = catalog::matroid("E4");
  for (const auto& col : {"[00110]", "[10110]", "[01111]", "[11100]", "[11000]"}) {
    auto t = extend(e4, v(col));
    for (const auto& row : coextension_candidates(t))
      EXPECT_NE(classify_second_step_row(t, e4, 11, row), RowKind::Outside) << col << " " << row.to_bracket();
  }
}

TEST(SecondStepRow, Preconditions) {
  const auto& e4 = catalog::matroid("E4");
  auto a = extend(e4, v("[10110]"));
  EXPECT_THROW(classify_second_step_row(a, e4, 11, v("[10111]")), InputError);  // row of a's D
  EXPECT_THROW(classify_second_step_row(a, catalog::matroid("P9"), 11, v("[001101]")), InputError);
}
