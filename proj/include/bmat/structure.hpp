#ifndef BMAT_STRUCTURE_HPP
#define BMAT_STRUCTURE_HPP

// Splitter checks and the decomposer engine.
//
// A decomposer check takes a simple, cosimple matroid N with an exact
// k-separation (A, B) and walks every labelled single-element extension and
// coextension of N that stays in the class, plus every cosimple coextension
// of those extensions and every simple extension of those coextensions.
// Candidates are never merged up to isomorphism here: each labelled child is
// its own record.

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bmat/connectivity.hpp"
#include "bmat/errors.hpp"
#include "bmat/extension.hpp"
#include "bmat/matroid.hpp"
#include "bmat/minor.hpp"
#include "bmat/parallel.hpp"

namespace bmat {

struct SplitterResult {
  bool is_splitter = false;
  /// Children that avoid every excluded minor.
  std::vector<GrowthStep> counterexamples;
};

/// Whether every simple single-element extension and cosimple single-element
/// coextension of n has an excluded minor.
inline SplitterResult is_splitter(const Matroid& n, const std::vector<Matroid>& excluded, unsigned threads = 1) {
  if (!is_n_connected(n, 3)) throw HypothesisError(HypothesisKind::NotThreeConnected, "splitter candidate");
  ExcludedMinorFilter filter(excluded);
  if (!filter.in_class(n)) throw HypothesisError(HypothesisKind::NotInClass, "splitter candidate has an excluded minor");

  std::vector<std::pair<GrowthKind, BitVector>> jobs;
  for (auto kind : {GrowthKind::Extension, GrowthKind::Coextension})
    for (auto& v : growth_candidates(n, kind)) jobs.emplace_back(kind, v);
  std::vector<std::optional<GrowthStep>> slots(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t i) {
    auto step = grow(n, jobs[i].first, jobs[i].second);
    if (filter.in_class(step.child)) slots[i] = std::move(step);
  });
  SplitterResult out;
  for (auto& s : slots)
    if (s) out.counterexamples.push_back(std::move(*s));
  out.is_splitter = out.counterexamples.empty();
  return out;
}

enum class Verdict { ExcludedMinor, SetAside, Good, Bad, Bridging };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::ExcludedMinor: return "excluded-minor";
    case Verdict::SetAside: return "set-aside";
    case Verdict::Good: return "good";
    case Verdict::Bad: return "bad";
    case Verdict::Bridging: return "bridging";
  }
  return "unknown";
}

/// Which inducing condition a candidate met.
enum class Condition { None, OneStep, CaseA, CaseB, CaseC, CaseD };

inline const char* to_string(Condition c) {
  switch (c) {
    case Condition::None: return "none";
    case Condition::OneStep: return "one-step";
    case Condition::CaseA: return "iii-a";
    case Condition::CaseB: return "iii-b";
    case Condition::CaseC: return "iii-c";
    case Condition::CaseD: return "iii-d";
  }
  return "unknown";
}

/// Outcome of a two-element child M with respect to one side A.
///
/// T = M / f is the single-element extension of N and P = M \ e the
/// single-element coextension.
struct SideOutcome {
  Verdict verdict = Verdict::Bad;
  Condition condition = Condition::None;
  Subset side;  // A in M's labels
  int lambda_t_a = 0;
  int lambda_t_ae = 0;
  int lambda_p_a = 0;
  int lambda_p_af = 0;
  int lambda_m_ae = 0;
  int lambda_m_af = 0;
  int lambda_m_aef = 0;
  int bridging = 0;
  /// The set whose lambda value certified a good verdict.
  std::optional<Subset> certificate;
  /// {e, f, g} triangle or triad with g in A, when one exists.
  std::optional<Subset> triangle_or_triad;
};

/// Evaluates the two-step inducing conditions for child M with new elements
/// e (extension) and f (coextension); `a` is given in M's labels.
inline SideOutcome evaluate_two_step_side(const Matroid& m, Label e, Label f, const Subset& a, int k) {
  SideOutcome out;
  out.side = a;
  Matroid t = remove(m, {}, {f});
  Matroid p = remove(m, {e}, {});
  Subset ae = a, af = a, aef = a;
  ae.insert(e);
  af.insert(f);
  aef.insert(e);
  aef.insert(f);
  out.lambda_t_a = lambda(t, a);
  out.lambda_t_ae = lambda(t, ae);
  out.lambda_p_a = lambda(p, a);
  out.lambda_p_af = lambda(p, af);
  out.lambda_m_ae = lambda(m, ae);
  out.lambda_m_af = lambda(m, af);
  out.lambda_m_aef = lambda(m, aef);

  ElemMask am = m.mask(a);
  ElemMask ef = m.mask(Subset{e, f});
  auto find_tri = [&](const std::vector<ElemMask>& sets) -> std::optional<Subset> {
    for (auto s : sets)
      if (std::popcount(s) == 3 && (s & ef) == ef && (s & ~ef & am) != 0) return m.subset(s);
    return std::nullopt;
  };
  out.triangle_or_triad = find_tri(circuit_masks(m));
  if (!out.triangle_or_triad) out.triangle_or_triad = find_tri(cocircuit_masks(m));
  bool tri = out.triangle_or_triad.has_value();

  int target = k - 1;
  bool t_a = out.lambda_t_a == target;
  bool t_ae = out.lambda_t_ae == target;
  bool p_a = out.lambda_p_a == target;
  bool p_af = out.lambda_p_af == target;

  auto good = [&](Condition c, std::optional<Subset> cert) {
    out.verdict = Verdict::Good;
    out.condition = c;
    out.certificate = std::move(cert);
  };
  if (t_a && p_a) {
    good(Condition::CaseA, a);
  } else if (t_a && p_af && (out.lambda_m_af == target || tri)) {
    good(Condition::CaseB, out.lambda_m_af == target ? std::optional<Subset>(af) : std::nullopt);
  } else if (t_ae && p_a && (out.lambda_m_ae == target || tri)) {
    good(Condition::CaseC, out.lambda_m_ae == target ? std::optional<Subset>(ae) : std::nullopt);
  } else if (t_ae && p_af && tri) {
    good(Condition::CaseD, std::nullopt);
  }

  Subset b;
  for (Label l : m.labels())
    if (!aef.count(l)) b.insert(l);
  out.bridging = bridging_value(m, a, b);
  if (out.verdict != Verdict::Good) out.verdict = out.bridging >= k ? Verdict::Bridging : Verdict::Bad;
  return out;
}

/// One-step child with respect to one side.
struct OneStepSide {
  Subset side;  // A in the child's labels
  int lambda_a = 0;
  int lambda_ax = 0;
  bool satisfied = false;
};

struct OneStepRecord {
  GrowthKind kind = GrowthKind::Extension;
  BitVector vector;
  Label new_label = 0;
  Verdict status = Verdict::Good;  // ExcludedMinor, SetAside, Good (in class and satisfied) or Bad
  std::vector<OneStepSide> sides;
  /// For two sides: whenever lambda(A_i) != k - 1, lambda(A_j) = k - 1.
  bool coupling_ok = true;
};

struct TwoStepRecord {
  /// Extension: a cosimple coextension of a simple extension of N.
  /// Coextension: a simple extension of a cosimple coextension of N.
  GrowthKind first_kind = GrowthKind::Extension;
  BitVector first;
  BitVector second;
  Label e = 0;
  Label f = 0;
  Verdict status = Verdict::Good;  // ExcludedMinor, SetAside, or Good when in class
  std::vector<SideOutcome> sides;
  /// Row shape relative to its parent (coextension-of-extension records only).
  std::optional<RowKind> row_kind;
};

enum class Overall { Induced, InducedOneOfTwo, Failed };

inline const char* to_string(Overall o) {
  switch (o) {
    case Overall::Induced: return "induced";
    case Overall::InducedOneOfTwo: return "induced-one-of-two";
    case Overall::Failed: return "failed";
  }
  return "unknown";
}

struct DecomposerReport {
  Matroid target;
  std::vector<Subset> sides;
  int k = 3;
  std::vector<OneStepRecord> one_step;
  std::vector<TwoStepRecord> two_step;
  Overall overall = Overall::Failed;
  std::vector<std::string> notes;
};

struct DecomposerOptions {
  std::vector<Matroid> excluded;
  /// Children containing one of these as a minor are recorded as set aside
  /// and take no part in the verdict.
  std::vector<Matroid> set_aside;
  /// Also walk simple extensions of the cosimple coextensions.
  bool dual_branch = true;
  unsigned threads = 1;
};

namespace detail {

inline void check_side_hypotheses(const Matroid& n, const Subset& a, int k) {
  Separation sep;
  try {
    sep = classify_separation(n, a, k);
  } catch (const NotASeparationError& err) {
    throw HypothesisError(HypothesisKind::NotExact, err.what());
  }
  if (!sep.exact) throw HypothesisError(HypothesisKind::NotExact, "separation is not exact");
  auto flags = is_union_of_circuits_and_cocircuits(n, a);
  if (!flags.union_of_circuits) throw HypothesisError(HypothesisKind::NotUnionOfCircuits, "side is not a union of circuits");
  if (!flags.union_of_cocircuits)
    throw HypothesisError(HypothesisKind::NotUnionOfCocircuits, "side is not a union of cocircuits");
}

inline void check_simple_cosimple(const Matroid& n) {
  auto s = simplicity(n);
  if (!s.is_simple) throw HypothesisError(HypothesisKind::NotSimple, "matroid is not simple");
  if (!s.is_cosimple) throw HypothesisError(HypothesisKind::NotCosimple, "matroid is not cosimple");
}

class Classifier {
 public:
  explicit Classifier(const DecomposerOptions& options) : excluded_(options.excluded), set_aside_(options.set_aside) {}

  Verdict status(const Matroid& m) const {
    if (!excluded_.in_class(m)) return Verdict::ExcludedMinor;
    if (set_aside_.size() > 0 && !set_aside_.in_class(m)) return Verdict::SetAside;
    return Verdict::Good;
  }

 private:
  ExcludedMinorFilter excluded_;
  ExcludedMinorFilter set_aside_;
};

inline DecomposerReport run_decomposer(const Matroid& n, const std::vector<Subset>& sides, int k,
                                       const DecomposerOptions& options) {
  DecomposerReport report;
  report.target = n;
  report.sides = sides;
  report.k = k;
  Classifier classify(options);
  int target = k - 1;

  // Single-element children.
  std::vector<std::pair<GrowthKind, BitVector>> jobs;
  for (auto kind : {GrowthKind::Extension, GrowthKind::Coextension})
    for (auto& v : growth_candidates(n, kind)) jobs.emplace_back(kind, v);
  report.one_step.resize(jobs.size());
  std::vector<Matroid> children(jobs.size());
  parallel_for(jobs.size(), options.threads, [&](std::size_t i) {
    auto [kind, vec] = jobs[i];
    auto step = grow(n, kind, vec);
    OneStepRecord rec;
    rec.kind = kind;
    rec.vector = vec;
    rec.new_label = step.new_label;
    rec.status = classify.status(step.child);
    if (rec.status == Verdict::Good) {
      for (const auto& a : sides) {
        OneStepSide s;
        s.side = kind == GrowthKind::Extension ? a : shift_for_coextension(n, a);
        Subset ax = s.side;
        ax.insert(step.new_label);
        s.lambda_a = lambda(step.child, s.side);
        s.lambda_ax = lambda(step.child, ax);
        s.satisfied = s.lambda_a == target || s.lambda_ax == target;
        rec.sides.push_back(std::move(s));
      }
      if (!std::all_of(rec.sides.begin(), rec.sides.end(), [](const OneStepSide& s) { return s.satisfied; }))
        rec.status = Verdict::Bad;
      // A side that needs the new element must be matched by the other side
      // holding without it.
      for (std::size_t x = 0; x < rec.sides.size(); ++x)
        for (std::size_t y = 0; y < rec.sides.size(); ++y)
          if (x != y && rec.sides[x].lambda_a != target && rec.sides[y].lambda_a != target) rec.coupling_ok = false;
    }
    report.one_step[i] = std::move(rec);
    children[i] = std::move(step.child);
  });

  // Two-element children grown from the in-class single-element ones.
  struct TwoJob {
    std::size_t parent;
    BitVector second;
  };
  std::vector<TwoJob> two_jobs;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (report.one_step[i].status == Verdict::ExcludedMinor || report.one_step[i].status == Verdict::SetAside) continue;
    auto kind = jobs[i].first;
    if (kind == GrowthKind::Coextension && !options.dual_branch) continue;
    auto second_kind = kind == GrowthKind::Extension ? GrowthKind::Coextension : GrowthKind::Extension;
    for (auto& v : growth_candidates(children[i], second_kind)) two_jobs.push_back({i, v});
  }
  report.two_step.resize(two_jobs.size());
  parallel_for(two_jobs.size(), options.threads, [&](std::size_t j) {
    const auto& job = two_jobs[j];
    const Matroid& first_child = children[job.parent];
    auto first_kind = jobs[job.parent].first;
    TwoStepRecord rec;
    rec.first_kind = first_kind;
    rec.first = jobs[job.parent].second;
    rec.second = job.second;
    Matroid m;
    std::vector<Subset> shifted;
    if (first_kind == GrowthKind::Extension) {
      Label e = report.one_step[job.parent].new_label;
      m = coextend(first_child, job.second);
      rec.f = coextension_label(first_child);
      rec.e = shift_for_coextension(first_child, e);
      for (const auto& a : sides) shifted.push_back(shift_for_coextension(first_child, a));
      rec.row_kind = classify_second_step_row(first_child, n, e, job.second);
    } else {
      m = extend(first_child, job.second);
      rec.f = report.one_step[job.parent].new_label;
      rec.e = first_child.max_label() + 1;
      for (const auto& a : sides) shifted.push_back(shift_for_coextension(n, a));
    }
    rec.status = classify.status(m);
    if (rec.status == Verdict::Good)
      for (const auto& a : shifted) rec.sides.push_back(evaluate_two_step_side(m, rec.e, rec.f, a, k));
    report.two_step[j] = std::move(rec);
  });
  return report;
}

}  // namespace detail

/// Checks the one- and two-element conditions under which the exact
/// k-separation (A, E - A) of n is induced in every class member with an
/// n-minor. Throws HypothesisError when n or A does not qualify.
inline DecomposerReport theorem21_check(const Matroid& n, const Subset& a, int k, const DecomposerOptions& options) {
  detail::check_simple_cosimple(n);
  detail::check_side_hypotheses(n, a, k);
  auto report = detail::run_decomposer(n, {a}, k, options);

  bool ok = true;
  for (const auto& rec : report.one_step)
    if (rec.status == Verdict::Bad) ok = false;
  for (const auto& rec : report.two_step)
    if (rec.status == Verdict::Good && rec.sides.front().verdict != Verdict::Good) ok = false;
  report.overall = ok ? Overall::Induced : Overall::Failed;
  return report;
}

/// Two-separation variant for self-dual n: every in-class child must be good
/// for at least one side, the one-step children must satisfy both sides with
/// the coupling condition, and no child may be bad for both sides.
inline DecomposerReport corollary22_check(const Matroid& n, const Subset& a1, const Subset& a2, int k,
                                          const DecomposerOptions& options) {
  detail::check_simple_cosimple(n);
  if (!are_isomorphic(n, dual(n))) throw HypothesisError(HypothesisKind::NotSelfDual, "matroid is not self-dual");
  detail::check_side_hypotheses(n, a1, k);
  detail::check_side_hypotheses(n, a2, k);
  auto report = detail::run_decomposer(n, {a1, a2}, k, options);

  bool ok = true;
  for (const auto& rec : report.one_step) {
    if (rec.status == Verdict::Bad) ok = false;
    if (rec.status == Verdict::Good && !rec.coupling_ok) {
      ok = false;
      report.notes.push_back("coupling condition fails for " + std::string(to_string(rec.kind)) + " " +
                             rec.vector.to_bracket());
    }
  }
  bool first_alone = true;
  bool second_alone = true;
  for (const auto& rec : report.two_step) {
    if (rec.status != Verdict::Good) continue;
    bool g1 = rec.sides[0].verdict == Verdict::Good;
    bool g2 = rec.sides[1].verdict == Verdict::Good;
    first_alone = first_alone && g1;
    second_alone = second_alone && g2;
    if (!g1 && !g2) {
      ok = false;
      if (rec.sides[0].verdict == Verdict::Bad && rec.sides[1].verdict == Verdict::Bad)
        report.notes.push_back("row " + rec.second.to_bracket() + " over " + rec.first.to_bracket() +
                               " is bad for both separations");
    }
  }
  if (!ok) {
    report.overall = Overall::Failed;
  } else {
    report.overall = (first_alone || second_alone) ? Overall::Induced : Overall::InducedOneOfTwo;
  }
  return report;
}

/// Verdict for the coextension of `type_one` (a simple extension whose new
/// element is `e_label`) by `row`, with respect to side `a` in type_one's labels.
inline SideOutcome classify_candidate(const Matroid& type_one, Label e_label, const BitVector& row, const Subset& a,
                                      int k, const std::vector<Matroid>& excluded) {
  auto candidates = coextension_candidates(type_one);
  if (std::find(candidates.begin(), candidates.end(), row) == candidates.end())
    throw InputError("row " + row.to_bracket() + " is not a cosimple coextension row");
  Matroid m = coextend(type_one, row);
  if (!in_class(m, excluded)) {
    SideOutcome out;
    out.verdict = Verdict::ExcludedMinor;
    out.side = shift_for_coextension(type_one, a);
    return out;
  }
  return evaluate_two_step_side(m, shift_for_coextension(type_one, e_label), coextension_label(type_one),
                                shift_for_coextension(type_one, a), k);
}

}  // namespace bmat

#endif  // BMAT_STRUCTURE_HPP
