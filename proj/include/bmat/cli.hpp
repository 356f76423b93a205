#ifndef BMAT_CLI_HPP
#define BMAT_CLI_HPP

// The bmat command line. Exit codes: 0 success, 1 verification mismatch,
// 2 usage or input error.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bmat/bmx.hpp"
#include "bmat/catalog.hpp"
#include "bmat/connectivity.hpp"
#include "bmat/errors.hpp"
#include "bmat/extension.hpp"
#include "bmat/minor.hpp"
#include "bmat/report_json.hpp"
#include "bmat/structure.hpp"
#include "bmat/verify.hpp"

namespace bmat::cli {

inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;

/// "1,2,5,6" or "{1,2,5,6}" to a set of labels.
inline Subset parse_set(std::string text) {
  if (!text.empty() && text.front() == '{') text.erase(0, 1);
  if (!text.empty() && text.back() == '}') text.pop_back();
  Subset out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad element label '" + item + "' in set");
    out.insert(std::stoi(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

/// A catalog name, or else a bmx file path.
inline Matroid resolve(const std::string& name_or_file) {
  const auto& names = catalog::list();
  if (std::find(names.begin(), names.end(), name_or_file) != names.end()) return catalog::matroid(name_or_file);
  if (std::filesystem::exists(name_or_file)) return bmx::read_file(name_or_file);
  throw InputError("'" + name_or_file + "' is neither a catalog name nor a readable bmx file");
}

inline std::vector<Matroid> resolve_list(const std::string& comma_list) {
  std::vector<Matroid> out;
  if (comma_list.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = comma_list.find(',', start);
    out.push_back(resolve(comma_list.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

/// Catalog names isomorphic to m, comma-joined.
inline std::string catalog_names_for(const Matroid& m) {
  std::string out;
  for (const auto& name : catalog::list()) {
    const Matroid& c = catalog::matroid(name);
    if (c.size() == m.size() && c.rank() == m.rank() && are_isomorphic(c, m)) out += (out.empty() ? "" : ",") + name;
  }
  return out;
}

inline std::string set_string(const Subset& s) { return verify::detail::set_string(s); }

inline void print_separation_flags(std::ostream& out, const Matroid& m, const Subset& a, int value) {
  int k = value + 1;
  try {
    auto sep = classify_separation(m, a, k);
    out << "# " << k << "-separation, " << (sep.exact ? "exact" : "not exact") << ", "
        << (sep.minimal ? "minimal" : "non-minimal") << "\n";
  } catch (const NotASeparationError& e) {
    out << "# not a " << k << "-separation: " << e.what() << "\n";
  }
}

inline void print_report(std::ostream& out, const DecomposerReport& r) {
  auto side_text = [](const std::vector<OneStepSide>& sides) {
    std::string t;
    for (std::size_t i = 0; i < sides.size(); ++i)
      t += " | A" + std::to_string(i + 1) + "=" + set_string(sides[i].side) + " lambda " +
           std::to_string(sides[i].lambda_a) + ", with new element " + std::to_string(sides[i].lambda_ax);
    return t;
  };
  int in_class = 0;
  for (const auto& rec : r.one_step) {
    if (rec.status == Verdict::ExcludedMinor) continue;
    ++in_class;
    out << to_string(rec.kind) << " " << rec.vector.to_bracket() << " (new element " << rec.new_label << "): "
        << to_string(rec.status) << side_text(rec.sides) << "\n";
  }
  out << in_class << " of " << r.one_step.size() << " single-element children in class\n";
  int two_in = 0;
  for (const auto& t : r.two_step) {
    if (t.status != Verdict::Good) continue;
    ++two_in;
    out << (t.first_kind == GrowthKind::Extension ? "extension " : "coextension ") << t.first.to_bracket() << " then "
        << (t.first_kind == GrowthKind::Extension ? "row " : "column ") << t.second.to_bracket() << " (e=" << t.e
        << ", f=" << t.f << ")";
    for (std::size_t i = 0; i < t.sides.size(); ++i) {
      const auto& o = t.sides[i];
      out << " | A" << i + 1 << ": " << to_string(o.verdict);
      if (o.verdict == Verdict::Good) out << " " << to_string(o.condition);
      if (o.certificate) out << " lambda" << set_string(*o.certificate) << "=" << r.k - 1;
      if (o.triangle_or_triad) out << " via " << set_string(*o.triangle_or_triad);
    }
    out << "\n";
  }
  out << two_in << " of " << r.two_step.size() << " two-element children in class\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  out << "overall: " << to_string(r.overall) << "\n";
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Binary matroid toolkit", "bmat"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));

  std::string cat_name;
  auto* cat = app.add_subcommand("cat", "Print a catalog matroid in bmx format");
  cat->add_option("name", cat_name)->required();

  std::string lam_target, lam_set;
  auto* lam = app.add_subcommand("lambda", "Connectivity function of an element set");
  lam->add_option("matroid", lam_target, "Catalog name or bmx file")->required();
  lam->add_option("set", lam_set, "Comma-separated labels")->required();

  std::string ext_name, ext_exclude;
  bool ext_co = false;
  auto* exts = app.add_subcommand("exts", "Extension or coextension classes");
  exts->add_option("matroid", ext_name)->required();
  exts->add_flag("--co", ext_co, "Coextensions instead of extensions");
  exts->add_option("--exclude", ext_exclude, "Comma-separated excluded minors");

  std::string minor_m, minor_n;
  auto* minor = app.add_subcommand("minor", "Search for an N-minor of M");
  minor->add_option("M", minor_m)->required();
  minor->add_option("N", minor_n)->required();

  std::string split_name, split_exclude;
  auto* split = app.add_subcommand("splitter", "Splitter check");
  split->add_option("N", split_name)->required();
  split->add_option("--exclude", split_exclude)->required();

  std::string dec_name, dec_sep, dec_sep2, dec_exclude, dec_aside;
  int dec_k = 3;
  bool dec_no_dual = false;
  auto* dec = app.add_subcommand("decomposer", "Decomposer check for one or two separations");
  dec->add_option("N", dec_name)->required();
  dec->add_option("--sep", dec_sep)->required();
  dec->add_option("--sep2", dec_sep2);
  dec->add_option("--k", dec_k)->required()->check(CLI::Range(2, 64));
  dec->add_option("--exclude", dec_exclude)->required();
  dec->add_option("--set-aside", dec_aside, "Children with one of these minors take no part in the verdict");
  dec->add_flag("--no-dual-branch", dec_no_dual, "Skip extensions of the coextensions");

  bool ver_json = false, ver_strict = false;
  std::string ver_claim;
  auto* ver = app.add_subcommand("verify-paper", "Recompute every registered claim");
  ver->add_flag("--json", ver_json);
  ver->add_flag("--strict", ver_strict, "Count discrepancies as failures");
  ver->add_option("--claim", ver_claim, "Report a single claim id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (cat->parsed()) {
      bmx::write(out, catalog::matroid(cat_name));
      return kOk;
    }
    if (lam->parsed()) {
      Matroid m = resolve(lam_target);
      Subset a = parse_set(lam_set);
      int value = lambda(m, a);
      out << value << "\n";
      print_separation_flags(out, m, a, value);
      return kOk;
    }
    if (exts->parsed()) {
      Matroid m = resolve(ext_name);
      GrowthOptions g;
      g.excluded = resolve_list(ext_exclude);
      g.threads = threads;
      auto kind = ext_co ? GrowthKind::Coextension : GrowthKind::Extension;
      auto classes = enumerate_growth_classes(m, kind, g);
      for (std::size_t i = 0; i < classes.size(); ++i) {
        std::string names = catalog_names_for(classes[i].representative);
        out << "class " << i + 1 << " (" << classes[i].members.size() << "): "
            << verify::detail::vectors_string(classes[i].members);
        if (!names.empty()) out << " ~ " << names;
        out << "\n";
      }
      out << classes.size() << " classes from " << growth_candidates(m, kind).size() << " candidates\n";
      return kOk;
    }
    if (minor->parsed()) {
      auto result = has_minor(resolve(minor_m), resolve(minor_n));
      if (!result.found) {
        out << "no\n";
        return kOk;
      }
      out << "yes: delete " << set_string(result.witness->deletions) << " contract "
          << set_string(result.witness->contractions) << "\n";
      return kOk;
    }
    if (split->parsed()) {
      auto result = is_splitter(resolve(split_name), resolve_list(split_exclude), threads);
      out << "splitter: " << (result.is_splitter ? "yes" : "no") << "\n";
      for (const auto& c : result.counterexamples) {
        std::string names = catalog_names_for(c.child);
        out << to_string(c.kind) << " " << c.vector.to_bracket() << " stays in the class";
        if (!names.empty()) out << " (~ " << names << ")";
        out << "\n";
      }
      return kOk;
    }
    if (dec->parsed()) {
      Matroid n = resolve(dec_name);
      DecomposerOptions o;
      o.excluded = resolve_list(dec_exclude);
      o.set_aside = resolve_list(dec_aside);
      o.dual_branch = !dec_no_dual;
      o.threads = threads;
      auto report = dec_sep2.empty() ? theorem21_check(n, parse_set(dec_sep), dec_k, o)
                                     : corollary22_check(n, parse_set(dec_sep), parse_set(dec_sep2), dec_k, o);
      print_report(out, report);
      return report.overall == Overall::Failed ? kMismatch : kOk;
    }
    if (ver->parsed()) {
      verify::Options o;
      o.threads = threads;
      auto report = verify::verify_paper(o);
      if (!ver_claim.empty() && !verify::select_claim(report, ver_claim)) {
        err << "unknown claim id: " << ver_claim << "\n";
        return kUsage;
      }
      if (ver_json) {
        out << verify::to_json_string(report);
      } else {
        for (const auto& c : report.claims) {
          out << verify::to_string(c.status) << "  " << c.id << "\n";
          if (c.status != verify::Status::Pass)
            out << "    expected: " << c.expected << "\n    computed: " << c.computed << "\n";
        }
        out << "pass " << report.summary.pass << ", fail " << report.summary.fail << ", discrepancy "
            << report.summary.discrepancy << "\n";
      }
      bool bad = report.summary.fail > 0 || (ver_strict && report.summary.discrepancy > 0);
      return bad ? kMismatch : kOk;
    }
  } catch (const HypothesisError& e) {
    err << "hypothesis not met: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace bmat::cli

#endif  // BMAT_CLI_HPP
