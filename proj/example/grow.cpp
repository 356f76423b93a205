// Single-element extensions and coextensions of a catalog matroid, grouped
// into isomorphism classes, optionally inside an excluded-minor class.
//
//   grow P9
//   grow E4 S10 S10*

#include <cstdio>
#include <string>
#include <vector>

#include "bmat/catalog.hpp"
#include "bmat/extension.hpp"
#include "bmat/isomorphism.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: grow <catalog name> [excluded...]\n");
    return 2;
  }
  try {
    const bmat::Matroid& m = bmat::catalog::matroid(argv[1]);
    bmat::GrowthOptions options;
    for (int i = 2; i < argc; ++i) options.excluded.push_back(bmat::catalog::matroid(argv[i]));

    for (auto kind : {bmat::GrowthKind::Extension, bmat::GrowthKind::Coextension}) {
      auto classes = bmat::enumerate_growth_classes(m, kind, options);
      std::printf("%s: %zu classes\n", bmat::to_string(kind), classes.size());
      for (const auto& c : classes) {
        std::string gens;
        for (const auto& g : c.members) gens += (gens.empty() ? "" : " ") + g.to_bracket();
        std::string names;
        for (const auto& name : bmat::catalog::list())
          if (bmat::are_isomorphic(bmat::catalog::matroid(name), c.representative)) names += " " + name;
        std::printf("  %s%s%s\n", gens.c_str(), names.empty() ? "" : "  ~", names.c_str());
      }
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }
}
