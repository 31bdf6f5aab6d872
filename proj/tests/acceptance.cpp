// One PASS/FAIL line per acceptance criterion, each a conjunction of
// scenario steps. Exit status 1 if any criterion fails.

#include <cstdio>
#include <map>

#include "crlab/paperlab.hpp"

using namespace crlab;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::pair<std::string, std::string>> steps;  // (scenario, step)
};

std::vector<Criterion> criteria() {
  const std::string g = "d4-gcr-not-gcrk", i = "d4-gir-not-gcr", a = "a2-conjugacy", n = "d4-nonseparability",
                    w = "w0-combinatorics";
  Criterion coeffs{3, "generic collection, nine coefficients", {{g, "generic collection frame"}}};
  for (int l : {7, 10, 9, 11, 6, 8, 4, 5, 12}) coeffs.steps.push_back({g, "coefficient of e" + std::to_string(l)});
  return {
      {1, "label permutation of n[a]*sigma", {{g, "label permutation"}}},
      {2, "v*(n[a]*sigma)*v^-1 = n[a]*sigma*e12(s^2)", {{g, "conjugation by v"}}},
      coeffs,
      {4, "rationality obstruction", {{g, "coordinate equalities"}, {g, "rationality equation"}, {g, "square obstruction"}}},
      {5,
       "centralizer of M",
       {{i, "equalities from n[a]*sigma"},
        {i, "forced zeros"},
        {i, "x6^2 = 0"},
        {i, "centralizer in radical"},
        {i, "centralizer in opposite radical"},
        {i, "torus centralizer"}}},
      {6, "n12^-1 word actions and the missing limit", {{i, "n12^-1 on root 11"}, {i, "n12^-1 on root 2"}, {i, "no limit"}}},
      {7, "w0 identities and the A3 failure", {{w, "w fixes Psi(L)"}, {w, "w swaps radicals"}, {w, "A3 extension"}}},
      {8,
       "A2 conjugacy in engine and matrix oracle",
       {{a, "sigma on generic radical element"},
        {a, "sigma on generic radical element (matrix oracle)"},
        {a, "m1 conjugate"},
        {a, "m2 conjugate"},
        {a, "m1 conjugate (matrix oracle)"},
        {a, "m2 conjugate (matrix oracle)"},
        {a, "Lie fixed vector"},
        {a, "Lie fixed vector (matrix oracle)"},
        {a, "M(F4)-classes"}}},
      {9,
       "nonseparability witnesses",
       {{n, "Ad(n[a]*sigma)(e6 + e9)"},
        {n, "Ad(t[a+c](t))(e6 + e9)"},
        {n, "curve does not centralize"},
        {a, "Lie fixed vector"},
        {a, "curve does not centralize sigma"}}},
      {10,
       "property suites at the default seed",
       {{g, "collection confluence"}, {g, "action law"}, {n, "Ad homomorphism"}, {a, "A2 oracle equivalence"}}},
  };
}

}  // namespace

int main() {
  std::map<std::string, Report> reports;
  for (auto& r : run_scenarios(scenario_names())) reports.emplace(r.scenario, std::move(r));
  bool all = true;
  for (const auto& c : criteria()) {
    std::vector<std::string> bad;
    for (const auto& [scenario, step] : c.steps) {
      const Step* s = reports.at(scenario).find(step);
      if (!s) bad.push_back(step + ": missing");
      else if (s->status != Status::Pass) bad.push_back(step + ": expected " + s->expected + ", got " + s->actual);
    }
    all = all && bad.empty();
    std::printf("criterion %2d  %s  %s\n", c.id, bad.empty() ? "PASS" : "FAIL", c.title.c_str());
    for (const auto& b : bad) std::printf("              %s\n", b.c_str());
  }
  return all ? 0 : 1;
}
