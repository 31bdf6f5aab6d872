// crlab: command-line front end to the verification scenarios and the engine.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "crlab/chevalley.hpp"
#include "crlab/paperlab.hpp"
#include "crlab/parabolic.hpp"

namespace {

using namespace crlab;

int verify(const std::vector<std::string>& names, bool all, std::uint64_t seed, const std::string& format, bool timing) {
  std::vector<std::string> todo = all ? scenario_names() : names;
  if (todo.empty()) throw DomainError("name a scenario or pass --all");
  std::vector<Report> reports = run_scenarios(todo, ScenarioOptions{seed});
  bool ok = true;
  if (format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : reports) out.push_back(to_json(r));
    std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
  }
  for (const auto& r : reports) {
    ok = ok && r.pass();
    if (format == "text") std::cout << to_text(r, timing);
  }
  if (format == "text" && reports.size() > 1) {
    int passed = 0;
    for (const auto& r : reports) passed += r.pass();
    std::cout << passed << "/" << reports.size() << " scenarios passed\n";
  }
  return ok ? 0 : 1;
}

std::vector<Root> parse_root_list(const RootSystem& sys, const std::string& text) {
  std::vector<Root> out;
  std::size_t p = 0;
  while (p < text.size()) {
    std::size_t q = text.find(',', p);
    if (q == std::string::npos) q = text.size();
    out.push_back(sys.parse_root(std::string_view(text).substr(p, q - p)));
    p = q + 1;
  }
  return out;
}

int collect_cmd(const std::string& word, const std::string& system, const std::string& order_text) {
  RootSystem sys = RootSystem::by_name(system);
  RegistryPtr reg = registry_for_text(word);
  GroupWord w = parse_word(sys, word, reg);
  if (!order_text.empty()) {
    RadicalElement r = collect(sys, w, parse_root_list(sys, order_text));
    std::cout << render(sys, r) << "\n";
    return 0;
  }
  NormalWord nw = normalize(sys, w);
  std::cout << render(sys, nw) << "\n";
  if (!nw.collected()) std::cout << "(tail not collectible: its root closure contains opposite roots)\n";
  return 0;
}

int pairing_cmd(const std::string& root, const std::string& cochar, const std::string& system) {
  RootSystem sys = RootSystem::by_name(system);
  std::cout << sys.pairing(sys.parse_root(root), sys.parse_cocharacter(cochar)) << "\n";
  return 0;
}

int rparabolic_cmd(const std::string& cochar, const std::string& system) {
  RootSystem sys = RootSystem::by_name(system);
  RParabolicData d = rparabolic(sys, sys.parse_cocharacter(cochar));
  auto labels = [&](const std::vector<Root>& rs) {
    std::string s;
    for (auto r : rs) s += (s.empty() ? "" : " ") + sys.render_label(r);
    return s.empty() ? "-" : s;
  };
  std::vector<Root> l = d.l_roots;
  std::sort(l.begin(), l.end(), [&](Root a, Root b) { return sys.label(a) < sys.label(b); });
  std::cout << "lambda:   " << sys.render(d.lambda) << "\n"
            << "L roots:  " << labels(l) << "\n"
            << "U roots:  " << labels(d.u_roots) << "\n"
            << "diagram:  ";
  std::string g;
  for (const auto& m : d.sigma_components) g += (g.empty() ? "" : ", ") + (m.is_identity() ? "1" : render_diagram(sys, m));
  std::cout << g << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crlab: Chevalley groups with graph automorphisms in characteristic 2"};
  app.require_subcommand(1);

  auto* v = app.add_subcommand("verify", "run verification scenarios");
  std::vector<std::string> names;
  bool all = false, timing = false;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "text";
  v->add_option("scenario", names, "scenario names");
  v->add_flag("--all", all, "run every registered scenario");
  v->add_option("--seed", seed, "seed for randomized steps")->capture_default_str();
  v->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  v->add_flag("--timing", timing, "print wall time in text reports");
  v->add_flag_callback("--list", [] {
    for (const auto& n : scenario_names()) std::cout << n << "\n";
    std::exit(0);
  }, "list registered scenarios");

  auto* c = app.add_subcommand("collect", "normal form of a word");
  std::string word, system = "d4", order;
  c->add_option("word", word, "word, e.g. 'e9(x)*e6(y)'")->required();
  c->add_option("--system", system, "a1..a4 or d4")->capture_default_str();
  c->add_option("--order", order, "comma-separated roots; collect in this order");

  auto* p = app.add_subcommand("pairing", "<root, cocharacter>");
  std::string root, cochar;
  p->add_option("root", root, "root expression or label")->required();
  p->add_option("cochar", cochar, "cocharacter, e.g. a+2b+c+d")->required();
  p->add_option("--system", system, "a1..a4 or d4")->capture_default_str();

  auto* r = app.add_subcommand("rparabolic", "root data of P_lambda");
  r->add_option("cochar", cochar, "cocharacter")->required();
  r->add_option("--system", system, "a1..a4 or d4")->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  try {
    if (v->parsed()) return verify(names, all, seed, format, timing);
    if (c->parsed()) return collect_cmd(word, system, order);
    if (p->parsed()) return pairing_cmd(root, cochar, system);
    if (r->parsed()) return rparabolic_cmd(cochar, system);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
