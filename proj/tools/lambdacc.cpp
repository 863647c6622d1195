// lambdacc: command-line front end.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lambdacc/lambdacc.hpp"

using namespace lambdacc;
using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string term;
  std::string file;
  bool json = false;
  std::size_t fuel = 0;  // 0: LAMBDACC_FUEL or the default
  std::string closure = "full";
  std::string rules = "core";

  Fuel fuelValue() const { return fuel ? Fuel{fuel} : Fuel::fromEnv(); }
};

std::string readSource(const Options& o) {
  if (!o.term.empty() && !o.file.empty()) throw UsageError("give either a term or --file, not both");
  if (!o.term.empty()) return o.term;
  std::istream* in = &std::cin;
  std::ifstream f;
  if (!o.file.empty()) {
    f.open(o.file);
    if (!f) throw UsageError("cannot read " + o.file);
    in = &f;
  }
  return std::string(std::istreambuf_iterator<char>(*in), {});
}

Com readCom(const Options& o) { return parseCom(readSource(o)); }

ClosureClass closureOf(const std::string& s) {
  if (s == "full") return ClosureClass::Full;
  if (s == "surface") return ClosureClass::Surface;
  if (s == "weak") return ClosureClass::Weak;
  throw UsageError("unknown closure " + s);
}

// "core", "all", "sigma-beta", "eta", or a comma list of rule names.
RuleSet rulesOf(const std::string& s) {
  if (s == "core") return RuleSet::core();
  if (s == "all") return RuleSet::all();
  if (s == "sigma-beta") return RuleSet::sigmaBetaC();
  if (s == "eta") return RuleSet::withEta();
  RuleSet out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    auto r = ruleFromName(item);
    if (!r) throw UsageError("unknown rule " + item);
    out = out.with(*r);
  }
  return out;
}

void addTermSource(CLI::App* cmd, Options& o) {
  cmd->add_option("term", o.term, "term text (default: stdin)");
  cmd->add_option("--file", o.file, "read the term from a file");
}

void printOutcome(const Outcome& out, const Options& o, bool showTrace) {
  if (o.json) {
    std::cout << exportTrace(out.trace) << "\n";
    return;
  }
  if (showTrace) {
    std::cout << "   " << printCom(out.trace.initial()) << "\n";
    for (const auto& s : out.trace.steps())
      std::cout << "-> " << printCom(s.result) << "   [" << ruleName(s.redex.rule) << " at "
                << pathJson(s.redex.path).dump() << "]\n";
  } else {
    std::cout << printCom(out.term) << "\n";
  }
  if (!out.normal()) std::cerr << "stopped: " << statusName(out.status) << " after " << out.trace.size() << " steps\n";
}

int printReports(const std::vector<ars::CheckReport>& reports, bool json) {
  int code = 0;
  for (const auto& r : reports) {
    if (json) {
      std::cout << r.toJson().dump() << "\n";
    } else {
      std::cout << (r.ok() ? "PASS " : "FAIL ") << r.property << "  [" << ars::verdictName(r.verdict()) << ", "
                << r.passed << "/" << r.instances << " passed, " << r.failed << " failed, " << r.unknown
                << " unknown]\n";
      for (const auto& w : r.witnesses) {
        std::cout << "  witness: " << w.note << "\n";
        for (const auto& t : w.terms) std::cout << "    " << t << "\n";
      }
    }
    if (!r.ok()) code = 1;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lambdacc: reduction, translations and bounded checks for the computational lambda calculus"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--fuel", o.fuel, "step budget (default 1000 or LAMBDACC_FUEL)")->check(CLI::PositiveNumber);

  auto* parse = app.add_subcommand("parse", "print the canonical form");
  std::string lang = "core";
  parse->add_option("--lang", lang, "core, ml, star or cbv")
      ->check(CLI::IsMember({"core", "ml", "star", "cbv"}));
  addTermSource(parse, o);

  auto* step = app.add_subcommand("step", "list the redexes and their reducts");
  addTermSource(step, o);
  step->add_option("--closure", o.closure, "full, surface or weak");
  step->add_option("--rules", o.rules, "core, all, sigma-beta, eta or a comma list");

  auto* reduce = app.add_subcommand("reduce", "run a strategy");
  std::string strategy = "weak-beta";
  std::uint64_t seed = 1;
  bool trace = false;
  addTermSource(reduce, o);
  reduce->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"weak-beta", "root", "iter-weak", "iter-surface", "full-random", "leftmost"}));
  reduce->add_option("--seed", seed, "seed for full-random");
  reduce->add_option("--closure", o.closure, "closure for full-random and leftmost");
  reduce->add_option("--rules", o.rules, "rules for full-random and leftmost");
  reduce->add_flag("--trace", trace, "print every step");

  auto* normalize = app.add_subcommand("normalize", "iterated strategy, then iota steps");
  addTermSource(normalize, o);
  std::string base = "surface";
  normalize->add_option("--closure", base, "weak or surface")->check(CLI::IsMember({"weak", "surface"}));
  normalize->add_flag("--trace", trace, "print every step");

  auto* haltsCmd = app.add_subcommand("halts", "does weak beta_c evaluation stop");
  addTermSource(haltsCmd, o);

  auto* translate = app.add_subcommand("translate", "translate a core term");
  std::string target;
  addTermSource(translate, o);
  translate->add_option("--to", target)->required()->check(CLI::IsMember({"ml", "star", "kernel"}));

  auto* measureCmd = app.add_subcommand("measure", "print size and aux");
  addTermSource(measureCmd, o);

  auto* enumerate = app.add_subcommand("enumerate", "list every term up to a size");
  std::size_t maxNodes = 3;
  bool closedOnly = false;
  std::string freeVar = "z";
  enumerate->add_option("--max-nodes", maxNodes)->required();
  enumerate->add_flag("--closed", closedOnly, "closed terms only");
  enumerate->add_option("--free", freeVar, "name of the free variable");

  auto* check = app.add_subcommand("check", "bounded property checks over the universe");
  std::vector<std::string> properties;
  LabConfig cfg;
  std::vector<std::string> allNames = propertyNames();
  allNames.push_back("all");
  check->add_option("--property", properties)->required()->check(CLI::IsMember(allNames));
  check->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);
  check->add_option("--closed-max", cfg.universe.closedMax, "closed terms up to this many nodes");
  check->add_option("--open-max", cfg.universe.openMax, "open terms up to this many nodes");
  check->add_option("--seeds", cfg.seeds, "random runs per term");

  auto* gallery = app.add_subcommand("gallery", "run the named examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (parse->parsed()) {
      const std::string src = readSource(o);
      if (lang == "core") std::cout << printCom(parseCom(src)) << "\n";
      else if (lang == "ml") std::cout << printMl(parseMl(src)) << "\n";
      else if (lang == "star") std::cout << printStar(parseStar(src)) << "\n";
      else std::cout << printCbv(parseCbv(src)) << "\n";
    } else if (step->parsed()) {
      const Com t = readCom(o);
      const auto rs = reducts(t, closureOf(o.closure), rulesOf(o.rules));
      if (o.json) {
        auto arr = ordered_json::array();
        for (const auto& r : rs) {
          auto j = redexJson(r.redex);
          j["result"] = printCom(r.result);
          arr.push_back(std::move(j));
        }
        std::cout << arr.dump() << "\n";
      } else {
        for (const auto& r : rs)
          std::cout << ruleName(r.redex.rule) << " " << pathJson(r.redex.path).dump() << " -> "
                    << printCom(r.result) << "\n";
      }
    } else if (reduce->parsed()) {
      const Com t = readCom(o);
      const Fuel fuel = o.fuelValue();
      Outcome out = [&] {
        if (strategy == "weak-beta") return weakBetaC(t, fuel);
        if (strategy == "root") return rootEval(t, fuel);
        if (strategy == "iter-weak") return iteratedStrategy(t, ClosureClass::Weak, fuel);
        if (strategy == "iter-surface") return iteratedStrategy(t, ClosureClass::Surface, fuel);
        if (strategy == "leftmost") return leftmost(t, closureOf(o.closure), rulesOf(o.rules), fuel);
        return randomMaximal(t, closureOf(o.closure), rulesOf(o.rules), seed, fuel);
      }();
      printOutcome(out, o, trace);
    } else if (normalize->parsed()) {
      printOutcome(normalizeFull(readCom(o), closureOf(base), o.fuelValue()), o, trace);
    } else if (haltsCmd->parsed()) {
      std::cout << truthName(halts(readCom(o), o.fuelValue())) << "\n";
    } else if (translate->parsed()) {
      const Com t = readCom(o);
      if (target == "ml") std::cout << printMl(ccToMl(t)) << "\n";
      else if (target == "star") std::cout << printStar(ccToStar(t)) << "\n";
      else std::cout << printCbv(ccToKernel(t)) << "\n";
    } else if (measureCmd->parsed()) {
      const MeasurePair m = measure(readCom(o));
      std::cout << m.size << " " << m.aux << "\n";
    } else if (enumerate->parsed()) {
      const auto terms = enumerateTerms(maxNodes, closedOnly ? std::vector<std::string>{} : std::vector{freeVar},
                                        closedOnly);
      for (const Com& t : terms) std::cout << printCom(t) << "\n";
    } else if (check->parsed()) {
      cfg.fuel = o.fuelValue();
      const auto universe = buildUniverse(cfg.universe);
      if (std::find(properties.begin(), properties.end(), "all") != properties.end()) properties = propertyNames();
      int code = 0;
      for (const auto& p : properties) code = std::max(code, printReports(*runProperty(p, universe, cfg), o.json));
      return code;
    } else if (gallery->parsed()) {
      return printReports(galleryRun(), o.json);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.describe() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
