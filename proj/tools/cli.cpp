// Copyright 2026 The Graphstar Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "graphstar/algebra.hpp"
#include "graphstar/bch.hpp"
#include "graphstar/characters.hpp"
#include "graphstar/enumerate.hpp"
#include "graphstar/evaluator.hpp"
#include "graphstar/graph_io.hpp"
#include "graphstar/parallel.hpp"
#include "verify.hpp"

#ifndef GRAPHSTAR_DATA_DIR
#define GRAPHSTAR_DATA_DIR "data"
#endif

namespace graphstar::cli {
namespace {

struct Config {
  int max_order = 3;
  std::string restriction = "forest";
  std::vector<std::string> normalize;
  std::string out_path;
  std::string format = "text";
  int threads = 0;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

nlohmann::json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("'" + path + "': " + e.what());
  }
}

Normalization BuildPins(const Config& config) {
  Normalization pins = DefaultNormalization();
  for (const std::string& entry : config.normalize) {
    const size_t eq = entry.rfind('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--normalize expects graph=value, got '" + entry + "'");
    pins[ResolveGraph(entry.substr(0, eq))] = ParseRational(entry.substr(eq + 1));
  }
  return pins;
}

std::string ReportText(const SolveResult& result) {
  std::ostringstream os;
  for (const OrderReport& r : result.report) {
    os << "order " << r.order << ": " << r.StatusText() << " (" << r.equations << " equations, " << r.unknowns
       << " unknowns)\n";
  }
  return os.str();
}

std::string SolveText(const SolveResult& result) {
  std::ostringstream os;
  os << "restriction " << RestrictionName(result.weights.restriction()) << "\n" << ReportText(result);
  for (int n = 0; n <= result.weights.max_order(); ++n) {
    for (const CanonicalGraph& g : EnumerateClass(n, 2, result.weights.restriction())) {
      os << FormatRational(result.weights(g)) << "  " << SerializeGraph(g) << "\n";
    }
  }
  return os.str();
}

Bivector LoadBivector(const std::string& spec) {
  if (spec == "so3") return Bivector::So3();
  if (spec == "affine2") return Bivector::Affine2();
  if (spec == "constant2") return Bivector::Constant2();
  return BivectorFromJson(ReadJsonFile(spec));
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int Run(const std::vector<std::string>& args) {
    CLI::App app{"Admissible graph algebra and star product toolkit", "graphstar"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value configuration file");
    app.option_defaults()->always_capture_default();
    app.add_option("--max-order", config_.max_order, "highest weight order")->check(CLI::Range(0, 8));
    app.add_option("--restrict", config_.restriction, "graph class")
        ->check(CLI::IsMember({"full", "forest", "constant", "zero-in-degree"}));
    app.add_option("--normalize", config_.normalize, "pin a prime weight, graph=value");
    app.add_option("--out", config_.out_path, "write the result to this file");
    app.add_option("--format", config_.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--threads", config_.threads, "thread cap (default GRAPHSTAR_THREADS)")->check(CLI::NonNegativeNumber);

    std::function<int()> action;
    auto sub = [&](const char* name, const char* help) {
      CLI::App* s = app.add_subcommand(name, help);
      s->fallthrough();
      return s;
    };

    int n = 0;
    int m = 2;
    std::string restriction_arg;
    CLI::App* enumerate = sub("enumerate", "list canonical graphs with n internal and m boundary vertices");
    enumerate->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
    enumerate->add_option("m", m)->required()->check(CLI::Range(1, 3));
    enumerate->add_option("restriction", restriction_arg)
        ->check(CLI::IsMember({"full", "forest", "constant", "zero-in-degree"}));
    enumerate->callback([&] { action = [&] { return Enumerate(n, m, restriction_arg); }; });

    std::string g1;
    std::string g2;
    CLI::App* compose = sub("compose", "normalized pre-Lie composition g1 o g2");
    compose->add_option("g1", g1)->required();
    compose->add_option("g2", g2)->required();
    compose->callback([&] { action = [&] { return EmitVector(Compose(ResolveGraph(g1), ResolveGraph(g2))); }; });

    CLI::App* bracket = sub("bracket", "graded commutator [g1, g2]");
    bracket->add_option("g1", g1)->required();
    bracket->add_option("g2", g2)->required();
    bracket->callback([&] { action = [&] { return EmitVector(Bracket(ResolveGraph(g1), ResolveGraph(g2))); }; });

    std::string kind = "reduced";
    CLI::App* coproduct = sub("coproduct", "signed sum of quotient (x) normal subgraph");
    coproduct->add_option("g", g1)->required();
    coproduct->add_option("--kind", kind, "reduced, generic or prime")
        ->check(CLI::IsMember({"reduced", "generic", "prime"}));
    coproduct->callback([&] {
      action = [&] {
        const CanonicalGraph g = ResolveGraph(g1);
        if (kind == "generic") return EmitTensor(CoproductGeneric(g));
        if (kind == "prime") return EmitTensor(CoproductPrime(g));
        return EmitTensor(CoproductReduced(g));
      };
    });

    CLI::App* antipode = sub("antipode", "antipode S(g) by the recursive formula");
    antipode->add_option("g", g1)->required();
    antipode->callback([&] { action = [&] { return EmitAntipode(Antipode(ResolveGraph(g1))); }; });

    CLI::App* merge = sub("merge", "sum over mergers of the boundary points of g");
    merge->add_option("g", g1)->required();
    merge->callback([&] { action = [&] { return EmitVector(Merger(ResolveGraph(g1))); }; });

    CLI::App* solve = sub("solve", "solve the associativity constraints for the weights");
    solve->callback([&] { action = [&] { return Solve(); }; });

    std::string alpha_spec;
    std::string weights_path;
    int order = 2;
    std::string f_text;
    std::string g_text;
    CLI::App* star = sub("star", "star product f * g through eps^order");
    star->add_option("--alpha", alpha_spec, "bivector JSON file, or so3, affine2, constant2")->required();
    star->add_option("--weights", weights_path, "weights JSON from solve (solved on the fly when absent)");
    star->add_option("--order", order)->check(CLI::Range(0, 8));
    star->add_option("--f", f_text)->required();
    star->add_option("--g", g_text)->required();
    star->callback([&] { action = [&] { return Star(alpha_spec, weights_path, order, f_text, g_text); }; });

    int bch_order = 3;
    bool bch_report = false;
    std::string bch_alpha = "affine2";
    CLI::App* bch = sub("bch", "Hausdorff series components in the Lyndon basis");
    bch->add_option("--degree", bch_order, "highest component")->check(CLI::Range(1, 5));
    bch->add_flag("--report", bch_report, "also print x1^n * x2 under solved weights");
    bch->add_option("--alpha", bch_alpha, "bivector for --report");
    bch->callback([&] {
      action = [&] { return bch_report ? BchWithProducts(bch_alpha, bch_order) : Bch(bch_order); };
    });

    std::string suite;
    std::string data_path = std::string(GRAPHSTAR_DATA_DIR) + "/appendix.txt";
    CLI::App* verify = sub("verify", "run a verification suite");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(SuiteNames()));
    verify->add_option("--data", data_path, "golden table for the appendix suite");
    verify->callback([&] { action = [&] { return Verify(suite, data_path); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
      out_ << app.help();
      return kOk;
    } catch (const CLI::CallForAllHelp& e) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n" << "run with --help for usage\n";
      return kUsage;
    }
    if (config_.threads > 0) SetThreadCount(config_.threads);
    try {
      return action();
    } catch (const GraphError& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const std::invalid_argument& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const std::out_of_range& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const nlohmann::json::exception& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const std::runtime_error& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    }
  }

 private:
  bool Json() const { return config_.format == "json"; }

  void Emit(const std::string& text) {
    if (config_.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(config_.out_path);
    if (!file) throw std::runtime_error("cannot write '" + config_.out_path + "'");
    file << text;
  }
  void Emit(const nlohmann::json& j) { Emit(j.dump(2) + "\n"); }

  int EmitVector(const GraphVector& v) {
    Json() ? Emit(ToJson(v)) : Emit(ToText(v));
    return kOk;
  }
  int EmitTensor(const TensorVector& tv) {
    Json() ? Emit(ToJson(tv)) : Emit(ToText(tv));
    return kOk;
  }
  int EmitAntipode(const AntipodeValue& s) {
    if (Json()) {
      Emit(nlohmann::json{{"graph", ToJson(s.graph)}, {"tensor", ToJson(s.tensor)}});
    } else {
      Emit(ToText(s.graph) + ToText(s.tensor));
    }
    return kOk;
  }

  int Enumerate(int n, int m, const std::string& restriction_arg) {
    const Restriction r = ParseRestriction(restriction_arg.empty() ? "full" : restriction_arg);
    const std::vector<CanonicalGraph> graphs = EnumerateClass(n, m, r);
    if (Json()) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& g : graphs) arr.push_back(GraphToJson(g));
      Emit(arr);
    } else {
      std::string text;
      for (const auto& g : graphs) text += SerializeGraph(g) + "\n";
      Emit(text);
    }
    return kOk;
  }

  int Solve() {
    const Restriction r = ParseRestriction(config_.restriction);
    const Normalization pins = BuildPins(config_);
    const SolveResult result = SolveWeights(config_.max_order, r, pins);
    if (result.feasible()) {
      Json() ? Emit(WeightsToJson(result)) : Emit(SolveText(result));
      return kOk;
    }
    err_ << "infeasible: " << RestrictionName(r) << " class\n" << ReportText(result);
    if (r == Restriction::kFull) {
      const SolveResult forest = SolveWeights(config_.max_order, Restriction::kForest, pins);
      err_ << "writing the forest-class solution instead\n";
      Json() ? Emit(WeightsToJson(forest)) : Emit(SolveText(forest));
    } else {
      Json() ? Emit(WeightsToJson(result)) : Emit(SolveText(result));
    }
    return kInfeasible;
  }

  int Star(const std::string& alpha_spec, const std::string& weights_path, int order, const std::string& f_text,
           const std::string& g_text) {
    const Bivector alpha = LoadBivector(alpha_spec);
    WeightSystem w;
    if (weights_path.empty()) {
      const SolveResult solved =
          SolveWeights(std::max(order, 1), ParseRestriction(config_.restriction), BuildPins(config_));
      if (!solved.feasible()) throw UsageError("weights are infeasible at the requested order");
      w = solved.weights;
    } else {
      w = WeightsFromJson(ReadJsonFile(weights_path));
    }
    if (w.max_order() < order) {
      throw UsageError("weights cover order " + std::to_string(w.max_order()) + ", need " + std::to_string(order));
    }
    const PolySeries s = StarProduct(ParsePolynomial(f_text), ParsePolynomial(g_text), alpha, w, order);
    if (Json()) {
      nlohmann::json coeffs = nlohmann::json::array();
      for (int k = 0; k <= s.order(); ++k) coeffs.push_back(ToString(s[k]));
      Emit(nlohmann::json{{"order", order}, {"coefficients", coeffs}});
    } else {
      Emit(ToString(s) + "\n");
    }
    return kOk;
  }

  int Bch(int degree) {
    nlohmann::json j = nlohmann::json::object();
    std::string text;
    for (int d = 1; d <= degree; ++d) {
      nlohmann::json terms = nlohmann::json::array();
      text += "degree " + std::to_string(d) + ":";
      for (const LieTerm& t : BchComponent(d)) {
        terms.push_back({{"bracket", t.bracket}, {"coeff", FormatRational(t.coeff)}});
        text += " " + std::string(t.coeff < 0 ? "-" : "+") + " " + FormatRational(abs(t.coeff)) + " " + t.bracket;
      }
      text += "\n";
      j[std::to_string(d)] = terms;
    }
    Json() ? Emit(j) : Emit(text);
    return kOk;
  }

  int BchWithProducts(const std::string& alpha_spec, int order) {
    const SolveResult solved = SolveWeights(order, ParseRestriction(config_.restriction), BuildPins(config_));
    if (!solved.feasible()) throw UsageError("weights are infeasible at the requested order");
    Emit(BchReport(solved.weights, LoadBivector(alpha_spec), order));
    return kOk;
  }

  int Verify(const std::string& suite, const std::string& data_path) {
    SuiteOptions options;
    options.data_path = data_path;
    const std::vector<Check> checks = RunSuite(suite, options);
    bool all = true;
    std::string text;
    nlohmann::json arr = nlohmann::json::array();
    for (const Check& c : checks) {
      all = all && c.pass;
      text += std::string(c.pass ? "PASS" : "FAIL") + "  " + c.name + "\n";
      if (!c.pass) text += "  expected: " + c.expected + "\n  got:      " + c.got + "\n";
      arr.push_back({{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"got", c.got}});
    }
    text += suite + ": " + std::to_string(checks.size()) + " checks, " + (all ? "all passed" : "FAILED") + "\n";
    Json() ? Emit(nlohmann::json{{"suite", suite}, {"pass", all}, {"checks", arr}}) : Emit(text);
    return all ? kOk : kVerifyFailed;
  }

  std::ostream& out_;
  std::ostream& err_;
  Config config_;
};

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).Run(args);
}

}  // namespace graphstar::cli
