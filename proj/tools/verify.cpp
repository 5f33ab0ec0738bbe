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

#include "verify.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "graphstar/catalog.hpp"
#include "graphstar/characters.hpp"
#include "graphstar/enumerate.hpp"
#include "graphstar/evaluator.hpp"
#include "graphstar/graph_io.hpp"
#include "graphstar/trees.hpp"

namespace graphstar::cli {
namespace {

std::string Trim(const std::string& s) {
  const size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::vector<std::string> Tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::string OneLine(std::string text) {
  while (!text.empty() && text.back() == '\n') text.pop_back();
  for (char& c : text) {
    if (c == '\n') c = ' ';
  }
  return text;
}

Check Compare(std::string name, const std::string& expected, const std::string& got) {
  return {std::move(name), expected, got, expected == got};
}

Check CountCheck(std::string name, long failures, long total) {
  return {std::move(name), "0 failures", std::to_string(failures) + " failures of " + std::to_string(total),
          failures == 0};
}

template <typename Parse>
auto ParseSigned(const std::string& text, Parse parse) {
  using Result = decltype(parse(std::string(), Rational(0)));
  Result out;
  if (Trim(text) == "0") return out;
  const std::vector<std::string> toks = Tokens(text);
  for (size_t i = 0; i < toks.size(); ++i) {
    std::string tok = toks[i];
    Rational sign = 1;
    if (tok[0] == '+' || tok[0] == '-') {
      if (tok[0] == '-') sign = -1;
      tok = tok.substr(1);
    } else {
      throw std::invalid_argument("expected a signed term, got '" + tok + "'");
    }
    if (tok.empty() || std::isdigit(static_cast<unsigned char>(tok[0]))) {
      if (tok.empty()) {
        if (++i >= toks.size()) throw std::invalid_argument("dangling sign");
        tok = toks[i];
      }
      if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
        sign *= ParseRational(tok);
        if (++i >= toks.size()) throw std::invalid_argument("coefficient without a term");
        tok = toks[i];
      }
    }
    out += parse(tok, sign);
  }
  return out;
}

// --- suites -------------------------------------------------------------------

std::vector<Check> Appendix(const SuiteOptions& options) {
  std::ifstream in(options.data_path);
  if (!in) throw std::runtime_error("cannot open golden table '" + options.data_path + "'");
  std::vector<Check> checks;
  std::string line;
  while (std::getline(in, line)) {
    line = Trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::istringstream row(line);
    for (std::string f; std::getline(row, f, ';');) fields.push_back(Trim(f));
    if (fields.size() != 4) throw std::runtime_error("malformed golden line: " + line);
    const std::string& tag = fields[0];
    const std::string& op = fields[1];
    const std::vector<std::string> args = Tokens(fields[2]);
    if (op == "compose" || op == "bracket") {
      if (args.size() != 2) throw std::runtime_error("two graphs expected in: " + line);
      const GraphVector a = ResolveGraph(args[0]);
      const GraphVector b = ResolveGraph(args[1]);
      const GraphVector got = op == "compose" ? Compose(a, b) : Bracket(a, b);
      checks.push_back(Compare(tag, OneLine(ToText(ParseExpectedVector(fields[3]))), OneLine(ToText(got))));
    } else if (op == "coproduct") {
      if (args.size() != 1) throw std::runtime_error("one graph expected in: " + line);
      const TensorVector got = CoproductReduced(ResolveGraph(args[0]));
      checks.push_back(Compare(tag, OneLine(ToText(ParseExpectedTensor(fields[3]))), OneLine(ToText(got))));
    } else {
      throw std::runtime_error("unknown operation '" + op + "' in golden table");
    }
  }
  return checks;
}

std::vector<Check> Duality() {
  std::vector<Check> checks;
  for (int total = 0; total <= 3; ++total) {
    for (int k = 0; k <= total; ++k) {
      long failures = 0;
      long count = 0;
      const auto bigs = EnumerateClass(total, 3, Restriction::kFull);
      for (const auto& g1 : EnumerateClass(k, 2, Restriction::kFull)) {
        for (const auto& g2 : EnumerateClass(total - k, 2, Restriction::kFull)) {
          const GraphVector comp = Compose(g1, g2);
          for (const auto& big : bigs) {
            ++count;
            if (comp.Coefficient(big) != Pairing(CoproductReduced(big), g1, g2)) ++failures;
          }
        }
      }
      checks.push_back(CountCheck("duality k=" + std::to_string(k) + " l=" + std::to_string(total - k), failures, count));
    }
  }
  return checks;
}

std::vector<Check> PreLie(const SuiteOptions& options) {
  std::vector<CanonicalGraph> pool;
  for (int n = 0; n <= 3; ++n) {
    for (const auto& g : EnumerateClass(n, 2, Restriction::kFull)) pool.push_back(g);
  }
  long failures = 0;
  long count = 0;
  auto test = [&](const CanonicalGraph& a, const CanonicalGraph& b, const CanonicalGraph& c) {
    ++count;
    if (!(Associator(a, b, c) + Associator(a, c, b)).IsZero()) ++failures;
  };
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      for (const auto& c : pool) {
        if (a.n() + b.n() + c.n() <= 2) test(a, b, c);
      }
    }
  }
  std::vector<Check> checks{CountCheck("associator antisymmetry, total n <= 2", failures, count)};
  failures = 0;
  count = 0;
  std::mt19937 rng(options.seed);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  while (count < 60) {
    const CanonicalGraph& a = pool[pick(rng)];
    const CanonicalGraph& b = pool[pick(rng)];
    const CanonicalGraph& c = pool[pick(rng)];
    if (a.n() + b.n() + c.n() == 3) test(a, b, c);
  }
  checks.push_back(CountCheck("associator antisymmetry, 60 random triples at total n = 3", failures, count));
  return checks;
}

std::vector<Check> Moyal() {
  const WeightSystem w = SolveWeights(4, Restriction::kZeroInDegree).weights;
  const Bivector alpha = Bivector::Constant2();
  long failures = 0;
  long count = 0;
  const auto mons = Monomials(2, 0, 3);
  for (const auto& f : mons) {
    for (const auto& g : mons) {
      if (f.Degree() + g.Degree() > 3) continue;
      ++count;
      if (StarProduct(f, g, alpha, w, 4) != MoyalOracle(f, g, alpha, 4)) ++failures;
    }
  }
  std::vector<Check> checks{CountCheck("star product equals Moyal oracle, degree <= 3, eps^4", failures, count)};
  checks.push_back(Compare("x1^2 * x2^2 through eps^2", "x1^2*x2^2 + eps*(4*x1*x2) + eps^2*(2)",
                           ToString(StarProduct(ParsePolynomial("x1^2"), ParsePolynomial("x2^2"), alpha, w, 2))));
  return checks;
}

std::vector<Check> Jacobi() {
  std::vector<Check> checks;
  const std::vector<std::pair<std::string, Bivector>> algebras{{"so(3)", Bivector::So3()},
                                                               {"affine 2d", Bivector::Affine2()}};
  for (const auto& [name, alpha] : algebras) {
    const auto mons = Monomials(alpha.dim(), 0, 2);
    long alt = 0;
    long span = 0;
    long count = 0;
    for (const auto& f : mons) {
      for (const auto& g : mons) {
        for (const auto& h : mons) {
          ++count;
          if (!JacobiDefect(alpha, f, g, h, JacobiMode::kAlternation).IsZero()) ++alt;
          if (!JacobiDefect(alpha, f, g, h, JacobiMode::kSpan).IsZero()) ++span;
        }
      }
    }
    checks.push_back(CountCheck(name + ": alternation of U(c_2)", alt, count));
    checks.push_back(CountCheck(name + ": span identity, sigma = " + std::to_string(kJacobiSpanSign), span, count));
  }
  return checks;
}

std::vector<Check> Assoc() {
  std::vector<Check> checks;
  const auto mons = Monomials(2, 0, 3);
  auto run = [&](const std::string& name, const Bivector& alpha, const WeightSystem& w, int order, int max_deg) {
    long failures = 0;
    long count = 0;
    for (const auto& f : mons) {
      for (const auto& g : mons) {
        for (const auto& h : mons) {
          if (f.Degree() + g.Degree() + h.Degree() > max_deg) continue;
          ++count;
          if (!AssociativityDefect(f, g, h, alpha, w, order).IsZero()) ++failures;
        }
      }
    }
    checks.push_back(CountCheck(name, failures, count));
  };
  run("constant alpha, constant-class weights, eps^4", Bivector::Constant2(),
      SolveWeights(4, Restriction::kZeroInDegree).weights, 4, 3);
  run("affine 2d alpha, solved full weights, eps^1", Bivector::Affine2(), SolveWeights(2, Restriction::kFull).weights,
      1, 4);
  run("affine 2d alpha, solved forest weights, eps^2", Bivector::Affine2(),
      SolveWeights(2, Restriction::kForest).weights, 2, 4);
  return checks;
}

std::vector<Check> AntipodeSuite() {
  using namespace catalog;
  std::vector<Check> checks;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : {BnL(n), BnR(n)}) {
      const AntipodeValue s = Antipode(g);
      checks.push_back(Compare("S(" + SerializeGraph(g) + ")", OneLine(ToText(-GraphVector(g))) + " | 0",
                               OneLine(ToText(s.graph)) + " | " + OneLine(ToText(s.tensor))));
    }
  }
  auto value = [](const AntipodeValue& s) { return OneLine(ToText(s.graph)) + " | " + OneLine(ToText(s.tensor)); };
  const std::vector<std::pair<std::string, std::string>> cases{
      {"t2L", "-b1(x)b1 +b2L(x)b0"},
      {"t2R", "+b1(x)b1 -b2R(x)b0"},
      {"c2", "+b2L(x)b0 -b2R(x)b0"},
      {"c2L", "+b1(x)b1 -b1sq(x)b0"},
      {"Gamma3", "-b2L(x)b1 +b3L(x)b0"},
  };
  for (const auto& [name, tensor] : cases) {
    const CanonicalGraph g = ResolveGraph(name);
    checks.push_back(Compare("S(" + name + ")",
                             OneLine(ToText(-GraphVector(g))) + " | " + OneLine(ToText(ParseExpectedTensor(tensor))),
                             value(Antipode(g))));
  }
  for (int n = 1; n <= 3; ++n) {
    long failures = 0;
    long count = 0;
    for (const auto& g : EnumerateClass(n, 3, Restriction::kFull)) {
      ++count;
      if (!(Antipode(g) == AntipodeGeometric(g))) ++failures;
    }
    checks.push_back(CountCheck("recursive = geometric antipode, n = " + std::to_string(n), failures, count));
  }
  for (Restriction r : {Restriction::kFull, Restriction::kForest}) {
    const SolveResult solved = SolveWeights(3, r);
    const UnitarityResult u = UnitarityCheck(solved.weights, 3);
    checks.push_back(Compare("W(S(G)) = -W(G) through order 3, " + RestrictionName(r) + " weights", "unitary",
                             u.ok ? "unitary" : "fails at " + SerializeGraph(*u.failure)));
  }
  return checks;
}

std::vector<Check> Trees() {
  std::vector<Check> checks;
  for (int nodes = 1; nodes <= 5; ++nodes) {
    long failures = 0;
    long count = 0;
    for (const auto& t : AllTrees(nodes)) {
      ++count;
      if (CoproductCuts(t) != CoproductSubgraphs(t)) ++failures;
    }
    checks.push_back(CountCheck("cut form = subgraph form, " + std::to_string(nodes) + " nodes", failures, count));
  }
  long failures = 0;
  long count = 0;
  for (int n = 0; n <= 4; ++n) {
    for (const auto& g : EnumerateClass(n, 2, Restriction::kForest)) {
      ++count;
      if (ForestToGraph(GraphToForest(g)) != g) ++failures;
    }
  }
  checks.push_back(CountCheck("graph -> tree -> graph on forest graphs, n <= 4", failures, count));
  return checks;
}

}  // namespace

CanonicalGraph ResolveGraph(const std::string& raw) {
  std::string token = Trim(raw);
  if (token.size() >= 2 && token.front() == '{' && token.back() == '}') token = token.substr(1, token.size() - 2);
  if (token.rfind("m=", 0) == 0) return Canonicalize(ParseGraph(token));
  if (token.rfind("padR:", 0) == 0) return Pad(ResolveGraph(token.substr(5)), PadSide::kRight);
  if (token.rfind("padL:", 0) == 0) return Pad(ResolveGraph(token.substr(5)), PadSide::kLeft);
  return catalog::ByName(token);
}

GraphVector ParseExpectedVector(const std::string& text) {
  return ParseSigned(text, [](const std::string& tok, const Rational& c) {
    GraphVector v;
    v.Add(ResolveGraph(tok), c);
    return v;
  });
}

TensorVector ParseExpectedTensor(const std::string& text) {
  return ParseSigned(text, [](const std::string& tok, const Rational& c) {
    const size_t at = tok.find("(x)");
    if (at == std::string::npos) throw std::invalid_argument("tensor term needs '(x)': " + tok);
    TensorVector tv;
    tv.Add(ResolveGraph(tok.substr(0, at)), ResolveGraph(tok.substr(at + 3)), c);
    return tv;
  });
}

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> names{"appendix", "duality", "prelie", "moyal",
                                              "jacobi",   "assoc",   "antipode", "trees"};
  return names;
}

std::vector<Check> RunSuite(const std::string& suite, const SuiteOptions& options) {
  if (suite == "appendix") return Appendix(options);
  if (suite == "duality") return Duality();
  if (suite == "prelie") return PreLie(options);
  if (suite == "moyal") return Moyal();
  if (suite == "jacobi") return Jacobi();
  if (suite == "assoc") return Assoc();
  if (suite == "antipode") return AntipodeSuite();
  if (suite == "trees") return Trees();
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace graphstar::cli
