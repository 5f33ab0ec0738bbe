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

#include "graphstar/graph_io.hpp"

#include <cctype>
#include <vector>

namespace graphstar {
namespace {

// Recursive-descent scanner over the text with whitespace skipping; positions
// refer to the original input.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool AtEnd() {
    SkipSpace();
    return pos_ >= text_.size();
  }
  bool Peek(char c) {
    SkipSpace();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void Expect(char c) {
    SkipSpace();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw GraphParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }
  int Integer() {
    SkipSpace();
    const size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw GraphParseError("expected an integer", start);
    if (pos_ - start > 6) throw GraphParseError("integer too large", start);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }
  Target ParseTarget() {
    SkipSpace();
    const size_t start = pos_;
    if (pos_ >= text_.size()) throw GraphParseError("expected a target", start);
    const char kind = text_[pos_];
    if (kind != 'B' && kind != 'V') throw GraphParseError("expected target B<i> or V<k>", start);
    ++pos_;
    const int index = Integer();
    return kind == 'B' ? Target::B(index) : Target::V(index);
  }
  size_t position() const { return pos_; }

 private:
  std::string_view text_;
  size_t pos_ = 0;
};

Target TargetFromString(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'B' && s[0] != 'V')) {
    throw GraphParseError("bad target '" + s + "'", 0);
  }
  for (size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw GraphParseError("bad target '" + s + "'", i);
  }
  const int index = std::stoi(s.substr(1));
  return s[0] == 'B' ? Target::B(index) : Target::V(index);
}

}  // namespace

AdmissibleGraph ParseGraph(std::string_view text) {
  Scanner in(text);
  in.Expect('m');
  in.Expect('=');
  const int m = in.Integer();
  in.Expect(';');
  in.Expect('n');
  in.Expect('=');
  const int n = in.Integer();
  std::vector<Leg> legs;
  for (int k = 1; k <= n; ++k) {
    in.Expect(';');
    in.Expect('v');
    const size_t at = in.position();
    const int label = in.Integer();
    if (label != k) throw GraphParseError("expected vertex v" + std::to_string(k), at);
    in.Expect(':');
    const Target a = in.ParseTarget();
    in.Expect(',');
    const Target b = in.ParseTarget();
    legs.push_back({a, b});
  }
  if (!in.AtEnd()) throw GraphParseError("trailing characters", in.position());
  return AdmissibleGraph(m, std::move(legs));
}

std::string SerializeGraph(const AdmissibleGraph& g) {
  std::string out = "m=" + std::to_string(g.m()) + ";n=" + std::to_string(g.n());
  for (int k = 1; k <= g.n(); ++k) {
    const Leg& leg = g.leg(k);
    out += ";v" + std::to_string(k) + ":" + ToString(leg[0]) + "," + ToString(leg[1]);
  }
  return out;
}

nlohmann::json GraphToJson(const AdmissibleGraph& g) {
  nlohmann::json legs = nlohmann::json::array();
  for (const Leg& leg : g.legs()) legs.push_back({ToString(leg[0]), ToString(leg[1])});
  return {{"m", g.m()}, {"n", g.n()}, {"legs", legs}};
}

AdmissibleGraph GraphFromJson(const nlohmann::json& j) {
  const int m = j.at("m").get<int>();
  const int n = j.at("n").get<int>();
  const auto& jlegs = j.at("legs");
  if (!jlegs.is_array() || static_cast<int>(jlegs.size()) != n) {
    throw GraphError("JSON graph: 'legs' must list exactly n pairs");
  }
  std::vector<Leg> legs;
  for (const auto& pair : jlegs) {
    if (!pair.is_array() || pair.size() != 2) throw GraphError("JSON graph: each leg entry needs 2 targets");
    legs.push_back({TargetFromString(pair[0].get<std::string>()), TargetFromString(pair[1].get<std::string>())});
  }
  return AdmissibleGraph(m, std::move(legs));
}

}  // namespace graphstar
