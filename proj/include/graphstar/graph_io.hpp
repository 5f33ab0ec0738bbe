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

// Text form, one graph per line:
//
//   m=<int>;n=<int>;v1:<T>,<T>;...;vn:<T>,<T>      <T> := B<i> | V<k>
//
// Whitespace is insignificant. Targets of a pair may come in either order;
// serialization prints canonical graphs with the canonical pair order.
// JSON form: {"m":int,"n":int,"legs":[["B1","V2"],...]}.

#ifndef GRAPHSTAR_GRAPH_IO_HPP_
#define GRAPHSTAR_GRAPH_IO_HPP_

#include <string>
#include <string_view>

#include "graphstar/graph.hpp"
#include "json.hpp"

namespace graphstar {

class GraphParseError : public GraphError {
 public:
  GraphParseError(const std::string& what, size_t position)
      : GraphError(what + " at position " + std::to_string(position)), position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

// Syntax problems raise GraphParseError; invariant violations raise
// GraphError from validation.
AdmissibleGraph ParseGraph(std::string_view text);
std::string SerializeGraph(const AdmissibleGraph& g);
inline std::string SerializeGraph(const CanonicalGraph& g) { return SerializeGraph(g.graph()); }

nlohmann::json GraphToJson(const AdmissibleGraph& g);
inline nlohmann::json GraphToJson(const CanonicalGraph& g) { return GraphToJson(g.graph()); }
AdmissibleGraph GraphFromJson(const nlohmann::json& j);

}  // namespace graphstar

#endif  // GRAPHSTAR_GRAPH_IO_HPP_
