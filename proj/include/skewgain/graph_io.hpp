#ifndef SKEWGAIN_GRAPH_IO_HPP
#define SKEWGAIN_GRAPH_IO_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "skewgain/graph.hpp"

namespace skewgain {

using AnyGraph = std::variant<SkewGainGraph<RationalId>, SkewGainGraph<ComplexConj>>;

// File format (UTF-8 JSON):
//   { "backend": "rational-id" | "complex-conj",
//     "n": <int>,
//     "edges": [ {"tail": <int>, "head": <int>, "gain": <string>}, ... ] }
// Edge array order is significant. Gain strings are canonical on output.
AnyGraph parse_graph(const nlohmann::json& doc);
AnyGraph load_graph(const std::string& path);

template <class F>
nlohmann::ordered_json graph_to_json(const SkewGainGraph<F>& g) {
  nlohmann::ordered_json doc;
  doc["backend"] = F::id;
  doc["n"] = g.vertex_count();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) {
    doc["edges"].push_back({{"tail", e.tail},
                            {"head", e.head},
                            {"gain", F::format_gain(e.gain)}});
  }
  return doc;
}

nlohmann::ordered_json graph_to_json(const AnyGraph& g);
void save_graph(const AnyGraph& g, const std::string& path);

// Backend id of whichever alternative is held.
const char* backend_id(const AnyGraph& g);

}  // namespace skewgain

#endif  // SKEWGAIN_GRAPH_IO_HPP
