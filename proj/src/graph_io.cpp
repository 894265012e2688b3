#include "skewgain/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace skewgain {

namespace {

template <class F>
SkewGainGraph<F> parse_typed(const nlohmann::json& doc) {
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw Error("ParseError", "graph file needs an integer field \"n\"");
  }
  const int n = doc["n"].get<int>();
  std::vector<OrientedEdge<F>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw Error("ParseError", "\"edges\" must be an array");
    for (const auto& item : doc["edges"]) {
      if (!item.contains("tail") || !item.contains("head") || !item.contains("gain") ||
          !item["tail"].is_number_integer() || !item["head"].is_number_integer() ||
          !item["gain"].is_string()) {
        throw Error("ParseError", "each edge needs integer tail/head and a string gain");
      }
      edges.push_back({item["tail"].get<int>(), item["head"].get<int>(),
                       F::parse_gain(item["gain"].get<std::string>())});
    }
  }
  return SkewGainGraph<F>::build(n, std::move(edges));
}

}  // namespace

AnyGraph parse_graph(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error("ParseError", "graph file must be a JSON object");
  const std::string backend = doc.value("backend", std::string(RationalId::id));
  if (backend == RationalId::id) return parse_typed<RationalId>(doc);
  if (backend == ComplexConj::id) return parse_typed<ComplexConj>(doc);
  throw Error("ParseError", "unknown backend '" + backend + "'");
}

AnyGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IoError", "cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error("ParseError", std::string("invalid JSON: ") + e.what());
  }
  return parse_graph(doc);
}

nlohmann::ordered_json graph_to_json(const AnyGraph& g) {
  return std::visit([](const auto& typed) { return graph_to_json(typed); }, g);
}

void save_graph(const AnyGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("IoError", "cannot write '" + path + "'");
  out << graph_to_json(g).dump(2) << "\n";
}

const char* backend_id(const AnyGraph& g) {
  return std::visit([](const auto& typed) {
    return std::decay_t<decltype(typed)>::Field::id;
  }, g);
}

}  // namespace skewgain
