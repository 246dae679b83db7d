#ifndef NCG_JSON_IO_HPP
#define NCG_JSON_IO_HPP

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ncg/graph.hpp"
#include "ncg/rational.hpp"

namespace ncg {

// All reports use ordered_json so that serialization is byte-deterministic.
using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Graph file format: {"n": <int>, "edges": [[u, v, owner], ...]}
inline OwnedGraph graph_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("graph: top-level value must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("graph: field \"n\" missing or not an integer");
  OwnedGraph g(j["n"].get<int>());
  if (g.n < 0) throw ParseError("graph: field \"n\" must be nonnegative");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw ParseError("graph: field \"edges\" missing or not an array");
  size_t idx = 0;
  for (const auto& e : j["edges"]) {
    std::string where = "graph: edges[" + std::to_string(idx++) + "]";
    if (!e.is_array() || e.size() != 3)
      throw ParseError(where + ": expected [u, v, owner]");
    for (const auto& x : e)
      if (!x.is_number_integer()) throw ParseError(where + ": entries must be integers");
    try {
      g.add_edge(e[0].get<int>(), e[1].get<int>(), e[2].get<int>());
    } catch (const std::invalid_argument& ex) {
      throw ParseError(where + ": " + ex.what());
    }
  }
  return g;
}

inline OwnedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(path + ": " + ex.what());
  }
  return graph_from_json(j);
}

inline Json graph_to_json(const OwnedGraph& g) {
  Json j;
  j["n"] = g.n;
  j["edges"] = Json::array();
  for (const auto& e : g.edges) j["edges"].push_back({e.u, e.v, e.owner});
  return j;
}

inline Json rational_to_json(const Rational& q) { return rational_to_string(q); }

}  // namespace ncg

#endif  // NCG_JSON_IO_HPP
