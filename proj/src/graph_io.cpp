#include "lcord/graph_io.hpp"

#include <sstream>

#include "lcord/error.hpp"

namespace lcord {

using json = nlohmann::ordered_json;

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  json doc{{"order", g.order()}, {"edges", std::move(edges)}};
  if (!g.names().empty()) doc["names"] = g.names();
  return doc;
}

Graph graph_from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw InvalidArgument("graph document must be an object");
    const auto order = doc.at("order").get<std::int64_t>();
    std::vector<Edge> edges;
    for (const json& pair : doc.value("edges", json::array())) {
      if (!pair.is_array() || pair.size() != 2) {
        throw InvalidArgument("each edge must be a pair [u, v]");
      }
      const auto u = pair[0].get<std::int64_t>();
      const auto v = pair[1].get<std::int64_t>();
      if (u < 0 || v < 0 || u >= order || v >= order) {
        throw InvalidArgument("edge [" + std::to_string(u) + "," + std::to_string(v) +
                              "] out of range");
      }
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    std::vector<std::string> names;
    if (doc.contains("names")) names = doc.at("names").get<std::vector<std::string>>();
    return Graph(order, std::move(edges), std::move(names));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed graph document: ") + e.what());
  }
}

json labeling_to_json(const Labeling& lab, std::int64_t p) {
  return json{{"p", p}, {"assign", std::vector<std::int64_t>(lab.values().begin(),
                                                             lab.values().end())}};
}

LabelingDocument labeling_from_json(const json& doc) {
  try {
    if (doc.is_array()) {
      return {std::nullopt, Labeling(doc.get<std::vector<std::int64_t>>())};
    }
    if (!doc.is_object()) throw InvalidArgument("labeling document must be an object");
    std::optional<std::int64_t> p;
    if (doc.contains("p") && !doc.at("p").is_null()) p = doc.at("p").get<std::int64_t>();
    return {p, Labeling(doc.at("assign").get<std::vector<std::int64_t>>())};
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed labeling document: ") + e.what());
  }
}

json tally_to_json(const EdgeTally& tally) {
  return json{{"e0", tally.e0}, {"e1", tally.e1}, {"cordial", tally.cordial()}};
}

std::string graph_to_dot(const Graph& g, const Labeling* lab, const LegendreContext* ctx) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    std::string text = g.names().empty() ? std::to_string(v)
                                         : g.names()[static_cast<std::size_t>(v)];
    if (lab != nullptr) text += " / " + std::to_string((*lab)[v]);
    out << " [label=\"" << text << "\"];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (lab != nullptr && ctx != nullptr) {
      const int label = edge_label((*lab)[e.u] + (*lab)[e.v], *ctx);
      out << (label == 1 ? " [color=blue, label=\"1\"]"
                         : " [color=red, style=dashed, label=\"0\"]");
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace lcord
