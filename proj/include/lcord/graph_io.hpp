#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "lcord/graph.hpp"
#include "lcord/labeling.hpp"
#include "lcord/numtheory.hpp"

namespace lcord {

/// {"order": n, "edges": [[u, v], ...], "names": [...]}; "names" only when set.
nlohmann::ordered_json graph_to_json(const Graph& g);
/// Unknown keys are ignored. Throws InvalidArgument on a malformed document.
Graph graph_from_json(const nlohmann::ordered_json& doc);

/// {"p": p, "assign": [label_of_vertex_0, ...]}.
nlohmann::ordered_json labeling_to_json(const Labeling& lab, std::int64_t p);

struct LabelingDocument {
  std::optional<std::int64_t> p;
  Labeling labeling;
};

/// Accepts the object form above or a bare array of labels.
LabelingDocument labeling_from_json(const nlohmann::ordered_json& doc);

/// {"e0": .., "e1": .., "cordial": ..}.
nlohmann::ordered_json tally_to_json(const EdgeTally& tally);

/// Graphviz rendering. With a labeling, vertices show their labels and edges
/// are colored by induced label (1 solid blue, 0 dashed red).
std::string graph_to_dot(const Graph& g, const Labeling* lab = nullptr,
                         const LegendreContext* ctx = nullptr);

}  // namespace lcord
