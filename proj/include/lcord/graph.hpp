#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lcord {

using Vertex = std::int32_t;

/// Upper bound on the order of any graph the library will materialize.
inline constexpr std::int64_t kMaxOrder = 1'000'000;
/// Upper bound on the size of any graph the library will materialize.
inline constexpr std::int64_t kMaxSize = 50'000'000;

/// Unordered vertex pair stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..order-1. Edges are kept sorted and
/// deduplicated-by-construction (duplicates are rejected), so two graphs with
/// the same edge set compare equal regardless of insertion order.
/// Disconnected graphs are representable.
class Graph {
 public:
  /// Throws InvalidArgument on order < 1, self-loops, repeated edges,
  /// endpoints out of range, or names of the wrong length.
  Graph(std::int64_t order, std::vector<Edge> edges,
        std::vector<std::string> names = {});

  std::int64_t order() const noexcept {
    return static_cast<std::int64_t>(adjacency_.size());
  }
  std::int64_t size() const noexcept {
    return static_cast<std::int64_t>(edges_.size());
  }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return adjacency_.at(static_cast<std::size_t>(v));
  }
  std::int64_t degree(Vertex v) const {
    return static_cast<std::int64_t>(neighbors(v).size());
  }
  bool has_edge(Vertex a, Vertex b) const;

  /// Optional display names; empty when none were given.
  const std::vector<std::string>& names() const noexcept { return names_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_ &&
           a.names_ == b.names_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> names_;
};

/// v1 - v2 - ... - vn.
Graph make_path(std::int64_t n);
/// Requires n >= 3.
Graph make_cycle(std::int64_t n);
Graph make_complete(std::int64_t n);
/// Star of order n: vertex 0 is the center, joined to 1..n-1.
Graph make_star(std::int64_t n);
/// K_{r,s}: vertices 0..r-1 on one side, r..r+s-1 on the other.
Graph make_complete_bipartite(std::int64_t r, std::int64_t s);

bool is_connected(const Graph& g);

/// Two-coloring with both sides non-empty.
struct Bipartition {
  /// 1 or 2 for each vertex.
  std::vector<int> side_of;

  std::vector<Vertex> side(int which) const;
};

/// A proper 2-coloring with two non-empty sides, or nullopt when the graph
/// has an odd cycle or a single vertex. On disconnected graphs every
/// component is colored independently starting from side 1.
std::optional<Bipartition> bipartition(const Graph& g);

/// True iff some component of `g` is not bipartite.
bool has_odd_cycle(const Graph& g);

}  // namespace lcord
