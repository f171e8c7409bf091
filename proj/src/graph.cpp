#include "lcord/graph.hpp"

#include <algorithm>
#include <queue>

#include "lcord/error.hpp"

namespace lcord {

Graph::Graph(std::int64_t order, std::vector<Edge> edges,
             std::vector<std::string> names)
    : edges_(std::move(edges)), names_(std::move(names)) {
  if (order < 1) {
    throw InvalidArgument("graph order must be at least 1, got " +
                          std::to_string(order));
  }
  if (order > kMaxOrder) {
    throw InvalidArgument("graph order " + std::to_string(order) +
                          " exceeds the limit " + std::to_string(kMaxOrder));
  }
  if (static_cast<std::int64_t>(edges_.size()) > kMaxSize) {
    throw InvalidArgument("graph size exceeds the limit " +
                          std::to_string(kMaxSize));
  }
  if (!names_.empty() && static_cast<std::int64_t>(names_.size()) != order) {
    throw InvalidArgument("expected " + std::to_string(order) +
                          " vertex names, got " + std::to_string(names_.size()));
  }
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= order) {
      throw InvalidArgument("edge {" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + "} out of range");
    }
    if (e.u == e.v) {
      throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InvalidArgument("repeated edge {" + std::to_string(dup->u) + "," +
                          std::to_string(dup->v) + "}");
  }
  adjacency_.resize(static_cast<std::size_t>(order));
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a == b) return false;
  return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
}

Graph make_path(std::int64_t n) {
  if (n < 1) throw InvalidArgument("path order must be at least 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph make_cycle(std::int64_t n) {
  if (n < 3) {
    throw InvalidArgument("cycle order must be at least 3, got " +
                          std::to_string(n));
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph(n, std::move(edges));
}

Graph make_complete(std::int64_t n) {
  if (n < 1) throw InvalidArgument("complete graph order must be at least 1");
  if (n > 10'000) throw InvalidArgument("complete graph order too large");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return Graph(n, std::move(edges));
}

Graph make_star(std::int64_t n) {
  if (n < 1) throw InvalidArgument("star order must be at least 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, std::move(edges));
}

Graph make_complete_bipartite(std::int64_t r, std::int64_t s) {
  if (r < 1 || s < 1) {
    throw InvalidArgument("complete bipartite sides must be non-empty");
  }
  if (r * s > kMaxSize) throw InvalidArgument("complete bipartite too large");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < r; ++a) {
    for (Vertex b = 0; b < s; ++b) {
      edges.emplace_back(a, static_cast<Vertex>(r + b));
    }
  }
  return Graph(r + s, std::move(edges));
}

bool is_connected(const Graph& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::int64_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

std::vector<Vertex> Bipartition::side(int which) const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < side_of.size(); ++v) {
    if (side_of[v] == which) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

namespace {

// BFS 2-coloring of every component; nullopt on an odd cycle.
std::optional<std::vector<int>> two_color(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), 0);
  for (Vertex start = 0; start < g.order(); ++start) {
    if (color[static_cast<std::size_t>(start)] != 0) continue;
    color[static_cast<std::size_t>(start)] = 1;
    std::queue<Vertex> queue;
    queue.push(start);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      const int c = color[static_cast<std::size_t>(v)];
      for (Vertex w : g.neighbors(v)) {
        int& cw = color[static_cast<std::size_t>(w)];
        if (cw == 0) {
          cw = 3 - c;
          queue.push(w);
        } else if (cw == c) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

}  // namespace

std::optional<Bipartition> bipartition(const Graph& g) {
  auto color = two_color(g);
  if (!color) return std::nullopt;
  const bool has_two = std::find(color->begin(), color->end(), 2) != color->end();
  if (!has_two) return std::nullopt;
  return Bipartition{std::move(*color)};
}

bool has_odd_cycle(const Graph& g) { return !two_color(g).has_value(); }

}  // namespace lcord
