#include "lcord/products.hpp"

#include <string>

#include "lcord/error.hpp"

namespace lcord {

namespace {

void check_bounds(std::string_view what, std::int64_t order, std::int64_t size) {
  if (order > kMaxOrder || size > kMaxSize) {
    throw InvalidArgument(std::string(what) + " would have order " +
                          std::to_string(order) + " and size " +
                          std::to_string(size) + ", beyond the supported limits");
  }
}

// Orders are at most kMaxOrder, so each product below fits in 64 bits.
std::int64_t pair_order(const Graph& g1, const Graph& g2) {
  return g1.order() * g2.order();
}

void append_cartesian(const Graph& g1, const Graph& g2, std::vector<Edge>& out) {
  const PairIndex index(g2.order());
  for (Vertex i = 0; i < g1.order(); ++i) {
    for (const Edge& e : g2.edges()) {
      out.emplace_back(index.compose(i, e.u), index.compose(i, e.v));
    }
  }
  for (const Edge& e : g1.edges()) {
    for (Vertex j = 0; j < g2.order(); ++j) {
      out.emplace_back(index.compose(e.u, j), index.compose(e.v, j));
    }
  }
}

void append_tensor(const Graph& g1, const Graph& g2, std::vector<Edge>& out) {
  const PairIndex index(g2.order());
  for (const Edge& a : g1.edges()) {
    for (const Edge& b : g2.edges()) {
      out.emplace_back(index.compose(a.u, b.u), index.compose(a.v, b.v));
      out.emplace_back(index.compose(a.u, b.v), index.compose(a.v, b.u));
    }
  }
}

}  // namespace

Graph join(const Graph& g1, const Graph& g2) {
  const std::int64_t n1 = g1.order();
  const std::int64_t order = n1 + g2.order();
  const std::int64_t size = g1.size() + g2.size() + n1 * g2.order();
  check_bounds("join", order, size);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(size));
  edges.assign(g1.edges().begin(), g1.edges().end());
  for (const Edge& e : g2.edges()) {
    edges.emplace_back(static_cast<Vertex>(n1 + e.u), static_cast<Vertex>(n1 + e.v));
  }
  for (Vertex a = 0; a < n1; ++a) {
    for (Vertex b = 0; b < g2.order(); ++b) {
      edges.emplace_back(a, static_cast<Vertex>(n1 + b));
    }
  }
  return Graph(order, std::move(edges));
}

Graph corona(const Graph& g1, const Graph& g2) {
  const std::int64_t n = g1.order();
  const std::int64_t order = n * (1 + g2.order());
  const std::int64_t size = g1.size() + n * g2.size() + n * g2.order();
  check_bounds("corona", order, size);
  const CoronaIndex index(n, g2.order());
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(size));
  for (const Edge& e : g1.edges()) {
    edges.emplace_back(index.host_vertex(e.u), index.host_vertex(e.v));
  }
  for (Vertex i = 0; i < n; ++i) {
    for (const Edge& e : g2.edges()) {
      edges.emplace_back(index.copy_vertex(i, e.u), index.copy_vertex(i, e.v));
    }
    for (Vertex j = 0; j < g2.order(); ++j) {
      edges.emplace_back(index.host_vertex(i), index.copy_vertex(i, j));
    }
  }
  return Graph(order, std::move(edges));
}

Graph lexicographic(const Graph& g1, const Graph& g2) {
  const std::int64_t n2 = g2.order();
  const std::int64_t order = pair_order(g1, g2);
  const std::int64_t size = g1.size() * n2 * n2 + g1.order() * g2.size();
  check_bounds("lexicographic product", order, size);
  const PairIndex index(n2);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(size));
  for (Vertex i = 0; i < g1.order(); ++i) {
    for (const Edge& e : g2.edges()) {
      edges.emplace_back(index.compose(i, e.u), index.compose(i, e.v));
    }
  }
  for (const Edge& e : g1.edges()) {
    for (Vertex a = 0; a < n2; ++a) {
      for (Vertex b = 0; b < n2; ++b) {
        edges.emplace_back(index.compose(e.u, a), index.compose(e.v, b));
      }
    }
  }
  return Graph(order, std::move(edges));
}

Graph cartesian(const Graph& g1, const Graph& g2) {
  const std::int64_t order = pair_order(g1, g2);
  const std::int64_t size = g1.order() * g2.size() + g2.order() * g1.size();
  check_bounds("cartesian product", order, size);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(size));
  append_cartesian(g1, g2, edges);
  return Graph(order, std::move(edges));
}

Graph tensor(const Graph& g1, const Graph& g2) {
  const std::int64_t order = pair_order(g1, g2);
  const std::int64_t size = 2 * g1.size() * g2.size();
  check_bounds("tensor product", order, size);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(size));
  append_tensor(g1, g2, edges);
  return Graph(order, std::move(edges));
}

Graph strong(const Graph& g1, const Graph& g2) {
  const std::int64_t order = pair_order(g1, g2);
  const std::int64_t size = g1.order() * g2.size() + g2.order() * g1.size() +
                            2 * g1.size() * g2.size();
  check_bounds("strong product", order, size);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(size));
  append_cartesian(g1, g2, edges);
  append_tensor(g1, g2, edges);
  return Graph(order, std::move(edges));
}

Graph apply_product(ProductKind kind, const Graph& g1, const Graph& g2) {
  switch (kind) {
    case ProductKind::Join:
      return join(g1, g2);
    case ProductKind::Corona:
      return corona(g1, g2);
    case ProductKind::Lexicographic:
      return lexicographic(g1, g2);
    case ProductKind::Cartesian:
      return cartesian(g1, g2);
    case ProductKind::Tensor:
      return tensor(g1, g2);
    case ProductKind::Strong:
      return strong(g1, g2);
  }
  throw InvalidArgument("unknown product kind");
}

std::optional<ProductKind> parse_product_kind(std::string_view name) {
  if (name == "join") return ProductKind::Join;
  if (name == "corona") return ProductKind::Corona;
  if (name == "lex" || name == "lexicographic") return ProductKind::Lexicographic;
  if (name == "cart" || name == "cartesian") return ProductKind::Cartesian;
  if (name == "tensor") return ProductKind::Tensor;
  if (name == "strong") return ProductKind::Strong;
  return std::nullopt;
}

std::string_view product_name(ProductKind kind) {
  switch (kind) {
    case ProductKind::Join:
      return "join";
    case ProductKind::Corona:
      return "corona";
    case ProductKind::Lexicographic:
      return "lexicographic";
    case ProductKind::Cartesian:
      return "cartesian";
    case ProductKind::Tensor:
      return "tensor";
    case ProductKind::Strong:
      return "strong";
  }
  return "?";
}

std::string_view vertex_map_convention(ProductKind kind) {
  switch (kind) {
    case ProductKind::Join:
      return "g1 vertex i -> i; g2 vertex j -> |V(g1)| + j";
    case ProductKind::Corona:
      return "copy i, g2 vertex j -> i*|V(g2)| + j; host i -> |V(g1)|*|V(g2)| + i";
    case ProductKind::Lexicographic:
    case ProductKind::Cartesian:
    case ProductKind::Tensor:
    case ProductKind::Strong:
      return "(i, j) with i in g1, j in g2 -> i*|V(g2)| + j";
  }
  return "?";
}

}  // namespace lcord
