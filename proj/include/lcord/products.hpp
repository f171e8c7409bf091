#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "lcord/graph.hpp"

namespace lcord {

// Vertex layouts.
//
//   join          G1 vertices 0..n1-1, then G2 vertex j at n1 + j.
//   corona        copy i of G2 occupies i*n2 .. i*n2 + n2-1 (i = 0..n1-1);
//                 host vertex i of G1 sits at n1*n2 + i.
//   lexicographic, cartesian, tensor, strong
//                 pair (i, j), i in G1 and j in G2, sits at i*n2 + j.

/// Composite index for the four products on V(G1) x V(G2).
class PairIndex {
 public:
  explicit PairIndex(std::int64_t right_order) : right_order_(right_order) {}

  Vertex compose(Vertex left, Vertex right) const {
    return static_cast<Vertex>(left * right_order_ + right);
  }
  std::pair<Vertex, Vertex> decompose(Vertex composite) const {
    return {static_cast<Vertex>(composite / right_order_),
            static_cast<Vertex>(composite % right_order_)};
  }

 private:
  std::int64_t right_order_;
};

class CoronaIndex {
 public:
  CoronaIndex(std::int64_t host_order, std::int64_t guest_order)
      : host_order_(host_order), guest_order_(guest_order) {}

  /// Vertex `guest` of the copy attached to host `copy`.
  Vertex copy_vertex(Vertex copy, Vertex guest) const {
    return static_cast<Vertex>(copy * guest_order_ + guest);
  }
  Vertex host_vertex(Vertex host) const {
    return static_cast<Vertex>(host_order_ * guest_order_ + host);
  }

 private:
  std::int64_t host_order_;
  std::int64_t guest_order_;
};

Graph join(const Graph& g1, const Graph& g2);
Graph corona(const Graph& g1, const Graph& g2);
Graph lexicographic(const Graph& g1, const Graph& g2);
Graph cartesian(const Graph& g1, const Graph& g2);
Graph tensor(const Graph& g1, const Graph& g2);
Graph strong(const Graph& g1, const Graph& g2);

enum class ProductKind { Join, Corona, Lexicographic, Cartesian, Tensor, Strong };

Graph apply_product(ProductKind kind, const Graph& g1, const Graph& g2);

/// Accepts the short CLI names (join, corona, lex, cart, tensor, strong) and
/// the long ones (lexicographic, cartesian).
std::optional<ProductKind> parse_product_kind(std::string_view name);
std::string_view product_name(ProductKind kind);
/// One-line description of the vertex layout used by `kind`.
std::string_view vertex_map_convention(ProductKind kind);

}  // namespace lcord
