#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lcord/graph.hpp"
#include "lcord/numtheory.hpp"

namespace lcord {

/// Bijection from the vertices of a graph of order n onto {1, ..., n},
/// stored densely by vertex index.
class Labeling {
 public:
  /// Throws InvalidArgument unless `assign` is a permutation of 1..size().
  explicit Labeling(std::vector<std::int64_t> assign);

  /// Also checks that the labeling covers exactly the vertices of `g`.
  Labeling(const Graph& g, std::vector<std::int64_t> assign);

  /// Vertex v gets label v + 1.
  static Labeling identity(std::int64_t order);

  std::int64_t order() const noexcept {
    return static_cast<std::int64_t>(assign_.size());
  }
  std::int64_t operator[](Vertex v) const {
    return assign_[static_cast<std::size_t>(v)];
  }
  std::span<const std::int64_t> values() const noexcept { return assign_; }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<std::int64_t> assign_;
};

/// Induced label of an edge whose endpoint labels add up to `sum`:
/// 0 when sum = 0 (mod p) or (sum/p) = -1, 1 when (sum/p) = +1.
int edge_label(std::int64_t sum, const LegendreContext& ctx);

struct EdgeTally {
  std::int64_t e0 = 0;
  std::int64_t e1 = 0;

  /// e0 - e1.
  std::int64_t difference() const noexcept { return e0 - e1; }
  /// e1 - e0, i.e. |rho| - |eta|.
  std::int64_t excess() const noexcept { return e1 - e0; }
  bool cordial() const noexcept { return difference() >= -1 && difference() <= 1; }

  friend bool operator==(const EdgeTally&, const EdgeTally&) = default;
};

/// Throws InvalidArgument when the labeling's order differs from the graph's.
EdgeTally induced_tally(const Graph& g, const Labeling& lab,
                        const LegendreContext& ctx);

/// |e0 - e1| <= 1. Throws AdmissionError on a disconnected graph.
bool is_cordial(const Graph& g, const Labeling& lab, const LegendreContext& ctx);

/// Edges split by induced label: rho holds the label-1 edges, eta the
/// label-0 edges. Both keep the graph's canonical edge order.
struct RhoEta {
  std::vector<Edge> rho;
  std::vector<Edge> eta;
};

RhoEta rho_eta(const Graph& g, const Labeling& lab, const LegendreContext& ctx);

}  // namespace lcord
