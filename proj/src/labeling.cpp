#include "lcord/labeling.hpp"

#include <string>

#include "lcord/error.hpp"

namespace lcord {

Labeling::Labeling(std::vector<std::int64_t> assign) : assign_(std::move(assign)) {
  const auto n = static_cast<std::int64_t>(assign_.size());
  if (n < 1) throw InvalidArgument("labeling must cover at least one vertex");
  std::vector<char> used(assign_.size() + 1, 0);
  for (std::int64_t value : assign_) {
    if (value < 1 || value > n) {
      throw InvalidArgument("label " + std::to_string(value) +
                            " outside {1.." + std::to_string(n) + "}");
    }
    if (used[static_cast<std::size_t>(value)]) {
      throw InvalidArgument("label " + std::to_string(value) + " used twice");
    }
    used[static_cast<std::size_t>(value)] = 1;
  }
}

Labeling::Labeling(const Graph& g, std::vector<std::int64_t> assign)
    : Labeling(std::move(assign)) {
  if (order() != g.order()) {
    throw InvalidArgument("labeling has " + std::to_string(order()) +
                          " entries but the graph has order " +
                          std::to_string(g.order()));
  }
}

Labeling Labeling::identity(std::int64_t order) {
  std::vector<std::int64_t> assign(static_cast<std::size_t>(order));
  for (std::int64_t v = 0; v < order; ++v) assign[static_cast<std::size_t>(v)] = v + 1;
  return Labeling(std::move(assign));
}

int edge_label(std::int64_t sum, const LegendreContext& ctx) {
  // The zero class is decided before any symbol is consulted.
  if (floor_mod(sum, ctx.prime()) == 0) return 0;
  return ctx.symbol(sum) == 1 ? 1 : 0;
}

namespace {

void require_matching(const Graph& g, const Labeling& lab) {
  if (lab.order() != g.order()) {
    throw InvalidArgument("labeling has " + std::to_string(lab.order()) +
                          " entries but the graph has order " +
                          std::to_string(g.order()));
  }
}

}  // namespace

EdgeTally induced_tally(const Graph& g, const Labeling& lab,
                        const LegendreContext& ctx) {
  require_matching(g, lab);
  EdgeTally tally;
  for (const Edge& e : g.edges()) {
    if (edge_label(lab[e.u] + lab[e.v], ctx) == 1) {
      ++tally.e1;
    } else {
      ++tally.e0;
    }
  }
  return tally;
}

bool is_cordial(const Graph& g, const Labeling& lab, const LegendreContext& ctx) {
  if (!is_connected(g)) {
    throw AdmissionError("Legendre cordial labelings are defined for connected graphs only");
  }
  return induced_tally(g, lab, ctx).cordial();
}

RhoEta rho_eta(const Graph& g, const Labeling& lab, const LegendreContext& ctx) {
  require_matching(g, lab);
  RhoEta out;
  for (const Edge& e : g.edges()) {
    if (edge_label(lab[e.u] + lab[e.v], ctx) == 1) {
      out.rho.push_back(e);
    } else {
      out.eta.push_back(e);
    }
  }
  return out;
}

}  // namespace lcord
