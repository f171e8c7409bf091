#pragma once

// Test-only reference implementations. Nothing here calls into the library's
// number theory, labeling or search code; lcord::Graph is used purely as an
// edge container.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lcord/graph.hpp"

namespace oracle {

/// {x^2 mod p : 1 <= x <= p-1}.
inline std::set<std::int64_t> squares_mod(std::int64_t p) {
  std::set<std::int64_t> out;
  for (std::int64_t x = 1; x < p; ++x) out.insert(x * x % p);
  return out;
}

/// Legendre symbol by enumerating squares.
inline int symbol(std::int64_t a, std::int64_t p) {
  const std::int64_t r = ((a % p) + p) % p;
  if (r == 0) return 0;
  return squares_mod(p).count(r) ? 1 : -1;
}

/// Induced edge label straight from the definition.
class EdgeLabeler {
 public:
  explicit EdgeLabeler(std::int64_t p) : p_(p), squares_(squares_mod(p)) {}

  int operator()(std::int64_t sum) const {
    const std::int64_t r = sum % p_;
    if (r == 0) return 0;
    return squares_.count(r) ? 1 : 0;
  }

 private:
  std::int64_t p_;
  std::set<std::int64_t> squares_;
};

struct Tally {
  std::int64_t e0 = 0;
  std::int64_t e1 = 0;
};

inline Tally tally(const lcord::Graph& g, const std::vector<std::int64_t>& assign,
                   std::int64_t p) {
  const EdgeLabeler label(p);
  Tally t;
  for (const lcord::Edge& e : g.edges()) {
    if (label(assign[static_cast<std::size_t>(e.u)] + assign[static_cast<std::size_t>(e.v)]) == 1) {
      ++t.e1;
    } else {
      ++t.e0;
    }
  }
  return t;
}

struct Enumeration {
  std::uint64_t count = 0;
  std::uint64_t total = 0;
  std::vector<std::int64_t> first;  // empty when count == 0
  std::set<std::int64_t> excesses;  // every achieved e1 - e0
};

/// Every permutation of 1..n, no pruning. Counts those with e1 - e0 in [lo, hi].
inline Enumeration enumerate(const lcord::Graph& g, std::int64_t p, std::int64_t lo,
                             std::int64_t hi) {
  std::vector<std::int64_t> assign(static_cast<std::size_t>(g.order()));
  std::iota(assign.begin(), assign.end(), 1);
  Enumeration out;
  do {
    const Tally t = tally(g, assign, p);
    const std::int64_t excess = t.e1 - t.e0;
    out.excesses.insert(excess);
    ++out.total;
    if (lo <= excess && excess <= hi) {
      if (out.count++ == 0) out.first = assign;
    }
  } while (std::next_permutation(assign.begin(), assign.end()));
  return out;
}

inline bool is_permutation_of_1_to_n(const std::vector<std::int64_t>& values) {
  std::vector<std::int64_t> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<std::int64_t>(i) + 1) return false;
  }
  return true;
}

// ---- graph corpora ---------------------------------------------------------

inline lcord::Graph edges_graph(std::int64_t n,
                                const std::vector<std::pair<int, int>>& pairs) {
  std::vector<lcord::Edge> edges;
  for (auto [a, b] : pairs) edges.emplace_back(a, b);
  return lcord::Graph(n, std::move(edges));
}

struct Named {
  std::string name;
  lcord::Graph graph;
};

/// P_n, C_n, K_n and stars for 1 <= n <= max_order (cycles from 3).
inline std::vector<Named> families(std::int64_t max_order) {
  std::vector<Named> out;
  for (std::int64_t n = 1; n <= max_order; ++n) {
    out.push_back({"P" + std::to_string(n), lcord::make_path(n)});
    if (n >= 3) out.push_back({"C" + std::to_string(n), lcord::make_cycle(n)});
    out.push_back({"K" + std::to_string(n), lcord::make_complete(n)});
    if (n >= 4) out.push_back({"S" + std::to_string(n), lcord::make_star(n)});
  }
  return out;
}

/// Uniform labelled tree on n >= 2 vertices from a random Pruefer sequence.
template <class Rng>
lcord::Graph random_tree(std::int64_t n, Rng& rng) {
  if (n == 1) return lcord::Graph(1, {});
  if (n == 2) return edges_graph(2, {{0, 1}});
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (int& c : code) c = pick(rng);
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[static_cast<std::size_t>(c)];
  std::vector<std::pair<int, int>> pairs;
  for (int c : code) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[static_cast<std::size_t>(leaf)] == 1) {
        pairs.emplace_back(leaf, c);
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(c)];
        break;
      }
    }
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) {
      if (u < 0) {
        u = v;
      } else {
        pairs.emplace_back(u, v);
        break;
      }
    }
  }
  return edges_graph(n, pairs);
}

/// Copy of `g` with up to `extra` random non-edges added.
template <class Rng>
lcord::Graph add_random_edges(const lcord::Graph& g, std::int64_t extra, Rng& rng) {
  std::vector<lcord::Edge> missing;
  for (int a = 0; a < g.order(); ++a) {
    for (int b = a + 1; b < g.order(); ++b) {
      if (!g.has_edge(a, b)) missing.emplace_back(a, b);
    }
  }
  std::shuffle(missing.begin(), missing.end(), rng);
  std::vector<lcord::Edge> edges(g.edges().begin(), g.edges().end());
  for (std::int64_t i = 0; i < extra && i < static_cast<std::int64_t>(missing.size()); ++i) {
    edges.push_back(missing[static_cast<std::size_t>(i)]);
  }
  return lcord::Graph(g.order(), std::move(edges));
}

/// Random connected graph: a random tree plus `extra` edges.
template <class Rng>
lcord::Graph random_connected(std::int64_t n, std::int64_t extra, Rng& rng) {
  return add_random_edges(random_tree(n, rng), extra, rng);
}

/// Random graph (possibly disconnected) with each pair present with prob. q.
template <class Rng>
lcord::Graph random_graph(std::int64_t n, double q, Rng& rng) {
  std::bernoulli_distribution coin(q);
  std::vector<lcord::Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.emplace_back(a, b);
    }
  }
  return lcord::Graph(n, std::move(edges));
}

/// BFS connectivity, independent of the library.
inline bool connected(const lcord::Graph& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.order()));
  for (const lcord::Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int w : adj[static_cast<std::size_t>(queue[i])]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  return static_cast<std::int64_t>(queue.size()) == g.order();
}

/// Direct edge-set definitions of the four pair products, by adjacency test
/// over all vertex pairs. Used to cross-check the library's builders.
enum class Pair { Lexicographic, Cartesian, Tensor, Strong };

inline std::set<std::pair<int, int>> pair_product_edges(const lcord::Graph& g1,
                                                        const lcord::Graph& g2, Pair kind) {
  const auto n1 = static_cast<int>(g1.order());
  const auto n2 = static_cast<int>(g2.order());
  std::set<std::pair<int, int>> out;
  for (int a1 = 0; a1 < n1; ++a1) {
    for (int b1 = 0; b1 < n2; ++b1) {
      for (int a2 = 0; a2 < n1; ++a2) {
        for (int b2 = 0; b2 < n2; ++b2) {
          const int x = a1 * n2 + b1;
          const int y = a2 * n2 + b2;
          if (x >= y) continue;
          const bool e1 = g1.has_edge(a1, a2);
          const bool e2 = g2.has_edge(b1, b2);
          bool adjacent = false;
          switch (kind) {
            case Pair::Lexicographic:
              adjacent = e1 || (a1 == a2 && e2);
              break;
            case Pair::Cartesian:
              adjacent = (a1 == a2 && e2) || (b1 == b2 && e1);
              break;
            case Pair::Tensor:
              adjacent = e1 && e2;
              break;
            case Pair::Strong:
              adjacent = (a1 == a2 && e2) || (b1 == b2 && e1) || (e1 && e2);
              break;
          }
          if (adjacent) out.emplace(x, y);
        }
      }
    }
  }
  return out;
}

inline std::set<std::pair<int, int>> edge_set(const lcord::Graph& g) {
  std::set<std::pair<int, int>> out;
  for (const lcord::Edge& e : g.edges()) out.emplace(e.u, e.v);
  return out;
}

}  // namespace oracle
