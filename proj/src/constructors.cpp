#include "lcord/constructors.hpp"

#include <string>

#include "lcord/error.hpp"
#include "lcord/products.hpp"

namespace lcord {

std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::CoronaPath:
      return "corona-path";
    case Theorem::KpTensor:
      return "kp-tensor";
    case Theorem::Join:
      return "join";
    case Theorem::Corona:
      return "corona";
    case Theorem::Lexicographic:
      return "lexicographic";
    case Theorem::Cartesian:
      return "cartesian";
    case Theorem::Tensor:
      return "tensor";
    case Theorem::Strong:
      return "strong";
  }
  return "?";
}

std::optional<Theorem> parse_theorem(std::string_view name) {
  for (Theorem t : {Theorem::CoronaPath, Theorem::KpTensor, Theorem::Join,
                    Theorem::Corona, Theorem::Lexicographic, Theorem::Cartesian,
                    Theorem::Tensor, Theorem::Strong}) {
    if (theorem_name(t) == name) return t;
  }
  if (name == "lex") return Theorem::Lexicographic;
  if (name == "cart") return Theorem::Cartesian;
  return std::nullopt;
}

bool theorem_uses_g2(Theorem t) {
  return t != Theorem::CoronaPath && t != Theorem::KpTensor;
}

bool theorem_needs_lab_g1(Theorem t) {
  return t == Theorem::Join || t == Theorem::Corona || t == Theorem::Cartesian ||
         t == Theorem::Tensor || t == Theorem::Strong;
}

bool theorem_needs_lab_g2(Theorem t) {
  return t == Theorem::Join || t == Theorem::Corona || t == Theorem::Lexicographic;
}

std::optional<BalanceCondition> balance_condition(Theorem t, const Graph& g1,
                                                  const Graph* g2, std::int64_t p) {
  if (!theorem_uses_g2(t) || g2 == nullptr) return std::nullopt;
  switch (t) {
    case Theorem::Join: {
      if (g1.order() % p != 0) return std::nullopt;
      const std::int64_t nm = g1.order() / p * g2->order();
      return BalanceCondition{1, 1, nm - 1, nm + 1};
    }
    case Theorem::Corona: {
      if (g2->order() % p != 0) return std::nullopt;
      const std::int64_t n = g1.order();
      const std::int64_t nm = n * (g2->order() / p);
      return BalanceCondition{1, n, nm - 1, nm + 1};
    }
    case Theorem::Lexicographic: {
      if (g2->order() % p != 0) return std::nullopt;
      const std::int64_t m = g2->order() / p;
      return BalanceCondition{0, 1, m * m * p, m * m * p};
    }
    case Theorem::Cartesian: {
      if (g1.order() % p != 0 || g2->size() % g2->order() != 0) return std::nullopt;
      const std::int64_t mk = g1.order() / p * (g2->size() / g2->order());
      return BalanceCondition{1, 0, mk, mk};
    }
    case Theorem::Tensor:
      if (g1.order() % p != 0) return std::nullopt;
      return BalanceCondition{1, 0, 0, 0};
    case Theorem::Strong:
      if (g1.order() != 3 * p) return std::nullopt;
      return BalanceCondition{1, 0, 1, 1};
    case Theorem::CoronaPath:
    case Theorem::KpTensor:
      break;
  }
  return std::nullopt;
}

namespace {

class Checks {
 public:
  void add(CheckKind kind, std::string condition, bool ok,
           std::optional<std::int64_t> lhs = std::nullopt,
           std::optional<std::int64_t> rhs = std::nullopt) {
    items_.push_back(HypothesisCheck{kind, std::move(condition), ok, lhs, rhs});
  }

  void connected(std::string_view which, const Graph& g) {
    add(CheckKind::Admission, std::string(which) + " is connected", is_connected(g));
  }

  void divisible(std::string condition, std::int64_t value, std::int64_t by) {
    add(CheckKind::Structure, std::move(condition), value % by == 0, value, by);
  }

  void equal(CheckKind kind, std::string condition, std::int64_t lhs, std::int64_t rhs) {
    add(kind, std::move(condition), lhs == rhs, lhs, rhs);
  }

  std::vector<HypothesisCheck> release() { return std::move(items_); }
  const std::vector<HypothesisCheck>& items() const { return items_; }

 private:
  std::vector<HypothesisCheck> items_;
};

[[noreturn]] void raise(Theorem t, const HypothesisCheck& check) {
  std::string message = std::string(theorem_name(t)) + ": hypothesis violated: " +
                        check.condition;
  if (check.lhs && check.rhs) {
    message += " (lhs " + std::to_string(*check.lhs) + ", rhs " +
               std::to_string(*check.rhs) + ")";
  }
  switch (check.kind) {
    case CheckKind::Admission:
      throw AdmissionError(message);
    case CheckKind::Connectivity:
      throw ConnectivityViolation(check.condition, message, check.lhs, check.rhs);
    case CheckKind::Structure:
    case CheckKind::Balance:
      break;
  }
  throw HypothesisViolation(check.condition, message, check.lhs, check.rhs);
}

struct RhoEtaCounts {
  std::int64_t rho = 0;
  std::int64_t eta = 0;

  std::int64_t excess() const { return rho - eta; }
};

RhoEtaCounts counts(const Graph& g, const Labeling& lab, const LegendreContext& ctx) {
  const EdgeTally t = induced_tally(g, lab, ctx);
  return {t.e1, t.e0};
}

void require_order(std::string_view which, const Graph& g, const Labeling& lab) {
  if (lab.order() != g.order()) {
    throw InvalidArgument("base labeling of " + std::string(which) + " has " +
                          std::to_string(lab.order()) + " entries but the graph has order " +
                          std::to_string(g.order()));
  }
}

// Hypotheses of each theorem. Labelings may be null; balance checks are then
// left out.
std::vector<HypothesisCheck> hypotheses(Theorem t, const Graph& g1, const Graph* g2,
                                        const Labeling* lab1, const Labeling* lab2,
                                        const LegendreContext& ctx) {
  const std::int64_t p = ctx.prime();
  if (theorem_uses_g2(t) && g2 == nullptr) {
    throw InvalidArgument(std::string(theorem_name(t)) + " needs a second factor g2");
  }
  if (lab1 != nullptr) require_order("g1", g1, *lab1);
  if (lab2 != nullptr && g2 != nullptr) require_order("g2", *g2, *lab2);

  Checks checks;
  switch (t) {
    case Theorem::CoronaPath: {
      const std::int64_t n = g1.order();
      checks.connected("g", g1);
      checks.add(CheckKind::Structure, "order n >= 2", n >= 2, n, 2);
      const std::int64_t q = g1.size();
      checks.add(CheckKind::Structure, "size in {n-1, n, n+1}", q >= n - 1 && q <= n + 1,
                 q, n);
      checks.add(CheckKind::Structure, "(2/p) = -1, i.e. p = +-3 (mod 8)",
                 two_symbol_rule(p) == -1, p % 8, 3);
      break;
    }
    case Theorem::KpTensor:
      checks.connected("g", g1);
      checks.add(CheckKind::Structure, "g is bipartite", bipartition(g1).has_value());
      break;
    case Theorem::Join:
      checks.divisible("order of g1 is a multiple of p", g1.order(), p);
      break;
    case Theorem::Corona:
      checks.connected("g1", g1);
      checks.divisible("order of g2 is a multiple of p", g2->order(), p);
      break;
    case Theorem::Lexicographic:
      checks.connected("g1", g1);
      checks.equal(CheckKind::Structure, "size of g1 equals its order", g1.size(),
                   g1.order());
      checks.divisible("order of g2 is a multiple of p", g2->order(), p);
      break;
    case Theorem::Cartesian:
      checks.connected("g1", g1);
      checks.connected("g2", *g2);
      checks.divisible("order of g1 is a multiple of p", g1.order(), p);
      checks.divisible("size of g2 is a multiple of its order", g2->size(), g2->order());
      break;
    case Theorem::Tensor:
      checks.connected("g1", g1);
      checks.connected("g2", *g2);
      checks.add(CheckKind::Connectivity, "g1 and g2 each have an edge",
                 g1.size() > 0 && g2->size() > 0);
      checks.add(CheckKind::Connectivity, "g1 or g2 has an odd cycle",
                 has_odd_cycle(g1) || has_odd_cycle(*g2));
      checks.divisible("order of g1 is a multiple of p", g1.order(), p);
      break;
    case Theorem::Strong:
      checks.connected("g1", g1);
      checks.connected("g2", *g2);
      checks.equal(CheckKind::Structure, "order of g1 equals 3p", g1.order(), 3 * p);
      checks.equal(CheckKind::Structure, "g2 is a tree: size equals order - 1",
                   g2->size(), g2->order() - 1);
      break;
  }

  const auto balance = balance_condition(t, g1, g2, p);
  const bool have1 = !theorem_needs_lab_g1(t) || lab1 != nullptr;
  const bool have2 = !theorem_needs_lab_g2(t) || lab2 != nullptr;
  if (balance && have1 && have2) {
    const RhoEtaCounts c1 = lab1 ? counts(g1, *lab1, ctx) : RhoEtaCounts{};
    const RhoEtaCounts c2 = lab2 ? counts(*g2, *lab2, ctx) : RhoEtaCounts{};
    // Reported as |rho|-side vs |eta|-side + target, the way the equations read.
    const std::int64_t lhs = balance->coeff1 * c1.rho + balance->coeff2 * c2.rho;
    const std::int64_t base = balance->coeff1 * c1.eta + balance->coeff2 * c2.eta;
    const std::int64_t target = (balance->lo + balance->hi) / 2;
    std::string condition;
    switch (t) {
      case Theorem::Join:
        condition = "|rho1|+|rho2| = |eta1|+|eta2|+nm (+-1)";
        break;
      case Theorem::Corona:
        condition = "|rho1|+n|rho2| = |eta1|+n|eta2|+nm (+-1)";
        break;
      case Theorem::Lexicographic:
        condition = "|rho2| = |eta2|+m^2 p";
        break;
      case Theorem::Cartesian:
        condition = "|rho1| = |eta1|+mk";
        break;
      case Theorem::Tensor:
        condition = "|rho1| = |eta1|";
        break;
      case Theorem::Strong:
        condition = "|rho1| = |eta1|+1";
        break;
      default:
        break;
    }
    checks.add(CheckKind::Balance, condition,
               balance->holds(c1.excess(), c2.excess()), lhs, base + target);
  }
  return checks.release();
}

Construction finish(Theorem t, const LegendreContext& ctx, Graph graph,
                    std::vector<std::int64_t> labels, PredictedTally predicted,
                    std::vector<HypothesisCheck> checks) {
  Labeling labeling(graph, std::move(labels));
  const EdgeTally verified = induced_tally(graph, labeling, ctx);
  if (verified.e0 != predicted.e0 || verified.e1 != predicted.e1) {
    throw ConstructionMismatch(
        std::string(theorem_name(t)) + ": predicted (" + std::to_string(predicted.e0) +
        "," + std::to_string(predicted.e1) + ") but verified (" +
        std::to_string(verified.e0) + "," + std::to_string(verified.e1) + ")");
  }
  if (!verified.cordial()) {
    throw ConstructionMismatch(std::string(theorem_name(t)) +
                               ": constructed labeling is not cordial");
  }
  return Construction{t,         ctx.prime(), std::move(graph), std::move(labeling),
                      predicted, verified,    std::move(checks)};
}

std::vector<HypothesisCheck> gate(Theorem t, const Graph& g1, const Graph* g2,
                                  const Labeling* lab1, const Labeling* lab2,
                                  const LegendreContext& ctx) {
  auto checks = hypotheses(t, g1, g2, lab1, lab2, ctx);
  require_hypotheses(t, checks);
  return checks;
}

}  // namespace

void require_hypotheses(Theorem t, const std::vector<HypothesisCheck>& checks) {
  for (const HypothesisCheck& c : checks) {
    if (!c.satisfied) raise(t, c);
  }
}

std::vector<HypothesisCheck> check_hypotheses(const ConstructionRecipe& recipe) {
  const LegendreContext ctx(recipe.p);
  const Graph* g2 = recipe.g2 ? &*recipe.g2 : nullptr;
  const Labeling* lab1 = recipe.lab_g1 ? &*recipe.lab_g1 : nullptr;
  const Labeling* lab2 = recipe.lab_g2 ? &*recipe.lab_g2 : nullptr;
  return hypotheses(recipe.theorem, recipe.g1, g2, lab1, lab2, ctx);
}

Construction construct(const ConstructionRecipe& recipe) {
  const LegendreContext ctx(recipe.p);
  const Theorem t = recipe.theorem;
  if (theorem_uses_g2(t) && !recipe.g2) {
    throw InvalidArgument(std::string(theorem_name(t)) + " needs a second factor g2");
  }
  if (theorem_needs_lab_g1(t) && !recipe.lab_g1) {
    throw InvalidArgument(std::string(theorem_name(t)) + " needs a base labeling of g1");
  }
  if (theorem_needs_lab_g2(t) && !recipe.lab_g2) {
    throw InvalidArgument(std::string(theorem_name(t)) + " needs a base labeling of g2");
  }
  switch (t) {
    case Theorem::CoronaPath:
      return construct_corona_path(recipe.g1, ctx);
    case Theorem::KpTensor:
      return construct_tensor_kp(recipe.g1, ctx);
    case Theorem::Join:
      return construct_join(recipe.g1, *recipe.lab_g1, *recipe.g2, *recipe.lab_g2, ctx);
    case Theorem::Corona:
      return construct_corona(recipe.g1, *recipe.lab_g1, *recipe.g2, *recipe.lab_g2, ctx);
    case Theorem::Lexicographic:
      return construct_lexicographic(recipe.g1, *recipe.g2, *recipe.lab_g2, ctx);
    case Theorem::Cartesian:
      return construct_cartesian(recipe.g1, *recipe.lab_g1, *recipe.g2, ctx);
    case Theorem::Tensor:
      return construct_tensor(recipe.g1, *recipe.lab_g1, *recipe.g2, ctx);
    case Theorem::Strong:
      return construct_strong(recipe.g1, *recipe.lab_g1, *recipe.g2, ctx);
  }
  throw InvalidArgument("unknown theorem");
}

Construction construct_corona_path(const Graph& g, const LegendreContext& ctx) {
  auto checks = gate(Theorem::CoronaPath, g, nullptr, nullptr, nullptr, ctx);
  const std::int64_t p = ctx.prime();
  const std::int64_t n = g.order();
  const std::int64_t q = g.size();
  const std::int64_t half = (p - 1) / 2;

  Graph graph = corona(g, make_path(p - 1));
  const CoronaIndex index(n, p - 1);
  std::vector<std::int64_t> labels(static_cast<std::size_t>(graph.order()));
  for (Vertex i = 0; i < n; ++i) {
    const std::int64_t block = p * i;
    labels[static_cast<std::size_t>(index.host_vertex(i))] = (p + 1) / 2 + block;
    // Path vertex u_j is index j-1 of the copy, in path order.
    for (std::int64_t j = 1; j <= p - 1; ++j) {
      const std::int64_t value = j <= half ? j + (p + 1) / 2 + block : j - half + block;
      labels[static_cast<std::size_t>(index.copy_vertex(i, static_cast<Vertex>(j - 1)))] =
          value;
    }
  }
  const PredictedTally predicted{n * (p - 3) / 2 + n * half + n,
                                 n * half + n * (p - 3) / 2 + q};
  return finish(Theorem::CoronaPath, ctx, std::move(graph), std::move(labels), predicted,
                std::move(checks));
}

Construction construct_tensor_kp(const Graph& g, const LegendreContext& ctx) {
  auto checks = gate(Theorem::KpTensor, g, nullptr, nullptr, nullptr, ctx);
  const std::int64_t p = ctx.prime();
  const Bipartition sides = *bipartition(g);
  const std::vector<Vertex> side1 = sides.side(1);
  const std::vector<Vertex> side2 = sides.side(2);
  const auto r1 = static_cast<std::int64_t>(side1.size());

  Graph graph = tensor(make_complete(p), g);
  const PairIndex index(g.order());
  std::vector<std::int64_t> labels(static_cast<std::size_t>(graph.order()));
  for (std::int64_t t = 1; t <= p; ++t) {
    const auto kp_vertex = static_cast<Vertex>(t - 1);
    for (std::size_t s = 0; s < side1.size(); ++s) {
      const auto s1 = static_cast<std::int64_t>(s) + 1;
      labels[static_cast<std::size_t>(index.compose(kp_vertex, side1[s]))] =
          t + p * (s1 - 1);
    }
    for (std::size_t s = 0; s < side2.size(); ++s) {
      const auto s2 = static_cast<std::int64_t>(s) + 1;
      const std::int64_t block = p * (s2 + r1 - 1);
      labels[static_cast<std::size_t>(index.compose(kp_vertex, side2[s]))] =
          t < p ? p - t + block : p + block;
    }
  }
  const std::int64_t half = g.size() * p * ((p - 1) / 2);
  return finish(Theorem::KpTensor, ctx, std::move(graph), std::move(labels),
                {half, half}, std::move(checks));
}

Construction construct_join(const Graph& g1, const Labeling& lab_g1, const Graph& g2,
                            const Labeling& lab_g2, const LegendreContext& ctx) {
  auto checks = gate(Theorem::Join, g1, &g2, &lab_g1, &lab_g2, ctx);
  const std::int64_t p = ctx.prime();
  const std::int64_t np = g1.order();
  const std::int64_t nm = np / p * g2.order();
  const RhoEtaCounts c1 = counts(g1, lab_g1, ctx);
  const RhoEtaCounts c2 = counts(g2, lab_g2, ctx);

  Graph graph = join(g1, g2);
  std::vector<std::int64_t> labels(static_cast<std::size_t>(graph.order()));
  for (Vertex v = 0; v < g1.order(); ++v) labels[static_cast<std::size_t>(v)] = lab_g1[v];
  for (Vertex u = 0; u < g2.order(); ++u) {
    labels[static_cast<std::size_t>(np + u)] = lab_g2[u] + np;
  }
  const std::int64_t cross = nm * ((p - 1) / 2);
  const PredictedTally predicted{c1.eta + c2.eta + cross + nm, c1.rho + c2.rho + cross};
  return finish(Theorem::Join, ctx, std::move(graph), std::move(labels), predicted,
                std::move(checks));
}

Construction construct_corona(const Graph& g1, const Labeling& lab_g1, const Graph& g2,
                              const Labeling& lab_g2, const LegendreContext& ctx) {
  auto checks = gate(Theorem::Corona, g1, &g2, &lab_g1, &lab_g2, ctx);
  const std::int64_t p = ctx.prime();
  const std::int64_t n = g1.order();
  const std::int64_t mp = g2.order();
  const std::int64_t nm = n * (mp / p);
  const RhoEtaCounts c1 = counts(g1, lab_g1, ctx);
  const RhoEtaCounts c2 = counts(g2, lab_g2, ctx);

  Graph graph = corona(g1, g2);
  const CoronaIndex index(n, mp);
  std::vector<std::int64_t> labels(static_cast<std::size_t>(graph.order()));
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < mp; ++j) {
      labels[static_cast<std::size_t>(index.copy_vertex(i, j))] = lab_g2[j] + mp * i;
    }
    labels[static_cast<std::size_t>(index.host_vertex(i))] = lab_g1[i] + n * mp;
  }
  const std::int64_t cross = nm * ((p - 1) / 2);
  const PredictedTally predicted{c1.eta + n * c2.eta + cross + nm,
                                 c1.rho + n * c2.rho + cross};
  return finish(Theorem::Corona, ctx, std::move(graph), std::move(labels), predicted,
                std::move(checks));
}

Construction construct_lexicographic(const Graph& g1, const Graph& g2,
                                     const Labeling& lab_g2, const LegendreContext& ctx) {
  auto checks = gate(Theorem::Lexicographic, g1, &g2, nullptr, &lab_g2, ctx);
  const std::int64_t p = ctx.prime();
  const std::int64_t n = g1.order();
  const std::int64_t mp = g2.order();
  const std::int64_t m = mp / p;
  const RhoEtaCounts c2 = counts(g2, lab_g2, ctx);

  Graph graph = lexicographic(g1, g2);
  const PairIndex index(mp);
  std::vector<std::int64_t> labels(static_cast<std::size_t>(graph.order()));
  // Block i holds labels mp*i + 1 .. mp*(i+1).
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < mp; ++j) {
      labels[static_cast<std::size_t>(index.compose(i, j))] = lab_g2[j] + mp * i;
    }
  }
  const std::int64_t nm2p = n * m * m * p;
  const std::int64_t cross = nm2p * ((p - 1) / 2);
  const PredictedTally predicted{n * c2.eta + cross + nm2p, n * c2.rho + cross};
  return finish(Theorem::Lexicographic, ctx, std::move(graph), std::move(labels),
                predicted, std::move(checks));
}

Construction construct_cartesian(const Graph& g1, const Labeling& lab_g1, const Graph& g2,
                                 const LegendreContext& ctx) {
  auto checks = gate(Theorem::Cartesian, g1, &g2, &lab_g1, nullptr, ctx);
  const std::int64_t p = ctx.prime();
  const std::int64_t mp = g1.order();
  const std::int64_t m = mp / p;
  const std::int64_t n = g2.order();
  const std::int64_t k = g2.size() / n;
  const RhoEtaCounts c1 = counts(g1, lab_g1, ctx);

  Graph graph = cartesian(g1, g2);
  const PairIndex index(n);
  std::vector<std::int64_t> labels(static_cast<std::size_t>(graph.order()));
  for (Vertex a = 0; a < mp; ++a) {
    for (Vertex j = 0; j < n; ++j) {
      labels[static_cast<std::size_t>(index.compose(a, j))] = lab_g1[a] + mp * j;
    }
  }
  const std::int64_t nmk = n * m * k;
  const std::int64_t cross = nmk * ((p - 1) / 2);
  const PredictedTally predicted{n * c1.eta + cross + nmk, n * c1.rho + cross};
  return finish(Theorem::Cartesian, ctx, std::move(graph), std::move(labels), predicted,
                std::move(checks));
}

Construction construct_tensor(const Graph& g1, const Labeling& lab_g1, const Graph& g2,
                              const LegendreContext& ctx) {
  auto checks = gate(Theorem::Tensor, g1, &g2, &lab_g1, nullptr, ctx);
  const std::int64_t np = g1.order();
  const std::int64_t q = g2.size();
  const RhoEtaCounts c1 = counts(g1, lab_g1, ctx);

  Graph graph = tensor(g1, g2);
  const PairIndex index(g2.order());
  std::vector<std::int64_t> labels(static_cast<std::size_t>(graph.order()));
  // Copy j holds labels np*j + 1 .. np*(j+1).
  for (Vertex a = 0; a < np; ++a) {
    for (Vertex j = 0; j < g2.order(); ++j) {
      labels[static_cast<std::size_t>(index.compose(a, j))] = lab_g1[a] + np * j;
    }
  }
  const PredictedTally predicted{2 * c1.eta * q, 2 * c1.rho * q};
  return finish(Theorem::Tensor, ctx, std::move(graph), std::move(labels), predicted,
                std::move(checks));
}

Construction construct_strong(const Graph& g1, const Labeling& lab_g1, const Graph& g2,
                              const LegendreContext& ctx) {
  auto checks = gate(Theorem::Strong, g1, &g2, &lab_g1, nullptr, ctx);
  const std::int64_t p = ctx.prime();
  const std::int64_t n = g2.order();
  const RhoEtaCounts c1 = counts(g1, lab_g1, ctx);

  Graph graph = strong(g1, g2);
  const PairIndex index(n);
  std::vector<std::int64_t> labels(static_cast<std::size_t>(graph.order()));
  for (Vertex a = 0; a < 3 * p; ++a) {
    for (Vertex j = 0; j < n; ++j) {
      labels[static_cast<std::size_t>(index.compose(a, j))] = lab_g1[a] + 3 * p * j;
    }
  }
  const std::int64_t tree = n - 1;
  const std::int64_t cross = 3 * ((p - 1) / 2) * tree;
  const PredictedTally predicted{n * c1.eta + cross + 3 * tree + 2 * c1.eta * tree,
                                 n * c1.rho + cross + 2 * c1.rho * tree};
  return finish(Theorem::Strong, ctx, std::move(graph), std::move(labels), predicted,
                std::move(checks));
}

}  // namespace lcord
