#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lcord/graph.hpp"
#include "lcord/labeling.hpp"
#include "lcord/numtheory.hpp"

namespace lcord {

/// The eight explicit constructions.
enum class Theorem {
  CoronaPath,     ///< G o P_{p-1}, p = +-3 (mod 8), |E(G)| in {n-1, n, n+1}
  KpTensor,       ///< K_p x G, G connected bipartite
  Join,           ///< G1 + G2
  Corona,         ///< G1 o G2
  Lexicographic,  ///< G1[G2]
  Cartesian,      ///< G1 [] G2
  Tensor,         ///< G1 x G2
  Strong,         ///< G1 [x] G2
};

std::string_view theorem_name(Theorem t);
std::optional<Theorem> parse_theorem(std::string_view name);
/// False for corona-path and kp-tensor, which build their other factor.
bool theorem_uses_g2(Theorem t);
bool theorem_needs_lab_g1(Theorem t);
bool theorem_needs_lab_g2(Theorem t);

enum class CheckKind {
  Admission,     ///< a factor must be connected
  Connectivity,  ///< the product must be connected (tensor: some odd cycle)
  Structure,     ///< orders, sizes, divisibility, p mod 8
  Balance,       ///< the rho/eta equation on the base labelings
};

struct HypothesisCheck {
  CheckKind kind = CheckKind::Structure;
  std::string condition;
  bool satisfied = false;
  std::optional<std::int64_t> lhs;
  std::optional<std::int64_t> rhs;
};

/// The balance hypothesis in normalized form:
///   lo <= coeff1 * d1 + coeff2 * d2 <= hi,
/// where d_i = |rho_i| - |eta_i| under the base labeling of G_i. A zero
/// coefficient means the theorem places no condition on that factor.
struct BalanceCondition {
  std::int64_t coeff1 = 0;
  std::int64_t coeff2 = 0;
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool holds(std::int64_t d1, std::int64_t d2) const {
    const std::int64_t v = coeff1 * d1 + coeff2 * d2;
    return lo <= v && v <= hi;
  }
};

/// Everything a construction needs. `g1` is the only factor for corona-path
/// and kp-tensor.
struct ConstructionRecipe {
  Theorem theorem = Theorem::CoronaPath;
  std::int64_t p = 3;
  Graph g1{1, {}};
  std::optional<Graph> g2;
  std::optional<Labeling> lab_g1;
  std::optional<Labeling> lab_g2;
};

struct PredictedTally {
  std::int64_t e0 = 0;
  std::int64_t e1 = 0;

  friend bool operator==(const PredictedTally&, const PredictedTally&) = default;
};

struct Construction {
  Theorem theorem = Theorem::CoronaPath;
  std::int64_t p = 3;
  Graph graph{1, {}};
  Labeling labeling = Labeling::identity(1);
  PredictedTally predicted;
  EdgeTally verified;
  std::vector<HypothesisCheck> hypotheses;
};

/// Raised when a closed-form prediction disagrees with the tally of the
/// emitted labeling. Never expected; signals a defect, not bad input.
class ConstructionMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The balance condition of `t` for these factors, or nullopt when `t` has
/// none or a divisibility requirement it depends on fails.
std::optional<BalanceCondition> balance_condition(Theorem t, const Graph& g1,
                                                  const Graph* g2, std::int64_t p);

/// Evaluates every hypothesis of the recipe's theorem. Balance checks are
/// included only when the required base labelings are present. Throws
/// InvalidArgument when `p` is not a supported odd prime, a required factor
/// is missing, or a base labeling does not match its factor's order.
std::vector<HypothesisCheck> check_hypotheses(const ConstructionRecipe& recipe);

/// Throws the error matching the first unsatisfied check, if any.
void require_hypotheses(Theorem t, const std::vector<HypothesisCheck>& checks);

/// Validates, builds, labels, predicts and verifies. Throws AdmissionError,
/// ConnectivityViolation or HypothesisViolation for the first failed
/// hypothesis; nothing is built in that case.
Construction construct(const ConstructionRecipe& recipe);

Construction construct_corona_path(const Graph& g, const LegendreContext& ctx);
Construction construct_tensor_kp(const Graph& g, const LegendreContext& ctx);
Construction construct_join(const Graph& g1, const Labeling& lab_g1,
                            const Graph& g2, const Labeling& lab_g2,
                            const LegendreContext& ctx);
Construction construct_corona(const Graph& g1, const Labeling& lab_g1,
                              const Graph& g2, const Labeling& lab_g2,
                              const LegendreContext& ctx);
Construction construct_lexicographic(const Graph& g1, const Graph& g2,
                                     const Labeling& lab_g2,
                                     const LegendreContext& ctx);
Construction construct_cartesian(const Graph& g1, const Labeling& lab_g1,
                                 const Graph& g2, const LegendreContext& ctx);
Construction construct_tensor(const Graph& g1, const Labeling& lab_g1,
                              const Graph& g2, const LegendreContext& ctx);
Construction construct_strong(const Graph& g1, const Labeling& lab_g1,
                              const Graph& g2, const LegendreContext& ctx);

}  // namespace lcord
