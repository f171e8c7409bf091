#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lcord/constructors.hpp"
#include "lcord/graph.hpp"
#include "lcord/labeling.hpp"

namespace lcord {

/// Accepted values of |rho| - |eta| (= e1 - e0), a closed window.
struct Objective {
  std::int64_t lo = -1;
  std::int64_t hi = 1;

  /// |e0 - e1| <= 1.
  static Objective cordial() { return {-1, 1}; }
  /// |rho| - |eta| = d exactly.
  static Objective exact(std::int64_t d) { return {d, d}; }
  /// |rho| - |eta| in {d-1, d, d+1}.
  static Objective around(std::int64_t d) { return {d - 1, d + 1}; }

  bool accepts(std::int64_t excess) const { return lo <= excess && excess <= hi; }

  friend bool operator==(const Objective&, const Objective&) = default;
};

enum class SearchMode { FindFirst, CountAll, ProveNone };

/// Node count is the primary limit; wall time is a secondary kill switch.
struct Budget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 300.0;
};

inline constexpr std::int64_t kDefaultOrderCeiling = 12;

struct SearchSpec {
  Graph graph{1, {}};
  std::int64_t p = 3;
  Objective objective = Objective::cordial();
  SearchMode mode = SearchMode::FindFirst;
  Budget budget;
  /// Worker threads; each takes whole top-level branches.
  int jobs = 1;
  std::int64_t order_ceiling = kDefaultOrderCeiling;
};

enum class SearchOutcome {
  Found,      ///< at least one labeling meets the objective
  None,       ///< the whole space was enumerated without a match
  Exhausted,  ///< the budget ran out first; says nothing about existence
};

std::string_view outcome_name(SearchOutcome outcome);

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::None;
  std::uint64_t nodes = 0;
  /// The first match in search order. In prove-none mode this is the
  /// counterexample.
  std::optional<Labeling> labeling;
  /// Count-all only. Partial when the outcome is Exhausted.
  std::optional<std::uint64_t> count;
};

/// Backtracking over label assignments, vertices taken in order of decreasing
/// degree and values ascending. A partial assignment is abandoned only when
/// no completion can land in the objective window, whatever labels the
/// undetermined edges receive. Throws InvalidArgument on an invalid spec
/// (non-prime p, empty window, order above the ceiling, zero budget).
SearchResult search_labeling(const SearchSpec& spec);

enum class BaseSearchOutcome { Found, None, Exhausted };

struct BaseSearchResult {
  BaseSearchOutcome outcome = BaseSearchOutcome::None;
  std::uint64_t nodes = 0;
  /// Set when found: ready for construct().
  std::optional<ConstructionRecipe> recipe;
};

/// Searches base labelings whose rho/eta statistics satisfy the balance
/// hypothesis of theorem `t`. Structural hypotheses are checked first and
/// raise (AdmissionError, ConnectivityViolation, HypothesisViolation) before
/// any search starts. Theorems without a balance hypothesis return a recipe
/// immediately.
BaseSearchResult find_base_labelings(Theorem t, const Graph& g1,
                                     const std::optional<Graph>& g2, std::int64_t p,
                                     const Budget& budget,
                                     std::int64_t order_ceiling = kDefaultOrderCeiling);

}  // namespace lcord
