#include "lcord/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <thread>

#include "lcord/error.hpp"

namespace lcord {

std::string_view outcome_name(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::Found:
      return "found";
    case SearchOutcome::None:
      return "none";
    case SearchOutcome::Exhausted:
      return "exhausted";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

// Search tables shared read-only by all workers.
struct Plan {
  int n = 0;
  // Position -> vertex.
  std::vector<Vertex> vertex_at;
  // Position -> positions of already-placed neighbours.
  std::vector<std::vector<int>> back;
  // Edges still undetermined once positions 0..k are placed.
  std::vector<std::int64_t> open_after;
  // sum -> +1 for an induced label 1, -1 for label 0.
  std::vector<int> contribution;
  Objective objective;
  bool stop_at_first = true;
};

Plan make_plan(const SearchSpec& spec, const LegendreContext& ctx) {
  const Graph& g = spec.graph;
  Plan plan;
  plan.n = static_cast<int>(g.order());
  plan.objective = spec.objective;
  plan.stop_at_first = spec.mode != SearchMode::CountAll;

  plan.vertex_at.resize(static_cast<std::size_t>(plan.n));
  std::iota(plan.vertex_at.begin(), plan.vertex_at.end(), 0);
  std::stable_sort(plan.vertex_at.begin(), plan.vertex_at.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  std::vector<int> position_of(static_cast<std::size_t>(plan.n));
  for (int pos = 0; pos < plan.n; ++pos) {
    position_of[static_cast<std::size_t>(plan.vertex_at[static_cast<std::size_t>(pos)])] = pos;
  }
  plan.back.resize(static_cast<std::size_t>(plan.n));
  plan.open_after.resize(static_cast<std::size_t>(plan.n));
  std::int64_t open = g.size();
  for (int pos = 0; pos < plan.n; ++pos) {
    for (Vertex w : g.neighbors(plan.vertex_at[static_cast<std::size_t>(pos)])) {
      const int other = position_of[static_cast<std::size_t>(w)];
      if (other < pos) plan.back[static_cast<std::size_t>(pos)].push_back(other);
    }
    open -= static_cast<std::int64_t>(plan.back[static_cast<std::size_t>(pos)].size());
    plan.open_after[static_cast<std::size_t>(pos)] = open;
  }

  plan.contribution.resize(static_cast<std::size_t>(2 * plan.n + 1));
  for (std::size_t sum = 0; sum < plan.contribution.size(); ++sum) {
    plan.contribution[sum] = edge_label(static_cast<std::int64_t>(sum), ctx) == 1 ? 1 : -1;
  }
  return plan;
}

// State shared between workers.
struct Shared {
  const Plan& plan;
  std::uint64_t max_nodes;
  Clock::time_point deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
  // Lowest top-level branch known to contain a match; plan.n when none yet.
  std::atomic<int> best_branch;

  Shared(const Plan& p, const Budget& budget)
      : plan(p),
        max_nodes(budget.max_nodes),
        deadline(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(budget.max_seconds))),
        best_branch(p.n) {}
};

struct BranchResult {
  std::uint64_t count = 0;
  std::vector<std::int64_t> first;  // position -> value of the first match
  bool aborted = false;
};

class Worker {
 public:
  Worker(Shared& shared, int branch)
      : shared_(shared),
        plan_(shared.plan),
        branch_(branch),
        value_at_(static_cast<std::size_t>(plan_.n)),
        used_(static_cast<std::size_t>(plan_.n) + 1, 0) {}

  BranchResult run() {
    const auto first_value = static_cast<std::int64_t>(branch_) + 1;
    if (charge_node()) {
      value_at_[0] = first_value;
      used_[static_cast<std::size_t>(first_value)] = 1;
      // Position 0 has no placed neighbours, so it only needs the window test.
      if (reachable(0, 0)) descend(1, 0);
    }
    return std::move(result_);
  }

 private:
  bool reachable(int pos, std::int64_t excess) const {
    const std::int64_t open = plan_.open_after[static_cast<std::size_t>(pos)];
    return excess + open >= plan_.objective.lo && excess - open <= plan_.objective.hi;
  }

  // False once the search has to stop in this branch.
  bool charge_node() {
    if (result_.aborted) return false;
    if (plan_.stop_at_first && shared_.best_branch.load(std::memory_order_relaxed) < branch_) {
      result_.aborted = true;  // an earlier branch already has the answer
      return false;
    }
    const std::uint64_t used = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (used > shared_.max_nodes || shared_.out_of_budget.load(std::memory_order_relaxed)) {
      shared_.nodes.fetch_sub(1, std::memory_order_relaxed);
      shared_.out_of_budget.store(true, std::memory_order_relaxed);
      result_.aborted = true;
      return false;
    }
    if ((++local_nodes_ & 0xFFF) == 0 && Clock::now() > shared_.deadline) {
      shared_.out_of_budget.store(true, std::memory_order_relaxed);
      result_.aborted = true;
      return false;
    }
    return true;
  }

  // Returns true when the branch should stop (match found in find mode, or
  // aborted).
  bool descend(int pos, std::int64_t excess) {
    if (pos == plan_.n) {
      if (!plan_.objective.accepts(excess)) return false;
      if (result_.count++ == 0) result_.first = value_at_;
      if (plan_.stop_at_first) {
        int expected = shared_.best_branch.load();
        while (branch_ < expected &&
               !shared_.best_branch.compare_exchange_weak(expected, branch_)) {
        }
        return true;
      }
      return false;
    }
    const auto& back = plan_.back[static_cast<std::size_t>(pos)];
    for (std::int64_t value = 1; value <= plan_.n; ++value) {
      if (used_[static_cast<std::size_t>(value)]) continue;
      if (!charge_node()) return true;
      std::int64_t next = excess;
      for (int other : back) {
        next += plan_.contribution[static_cast<std::size_t>(
            value + value_at_[static_cast<std::size_t>(other)])];
      }
      if (!reachable(pos, next)) continue;
      value_at_[static_cast<std::size_t>(pos)] = value;
      used_[static_cast<std::size_t>(value)] = 1;
      const bool stop = descend(pos + 1, next);
      used_[static_cast<std::size_t>(value)] = 0;
      if (stop) return true;
    }
    return false;
  }

  Shared& shared_;
  const Plan& plan_;
  int branch_;
  std::vector<std::int64_t> value_at_;
  std::vector<char> used_;
  std::uint64_t local_nodes_ = 0;
  BranchResult result_;
};

void validate(const SearchSpec& spec) {
  if (spec.graph.order() > spec.order_ceiling) {
    throw InvalidArgument("graph order " + std::to_string(spec.graph.order()) +
                          " exceeds the search ceiling " +
                          std::to_string(spec.order_ceiling));
  }
  if (spec.objective.lo > spec.objective.hi) {
    throw InvalidArgument("empty objective window");
  }
  if (spec.budget.max_nodes == 0 || !(spec.budget.max_seconds > 0.0)) {
    throw InvalidArgument("search budget must be positive");
  }
  if (spec.jobs < 1) throw InvalidArgument("jobs must be at least 1");
}

}  // namespace

SearchResult search_labeling(const SearchSpec& spec) {
  validate(spec);
  const LegendreContext ctx(spec.p);
  const Plan plan = make_plan(spec, ctx);
  Shared shared(plan, spec.budget);

  const int branches = plan.n;
  std::vector<BranchResult> results(static_cast<std::size_t>(branches));
  std::atomic<int> next_branch{0};
  auto work = [&] {
    for (int b = next_branch.fetch_add(1); b < branches; b = next_branch.fetch_add(1)) {
      if (plan.stop_at_first && shared.best_branch.load() < b) continue;
      if (shared.out_of_budget.load()) {
        results[static_cast<std::size_t>(b)].aborted = true;
        continue;
      }
      results[static_cast<std::size_t>(b)] = Worker(shared, b).run();
    }
  };
  const int jobs = std::min(spec.jobs, branches);
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
  }

  SearchResult out;
  out.nodes = shared.nodes.load();
  std::uint64_t count = 0;
  bool incomplete = false;
  const BranchResult* first = nullptr;
  for (const BranchResult& r : results) {
    count += r.count;
    if (r.count > 0 && first == nullptr) first = &r;
    // Branches cut short because an earlier branch matched are not gaps.
    if (r.aborted && (first == nullptr || !plan.stop_at_first)) incomplete = true;
  }
  if (first != nullptr) {
    std::vector<std::int64_t> assign(static_cast<std::size_t>(plan.n));
    for (int pos = 0; pos < plan.n; ++pos) {
      assign[static_cast<std::size_t>(plan.vertex_at[static_cast<std::size_t>(pos)])] =
          first->first[static_cast<std::size_t>(pos)];
    }
    out.labeling = Labeling(spec.graph, std::move(assign));
  }
  if (spec.mode == SearchMode::CountAll) out.count = count;

  if (spec.mode == SearchMode::CountAll && incomplete) {
    out.outcome = SearchOutcome::Exhausted;
  } else if (first != nullptr) {
    out.outcome = SearchOutcome::Found;
  } else {
    out.outcome = incomplete ? SearchOutcome::Exhausted : SearchOutcome::None;
  }
  return out;
}

namespace {

class BaseSearch {
 public:
  BaseSearch(std::int64_t p, const Budget& budget, std::int64_t ceiling)
      : p_(p), budget_(budget), ceiling_(ceiling), start_(Clock::now()) {}

  // Labeling of `g` with |rho| - |eta| in [lo, hi], if one exists within budget.
  std::optional<Labeling> find(const Graph& g, std::int64_t lo, std::int64_t hi) {
    lo = std::max(lo, -g.size());
    hi = std::min(hi, g.size());
    if (lo > hi || exhausted_) return std::nullopt;
    SearchSpec spec{g, p_, Objective{lo, hi}, SearchMode::FindFirst, remaining(), 1,
                    ceiling_};
    if (spec.budget.max_nodes == 0 || spec.budget.max_seconds <= 0.0) {
      exhausted_ = true;
      return std::nullopt;
    }
    SearchResult r = search_labeling(spec);
    nodes_ += r.nodes;
    if (r.outcome == SearchOutcome::Exhausted) exhausted_ = true;
    return std::move(r.labeling);
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  Budget remaining() const {
    const double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
    Budget b;
    b.max_nodes = nodes_ >= budget_.max_nodes ? 0 : budget_.max_nodes - nodes_;
    b.max_seconds = budget_.max_seconds - elapsed;
    return b;
  }

  std::int64_t p_;
  Budget budget_;
  std::int64_t ceiling_;
  Clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

BaseSearchResult find_base_labelings(Theorem t, const Graph& g1,
                                     const std::optional<Graph>& g2, std::int64_t p,
                                     const Budget& budget, std::int64_t order_ceiling) {
  ConstructionRecipe recipe{t, p, g1, g2, std::nullopt, std::nullopt};
  require_hypotheses(t, check_hypotheses(recipe));

  BaseSearchResult out;
  const auto balance = balance_condition(t, g1, g2 ? &*g2 : nullptr, p);
  if (!balance) {
    out.outcome = BaseSearchOutcome::Found;
    out.recipe = std::move(recipe);
    return out;
  }

  BaseSearch search(p, budget, order_ceiling);
  auto finish = [&](std::optional<Labeling> lab1, std::optional<Labeling> lab2) {
    out.nodes = search.nodes();
    if ((balance->coeff1 == 0 || lab1) && (balance->coeff2 == 0 || lab2)) {
      out.outcome = BaseSearchOutcome::Found;
      recipe.lab_g1 = std::move(lab1);
      recipe.lab_g2 = std::move(lab2);
      out.recipe = std::move(recipe);
    } else {
      out.outcome = search.exhausted() ? BaseSearchOutcome::Exhausted
                                       : BaseSearchOutcome::None;
    }
    return out;
  };

  if (balance->coeff2 == 0) {
    return finish(search.find(g1, balance->lo, balance->hi), std::nullopt);
  }
  if (balance->coeff1 == 0) {
    return finish(std::nullopt, search.find(*g2, balance->lo, balance->hi));
  }

  // Two-sided: coeff1 * d1 + coeff2 * d2 in [lo, hi] with coeff1 = 1. Walk the
  // achievable values of the smaller factor, then solve for the other.
  const std::int64_t c = balance->coeff2;
  const bool walk_g2 = g2->order() <= g1.order();
  const Graph& walked = walk_g2 ? *g2 : g1;
  const Graph& solved = walk_g2 ? g1 : *g2;
  for (std::int64_t d = -walked.size(); d <= walked.size(); d += 2) {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    if (walk_g2) {
      lo = balance->lo - c * d;
      hi = balance->hi - c * d;
    } else {
      lo = ceil_div(balance->lo - d, c);
      hi = floor_div(balance->hi - d, c);
    }
    if (std::max(lo, -solved.size()) > std::min(hi, solved.size())) continue;
    auto walked_lab = search.find(walked, d, d);
    if (search.exhausted()) break;
    if (!walked_lab) continue;
    auto solved_lab = search.find(solved, lo, hi);
    if (search.exhausted()) break;
    if (!solved_lab) continue;
    return walk_g2 ? finish(std::move(solved_lab), std::move(walked_lab))
                   : finish(std::move(walked_lab), std::move(solved_lab));
  }
  return finish(std::nullopt, std::nullopt);
}

}  // namespace lcord
