#include "lcord/search.hpp"

#include <random>

#include <gtest/gtest.h>

#include "closed_forms.hpp"
#include "lcord/error.hpp"
#include "oracle.hpp"

namespace lcord {
namespace {

SearchSpec spec_for(const Graph& g, std::int64_t p, Objective objective = Objective::cordial(),
                    SearchMode mode = SearchMode::FindFirst) {
  SearchSpec spec;
  spec.graph = g;
  spec.p = p;
  spec.objective = objective;
  spec.mode = mode;
  return spec;
}

TEST(Search, TriangleEveryLabelingIsCordial) {
  const SearchResult r = search_labeling(spec_for(make_cycle(3), 3, Objective::cordial(),
                                                  SearchMode::CountAll));
  EXPECT_EQ(r.outcome, SearchOutcome::Found);
  ASSERT_TRUE(r.count.has_value());
  EXPECT_EQ(*r.count, 6u);
}

TEST(Search, K4ModThreeHasNone) {
  const SearchResult r = search_labeling(spec_for(make_complete(4), 3));
  EXPECT_EQ(r.outcome, SearchOutcome::None);
  EXPECT_FALSE(r.labeling.has_value());
  const SearchResult proof = search_labeling(
      spec_for(make_complete(4), 3, Objective::cordial(), SearchMode::ProveNone));
  EXPECT_EQ(proof.outcome, SearchOutcome::None);
  EXPECT_EQ(oracle::enumerate(make_complete(4), 3, -1, 1).count, 0u);
}

TEST(Search, FiveCycleDifferenceOne) {
  const SearchResult r = search_labeling(spec_for(make_cycle(5), 5, Objective::exact(1)));
  ASSERT_EQ(r.outcome, SearchOutcome::Found);
  const oracle::Tally t = oracle::tally(make_cycle(5), oracle::values_of(*r.labeling), 5);
  EXPECT_EQ(t.e1 - t.e0, 1);
  const oracle::Tally witness = oracle::tally(make_cycle(5), {2, 1, 3, 5, 4}, 5);
  EXPECT_EQ(witness.e0, 2);
  EXPECT_EQ(witness.e1, 3);
}

TEST(Search, InvalidSpecs) {
  EXPECT_THROW(search_labeling(spec_for(make_path(3), 9)), InvalidArgument);
  EXPECT_THROW(search_labeling(spec_for(make_path(13), 3)), InvalidArgument);
  EXPECT_THROW(search_labeling(spec_for(make_path(3), 3, Objective{2, 1})), InvalidArgument);
  SearchSpec zero = spec_for(make_path(3), 3);
  zero.budget.max_nodes = 0;
  EXPECT_THROW(search_labeling(zero), InvalidArgument);
  SearchSpec no_jobs = spec_for(make_path(3), 3);
  no_jobs.jobs = 0;
  EXPECT_THROW(search_labeling(no_jobs), InvalidArgument);
}

TEST(Search, BudgetExhaustedIsDistinct) {
  SearchSpec spec = spec_for(make_complete(8), 3, Objective::cordial(), SearchMode::ProveNone);
  spec.budget.max_nodes = 50;
  const SearchResult r = search_labeling(spec);
  EXPECT_EQ(r.outcome, SearchOutcome::Exhausted);
  EXPECT_LE(r.nodes, 51u);
}

// Count-all matches naive enumeration for every window on a random corpus.
TEST(Search, CountAllMatchesOracle) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t n = 2 + trial % 6;
    const std::int64_t p = trial % 3 == 0 ? 3 : (trial % 3 == 1 ? 5 : 7);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    for (const Objective obj : {Objective::cordial(), Objective::exact(0), Objective::around(2),
                                Objective{-100, 100}}) {
      const oracle::Enumeration e = oracle::enumerate(g, p, obj.lo, obj.hi);
      const SearchResult r = search_labeling(spec_for(g, p, obj, SearchMode::CountAll));
      ASSERT_TRUE(r.count.has_value());
      EXPECT_EQ(*r.count, e.count) << "trial " << trial;
      EXPECT_EQ(r.outcome, e.count > 0 ? SearchOutcome::Found : SearchOutcome::None);
    }
  }
}

// Find-first verdict equals the unpruned verdict for every achievable and
// some unachievable targets; returned labelings meet the objective.
TEST(Search, PruningIsSound) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::int64_t n = 3 + trial % 5;
    const std::int64_t p = trial % 2 ? 3 : 5;
    const Graph g = oracle::random_connected(n, trial % 4, rng);
    const oracle::Enumeration all = oracle::enumerate(g, p, 1, 0);
    for (std::int64_t d = -g.size() - 1; d <= g.size() + 1; ++d) {
      const SearchResult r = search_labeling(spec_for(g, p, Objective::exact(d)));
      const bool achievable = all.excesses.count(d) > 0;
      EXPECT_EQ(r.outcome == SearchOutcome::Found, achievable) << "d=" << d;
      if (r.labeling) {
        const oracle::Tally t = oracle::tally(g, oracle::values_of(*r.labeling), p);
        EXPECT_EQ(t.e1 - t.e0, d);
      }
    }
  }
}

TEST(Search, DeterministicAndJobIndependent) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_connected(5 + trial % 4, 2, rng);
    SearchSpec spec = spec_for(g, 5);
    const SearchResult a = search_labeling(spec);
    const SearchResult b = search_labeling(spec);
    EXPECT_EQ(a.outcome, b.outcome);
    EXPECT_EQ(a.nodes, b.nodes);
    EXPECT_EQ(a.labeling, b.labeling);
    spec.jobs = 3;
    const SearchResult c = search_labeling(spec);
    EXPECT_EQ(a.outcome, c.outcome);
    EXPECT_EQ(a.labeling, c.labeling);
    spec.mode = SearchMode::CountAll;
    const SearchResult d = search_labeling(spec);
    spec.jobs = 1;
    const SearchResult e = search_labeling(spec);
    EXPECT_EQ(d.count, e.count);
  }
}

TEST(BaseLabelings, CartesianFiveCycle) {
  const auto r = find_base_labelings(Theorem::Cartesian, make_cycle(5), make_cycle(4), 5, Budget{});
  ASSERT_EQ(r.outcome, BaseSearchOutcome::Found);
  ASSERT_TRUE(r.recipe->lab_g1.has_value());
  const oracle::Tally t = oracle::tally(make_cycle(5), oracle::values_of(*r.recipe->lab_g1), 5);
  EXPECT_EQ(t.e1 - t.e0, 1);
  const Construction c = construct(*r.recipe);
  EXPECT_EQ(c.verified, (EdgeTally{20, 20}));
}

TEST(BaseLabelings, TensorTriangleNone) {
  const auto r = find_base_labelings(Theorem::Tensor, make_cycle(3), make_cycle(3), 3, Budget{});
  EXPECT_EQ(r.outcome, BaseSearchOutcome::None);
  EXPECT_FALSE(r.recipe.has_value());
}

TEST(BaseLabelings, LexicographicThreeVertexGuestsNone) {
  // All graphs on three vertices up to labelling of the vertex set.
  const std::vector<Graph> guests = {Graph(3, {}), make_path(3), make_cycle(3),
                                     oracle::edges_graph(3, {{0, 1}})};
  for (const Graph& g2 : guests) {
    const auto r = find_base_labelings(Theorem::Lexicographic, make_cycle(3), g2, 3, Budget{});
    EXPECT_EQ(r.outcome, BaseSearchOutcome::None);
    EXPECT_LT(*oracle::enumerate(g2, 3, 3, 3).excesses.rbegin(), 3);
  }
}

TEST(BaseLabelings, JoinAndCorona) {
  const auto join = find_base_labelings(Theorem::Join, make_path(3), make_path(1), 3, Budget{});
  ASSERT_EQ(join.outcome, BaseSearchOutcome::Found);
  EXPECT_TRUE(construct(*join.recipe).verified.cordial());
  const auto corona = find_base_labelings(Theorem::Corona, make_path(2), make_path(5), 5, Budget{});
  ASSERT_EQ(corona.outcome, BaseSearchOutcome::Found);
  const Construction c = construct(*corona.recipe);
  EXPECT_EQ(c.verified.e0, oracle::closed_form(*corona.recipe).e0);
  const auto none = find_base_labelings(Theorem::Corona, make_path(2), make_path(3), 3, Budget{});
  EXPECT_EQ(none.outcome, BaseSearchOutcome::None);
}

TEST(BaseLabelings, StructuralErrorsBeforeSearch) {
  EXPECT_THROW(find_base_labelings(Theorem::Cartesian, make_cycle(5), make_path(3), 5, Budget{}),
               HypothesisViolation);
  EXPECT_THROW(find_base_labelings(Theorem::Tensor, make_path(3), make_cycle(4), 3, Budget{}),
               ConnectivityViolation);
  EXPECT_THROW(find_base_labelings(Theorem::Corona, Graph(2, {}), make_path(3), 3, Budget{}),
               AdmissionError);
  EXPECT_THROW(find_base_labelings(Theorem::Strong, make_cycle(9), make_cycle(4), 3, Budget{}),
               HypothesisViolation);
}

TEST(BaseLabelings, NoBalanceTheoremsReturnRecipe) {
  const auto r = find_base_labelings(Theorem::KpTensor, make_path(3), std::nullopt, 3, Budget{});
  ASSERT_EQ(r.outcome, BaseSearchOutcome::Found);
  EXPECT_EQ(construct(*r.recipe).verified, (EdgeTally{6, 6}));
}

TEST(BaseLabelings, ExhaustedBudget) {
  Budget tiny;
  tiny.max_nodes = 5;
  const auto r = find_base_labelings(Theorem::Tensor, make_path(9), make_cycle(3), 3, tiny);
  EXPECT_EQ(r.outcome, BaseSearchOutcome::Exhausted);
}

}  // namespace
}  // namespace lcord
