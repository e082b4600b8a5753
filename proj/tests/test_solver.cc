#include <doctest.h>

#include <mlc/errors.hh>
#include <mlc/oracle.hh>
#include <mlc/solver.hh>

#include "test_support.hh"

#include <algorithm>
#include <numeric>
#include <random>

using namespace mlc;
using mlc::test::zero_based;
using std::vector;

TEST_CASE("is_better")
{
    CHECK(is_better({ 4, 2 }, { 4, 3 }));
    CHECK(is_better({ 5, 4 }, { 4, 2 }));
    CHECK(! is_better({ 4, 2 }, { 4, 2 }));
    CHECK(! is_better({ 4, 3 }, { 4, 2 }));
    CHECK(! is_better({ 3, 0 }, { 4, 9 }));
}

TEST_CASE("bound and label tests")
{
    // |C| = 2, one colour left, incumbent of size 4: 3 < 4
    CHECK(should_prune(true, 2, 1, 4));
    CHECK(should_prune(false, 2, 1, 4));

    // equality prunes only on the first pass
    CHECK(should_prune(true, 2, 2, 4));
    CHECK(! should_prune(false, 2, 2, 4));

    CHECK(! should_prune(true, 2, 3, 4));

    CHECK(label_limit(true, 3, 2) == 3);
    CHECK(label_limit(false, 3, 2) == 1);
}

TEST_CASE("first pass on the labelled example")
{
    auto [permuted, p] = permute_by_degree(test::labelled7());
    Incumbent incumbent;
    auto nodes = run_pass(permuted, 3, true, incumbent);
    CHECK(nodes > 0);
    // equality pruning keeps the first size-4 clique found, {1, 2, 3, 5}, which
    // uses three labels; tests/oracles/derive_values.py reproduces this
    CHECK(incumbent.size() == 4);
    CHECK(incumbent.cost() == 3);
    CHECK(is_clique(permuted.graph(), incumbent.clique));
    CHECK(clique_cost(permuted, incumbent.clique) == incumbent.labels);

    vector<Vertex> original;
    for (auto v : incumbent.clique)
        original.push_back(p.forward[v]);
    std::sort(original.begin(), original.end());
    CHECK(original == zero_based({ 1, 2, 3, 5 }));

    run_pass(permuted, 3, false, incumbent);
    CHECK(incumbent.size() == 4);
    CHECK(incumbent.cost() == 2);
}

TEST_CASE("solve on the labelled example")
{
    auto g = test::labelled7();

    SUBCASE("budget 3")
    {
        auto s = solve(g, 3);
        CHECK(s.size() == 4);
        CHECK(s.cost() == 2);
        CHECK(s.clique == zero_based({ 4, 5, 6, 7 }));
        CHECK(clique_cost(g, s.clique) == s.labels);
    }

    SUBCASE("other budgets, as found by subset enumeration")
    {
        CHECK(solve(g, 4).size_cost() == SizeCost{ 5, 4 });
        CHECK(solve(g, 2).size_cost() == SizeCost{ 4, 2 });
        CHECK(solve(g, 1).size_cost() == SizeCost{ 2, 1 });
        CHECK(solve(g, 64).size_cost() == SizeCost{ 5, 4 });
    }

    SUBCASE("bad budget")
    {
        CHECK_THROWS_AS(solve(g, 0), ArgumentError);
        CHECK_THROWS_AS(solve(g, -2), ArgumentError);
    }
}

TEST_CASE("solve on degenerate graphs")
{
    auto empty = build_labelled(build_graph(0, {}), 1, {});
    auto s = solve(empty, 1);
    CHECK(s.size() == 0);
    CHECK(s.cost() == 0);
    CHECK(s.stats.nodes_pass1 == 0);

    auto edgeless = build_labelled(build_graph(5, {}), 3, {});
    auto t = solve(edgeless, 2);
    CHECK(t.size() == 1);
    CHECK(t.cost() == 0);
    CHECK(t.stats.second_pass_skipped);
}

TEST_CASE("solve matches the exhaustive oracle")
{
    int checked = 0;
    for (std::uint64_t seed = 0 ; seed < 60 ; ++seed) {
        int n = 5 + int(seed % 8);
        double density = vector<double>{ 0.3, 0.6, 0.9 }[seed % 3];
        int num_labels = 2 + int(seed % 4);
        auto lg = test::random_labelling(test::random_graph(n, density, seed), num_labels, seed);
        for (int budget = 1 ; budget <= num_labels ; ++budget) {
            auto s = solve(lg, budget);
            auto o = oracle_solve(lg, budget);
            CHECK(s.size_cost() == SizeCost{ o.size, o.cost });
            CHECK(is_clique(lg.graph(), s.clique));
            CHECK(clique_cost(lg, s.clique).cost() <= budget);
            ++checked;
        }
    }
    CHECK(checked > 150);
}

TEST_CASE("solver properties")
{
    for (std::uint64_t seed = 100 ; seed < 140 ; ++seed) {
        int n = 8 + int(seed % 7);
        int num_labels = 2 + int(seed % 5);
        auto g = test::random_graph(n, 0.5 + 0.05 * double(seed % 7), seed);
        auto lg = test::random_labelling(g, num_labels, seed);

        // budget monotonicity, and the unlabelled ceiling
        int omega = test::brute_force_clique_number(g);
        int previous = 0;
        for (int budget = 1 ; budget <= num_labels + 1 ; ++budget) {
            auto s = solve(lg, budget);
            CHECK(s.size() >= previous);
            CHECK(s.size() <= omega);
            previous = s.size();
            if (budget >= num_labels) {
                CHECK(s.size() == omega);
                CHECK(s.cost() == test::brute_force_cheapest_maximum(lg));
            }
        }

        // relabelling by a bijection changes nothing
        vector<int> bijection(num_labels);
        std::iota(bijection.begin(), bijection.end(), 0);
        std::mt19937 rng{ unsigned(seed) };
        std::shuffle(bijection.begin(), bijection.end(), rng);
        vector<LabelledEdge> relabelled;
        for (auto e : lg.labelled_edges())
            relabelled.push_back({ e.u, e.v, bijection[e.label] });
        auto lg2 = build_labelled(g, num_labels, relabelled);
        int budget = 1 + int(seed % num_labels);
        CHECK(solve(lg, budget).size_cost() == solve(lg2, budget).size_cost());

        // determinism, including node counts
        auto a = solve(lg, budget), b = solve(lg, budget);
        CHECK(a.clique == b.clique);
        CHECK(a.labels == b.labels);
        CHECK(a.stats.nodes_pass1 == b.stats.nodes_pass1);
        CHECK(a.stats.nodes_pass2 == b.stats.nodes_pass2);

        // the second pass keeps the size and never raises the cost
        auto [permuted, p] = permute_by_degree(lg);
        Incumbent incumbent;
        run_pass(permuted, budget, true, incumbent);
        auto after_first = incumbent.size_cost();
        run_pass(permuted, budget, false, incumbent);
        CHECK(incumbent.size() == after_first.size);
        CHECK(incumbent.cost() <= after_first.cost);
    }
}

TEST_CASE("bound pruning only saves work")
{
    for (std::uint64_t seed = 0 ; seed < 20 ; ++seed) {
        auto lg = test::random_labelling(test::random_graph(14, 0.6, seed), 4, seed);
        SearchHooks no_bound{ .bound_pruning = false, .on_prefix = {} };
        auto pruned = solve(lg, 2);
        auto full = solve(lg, 2, &no_bound);
        CHECK(pruned.size_cost() == full.size_cost());
        CHECK(pruned.stats.nodes_pass1 <= full.stats.nodes_pass1);
    }
}
