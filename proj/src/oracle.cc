#include <mlc/oracle.hh>
#include <mlc/errors.hh>

#include <bit>
#include <cstdint>
#include <string>

using std::vector;

using namespace mlc;

namespace
{
    auto check_arguments(const LabelledGraph & graph, int budget, int limit) -> void
    {
        if (budget < 1)
            throw ArgumentError{"budget must be at least 1, got " + std::to_string(budget)};
        if (graph.size() > limit)
            throw ArgumentError{"exhaustive search refuses graphs with more than " + std::to_string(limit)
                + " vertices (got " + std::to_string(graph.size()) + ")"};
    }

    // better (size, cost), or equal and lexicographically smaller vertex list
    auto consider(OracleResult & best, const vector<Vertex> & clique, int cost) -> void
    {
        int size = int(clique.size());
        if (size > best.size || (size == best.size && cost < best.cost)
                || (size == best.size && cost == best.cost && clique < best.witness)) {
            best.size = size;
            best.cost = cost;
            best.witness = clique;
        }
    }

    auto extend(const LabelledGraph & graph, int budget, vector<Vertex> & clique, std::uint64_t labels,
            OracleResult & best) -> void
    {
        consider(best, clique, std::popcount(labels));

        Vertex from = clique.empty() ? 0 : clique.back() + 1;
        for (Vertex v = from ; v < graph.size() ; ++v) {
            std::uint64_t new_labels = labels;
            bool ok = true;
            for (auto w : clique) {
                if (! graph.graph().adjacent(v, w)) {
                    ok = false;
                    break;
                }
                new_labels |= std::uint64_t{1} << graph.label(v, w);
            }
            // label sets only grow, so an infeasible clique has no feasible extension
            if (! ok || std::popcount(new_labels) > budget)
                continue;

            clique.push_back(v);
            extend(graph, budget, clique, new_labels, best);
            clique.pop_back();
        }
    }
}

auto mlc::oracle_solve_subsets(const LabelledGraph & graph, int budget) -> OracleResult
{
    check_arguments(graph, budget, oracle_subset_limit);

    int n = graph.size();
    OracleResult best;
    vector<Vertex> members;

    for (std::uint32_t subset = 0 ; subset < (std::uint32_t{1} << n) ; ++subset) {
        members.clear();
        for (int v = 0 ; v < n ; ++v)
            if ((subset >> v) & 1)
                members.push_back(v);

        bool is_clique = true;
        std::uint64_t labels = 0;
        for (std::size_t i = 0 ; i < members.size() && is_clique ; ++i)
            for (std::size_t j = i + 1 ; j < members.size() ; ++j) {
                if (! graph.graph().adjacent(members[i], members[j])) {
                    is_clique = false;
                    break;
                }
                labels |= std::uint64_t{1} << graph.label(members[i], members[j]);
            }

        if (is_clique && std::popcount(labels) <= budget)
            consider(best, members, std::popcount(labels));
    }

    return best;
}

auto mlc::oracle_solve_cliques(const LabelledGraph & graph, int budget) -> OracleResult
{
    check_arguments(graph, budget, oracle_vertex_limit);

    OracleResult best;
    vector<Vertex> clique;
    extend(graph, budget, clique, 0, best);
    return best;
}

auto mlc::oracle_solve(const LabelledGraph & graph, int budget) -> OracleResult
{
    if (graph.size() <= oracle_subset_limit)
        return oracle_solve_subsets(graph, budget);
    return oracle_solve_cliques(graph, budget);
}
