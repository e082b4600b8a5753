#ifndef MLC_GUARD_MLC_ORACLE_HH
#define MLC_GUARD_MLC_ORACLE_HH 1

#include <mlc/graph.hh>

#include <vector>

namespace mlc
{
    struct OracleResult
    {
        int size = 0;
        int cost = 0;
        std::vector<Vertex> witness;   ///< sorted; lexicographically least among equally good cliques
    };

    inline constexpr int oracle_subset_limit = 20;
    inline constexpr int oracle_vertex_limit = 25;

    /// Checks every one of the 2^n vertex subsets. Refuses (ArgumentError) above oracle_subset_limit vertices.
    auto oracle_solve_subsets(const LabelledGraph & graph, int budget) -> OracleResult;

    /// Enumerates every clique by extension in increasing vertex order. Refuses above oracle_vertex_limit vertices.
    auto oracle_solve_cliques(const LabelledGraph & graph, int budget) -> OracleResult;

    /// Exhaustive reference solver: subsets up to 20 vertices, clique enumeration up to 25.
    auto oracle_solve(const LabelledGraph & graph, int budget) -> OracleResult;
}

#endif
