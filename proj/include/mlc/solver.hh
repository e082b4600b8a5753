#ifndef MLC_GUARD_MLC_SOLVER_HH
#define MLC_GUARD_MLC_SOLVER_HH 1

#include <mlc/graph.hh>
#include <mlc/search.hh>

#include <cstdint>

namespace mlc
{
    /**
     * One full pass of the sequential branch and bound from the root of an
     * already permuted graph, starting from (and updating) incumbent.
     * Returns the number of expand calls made.
     */
    auto run_pass(const LabelledGraph & permuted, int budget, bool first, Incumbent & incumbent,
            const SearchHooks * hooks = nullptr) -> std::uint64_t;

    /**
     * Finds a maximum feasible clique of minimum cost. Permutes into degree
     * order, runs the size-maximising pass and then the cost-minimising pass
     * from the same incumbent, and maps the witness back to the caller's
     * numbering. Throws ArgumentError if budget < 1.
     */
    auto solve(const LabelledGraph & graph, int budget, const SearchHooks * hooks = nullptr) -> Solution;
}

#endif
