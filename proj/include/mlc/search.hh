#ifndef MLC_GUARD_MLC_SEARCH_HH
#define MLC_GUARD_MLC_SEARCH_HH 1

#include <mlc/graph.hh>

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace mlc
{
    struct SizeCost
    {
        int size = 0;
        int cost = 0;

        friend auto operator== (SizeCost, SizeCost) -> bool = default;
    };

    /// Larger cliques win; equal sizes are broken by fewer labels.
    constexpr auto is_better(SizeCost candidate, SizeCost best) -> bool
    {
        return candidate.size > best.size || (candidate.size == best.size && candidate.cost < best.cost);
    }

    /**
     * The colour bound test. The first pass only wants strictly larger
     * cliques; the second pass also admits equal-sized ones, hoping they
     * are cheaper.
     */
    constexpr auto should_prune(bool first, int clique_size, int colour_bound, int incumbent_size) -> bool
    {
        return clique_size + colour_bound < incumbent_size || (first && clique_size + colour_bound == incumbent_size);
    }

    /// Largest admissible label count for a growing clique: the budget, then one less than the incumbent's cost.
    constexpr auto label_limit(bool first, int budget, int incumbent_cost) -> int
    {
        return first ? budget : incumbent_cost - 1;
    }

    /// Best-so-far clique (in whatever numbering the search uses) and its labels.
    struct Incumbent
    {
        std::vector<Vertex> clique;
        LabelSet labels;

        auto size() const -> int
        {
            return static_cast<int>(clique.size());
        }

        auto cost() const -> int
        {
            return labels.cost();
        }

        auto size_cost() const -> SizeCost
        {
            return { size(), cost() };
        }
    };

    /// No cheaper clique of the same size can exist, so the second pass would find nothing.
    inline auto second_pass_is_redundant(const Incumbent & incumbent) -> bool
    {
        return incumbent.size() <= 1 || incumbent.cost() <= 1;
    }

    struct SearchStats
    {
        std::uint64_t nodes_pass1 = 0;   ///< calls to expand during the first pass
        std::uint64_t nodes_pass2 = 0;
        bool second_pass_skipped = false;
        int workers = 1;
        double elapsed = 0.0;            ///< seconds, including preprocessing
    };

    /// A result in the caller's original vertex numbering.
    struct Solution
    {
        std::vector<Vertex> clique;
        LabelSet labels;
        SearchStats stats;

        auto size() const -> int
        {
            return static_cast<int>(clique.size());
        }

        auto cost() const -> int
        {
            return labels.cost();
        }

        auto size_cost() const -> SizeCost
        {
            return { size(), cost() };
        }
    };

    /**
     * Instrumentation for tests. on_prefix sees each growing clique of size
     * one or two as it is formed, in permuted numbering; it may be called
     * concurrently by the parallel solver.
     */
    struct SearchHooks
    {
        bool bound_pruning = true;
        std::function<void (bool first, std::span<const Vertex> prefix)> on_prefix;
    };
}

#endif
