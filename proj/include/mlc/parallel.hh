#ifndef MLC_GUARD_MLC_PARALLEL_HH
#define MLC_GUARD_MLC_PARALLEL_HH 1

#include <mlc/bitset.hh>
#include <mlc/graph.hh>
#include <mlc/search.hh>

#include <atomic>
#include <cstdint>
#include <deque>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

namespace mlc
{
    /**
     * Packs (size, cost) into one word so that a single unsigned comparison
     * agrees with is_better: size in the high 32 bits, the complement of the
     * cost in the low 32 bits.
     */
    constexpr auto incumbent_key(int size, int cost) -> std::uint64_t
    {
        return (std::uint64_t(std::uint32_t(size)) << 32) | std::uint64_t(~std::uint32_t(cost));
    }

    constexpr auto key_size(std::uint64_t key) -> int
    {
        return int(key >> 32);
    }

    constexpr auto key_cost(std::uint64_t key) -> int
    {
        return int(~std::uint32_t(key & 0xffffffffu));
    }

    /**
     * The incumbent shared by all workers. The key is readable without
     * locking and only ever increases. Writers serialise on a mutex, so the
     * witness and the key always describe the same clique.
     */
    class SharedIncumbent
    {
        private:
            std::atomic<std::uint64_t> _key;
            mutable std::mutex _mutex;
            Incumbent _witness;

        public:
            explicit SharedIncumbent(Incumbent initial = {});

            SharedIncumbent(const SharedIncumbent &) = delete;
            SharedIncumbent & operator= (const SharedIncumbent &) = delete;

            auto key() const -> std::uint64_t
            {
                return _key.load(std::memory_order_acquire);
            }

            auto size() const -> int
            {
                return key_size(key());
            }

            auto cost() const -> int
            {
                return key_cost(key());
            }

            /// Installs the candidate iff its key beats the stored one at the moment of writing.
            auto try_improve(std::span<const Vertex> clique, LabelSet labels) -> bool;

            auto snapshot() const -> Incumbent;
    };

    /**
     * One branch of the search tree, rooted just below the root (a single
     * vertex) or at distance two (a vertex pair). prefix is the growing
     * clique, whose last vertex is the one this branch adds; candidates and
     * labels are exactly what the sequential search would hold at that point.
     */
    struct Subproblem
    {
        std::vector<Vertex> prefix;
        Bitset candidates;
        LabelSet labels;
        int colour_bound = 0;        ///< parent's bounds[i] for this branch
        std::vector<int> position;   ///< branch index per level, in sequential visiting order

        auto depth() const -> int
        {
            return int(prefix.size());
        }
    };

    /// The root's branches as depth-1 subproblems, in the order the sequential search visits them.
    auto split_root(const LabelledGraph & permuted) -> std::deque<Subproblem>;

    /**
     * A depth-1 subproblem being worked on. The owner claims its depth-2
     * branches one at a time; an idle worker can take every branch not yet
     * claimed in one go. Each branch is handed out exactly once.
     */
    class SharedBranch
    {
        private:
            const LabelledGraph & _graph;
            Subproblem _parent;
            std::vector<Vertex> _order;
            std::vector<int> _bounds;
            std::atomic<int> _next;

            auto make_child(int i) const -> Subproblem;

        public:
            SharedBranch(const LabelledGraph & permuted, Subproblem parent);

            SharedBranch(const SharedBranch &) = delete;
            SharedBranch & operator= (const SharedBranch &) = delete;

            auto position() const -> const std::vector<int> &
            {
                return _parent.position;
            }

            auto width() const -> int
            {
                return int(_order.size());
            }

            /// Branches not yet handed out.
            auto remaining() const -> int;

            /// The next branch in sequential order, or nothing once exhausted.
            auto claim() -> std::optional<Subproblem>;

            /// Stops handing out branches; used once the bound says the rest are hopeless.
            auto abandon() -> void;

            /// Every unclaimed branch as a depth-2 subproblem, in sequential order.
            auto steal() -> std::vector<Subproblem>;
    };

    /**
     * Parallel version of solve(). Both passes are split below the root and
     * farmed out to `workers` threads, with a full join between passes.
     * Node counts depend on scheduling. Throws ArgumentError if budget < 1
     * or workers < 1.
     */
    auto solve_parallel(const LabelledGraph & graph, int budget, int workers,
            const SearchHooks * hooks = nullptr) -> Solution;
}

#endif
