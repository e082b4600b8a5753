#ifndef MLC_GUARD_SRC_EXPAND_HH
#define MLC_GUARD_SRC_EXPAND_HH 1

#include <mlc/bitset.hh>
#include <mlc/colour.hh>
#include <mlc/graph.hh>
#include <mlc/search.hh>

#include <cstdint>
#include <vector>

namespace mlc::detail
{
    /**
     * Recursive branch and bound over a permuted labelled graph. The
     * incumbent policy supplies size(), cost() and offer(clique, labels);
     * the sequential solver owns a plain Incumbent, the parallel one talks
     * to the shared atomic incumbent.
     *
     * Candidate sets and colour buffers are kept per recursion depth and
     * reused, so the search allocates only the first time a depth is reached.
     */
    template <typename IncumbentPolicy_>
    class Expander
    {
        private:
            const LabelledGraph & _graph;
            IncumbentPolicy_ & _incumbent;
            const SearchHooks * _hooks;
            int _budget;
            bool _first;
            bool _bound_pruning;

            std::vector<Vertex> _clique;
            std::vector<Bitset> _candidates;
            std::vector<std::vector<Vertex>> _orders;
            std::vector<std::vector<int>> _bounds;

        public:
            std::uint64_t nodes = 0;

            Expander(const LabelledGraph & graph, IncumbentPolicy_ & incumbent, int budget, bool first, const SearchHooks * hooks) :
                _graph(graph),
                _incumbent(incumbent),
                _hooks(hooks),
                _budget(budget),
                _first(first),
                _bound_pruning(hooks ? hooks->bound_pruning : true),
                _candidates(graph.size() + 2),
                _orders(graph.size() + 2),
                _bounds(graph.size() + 2)
            {
                _clique.reserve(graph.size());
            }

            /// Searches below the clique `prefix` whose labels are `labels`, over candidate set `p`.
            auto run(std::span<const Vertex> prefix, const Bitset & p, LabelSet labels) -> void
            {
                _clique.assign(prefix.begin(), prefix.end());
                _candidates[0] = p;
                expand(0, labels);
            }

        private:
            auto expand(int depth, LabelSet labels) -> void
            {
                ++nodes;

                auto & p = _candidates[depth];
                auto & order = _orders[depth];
                auto & bounds = _bounds[depth];
                colour_order(_graph.graph(), p, order, bounds);

                for (int i = int(order.size()) - 1 ; i >= 0 ; --i) {
                    if (_bound_pruning && should_prune(_first, int(_clique.size()), bounds[i], _incumbent.size()))
                        return;

                    Vertex v = order[i];
                    auto new_labels = labels_with_clique(_graph, v, _clique, labels);
                    _clique.push_back(v);

                    if (_hooks && _hooks->on_prefix && _clique.size() <= 2)
                        _hooks->on_prefix(_first, _clique);

                    if (new_labels.cost() <= label_limit(_first, _budget, _incumbent.cost())) {
                        _incumbent.offer(_clique, new_labels);

                        auto & new_p = _candidates[depth + 1];
                        new_p = p;
                        new_p.intersect_with(_graph.graph().neighbours(v));
                        if (new_p.any())
                            expand(depth + 1, new_labels);
                    }

                    _clique.pop_back();
                    p.reset(v);
                }
            }
    };

    /// Incumbent policy for single-threaded search.
    struct LocalIncumbent
    {
        Incumbent & incumbent;

        auto size() const -> int
        {
            return incumbent.size();
        }

        auto cost() const -> int
        {
            return incumbent.cost();
        }

        auto offer(std::span<const Vertex> clique, LabelSet labels) -> void
        {
            if (is_better({ int(clique.size()), labels.cost() }, incumbent.size_cost())) {
                incumbent.clique.assign(clique.begin(), clique.end());
                incumbent.labels = labels;
            }
        }
    };
}

#endif
