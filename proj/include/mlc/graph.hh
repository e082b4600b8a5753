#ifndef MLC_GUARD_MLC_GRAPH_HH
#define MLC_GUARD_MLC_GRAPH_HH 1

#include <mlc/bitset.hh>

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mlc
{
    /// Vertices are 0-based internally. Files and reports use 1-based numbering.
    using Vertex = int;

    using Edge = std::pair<Vertex, Vertex>;

    inline constexpr int max_labels = 64;

    /**
     * Undirected, loop-free graph with one adjacency bitset per vertex.
     * Immutable once built; share freely between threads.
     */
    class Graph
    {
        private:
            int _size = 0;
            std::vector<Bitset> _adjacency;
            std::vector<int> _degrees;
            std::size_t _edge_count = 0;

            friend auto build_graph(int, std::span<const Edge>) -> Graph;

        public:
            Graph() = default;

            auto size() const -> int
            {
                return _size;
            }

            auto edge_count() const -> std::size_t
            {
                return _edge_count;
            }

            auto adjacent(Vertex v, Vertex w) const -> bool
            {
                return _adjacency[v].test(w);
            }

            auto neighbours(Vertex v) const -> const Bitset &
            {
                return _adjacency[v];
            }

            auto degree(Vertex v) const -> int
            {
                return _degrees[v];
            }

            auto degrees() const -> std::span<const int>
            {
                return _degrees;
            }

            /// Every edge once, as (u, v) with u < v, in ascending lexicographic order.
            auto edges() const -> std::vector<Edge>;
    };

    /**
     * Builds a graph on vertices [0, n). Duplicate pairs collapse to one edge.
     * Throws GraphError on out-of-range endpoints or loops.
     */
    auto build_graph(int n, std::span<const Edge> edges) -> Graph;

    /// Set of label indices in [0, 64). The cost of a clique is the size of its label set.
    struct LabelSet
    {
        std::uint64_t bits = 0;

        auto cost() const -> int
        {
            return std::popcount(bits);
        }

        auto contains(int label) const -> bool
        {
            return (bits >> label) & 1;
        }

        auto add(int label) -> void
        {
            bits |= std::uint64_t{1} << label;
        }

        auto operator|= (LabelSet other) -> LabelSet &
        {
            bits |= other.bits;
            return *this;
        }

        friend auto operator| (LabelSet a, LabelSet b) -> LabelSet
        {
            return LabelSet{ a.bits | b.bits };
        }

        friend auto operator== (LabelSet, LabelSet) -> bool = default;

        /// Member label indices, ascending.
        auto to_vector() const -> std::vector<int>;
    };

    struct LabelledEdge
    {
        Vertex u;
        Vertex v;
        int label;
    };

    /**
     * A graph together with exactly one label per edge.
     *
     * Labels are stored per vertex in neighbour order, and located by the
     * rank of the neighbour within the adjacency row. A per-word prefix count
     * makes that lookup constant time without an n-by-n label matrix.
     */
    class LabelledGraph
    {
        private:
            Graph _graph;
            int _num_labels = 1;
            std::vector<std::uint32_t> _row_start;
            std::vector<std::uint32_t> _word_rank;
            std::vector<std::uint8_t> _labels;

            friend auto build_labelled(Graph, int, std::span<const LabelledEdge>) -> LabelledGraph;

            auto slot(Vertex v, Vertex w) const -> std::size_t
            {
                const auto & row = _graph.neighbours(v);
                int word = w / Bitset::bits_per_word;
                auto mask = (Bitset::Word{1} << (w % Bitset::bits_per_word)) - 1;
                return _row_start[v] + _word_rank[std::size_t(v) * row.word_count() + word]
                    + std::popcount(row.word(word) & mask);
            }

        public:
            LabelledGraph() = default;

            auto graph() const -> const Graph &
            {
                return _graph;
            }

            auto size() const -> int
            {
                return _graph.size();
            }

            auto num_labels() const -> int
            {
                return _num_labels;
            }

            /// Label of edge {v, w}. Requires adjacent(v, w).
            auto label(Vertex v, Vertex w) const -> int
            {
                return _labels[slot(v, w)];
            }

            /// Every edge once with its label, ordered as Graph::edges().
            auto labelled_edges() const -> std::vector<LabelledEdge>;
    };

    /**
     * Throws GraphError when an edge is missing a label, a non-edge is
     * labelled, an edge gets two different labels, a label is out of range,
     * or num_labels is outside [1, 64].
     */
    auto build_labelled(Graph graph, int num_labels, std::span<const LabelledEdge> assignments) -> LabelledGraph;

    struct Permutation
    {
        std::vector<Vertex> forward;  ///< new index -> original vertex
        std::vector<Vertex> inverse;  ///< original vertex -> new index
    };

    /// Renumbers vertices into non-increasing degree order, ties by ascending original index.
    auto permute_by_degree(const LabelledGraph & graph) -> std::pair<LabelledGraph, Permutation>;

    /// l together with the labels of the edges between v and each member of clique.
    inline auto labels_with_clique(const LabelledGraph & graph, Vertex v, std::span<const Vertex> clique, LabelSet l) -> LabelSet
    {
        for (auto w : clique)
            l.add(graph.label(v, w));
        return l;
    }

    /// Union of labels over all pairs. Throws GraphError unless the vertices form a clique.
    auto clique_cost(const LabelledGraph & graph, std::span<const Vertex> clique) -> LabelSet;

    /// True iff the vertices are distinct, in range and pairwise adjacent.
    auto is_clique(const Graph & graph, std::span<const Vertex> vertices) -> bool;
}

#endif
