#ifndef MLC_GUARD_MLC_COLOUR_HH
#define MLC_GUARD_MLC_COLOUR_HH 1

#include <mlc/bitset.hh>
#include <mlc/graph.hh>

#include <vector>

namespace mlc
{
    /**
     * Greedy sequential colouring of a candidate set. order holds the
     * candidates in the order they were coloured; bounds[i] is the number of
     * colours in use once order[i] was coloured, so the first i + 1 vertices
     * of order cannot contain a clique larger than bounds[i].
     */
    struct ColourResult
    {
        std::vector<Vertex> order;
        std::vector<int> bounds;
    };

    /**
     * Colours p greedily, always taking the lowest-numbered vertex that can
     * still receive the current colour. Writes into order and bounds, which
     * are resized to |p|; passing the same buffers each time avoids
     * allocation on the search hot path.
     */
    auto colour_order(const Graph & graph, const Bitset & p, std::vector<Vertex> & order, std::vector<int> & bounds) -> void;

    auto colour_order(const Graph & graph, const Bitset & p) -> ColourResult;
}

#endif
