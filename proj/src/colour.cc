#include <mlc/colour.hh>

using std::vector;

auto mlc::colour_order(const Graph & graph, const Bitset & p, vector<Vertex> & order, vector<int> & bounds) -> void
{
    order.clear();
    bounds.clear();

    Bitset uncoloured = p;
    Bitset colourable{p.size()};
    int colour = 1;

    while (uncoloured.any()) {
        colourable = uncoloured;
        for (int v = colourable.first() ; v != Bitset::npos ; v = colourable.first()) {
            order.push_back(v);
            bounds.push_back(colour);
            uncoloured.reset(v);
            colourable.reset(v);
            colourable.intersect_with_complement(graph.neighbours(v));
        }
        ++colour;
    }
}

auto mlc::colour_order(const Graph & graph, const Bitset & p) -> ColourResult
{
    ColourResult result;
    colour_order(graph, p, result.order, result.bounds);
    return result;
}
