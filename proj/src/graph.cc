#include <mlc/graph.hh>
#include <mlc/errors.hh>

#include <algorithm>
#include <numeric>
#include <string>

using std::pair;
using std::span;
using std::to_string;
using std::vector;

namespace
{
    auto edge_name(mlc::Vertex u, mlc::Vertex v) -> std::string
    {
        return "(" + to_string(u + 1) + ", " + to_string(v + 1) + ")";
    }
}

auto mlc::build_graph(int n, span<const Edge> edges) -> Graph
{
    if (n < 0)
        throw GraphError{"negative vertex count"};

    Graph result;
    result._size = n;
    result._adjacency.assign(n, Bitset{n});
    result._degrees.assign(n, 0);

    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError{"edge " + edge_name(u, v) + " has an endpoint outside [1, " + to_string(n) + "]"};
        if (u == v)
            throw GraphError{"loop edge on vertex " + to_string(u + 1)};
        result._adjacency[u].set(v);
        result._adjacency[v].set(u);
    }

    std::size_t twice_edges = 0;
    for (int v = 0 ; v < n ; ++v) {
        result._degrees[v] = result._adjacency[v].count();
        twice_edges += result._degrees[v];
    }
    result._edge_count = twice_edges / 2;

    return result;
}

auto mlc::Graph::edges() const -> vector<Edge>
{
    vector<Edge> result;
    result.reserve(_edge_count);
    for (int u = 0 ; u < _size ; ++u)
        _adjacency[u].for_each([&] (int v) {
            if (u < v)
                result.emplace_back(u, v);
        });
    return result;
}

auto mlc::LabelSet::to_vector() const -> vector<int>
{
    vector<int> result;
    for (auto b = bits ; b ; b &= b - 1)
        result.push_back(std::countr_zero(b));
    return result;
}

auto mlc::build_labelled(Graph graph, int num_labels, span<const LabelledEdge> assignments) -> LabelledGraph
{
    if (num_labels < 1 || num_labels > max_labels)
        throw GraphError{"number of labels must be in [1, " + to_string(max_labels) + "], got " + to_string(num_labels)};

    LabelledGraph result;
    result._num_labels = num_labels;

    int n = graph.size();
    int words = Bitset::words_for(n);
    result._row_start.resize(n);
    result._word_rank.resize(std::size_t(n) * words);

    std::uint32_t offset = 0;
    for (int v = 0 ; v < n ; ++v) {
        result._row_start[v] = offset;
        std::uint32_t rank = 0;
        for (int w = 0 ; w < words ; ++w) {
            result._word_rank[std::size_t(v) * words + w] = rank;
            rank += std::popcount(graph.neighbours(v).word(w));
        }
        offset += rank;
    }

    constexpr std::uint8_t unassigned = 0xff;
    result._labels.assign(offset, unassigned);
    result._graph = std::move(graph);
    const auto & g = result._graph;

    for (const auto & a : assignments) {
        if (a.u < 0 || a.u >= n || a.v < 0 || a.v >= n || a.u == a.v || ! g.adjacent(a.u, a.v))
            throw GraphError{"label given for " + edge_name(a.u, a.v) + ", which is not an edge"};
        if (a.label < 0 || a.label >= num_labels)
            throw GraphError{"label " + to_string(a.label) + " on edge " + edge_name(a.u, a.v)
                + " is outside [0, " + to_string(num_labels) + ")"};

        auto & forward = result._labels[result.slot(a.u, a.v)];
        auto & backward = result._labels[result.slot(a.v, a.u)];
        if (forward != unassigned && forward != a.label)
            throw GraphError{"edge " + edge_name(a.u, a.v) + " is given two different labels"};
        forward = backward = std::uint8_t(a.label);
    }

    for (int u = 0 ; u < n ; ++u)
        g.neighbours(u).for_each([&] (int v) {
            if (result._labels[result.slot(u, v)] == unassigned)
                throw GraphError{"edge " + edge_name(std::min(u, v), std::max(u, v)) + " has no label"};
        });

    return result;
}

auto mlc::LabelledGraph::labelled_edges() const -> vector<LabelledEdge>
{
    vector<LabelledEdge> result;
    for (auto [u, v] : _graph.edges())
        result.push_back(LabelledEdge{ u, v, label(u, v) });
    return result;
}

auto mlc::permute_by_degree(const LabelledGraph & graph) -> pair<LabelledGraph, Permutation>
{
    const auto & g = graph.graph();
    int n = g.size();

    Permutation permutation;
    permutation.forward.resize(n);
    std::iota(permutation.forward.begin(), permutation.forward.end(), 0);
    std::stable_sort(permutation.forward.begin(), permutation.forward.end(),
            [&] (Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    permutation.inverse.resize(n);
    for (int i = 0 ; i < n ; ++i)
        permutation.inverse[permutation.forward[i]] = i;

    vector<Edge> edges;
    vector<LabelledEdge> labels;
    edges.reserve(g.edge_count());
    labels.reserve(g.edge_count());
    for (const auto & e : graph.labelled_edges()) {
        Vertex u = permutation.inverse[e.u], v = permutation.inverse[e.v];
        edges.emplace_back(u, v);
        labels.push_back(LabelledEdge{ u, v, e.label });
    }

    auto permuted = build_labelled(build_graph(n, edges), graph.num_labels(), labels);
    return { std::move(permuted), std::move(permutation) };
}

auto mlc::is_clique(const Graph & graph, span<const Vertex> vertices) -> bool
{
    for (std::size_t i = 0 ; i < vertices.size() ; ++i) {
        if (vertices[i] < 0 || vertices[i] >= graph.size())
            return false;
        for (std::size_t j = 0 ; j < i ; ++j)
            if (! graph.adjacent(vertices[i], vertices[j]))
                return false;
    }
    return true;
}

auto mlc::clique_cost(const LabelledGraph & graph, span<const Vertex> clique) -> LabelSet
{
    LabelSet result;
    for (std::size_t i = 0 ; i < clique.size() ; ++i) {
        if (clique[i] < 0 || clique[i] >= graph.size())
            throw GraphError{"vertex " + to_string(clique[i] + 1) + " is out of range"};
        for (std::size_t j = 0 ; j < i ; ++j) {
            if (! graph.graph().adjacent(clique[i], clique[j]))
                throw GraphError{"vertices " + to_string(clique[j] + 1) + " and " + to_string(clique[i] + 1) + " are not adjacent"};
            result.add(graph.label(clique[i], clique[j]));
        }
    }
    return result;
}
