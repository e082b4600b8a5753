#ifndef MLC_GUARD_TESTS_TEST_SUPPORT_HH
#define MLC_GUARD_TESTS_TEST_SUPPORT_HH 1

#include <mlc/graph.hh>
#include <mlc/io.hh>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace mlc::test
{
    inline auto data_path(const std::string & name) -> std::filesystem::path
    {
        return std::filesystem::path{ MLC_DATA_DIR } / name;
    }

    inline auto labelled7() -> LabelledGraph
    {
        auto g = parse_dimacs(read_file(data_path("labelled7.clq"))).graph;
        return parse_labels(read_file(data_path("labelled7.lab")), g);
    }

    inline auto colour8() -> Graph
    {
        return parse_dimacs(read_file(data_path("colour8.clq"))).graph;
    }

    /// 1-based vertex list to 0-based.
    inline auto zero_based(std::vector<int> vs) -> std::vector<Vertex>
    {
        for (auto & v : vs)
            --v;
        return vs;
    }

    /// G(n, p) using the standard library generator, independent of the solver's own RNG.
    inline auto random_graph(int n, double density, std::uint64_t seed) -> Graph
    {
        std::mt19937_64 rng{ seed };
        std::bernoulli_distribution coin{ density };
        std::vector<Edge> edges;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (coin(rng))
                    edges.emplace_back(u, v);
        return build_graph(n, edges);
    }

    inline auto random_labelling(const Graph & g, int num_labels, std::uint64_t seed) -> LabelledGraph
    {
        std::mt19937_64 rng{ seed ^ 0x5deece66dull };
        std::uniform_int_distribution<int> pick{ 0, num_labels - 1 };
        std::vector<LabelledEdge> labels;
        for (auto [u, v] : g.edges())
            labels.push_back(LabelledEdge{ u, v, pick(rng) });
        return build_labelled(g, num_labels, labels);
    }

    /// Unlabelled maximum clique size by subset enumeration (n <= 20).
    inline auto brute_force_clique_number(const Graph & g) -> int
    {
        int n = g.size(), best = 0;
        for (std::uint32_t s = 0 ; s < (std::uint32_t{1} << n) ; ++s) {
            bool ok = true;
            for (int u = 0 ; u < n && ok ; ++u)
                if ((s >> u) & 1)
                    for (int v = u + 1 ; v < n ; ++v)
                        if (((s >> v) & 1) && ! g.adjacent(u, v)) {
                            ok = false;
                            break;
                        }
            if (ok)
                best = std::max(best, std::popcount(s));
        }
        return best;
    }

    /// Minimum label count over all maximum cliques, by subset enumeration (n <= 20).
    inline auto brute_force_cheapest_maximum(const LabelledGraph & g) -> int
    {
        int n = g.size(), best_size = 0, best_cost = 0;
        for (std::uint32_t s = 0 ; s < (std::uint32_t{1} << n) ; ++s) {
            bool ok = true;
            std::uint64_t labels = 0;
            for (int u = 0 ; u < n && ok ; ++u)
                if ((s >> u) & 1)
                    for (int v = u + 1 ; v < n ; ++v)
                        if ((s >> v) & 1) {
                            if (! g.graph().adjacent(u, v)) {
                                ok = false;
                                break;
                            }
                            labels |= std::uint64_t{1} << g.label(u, v);
                        }
            int size = std::popcount(s), cost = std::popcount(labels);
            if (ok && (size > best_size || (size == best_size && cost < best_cost))) {
                best_size = size;
                best_cost = cost;
            }
        }
        return best_cost;
    }
}

#endif
