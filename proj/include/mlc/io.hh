#ifndef MLC_GUARD_MLC_IO_HH
#define MLC_GUARD_MLC_IO_HH 1

#include <mlc/graph.hh>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mlc
{
    struct DimacsGraph
    {
        Graph graph;
        std::size_t declared_edges = 0;       ///< m from the `p edge n m` line
        std::vector<std::string> warnings;
    };

    /**
     * Reads the DIMACS clique format: `c` comments, one `p edge n m` line,
     * then `e u v` lines with 1-based endpoints. Duplicate edges collapse;
     * if the unique edge count differs from m, a warning is recorded.
     * Throws ParseError with the offending line number.
     */
    auto parse_dimacs(std::string_view text) -> DimacsGraph;

    auto write_dimacs(const Graph & graph, std::ostream & out) -> void;

    /**
     * The splitmix64 generator. Labellings are defined in terms of its exact
     * output so they can be reproduced bit for bit elsewhere.
     */
    struct RngState
    {
        std::uint64_t state = 0;

        auto next() -> std::uint64_t
        {
            state += 0x9E3779B97F4B7C15ull;
            std::uint64_t z = state;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
            return z ^ (z >> 31);
        }
    };

    /**
     * Labels edges uniformly at random: edges are visited as (u, v), u < v,
     * in ascending order, and each takes the next generator value modulo
     * num_labels. Throws ArgumentError unless 1 <= num_labels <= 64.
     */
    auto random_labels(const Graph & graph, int num_labels, std::uint64_t seed) -> LabelledGraph;

    /**
     * Reads `l u v k` lines (1-based vertices and labels; `c` comments
     * allowed) assigning label k to edge {u, v}. The label count is the
     * largest k seen, and every edge must be labelled.
     */
    auto parse_labels(std::string_view text, const Graph & graph) -> LabelledGraph;

    auto write_labels(const LabelledGraph & graph, std::ostream & out) -> void;

    struct BudgetSpec
    {
        enum class Kind
        {
            absolute,
            percentage
        };

        Kind kind = Kind::absolute;
        int value = 1;

        static auto absolute(int b) -> BudgetSpec
        {
            return { Kind::absolute, b };
        }

        static auto percentage(int p) -> BudgetSpec
        {
            return { Kind::percentage, p };
        }
    };

    /// Percentages in (0, 100] become max(1, round(p% of num_labels)), halves rounding away from zero.
    auto resolve_budget(BudgetSpec spec, int num_labels) -> int;

    struct SeededLabels
    {
        int num_labels;
        std::uint64_t seed;
    };

    struct LabelFile
    {
        std::filesystem::path path;
    };

    struct InstanceSpec
    {
        std::filesystem::path graph;
        std::variant<SeededLabels, LabelFile> labels;
        BudgetSpec budget;
    };

    struct Instance
    {
        std::string name;              ///< graph file stem
        LabelledGraph graph;
        int budget = 1;
        std::optional<std::uint64_t> seed;
        std::vector<std::string> warnings;
    };

    /// Throws std::system_error when a file cannot be read.
    auto read_file(const std::filesystem::path & path) -> std::string;

    auto load_instance(const InstanceSpec & spec) -> Instance;
}

#endif
