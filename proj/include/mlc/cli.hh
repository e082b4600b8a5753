#ifndef MLC_GUARD_MLC_CLI_HH
#define MLC_GUARD_MLC_CLI_HH 1

#include <mlc/graph.hh>
#include <mlc/search.hh>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace mlc
{
    enum class ExitCode : int
    {
        success = 0,
        bad_arguments = 1,
        parse_error = 2,
        validation_failure = 3,
        invalid_witness = 4
    };

    /// Everything `solve` prints about one run. Vertices and labels are 1-based.
    struct RunReport
    {
        std::string instance;
        int n = 0;
        std::size_t m = 0;
        int num_labels = 0;
        int budget = 0;
        int size = 0;
        int cost = 0;
        std::vector<int> witness;
        std::vector<int> witness_labels;
        std::uint64_t nodes_pass1 = 0;
        std::uint64_t nodes_pass2 = 0;
        double elapsed = 0.0;
        int threads = 1;
        std::optional<std::uint64_t> seed;

        /// One `key: value` line per field, always in the same order.
        auto to_text() const -> std::string;

        auto to_json() const -> std::string;
    };

    /// Why a claimed witness is not a feasible clique, or nothing if it is one.
    auto witness_problem(const LabelledGraph & graph, const std::vector<Vertex> & witness, int budget)
        -> std::optional<std::string>;

    /**
     * Entry point for the command line tool. args excludes the program name;
     * the first element selects `solve`, `bench` or `verify`. Returns the
     * process exit status.
     */
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
