#include <mlc/solver.hh>
#include <mlc/errors.hh>

#include "expand.hh"

#include <algorithm>
#include <chrono>

using std::chrono::duration;
using std::chrono::steady_clock;

auto mlc::run_pass(const LabelledGraph & permuted, int budget, bool first, Incumbent & incumbent,
        const SearchHooks * hooks) -> std::uint64_t
{
    if (permuted.size() == 0)
        return 0;

    detail::LocalIncumbent policy{ incumbent };
    detail::Expander expander{ permuted, policy, budget, first, hooks };

    Bitset everything{permuted.size()};
    everything.set_all();
    expander.run({}, everything, LabelSet{});
    return expander.nodes;
}

auto mlc::solve(const LabelledGraph & graph, int budget, const SearchHooks * hooks) -> Solution
{
    if (budget < 1)
        throw ArgumentError{"budget must be at least 1, got " + std::to_string(budget)};

    auto start = steady_clock::now();

    auto [permuted, permutation] = permute_by_degree(graph);

    Solution result;
    Incumbent incumbent;
    result.stats.nodes_pass1 = run_pass(permuted, budget, true, incumbent, hooks);

    if (second_pass_is_redundant(incumbent))
        result.stats.second_pass_skipped = true;
    else
        result.stats.nodes_pass2 = run_pass(permuted, budget, false, incumbent, hooks);

    for (auto v : incumbent.clique)
        result.clique.push_back(permutation.forward[v]);
    std::sort(result.clique.begin(), result.clique.end());
    result.labels = incumbent.labels;

    result.stats.elapsed = duration<double>(steady_clock::now() - start).count();
    return result;
}
