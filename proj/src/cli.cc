#include <mlc/cli.hh>
#include <mlc/errors.hh>
#include <mlc/io.hh>
#include <mlc/parallel.hh>
#include <mlc/solver.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <system_error>
#include <thread>

using std::optional;
using std::ostream;
using std::string;
using std::to_string;
using std::vector;

using namespace mlc;

namespace
{
    auto default_threads() -> int
    {
        return std::max(1u, std::thread::hardware_concurrency());
    }

    auto format_fixed(double value, int places) -> string
    {
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), "%.*f", places, value);
        return buffer;
    }

    auto join(const vector<int> & values) -> string
    {
        string result;
        for (auto v : values) {
            if (! result.empty())
                result += ' ';
            result += to_string(v);
        }
        return result;
    }

    /// Label and budget options shared by every subcommand.
    struct InstanceOptions
    {
        vector<string> graphs;
        vector<int> num_labels;
        std::uint64_t seed = 0;
        string label_file;
        vector<int> budgets;
        vector<int> budget_pcts;

        auto add_to(CLI::App & app, bool many) -> void
        {
            if (many) {
                app.add_option("graphs", graphs, "DIMACS graph files")->required();
                auto labels = app.add_option("--labels", num_labels, "Number of random labels (one or more)");
                auto file = app.add_option("--label-file", label_file, "Label file with 'l u v k' lines");
                labels->excludes(file);
                app.add_option("--seed", seed, "Base seed; sample i uses seed + i");
                auto b = app.add_option("--budget", budgets, "Absolute budget(s)");
                auto p = app.add_option("--budget-pct", budget_pcts, "Budget(s) as a percentage of the label count")
                    ->check(CLI::IsMember({ 25, 50, 75 }));
                b->excludes(p);
            }
            else {
                graphs.resize(1);
                app.add_option("graph", graphs[0], "DIMACS graph file")->required();
                num_labels.resize(1);
                auto labels = app.add_option("--labels", num_labels[0], "Number of random labels");
                auto file = app.add_option("--label-file", label_file, "Label file with 'l u v k' lines");
                labels->excludes(file);
                app.add_option("--seed", seed, "Seed for random labels");
                budgets.resize(1);
                budget_pcts.resize(1);
                auto b = app.add_option("--budget", budgets[0], "Label budget");
                auto p = app.add_option("--budget-pct", budget_pcts[0], "Budget as a percentage of the label count")
                    ->check(CLI::Range(1, 100));
                b->excludes(p);
            }
        }
    };

    auto require_sources(const CLI::App & app) -> void
    {
        if (app.count("--labels") == 0 && app.count("--label-file") == 0)
            throw ArgumentError{"give either --labels (with --seed) or --label-file"};
        if (app.count("--budget") == 0 && app.count("--budget-pct") == 0)
            throw ArgumentError{"give either --budget or --budget-pct"};
    }

    auto label_source(const CLI::App & app, const InstanceOptions & options, int num_labels, std::uint64_t seed)
        -> std::variant<SeededLabels, LabelFile>
    {
        if (app.count("--label-file"))
            return LabelFile{ options.label_file };
        return SeededLabels{ num_labels, seed };
    }

    auto checked_report(const Instance & instance, const Solution & solution, int threads) -> RunReport
    {
        if (auto problem = witness_problem(instance.graph, solution.clique, instance.budget))
            throw GraphError{"solver returned an invalid witness: " + *problem};
        if (clique_cost(instance.graph, solution.clique) != solution.labels)
            throw GraphError{"solver reported the wrong label set for its witness"};

        RunReport report;
        report.instance = instance.name;
        report.n = instance.graph.size();
        report.m = instance.graph.graph().edge_count();
        report.num_labels = instance.graph.num_labels();
        report.budget = instance.budget;
        report.size = solution.size();
        report.cost = solution.cost();
        for (auto v : solution.clique)
            report.witness.push_back(v + 1);
        for (auto l : solution.labels.to_vector())
            report.witness_labels.push_back(l + 1);
        report.nodes_pass1 = solution.stats.nodes_pass1;
        report.nodes_pass2 = solution.stats.nodes_pass2;
        report.elapsed = solution.stats.elapsed;
        report.threads = threads;
        report.seed = instance.seed;
        return report;
    }

    auto run_solver(const LabelledGraph & graph, int budget, int threads) -> Solution
    {
        if (threads == 1)
            return solve(graph, budget);
        return solve_parallel(graph, budget, threads);
    }

    auto solve_command(const CLI::App & app, const InstanceOptions & options, int threads, bool json, ostream & out,
            ostream & err) -> int
    {
        require_sources(app);
        if (threads < 1)
            throw ArgumentError{"--threads must be at least 1"};

        InstanceSpec spec{ options.graphs[0],
            label_source(app, options, options.num_labels[0], options.seed),
            app.count("--budget") ? BudgetSpec::absolute(options.budgets[0]) : BudgetSpec::percentage(options.budget_pcts[0]) };
        auto instance = load_instance(spec);
        for (auto & w : instance.warnings)
            err << "warning: " << w << '\n';

        auto report = checked_report(instance, run_solver(instance.graph, instance.budget, threads), threads);
        out << (json ? report.to_json() : report.to_text());
        return int(ExitCode::success);
    }

    struct BenchTotals
    {
        double size = 0, cost = 0, t_seq = 0, t_par = 0;
    };

    auto bench_command(const CLI::App & app, const InstanceOptions & options, int samples, int threads, ostream & out,
            ostream & err) -> int
    {
        require_sources(app);
        if (samples < 1)
            throw ArgumentError{"--samples must be at least 1"};
        if (threads < 1)
            throw ArgumentError{"--threads must be at least 1"};
        if (app.count("--label-file") && options.graphs.size() != 1)
            throw ArgumentError{"--label-file can only be used with a single graph"};

        bool by_percentage = app.count("--budget-pct") > 0;
        auto budget_specs = by_percentage ? options.budget_pcts : options.budgets;
        vector<int> label_counts = app.count("--label-file") ? vector<int>{ 0 } : options.num_labels;

        out << "instance labels budget_pct budget samples size cost t_seq t_par\n";

        for (const auto & path : options.graphs) {
            auto dimacs = parse_dimacs(read_file(path));
            for (auto & w : dimacs.warnings)
                err << "warning: " << w << '\n';
            optional<LabelledGraph> fixed_labels;
            if (app.count("--label-file"))
                fixed_labels = parse_labels(read_file(options.label_file), dimacs.graph);

            for (auto k : label_counts)
                for (auto b : budget_specs) {
                    BenchTotals totals;
                    int budget = 0;
                    for (int s = 0 ; s < samples ; ++s) {
                        Instance instance;
                        instance.name = std::filesystem::path{ path }.stem().string();
                        if (fixed_labels)
                            instance.graph = *fixed_labels;
                        else {
                            instance.seed = options.seed + std::uint64_t(s);
                            instance.graph = random_labels(dimacs.graph, k, *instance.seed);
                        }
                        instance.budget = budget = resolve_budget(
                                by_percentage ? BudgetSpec::percentage(b) : BudgetSpec::absolute(b),
                                instance.graph.num_labels());

                        auto sequential = solve(instance.graph, instance.budget);
                        auto parallel = solve_parallel(instance.graph, instance.budget, threads);
                        checked_report(instance, sequential, 1);
                        checked_report(instance, parallel, threads);
                        if (sequential.size_cost() != parallel.size_cost())
                            throw GraphError{"sequential and parallel solvers disagree on " + instance.name};

                        totals.size += sequential.size();
                        totals.cost += sequential.cost();
                        totals.t_seq += sequential.stats.elapsed;
                        totals.t_par += parallel.stats.elapsed;
                    }

                    int shown_labels = fixed_labels ? fixed_labels->num_labels() : k;
                    out << std::filesystem::path{ path }.stem().string()
                        << ' ' << shown_labels
                        << ' ' << (by_percentage ? to_string(b) : string{ "-" })
                        << ' ' << budget
                        << ' ' << samples
                        << ' ' << format_fixed(totals.size / samples, 2)
                        << ' ' << format_fixed(totals.cost / samples, 2)
                        << ' ' << format_fixed(totals.t_seq / samples, 4)
                        << ' ' << format_fixed(totals.t_par / samples, 4)
                        << '\n';
                }
        }

        return int(ExitCode::success);
    }

    auto verify_command(const CLI::App & app, const InstanceOptions & options, const vector<int> & witness, ostream & out,
            ostream & err) -> int
    {
        require_sources(app);

        InstanceSpec spec{ options.graphs[0],
            label_source(app, options, options.num_labels[0], options.seed),
            app.count("--budget") ? BudgetSpec::absolute(options.budgets[0]) : BudgetSpec::percentage(options.budget_pcts[0]) };
        auto instance = load_instance(spec);

        vector<Vertex> vertices;
        for (auto v : witness)
            vertices.push_back(v - 1);

        if (auto problem = witness_problem(instance.graph, vertices, instance.budget)) {
            err << "invalid witness: " << *problem << '\n';
            return int(ExitCode::invalid_witness);
        }

        out << "size: " << vertices.size() << '\n';
        out << "cost: " << clique_cost(instance.graph, vertices).cost() << '\n';
        return int(ExitCode::success);
    }
}

auto mlc::RunReport::to_text() const -> string
{
    std::ostringstream s;
    s << "instance: " << instance << '\n'
        << "n: " << n << '\n'
        << "m: " << m << '\n'
        << "num_labels: " << num_labels << '\n'
        << "budget: " << budget << '\n'
        << "size: " << size << '\n'
        << "cost: " << cost << '\n'
        << "witness: " << join(witness) << '\n'
        << "witness_labels: " << join(witness_labels) << '\n'
        << "nodes_pass1: " << nodes_pass1 << '\n'
        << "nodes_pass2: " << nodes_pass2 << '\n'
        << "elapsed: " << format_fixed(elapsed, 6) << '\n'
        << "threads: " << threads << '\n'
        << "seed: " << (seed ? to_string(*seed) : string{ "none" }) << '\n';
    return s.str();
}

auto mlc::RunReport::to_json() const -> string
{
    nlohmann::json j;
    j["instance"] = instance;
    j["n"] = n;
    j["m"] = m;
    j["num_labels"] = num_labels;
    j["budget"] = budget;
    j["size"] = size;
    j["cost"] = cost;
    j["witness"] = witness;
    j["witness_labels"] = witness_labels;
    j["nodes_pass1"] = nodes_pass1;
    j["nodes_pass2"] = nodes_pass2;
    j["elapsed"] = elapsed;
    j["threads"] = threads;
    j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    return j.dump() + "\n";
}

auto mlc::witness_problem(const LabelledGraph & graph, const vector<Vertex> & witness, int budget) -> optional<string>
{
    std::set<Vertex> seen;
    for (auto v : witness) {
        if (v < 0 || v >= graph.size())
            return "vertex " + to_string(v + 1) + " is outside [1, " + to_string(graph.size()) + "]";
        if (! seen.insert(v).second)
            return "vertex " + to_string(v + 1) + " appears twice";
    }

    for (std::size_t i = 0 ; i < witness.size() ; ++i)
        for (std::size_t j = i + 1 ; j < witness.size() ; ++j)
            if (! graph.graph().adjacent(witness[i], witness[j])) {
                auto [a, b] = std::minmax(witness[i], witness[j]);
                return "vertices (" + to_string(a + 1) + ", " + to_string(b + 1) + ") are not adjacent";
            }

    auto cost = clique_cost(graph, witness).cost();
    if (cost > budget)
        return "cost " + to_string(cost) + " exceeds budget " + to_string(budget);

    return std::nullopt;
}

auto mlc::run_cli(const vector<string> & args, ostream & out, ostream & err) -> int
{
    CLI::App app{ "Maximum labelled clique solver", "mlc" };
    app.require_subcommand(1);

    InstanceOptions solve_options, bench_options, verify_options;
    int solve_threads = default_threads(), bench_threads = default_threads();
    bool json = false;
    int samples = 100;
    vector<int> witness;

    auto solve_app = app.add_subcommand("solve", "Solve one instance and print a report");
    solve_options.add_to(*solve_app, false);
    solve_app->add_option("--threads", solve_threads, "Worker threads; 1 runs the sequential solver");
    solve_app->add_flag("--json", json, "Print the report as a JSON object");

    auto bench_app = app.add_subcommand("bench", "Average sequential and parallel runs over seeded labellings");
    bench_options.add_to(*bench_app, true);
    bench_app->add_option("--samples", samples, "Labellings per row");
    bench_app->add_option("--threads", bench_threads, "Worker threads for the parallel column");

    auto verify_app = app.add_subcommand("verify", "Check that a vertex list is a feasible clique");
    verify_options.add_to(*verify_app, false);
    verify_app->add_option("--witness", witness, "1-based vertices, comma or space separated")
        ->required()->delimiter(',');

    try {
        vector<string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : int(ExitCode::bad_arguments);
    }

    try {
        if (solve_app->parsed())
            return solve_command(*solve_app, solve_options, solve_threads, json, out, err);
        if (bench_app->parsed())
            return bench_command(*bench_app, bench_options, samples, bench_threads, out, err);
        return verify_command(*verify_app, verify_options, witness, out, err);
    }
    catch (const ArgumentError & e) {
        err << "error: " << e.what() << '\n';
        return int(ExitCode::bad_arguments);
    }
    catch (const std::system_error & e) {
        err << "error: " << e.what() << '\n';
        return int(ExitCode::bad_arguments);
    }
    catch (const mlc::ParseError & e) {
        err << "parse error: " << e.what() << '\n';
        return int(ExitCode::parse_error);
    }
    catch (const GraphError & e) {
        err << "error: " << e.what() << '\n';
        return int(ExitCode::validation_failure);
    }
}
