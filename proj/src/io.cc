#include <mlc/io.hh>
#include <mlc/errors.hh>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

using std::string;
using std::string_view;
using std::to_string;
using std::vector;

using namespace mlc;

namespace
{
    auto tokenise(string_view line) -> vector<string_view>
    {
        vector<string_view> result;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
                ++pos;
            auto start = pos;
            while (pos < line.size() && ! std::isspace(static_cast<unsigned char>(line[pos])))
                ++pos;
            if (pos > start)
                result.push_back(line.substr(start, pos - start));
        }
        return result;
    }

    auto parse_int(string_view token, int line, const char * what) -> long long
    {
        long long result = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), result);
        if (ec != std::errc{} || end != token.data() + token.size())
            throw ParseError{line, "expected an integer " + string{what} + ", got '" + string{token} + "'"};
        return result;
    }

    /// Calls f(line_number, tokens) for every non-blank, non-comment line.
    template <typename F>
    auto for_each_line(string_view text, F && f) -> void
    {
        int line_number = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('\n', pos);
            if (end == string_view::npos)
                end = text.size();
            ++line_number;
            auto tokens = tokenise(text.substr(pos, end - pos));
            if (! tokens.empty() && tokens[0] != "c")
                f(line_number, tokens);
            pos = end + 1;
        }
    }

    auto vertex_in_range(long long v, int n, int line) -> Vertex
    {
        if (v < 1 || v > n)
            throw ParseError{line, "vertex " + to_string(v) + " is outside [1, " + to_string(n) + "]"};
        return Vertex(v - 1);
    }
}

auto mlc::parse_dimacs(string_view text) -> DimacsGraph
{
    DimacsGraph result;
    std::optional<int> n;
    vector<Edge> edges;

    for_each_line(text, [&] (int line, const vector<string_view> & tokens) {
        if (tokens[0] == "p") {
            if (n)
                throw ParseError{line, "duplicate 'p' line"};
            if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col"))
                throw ParseError{line, "expected 'p edge <vertices> <edges>'"};
            auto vertices = parse_int(tokens[2], line, "vertex count");
            auto declared = parse_int(tokens[3], line, "edge count");
            if (vertices < 0 || vertices > (1 << 24) || declared < 0)
                throw ParseError{line, "implausible problem size"};
            n = int(vertices);
            result.declared_edges = std::size_t(declared);
        }
        else if (tokens[0] == "e") {
            if (! n)
                throw ParseError{line, "edge before 'p' line"};
            if (tokens.size() != 3)
                throw ParseError{line, "expected 'e <u> <v>'"};
            auto u = vertex_in_range(parse_int(tokens[1], line, "vertex"), *n, line);
            auto v = vertex_in_range(parse_int(tokens[2], line, "vertex"), *n, line);
            if (u == v)
                throw ParseError{line, "loop on vertex " + to_string(u + 1)};
            edges.emplace_back(u, v);
        }
        else
            throw ParseError{line, "unrecognised line starting '" + string{tokens[0]} + "'"};
    });

    if (! n)
        throw ParseError{0, "missing 'p edge' line"};

    result.graph = build_graph(*n, edges);
    if (result.graph.edge_count() != result.declared_edges)
        result.warnings.push_back("header declares " + to_string(result.declared_edges) + " edges but "
                + to_string(result.graph.edge_count()) + " unique edges were read");

    return result;
}

auto mlc::write_dimacs(const Graph & graph, std::ostream & out) -> void
{
    out << "p edge " << graph.size() << ' ' << graph.edge_count() << '\n';
    for (auto [u, v] : graph.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

auto mlc::random_labels(const Graph & graph, int num_labels, std::uint64_t seed) -> LabelledGraph
{
    if (num_labels < 1 || num_labels > max_labels)
        throw ArgumentError{"number of labels must be in [1, " + to_string(max_labels) + "], got " + to_string(num_labels)};

    RngState rng{ seed };
    vector<LabelledEdge> labels;
    labels.reserve(graph.edge_count());
    for (auto [u, v] : graph.edges())
        labels.push_back(LabelledEdge{ u, v, int(rng.next() % std::uint64_t(num_labels)) });

    return build_labelled(graph, num_labels, labels);
}

auto mlc::parse_labels(string_view text, const Graph & graph) -> LabelledGraph
{
    int n = graph.size();
    std::map<Edge, int> labels;

    for_each_line(text, [&] (int line, const vector<string_view> & tokens) {
        if (tokens[0] != "l" || tokens.size() != 4)
            throw ParseError{line, "expected 'l <u> <v> <label>'"};
        auto u = vertex_in_range(parse_int(tokens[1], line, "vertex"), n, line);
        auto v = vertex_in_range(parse_int(tokens[2], line, "vertex"), n, line);
        auto k = parse_int(tokens[3], line, "label");
        if (u == v || ! graph.adjacent(u, v))
            throw ParseError{line, "(" + to_string(u + 1) + ", " + to_string(v + 1) + ") is not an edge"};
        if (k < 1 || k > max_labels)
            throw ParseError{line, "label " + to_string(k) + " is outside [1, " + to_string(max_labels) + "]"};

        Edge e{ std::min(u, v), std::max(u, v) };
        auto [it, inserted] = labels.emplace(e, int(k - 1));
        if (! inserted && it->second != k - 1)
            throw ParseError{line, "edge (" + to_string(e.first + 1) + ", " + to_string(e.second + 1) + ") already has label "
                    + to_string(it->second + 1)};
    });

    for (auto e : graph.edges())
        if (! labels.contains(e))
            throw ParseError{0, "edge (" + to_string(e.first + 1) + ", " + to_string(e.second + 1) + ") has no label"};

    int num_labels = 1;
    vector<LabelledEdge> assignments;
    assignments.reserve(labels.size());
    for (auto & [e, k] : labels) {
        num_labels = std::max(num_labels, k + 1);
        assignments.push_back(LabelledEdge{ e.first, e.second, k });
    }

    return build_labelled(graph, num_labels, assignments);
}

auto mlc::write_labels(const LabelledGraph & graph, std::ostream & out) -> void
{
    for (const auto & e : graph.labelled_edges())
        out << "l " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.label + 1 << '\n';
}

auto mlc::resolve_budget(BudgetSpec spec, int num_labels) -> int
{
    switch (spec.kind) {
        case BudgetSpec::Kind::absolute:
            if (spec.value < 1)
                throw ArgumentError{"budget must be at least 1, got " + to_string(spec.value)};
            return spec.value;

        case BudgetSpec::Kind::percentage:
            if (spec.value < 1 || spec.value > 100)
                throw ArgumentError{"budget percentage must be in [1, 100], got " + to_string(spec.value)};
            // round half away from zero; everything here is non-negative
            return std::max(1, (spec.value * num_labels + 50) / 100);
    }
    throw ArgumentError{"unknown budget kind"};
}

auto mlc::read_file(const std::filesystem::path & path) -> string
{
    std::ifstream in{ path, std::ios::binary };
    if (! in)
        throw std::system_error{ std::make_error_code(std::errc::no_such_file_or_directory), "cannot read " + path.string() };
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

auto mlc::load_instance(const InstanceSpec & spec) -> Instance
{
    Instance result;
    result.name = spec.graph.stem().string();

    auto dimacs = parse_dimacs(read_file(spec.graph));
    result.warnings = std::move(dimacs.warnings);

    if (auto seeded = std::get_if<SeededLabels>(&spec.labels)) {
        result.graph = random_labels(dimacs.graph, seeded->num_labels, seeded->seed);
        result.seed = seeded->seed;
    }
    else
        result.graph = parse_labels(read_file(std::get<LabelFile>(spec.labels).path), dimacs.graph);

    result.budget = resolve_budget(spec.budget, result.graph.num_labels());
    return result;
}
