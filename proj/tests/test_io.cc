#include <doctest.h>

#include <mlc/errors.hh>
#include <mlc/io.hh>

#include "test_support.hh"

#include <algorithm>
#include <random>
#include <sstream>

using namespace mlc;
using std::string;
using std::vector;

TEST_CASE("parse_dimacs")
{
    SUBCASE("basic")
    {
        auto d = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3");
        CHECK(d.graph.size() == 3);
        CHECK(d.graph.edges() == vector<Edge>{ { 0, 1 }, { 1, 2 } });
        CHECK(d.warnings.empty());
    }

    SUBCASE("comments and blank lines")
    {
        auto d = parse_dimacs("c hello\nc world\n\np edge 2 1\n  \ne 1 2\n");
        CHECK(d.graph.edge_count() == 1);
    }

    SUBCASE("duplicates warn")
    {
        auto d = parse_dimacs("p edge 2 2\ne 1 2\ne 1 2\n");
        CHECK(d.graph.edge_count() == 1);
        CHECK(d.declared_edges == 2);
        CHECK(d.warnings.size() == 1);
    }

    SUBCASE("errors carry line numbers")
    {
        auto line_of = [] (const string & text) {
            try {
                parse_dimacs(text);
            }
            catch (const ParseError & e) {
                return e.line();
            }
            return -1;
        };
        CHECK(line_of("e 1 2\n") == 1);
        CHECK(line_of("p edge 3 1\np edge 3 1\n") == 2);
        CHECK(line_of("c x\np edge 3 1\ne 1 4\n") == 3);
        CHECK(line_of("p edge 3 1\ne 0 1\n") == 2);
        CHECK(line_of("p edge 3 1\ne 2 2\n") == 2);
        CHECK(line_of("p edge 3 1\ne 1 x\n") == 2);
        CHECK(line_of("p edge 3 1\nq 1 2\n") == 2);
        CHECK(line_of("p edge 3\n") == 1);
        CHECK(line_of("c nothing\n") == 0);
    }
}

TEST_CASE("write_dimacs round trip")
{
    for (std::uint64_t seed = 0 ; seed < 10 ; ++seed) {
        auto g = test::random_graph(30, 0.2, seed);
        std::ostringstream out;
        write_dimacs(g, out);
        auto back = parse_dimacs(out.str());
        CHECK(back.graph.size() == g.size());
        CHECK(back.graph.edges() == g.edges());
        CHECK(back.warnings.empty());
    }
}

TEST_CASE("splitmix")
{
    // values computed independently by tests/oracles/derive_values.py
    RngState rng{ 0 };
    CHECK(rng.next() == 0x09AAB36CFDA2D1B3ull);
    CHECK(rng.next() == 0x5B00C67197590451ull);
    CHECK(rng.next() == 0x0EB2AFB57F7F9972ull);

    CHECK(RngState{ 1 }.next() == 0x5F4C1DAC282D656Full);
    CHECK(RngState{ 2 }.next() == 0x9A9F5E0655F6A5B3ull);

    RngState a{ 77 }, b{ 77 };
    for (int i = 0 ; i < 100 ; ++i)
        CHECK(a.next() == b.next());
}

TEST_CASE("random_labels")
{
    auto triangle = build_graph(3, vector<Edge>{ { 0, 1 }, { 1, 2 }, { 0, 2 } });

    SUBCASE("triangle with seed 0")
    {
        auto lg = random_labels(triangle, 4, 0);
        // canonical edge order (1,2), (1,3), (2,3)
        CHECK(lg.label(0, 1) == 3);
        CHECK(lg.label(0, 2) == 1);
        CHECK(lg.label(1, 2) == 2);
    }

    SUBCASE("one label")
    {
        auto lg = random_labels(test::random_graph(20, 0.5, 1), 1, 12345);
        for (auto e : lg.labelled_edges())
            CHECK(e.label == 0);
    }

    SUBCASE("deterministic, in range, and independent of input edge order")
    {
        auto g = test::random_graph(40, 0.3, 2);
        auto edges = g.edges();
        std::mt19937 rng{ 1 };
        std::shuffle(edges.begin(), edges.end(), rng);
        for (auto & e : edges)
            if (rng() % 2)
                std::swap(e.first, e.second);
        auto g2 = build_graph(40, edges);

        auto a = random_labels(g, 7, 99), b = random_labels(g2, 7, 99), c = random_labels(g, 7, 99);
        auto ea = a.labelled_edges(), eb = b.labelled_edges(), ec = c.labelled_edges();
        REQUIRE(ea.size() == eb.size());
        for (std::size_t i = 0 ; i < ea.size() ; ++i) {
            CHECK(ea[i].label == eb[i].label);
            CHECK(ea[i].label == ec[i].label);
            CHECK(ea[i].label < 7);
        }
    }

    SUBCASE("bad label counts")
    {
        CHECK_THROWS_AS(random_labels(triangle, 0, 1), ArgumentError);
        CHECK_THROWS_AS(random_labels(triangle, 65, 1), ArgumentError);
    }
}

TEST_CASE("parse_labels")
{
    auto g = parse_dimacs(read_file(test::data_path("labelled7.clq"))).graph;

    SUBCASE("labelled example fixture")
    {
        auto lg = parse_labels(read_file(test::data_path("labelled7.lab")), g);
        CHECK(lg.num_labels() == 4);
        CHECK(lg.label(3, 4) == 1);
    }

    SUBCASE("missing edge is named")
    {
        auto text = read_file(test::data_path("labelled7.lab"));
        auto pos = text.find("l 6 7 3\n");
        REQUIRE(pos != string::npos);
        text.erase(pos, 8);
        try {
            parse_labels(text, g);
            FAIL("expected a parse error");
        }
        catch (const ParseError & e) {
            CHECK(string{ e.what() }.find("(6, 7)") != string::npos);
        }
    }

    SUBCASE("errors")
    {
        auto path = parse_dimacs("p edge 3 2\ne 2 3\ne 1 3\n").graph;
        CHECK_THROWS_AS(parse_labels("l 1 2 1\nl 2 3 1\nl 1 3 1\n", path), ParseError);
        CHECK_THROWS_AS(parse_labels("l 2 3 0\nl 1 3 1\n", path), ParseError);
        CHECK_THROWS_AS(parse_labels("l 2 3 1\nl 3 2 2\nl 1 3 1\n", path), ParseError);
        CHECK_THROWS_AS(parse_labels("l 2 3 1\nl 1 3 65\n", path), ParseError);
        CHECK_THROWS_AS(parse_labels("l 2 3\n", path), ParseError);
        CHECK_NOTHROW(parse_labels("c fine\nl 3 2 2\nl 1 3 1\n", path));
    }

    SUBCASE("round trip")
    {
        auto lg = test::random_labelling(test::random_graph(25, 0.4, 3), 9, 3);
        std::ostringstream out;
        write_labels(lg, out);
        auto back = parse_labels(out.str(), lg.graph());
        auto a = lg.labelled_edges(), b = back.labelled_edges();
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0 ; i < a.size() ; ++i)
            CHECK(a[i].label == b[i].label);
    }
}

TEST_CASE("resolve_budget")
{
    CHECK(resolve_budget(BudgetSpec::percentage(50), 8) == 4);
    CHECK(resolve_budget(BudgetSpec::percentage(25), 6) == 2);
    CHECK(resolve_budget(BudgetSpec::percentage(75), 4) == 3);
    CHECK(resolve_budget(BudgetSpec::percentage(25), 1) == 1);
    CHECK(resolve_budget(BudgetSpec::percentage(25), 2) == 1);
    CHECK(resolve_budget(BudgetSpec::absolute(3), 8) == 3);
    CHECK_THROWS_AS(resolve_budget(BudgetSpec::absolute(0), 8), ArgumentError);
    CHECK_THROWS_AS(resolve_budget(BudgetSpec::percentage(0), 8), ArgumentError);
    CHECK_THROWS_AS(resolve_budget(BudgetSpec::percentage(101), 8), ArgumentError);
}

TEST_CASE("load_instance")
{
    InstanceSpec spec{ test::data_path("labelled7.clq"), LabelFile{ test::data_path("labelled7.lab") }, BudgetSpec::percentage(75) };
    auto instance = load_instance(spec);
    CHECK(instance.name == "labelled7");
    CHECK(instance.budget == 3);
    CHECK(! instance.seed);

    InstanceSpec seeded{ test::data_path("labelled7.clq"), SeededLabels{ 6, 5 }, BudgetSpec::absolute(2) };
    auto random = load_instance(seeded);
    CHECK(random.graph.num_labels() == 6);
    CHECK(random.seed == 5u);

    InstanceSpec missing{ test::data_path("no_such_file.clq"), SeededLabels{ 2, 1 }, BudgetSpec::absolute(1) };
    CHECK_THROWS_AS(load_instance(missing), std::system_error);
}
