#include "doctest.h"

#include <random>

#include "edgeideal/genfun.hpp"
#include "edgeideal/graph_io.hpp"

using namespace edgeideal;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

} // namespace

TEST_CASE("edge list round trips byte-stably") {
    Graph c5 = cycle_graph(5);
    std::string text = write_edge_list(c5);
    CHECK(text == "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
    CHECK(read_edge_list(text) == c5);
    CHECK(write_edge_list(read_edge_list(text)) == text);

    // unordered endpoints normalize on load
    CHECK(read_edge_list("3 2\n2 0\n1 0\n") == Graph(3, {{0, 2}, {0, 1}}));
    CHECK_THROWS_AS(read_edge_list("3 2\n0 1\n"), InputError);
    CHECK_THROWS_AS(read_edge_list("oops"), InputError);
    CHECK_THROWS_AS(read_edge_list("2 1\n0 0\n"), InputError);

    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(9, 0.4, rng);
        std::string t = write_edge_list(g);
        CHECK(read_edge_list(t) == g);
        CHECK(write_edge_list(read_edge_list(t)) == t);
    }
}

TEST_CASE("graph6 codec") {
    CHECK(decode_graph6("A_") == complete_graph(2));
    CHECK(encode_graph6(complete_graph(2)) == "A_");
    CHECK(decode_graph6("?") == Graph(0));
    CHECK(decode_graph6(">>graph6<<A_\n") == complete_graph(2));
    CHECK_THROWS_AS(decode_graph6("A"), InputError);
    CHECK_THROWS_AS(decode_graph6(""), InputError);

    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 12), 0.5, rng);
        CHECK(decode_graph6(encode_graph6(g)) == g);
    }
    // long form for more than 62 vertices
    Graph big = path_graph(70);
    CHECK(decode_graph6(encode_graph6(big)) == big);
}

TEST_CASE("graph JSON") {
    Graph g(3, {{0, 1}, {1, 2}}, {"a", "b", "c"});
    Graph back = graph_from_json(graph_to_json(g));
    CHECK(back == g);
    CHECK(back.labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(graph_from_json(R"({"n":2,"edges":[[1,0]]})") == complete_graph(2));
    CHECK_THROWS_AS(graph_from_json("{}"), InputError);
    CHECK_THROWS_AS(graph_from_json("not json"), InputError);
    CHECK_THROWS_AS(graph_from_json(R"({"n":2,"edges":[[0,5]]})"), InputError);
}

TEST_CASE("complex JSON") {
    auto pentagon = independence_complex(cycle_graph(5));
    CHECK(complex_from_json(complex_to_json(pentagon)) == pentagon);
    auto e = SimplicialComplex::empty_complex(2);
    CHECK(complex_from_json(complex_to_json(e)) == e);
    CHECK(complex_from_json(R"({"ground":3,"facets":[]})").is_void());
    CHECK(complex_from_json(R"({"ground":3,"facets":[[]]})") ==
          SimplicialComplex::empty_complex(3));
}

TEST_CASE("report serializations") {
    auto t = betti_table_graph(cycle_graph(5), FieldSpec::prime(2));
    std::string bj = betti_to_json(t, FieldSpec::prime(2));
    CHECK(bj.find("\"GF(2)\"") != std::string::npos);
    CHECK(bj.find("\"b\":5") != std::string::npos);

    auto h = reduced_homology(independence_complex(cycle_graph(5)), FieldSpec::rationals());
    CHECK(profile_to_json(h) == R"({"dims":{"-1":0,"0":0,"1":1}})");

    auto rep = verify_bound(cycle_graph(4), BoundKind::MaxDegree, FieldSpec::prime(2));
    std::string rj = bound_report_to_json(rep);
    CHECK(rj.find("\"13/4\"") != std::string::npos);
    CHECK(rj.find("\"holds\":true") != std::string::npos);

    auto audit = audit_chain(independence_complex(cycle_graph(5)),
                             {FieldSpec::prime(2)});
    std::string cj = classification_to_json(audit);
    CHECK(cj.find("\"vertex_decomposable\":true") != std::string::npos);
    CHECK(cj.find("\"shedding_tree\"") != std::string::npos);

    auto p = genfun_oracle(path_graph(3), FieldSpec::prime(2));
    CHECK(polynomial_to_json(p) ==
          R"({"terms":[{"c":1,"p":0,"q":0},{"c":2,"p":1,"q":1},{"c":1,"p":1,"q":2}]})");
}

TEST_CASE("format sniffing") {
    CHECK(format_for_path("x.g6") == GraphFormat::Graph6);
    CHECK(format_for_path("x.json") == GraphFormat::Json);
    CHECK(format_for_path("x.txt") == GraphFormat::EdgeList);
    CHECK(format_for_path("edges") == GraphFormat::EdgeList);
}
