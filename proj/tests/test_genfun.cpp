#include "doctest.h"

#include <random>

#include "edgeideal/genfun.hpp"

using namespace edgeideal;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph random_forest(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        if (rng() % 4 != 0) edges.emplace_back(static_cast<int>(rng() % v), v);
    return Graph(n, std::move(edges));
}

} // namespace

TEST_CASE("oracle polynomials") {
    CHECK(genfun_oracle(complete_graph(2), F2).str() == "1 + x*y");
    CHECK(genfun_oracle(path_graph(3), F2).str() == "1 + 2*x*y + x*y^2");
    CHECK(genfun_oracle(cycle_graph(5), F2).str() == "1 + 5*x*y + 5*x*y^2 + x^2*y^3");
    CHECK(genfun_oracle(Graph(3), Q).str() == "1");
}

TEST_CASE("isolated vertex reduction") {
    auto oracle = oracle_poly_fn(F2);
    Graph k2_k1 = disjoint_union(complete_graph(2), Graph(1));
    CHECK(reduce_isolated_vertex(k2_k1, 2, oracle) == genfun_oracle(k2_k1, F2));
    CHECK(reduce_isolated_vertex(Graph(1), 0, oracle).str() == "1");
    Graph p3_k1 = disjoint_union(path_graph(3), Graph(1));
    CHECK(reduce_isolated_vertex(p3_k1, 3, oracle).str() == "1 + 2*x*y + x*y^2");
    CHECK_THROWS_AS(reduce_isolated_vertex(complete_graph(2), 0, oracle), InputError);
}

TEST_CASE("isolated edge reduction") {
    auto oracle = oracle_poly_fn(F2);
    CHECK(reduce_isolated_edge(complete_graph(2), 0, 1, oracle).str() == "1 + x*y");
    Graph two_k2 = disjoint_union(complete_graph(2), complete_graph(2));
    CHECK(reduce_isolated_edge(two_k2, 0, 1, oracle) == genfun_oracle(two_k2, F2));
    Graph p3_k2 = disjoint_union(path_graph(3), complete_graph(2));
    CHECK(reduce_isolated_edge(p3_k2, 3, 4, oracle) == genfun_oracle(p3_k2, F2));
    CHECK_THROWS_AS(reduce_isolated_edge(path_graph(3), 0, 1, oracle), InputError);
}

TEST_CASE("dominated set reduction") {
    auto oracle = oracle_poly_fn(F2);
    // star path a-c-b: leaves 0 and 1 dominate each other through the center 2
    Graph star(3, {{0, 2}, {1, 2}});
    auto poly = reduce_dominated_set(star, 0, VertexSet(3, {1}), oracle);
    CHECK(poly.str() == "1 + 2*x*y + x*y^2");

    Graph ferrers22 = ferrers_graph(Partition({2, 2}));
    auto poly2 = reduce_dominated_set(ferrers22, 1, VertexSet(4, {0}), oracle);
    CHECK(poly2 == genfun_oracle(cycle_graph(4), F2));

    CHECK_THROWS_AS(reduce_dominated_set(star, 0, VertexSet(3), oracle), InputError);
    CHECK_THROWS_AS(reduce_dominated_set(star, 2, VertexSet(3, {0}), oracle), InputError);
}

TEST_CASE("leaf reduction") {
    auto oracle = oracle_poly_fn(F2);
    CHECK(reduce_leaf(path_graph(3), 0, oracle).str() == "1 + 2*x*y + x*y^2");
    CHECK(reduce_leaf(complete_graph(2), 0, oracle).str() == "1 + x*y");
    Graph star13 = complete_bipartite_graph(1, 3);
    CHECK(reduce_leaf(star13, 1, oracle) == genfun_oracle(star13, F2));
    CHECK(reduce_leaf(star13, 1, oracle).str() == "1 + 3*x*y + 3*x*y^2 + x*y^3");
    CHECK_THROWS_AS(reduce_leaf(cycle_graph(4), 0, oracle), InputError);
}

TEST_CASE("reduction identities hold on random graphs") {
    std::mt19937_64 rng(83);
    auto oracle2 = oracle_poly_fn(F2);
    auto oracleq = oracle_poly_fn(Q);
    int leaves = 0, dominated = 0;
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = random_graph(7, 0.35, rng);
        auto expect2 = genfun_oracle(g, F2);
        auto expectq = genfun_oracle(g, Q);
        for (int v = 0; v < 7; ++v) {
            if (g.degree(v) == 1 && leaves < 25) {
                ++leaves;
                CHECK(reduce_leaf(g, v, oracle2) == expect2);
                CHECK(reduce_leaf(g, v, oracleq) == expectq);
            }
        }
        for (int v = 0; v < 7 && dominated < 25; ++v) {
            VertexSet u_set(7);
            for (int u = 0; u < 7; ++u)
                if (u != v && g.neighbors(v).subset_of(g.neighbors(u))) u_set.insert(u);
            if (u_set.empty()) continue;
            ++dominated;
            CHECK(reduce_dominated_set(g, v, u_set, oracle2) == expect2);
            CHECK(reduce_dominated_set(g, v, u_set, oracleq) == expectq);
        }
    }
    CHECK(leaves >= 20);
    CHECK(dominated >= 20);
}

TEST_CASE("forest evaluator matches the oracle and is pivot-invariant") {
    CHECK(genfun_forest(path_graph(3)).str() == "1 + 2*x*y + x*y^2");
    CHECK(genfun_forest(path_graph(4)) == genfun_oracle(path_graph(4), F2));
    CHECK_THROWS_AS(genfun_forest(cycle_graph(4)), InputError);

    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_forest(9, rng);
        auto poly = genfun_forest(g);
        CHECK(poly.nonnegative());
        CHECK(poly == genfun_oracle(g, F2));
        CHECK(poly == genfun_oracle(g, Q));
        CHECK(poly == genfun_forest(g, LeafPivot::LargestLeafLastComponent));
    }
}

TEST_CASE("degree recursions match polynomial degrees") {
    CHECK(reg_pdim_forest(complete_graph(2)) == std::pair<int, int>{1, 1});
    CHECK(reg_pdim_forest(path_graph(3)) == std::pair<int, int>{1, 2});
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_forest(9, rng);
        auto poly = genfun_forest(g);
        auto [reg, pdim] = reg_pdim_forest(g);
        CHECK(reg == poly.x_degree());
        CHECK(pdim == poly.y_degree());
        auto s = summarize(betti_table_graph(g, F2));
        CHECK(pdim == s.pdim);
        CHECK(reg == s.reg_ring);
    }
}

TEST_CASE("disjoint union with an edge multiplies by 1 + xy") {
    std::mt19937_64 rng(101);
    auto factor = BettiPolynomial::one() + BettiPolynomial::xy();
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(6, 0.4, rng);
        CHECK(genfun_oracle(disjoint_union(g, complete_graph(2)), F2) ==
              factor * genfun_oracle(g, F2));
    }
}

TEST_CASE("field independence probe") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 8; ++trial)
        CHECK(field_independence_probe(random_forest(8, rng), {2, 3}));
    CHECK(field_independence_probe(cycle_graph(5), {2, 3}));
    CHECK(field_independence_probe(disjoint_union(cycle_graph(4), complete_graph(3)), {2, 3}));
    CHECK_THROWS_AS(field_independence_probe(cycle_graph(5), {}), InputError);
}

TEST_CASE("polynomial arithmetic and rendering") {
    auto p = BettiPolynomial::one_plus_y_pow(3);
    CHECK(p.str() == "1 + 3*y + 3*y^2 + y^3");
    auto q = BettiPolynomial::xy() * BettiPolynomial::xy();
    CHECK(q.str() == "x^2*y^2");
    CHECK((p - p).str() == "0");
    CHECK((BettiPolynomial::one() - BettiPolynomial::xy()).nonnegative() == false);
    CHECK(BettiPolynomial::one_plus_y_pow(0).str() == "1");
}
