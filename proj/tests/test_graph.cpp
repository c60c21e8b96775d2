#include "doctest.h"

#include <random>

#include "edgeideal/graph.hpp"

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

// Chordal by construction: each new vertex is attached along a clique.
Graph random_chordal(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> cliques; // one clique per vertex: its earlier neighbors + itself
    for (int v = 0; v < n; ++v) {
        std::vector<int> base;
        if (v > 0) {
            const auto& host = cliques[std::uniform_int_distribution<int>(0, v - 1)(rng)];
            std::vector<int> pool(host.begin(), host.end());
            std::shuffle(pool.begin(), pool.end(), rng);
            int take = std::uniform_int_distribution<int>(0, static_cast<int>(pool.size()))(rng);
            base.assign(pool.begin(), pool.begin() + take);
        }
        for (int u : base) edges.emplace_back(u, v);
        base.push_back(v);
        cliques.push_back(std::move(base));
    }
    return Graph(n, std::move(edges));
}

} // namespace

TEST_CASE("induced subgraphs relabel order-preservingly") {
    Graph c5 = cycle_graph(5);
    auto sub = induced_subgraph(c5, VertexSet(5, {0, 1, 2}));
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.graph.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(sub.original == std::vector<int>{0, 1, 2});

    auto empty = induced_subgraph(c5, VertexSet(5));
    CHECK(empty.graph.vertex_count() == 0);

    auto skip = induced_subgraph(c5, VertexSet(5, {0, 1, 3}));
    CHECK(skip.graph.edge_count() == 1);
    CHECK(skip.graph.has_edge(0, 1));
    CHECK(skip.graph.degree(2) == 0);

    CHECK_THROWS_AS(induced_subgraph(c5, VertexSet(4, {0})), InputError);
}

TEST_CASE("complement is an involution and commutes with induced subgraphs") {
    Graph c4 = cycle_graph(4);
    Graph cc4 = complement(c4);
    CHECK(cc4.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(complement(complete_graph(4)).edge_count() == 0);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(6, 0.5, rng);
        CHECK(complement(complement(g)) == g);
        VertexSet w(6);
        for (int v = 0; v < 6; ++v)
            if (rng() & 1) w.insert(v);
        CHECK(complement(induced_subgraph(g, w).graph) ==
              induced_subgraph(complement(g), w).graph);
    }
}

TEST_CASE("neighborhoods") {
    Graph c4 = cycle_graph(4);
    CHECK(neighborhood(c4, 0, false) == VertexSet(4, {1, 3}));
    Graph lone(1);
    CHECK(neighborhood(lone, 0, false).empty());
    Graph star = complete_bipartite_graph(1, 3);
    CHECK(neighborhood(star, 0, true) == VertexSet::full(4));
    CHECK_THROWS_AS(neighborhood(c4, 5, false), InputError);
}

TEST_CASE("chordality with certificates") {
    auto tree = path_graph(7);
    auto res = is_chordal(tree);
    CHECK(res.chordal);
    CHECK(verify_elimination_order(tree, res.elimination_order));

    auto c4 = is_chordal(cycle_graph(4));
    CHECK_FALSE(c4.chordal);
    CHECK(verify_chordless_cycle(cycle_graph(4), c4.witness_cycle));
    CHECK(c4.witness_cycle.size() == 4);

    // K4 minus one edge is chordal (only triangles).
    Graph diamond(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
    auto d = is_chordal(diamond);
    CHECK(d.chordal);
    CHECK(verify_elimination_order(diamond, d.elimination_order));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_chordal(8, rng);
        auto r = is_chordal(g);
        CHECK(r.chordal);
        CHECK(verify_elimination_order(g, r.elimination_order));
        // chordality is hereditary
        VertexSet w(8);
        for (int v = 0; v < 8; ++v)
            if (rng() & 1) w.insert(v);
        CHECK(is_chordal(induced_subgraph(g, w).graph).chordal);
    }
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(8, 0.4, rng);
        auto r = is_chordal(g);
        if (r.chordal)
            CHECK(verify_elimination_order(g, r.elimination_order));
        else
            CHECK(verify_chordless_cycle(g, r.witness_cycle));
    }
}

TEST_CASE("connected components sorted by least member") {
    Graph two_k2 = disjoint_union(complete_graph(2), complete_graph(2));
    auto comps = connected_components(two_k2);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet(4, {0, 1}));
    CHECK(comps[1] == VertexSet(4, {2, 3}));
    CHECK(connected_components(cycle_graph(5)).size() == 1);
    CHECK(connected_components(Graph(3)).size() == 3);
}

TEST_CASE("whiskers") {
    Graph k1(1);
    CHECK(whisker(k1, VertexSet(1, {0})) == complete_graph(2));

    Graph w = whisker_all(complete_graph(3));
    CHECK(w.vertex_count() == 6);
    CHECK(w.edge_count() == 6);
    for (int v = 3; v < 6; ++v) CHECK(w.degree(v) == 1);
    CHECK(w.has_edge(0, 3));
    CHECK(w.has_edge(1, 4));
    CHECK(w.has_edge(2, 5));

    Graph c5w = whisker(cycle_graph(5), VertexSet(5, {0}));
    CHECK(c5w.vertex_count() == 6);
    CHECK(c5w.edge_count() == 6);
    CHECK(c5w.degree(5) == 1);
    CHECK(c5w.has_edge(0, 5));
}

TEST_CASE("ears") {
    CHECK(add_ear(complete_graph(2), 0, 1) == complete_graph(3));
    Graph k4_minus = add_ear(cycle_graph(3), 0, 1);
    CHECK(k4_minus.vertex_count() == 4);
    CHECK(k4_minus.edge_count() == 5);
    CHECK_FALSE(k4_minus.has_edge(2, 3));
    Graph ear5 = add_ear(cycle_graph(5), 0, 1);
    CHECK(ear5.degree(5) == 2);
    CHECK(ear5.has_edge(0, 5));
    CHECK(ear5.has_edge(1, 5));
    CHECK_THROWS_AS(add_ear(cycle_graph(5), 0, 2), InputError);
}

TEST_CASE("ferrers graphs") {
    CHECK(ferrers_graph(Partition({1})) == complete_graph(2));
    CHECK(ferrers_graph(Partition({2, 2})) == complete_bipartite_graph(2, 2));
    Graph p = ferrers_graph(Partition({2, 1}));
    CHECK(p.vertex_count() == 4);
    CHECK(p.edges() == std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}});
    CHECK_THROWS_AS(Partition({1, 2}), InputError);
    CHECK_THROWS_AS(Partition({0}), InputError);

    // bipartite with chordal complement, for every partition with <= 8 cells
    std::vector<std::vector<long long>> todo{{}};
    for (std::size_t head = 0; head < todo.size(); ++head) {
        auto base = todo[head];
        long long used = 0;
        for (auto x : base) used += x;
        long long max_part = base.empty() ? 8 : base.back();
        for (long long next = 1; next <= std::min(max_part, 8 - used); ++next) {
            auto ext = base;
            ext.push_back(next);
            todo.push_back(ext);
        }
    }
    int checked = 0;
    for (const auto& parts : todo) {
        if (parts.empty()) continue;
        Partition lambda(parts);
        Graph g = ferrers_graph(lambda);
        CHECK(is_chordal(complement(g)).chordal);
        for (auto [u, v] : g.edges())
            CHECK(((u < lambda.rows()) != (v < lambda.rows())));
        CHECK(static_cast<long long>(g.edge_count()) == lambda.cells());
        ++checked;
    }
    CHECK(checked > 20);
}

TEST_CASE("basic constructors") {
    CHECK(cycle_graph(3) == complete_graph(3));
    CHECK_THROWS_AS(cycle_graph(2), InputError);
    CHECK(disjoint_union(complete_graph(2), complete_graph(2)).edge_count() == 2);
    Graph tri = grid_subgraph({{0, 0}, {0, 1}, {1, 0}});
    CHECK(tri.vertex_count() == 3);
    CHECK(tri.edge_count() == 2);
    CHECK(tri.degree(0) == 2); // (0,0) touches both others
}

TEST_CASE("folds") {
    // leaves of a star have equal neighborhoods; the least valid pair wins
    Graph star(3, {{0, 2}, {1, 2}}); // leaves 0,1, center 2
    auto f = find_fold(star);
    REQUIRE(f.has_value());
    CHECK(*f == std::pair<int, int>{0, 1});

    CHECK_FALSE(find_fold(cycle_graph(5)).has_value());

    Graph ferrers21 = ferrers_graph(Partition({2, 1}));
    auto ff = find_fold(ferrers21);
    REQUIRE(ff.has_value());
    CHECK(*ff == std::pair<int, int>{0, 1}); // delete r1, the dominating row

    auto reduced = fold_reduce(complete_bipartite_graph(3, 4));
    CHECK(reduced.graph == complete_graph(2));
    CHECK(reduced.removed.size() == 5);

    auto c5r = fold_reduce(cycle_graph(5));
    CHECK(c5r.graph == cycle_graph(5));
    CHECK(c5r.removed.empty());

    auto contractible = fold_reduce(ferrers21);
    CHECK(contractible.graph.vertex_count() == 1);
}

TEST_CASE("dismantlability") {
    CHECK(is_dismantlable(complete_graph(5)));
    CHECK(is_dismantlable(path_graph(6)));
    CHECK_FALSE(is_dismantlable(cycle_graph(4)));
    CHECK_FALSE(is_dismantlable(cycle_graph(5)));
}

TEST_CASE("claw-free and connectivity helpers") {
    CHECK(is_claw_free(cycle_graph(6)));
    CHECK_FALSE(is_claw_free(complete_bipartite_graph(1, 3)));
    CHECK(vertex_connectivity(complete_graph(4)) == 3);
    CHECK(vertex_connectivity(cycle_graph(5)) == 2);
    CHECK(vertex_connectivity(disjoint_union(complete_graph(2), complete_graph(2))) == 0);
    CHECK(vertex_connectivity(path_graph(5)) == 1);
    CHECK(vertex_connectivity(complete_bipartite_graph(2, 3)) == 2);
}
