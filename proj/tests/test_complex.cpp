#include "doctest.h"

#include <random>

#include "edgeideal/simplicial_complex.hpp"

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

TEST_CASE("independence and clique complexes") {
    auto k2 = independence_complex(complete_graph(2));
    CHECK(k2.facets() == std::vector<std::uint64_t>{0b01, 0b10});

    auto pentagon = independence_complex(cycle_graph(5));
    CHECK(pentagon.facets().size() == 5);
    for (auto f : pentagon.facets()) CHECK(std::popcount(f) == 2);
    CHECK(pentagon.is_face(0b00101)); // {0,2}
    CHECK_FALSE(pentagon.is_face(0b00011));

    CHECK(independence_complex(Graph(3)) == SimplicialComplex::simplex(3));
    CHECK(clique_complex(complete_graph(3)) == SimplicialComplex::simplex(3));
    CHECK(clique_complex(cycle_graph(4)).dim() == 1);
    CHECK(clique_complex(path_graph(3)).facets() == std::vector<std::uint64_t>{0b011, 0b110});

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(6, 0.5, rng);
        CHECK(independence_complex(g) == clique_complex(complement(g)));
    }
}

TEST_CASE("component complexes") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(6, 0.4, rng);
        CHECK(component_complex(g, 2) == independence_complex(g));
    }

    auto p3r3 = component_complex(path_graph(3), 3);
    CHECK(p3r3.facets() == std::vector<std::uint64_t>{0b011, 0b101, 0b110});
    auto k3r3 = component_complex(complete_graph(3), 3);
    CHECK(k3r3.facets() == std::vector<std::uint64_t>{0b011, 0b101, 0b110});
    CHECK_THROWS_AS(component_complex(path_graph(3), 1), InputError);

    // minimal nonfaces are exactly the connected induced r-subsets
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 3}});
    auto cc = component_complex(g, 3);
    auto nonfaces = minimal_nonfaces(cc);
    auto adj = g.adjacency_masks();
    std::vector<std::uint64_t> expected;
    for (std::uint64_t w = 0; w < 32; ++w) {
        if (std::popcount(w) != 3) continue;
        auto sub = induced_subgraph(g, VertexSet::from_mask(5, w)).graph;
        if (connected_components(sub).size() == 1) expected.push_back(w);
    }
    std::sort(expected.begin(), expected.end(),
              [](auto a, auto b) { return face_less(a, b); });
    CHECK(nonfaces == expected);
}

TEST_CASE("link and deletion") {
    auto pentagon = independence_complex(cycle_graph(5));
    auto lk = link(pentagon, 0b00001); // link of vertex 0: its two non-neighbors
    CHECK(lk.facets().size() == 2);
    CHECK(lk.dim() == 0);

    auto del = deletion(SimplicialComplex::simplex(4), 0b0001);
    CHECK(del == SimplicialComplex::simplex(3));

    CHECK(link(pentagon, 0) == pentagon);
    CHECK_THROWS_AS(link(pentagon, 0b00011), InputError);

    // del/link of a vertex in Ind(G) match the graph-side identities:
    // exhaustive on up to 5 vertices, random beyond
    for (int n = 1; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
            std::vector<std::pair<int, int>> edges;
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if ((mask >> bit) & 1) edges.emplace_back(u, v);
            Graph g(n, std::move(edges));
            auto ind = independence_complex(g);
            for (int v = 0; v < n; ++v) {
                VertexSet keep_del = VertexSet::full(n);
                keep_del.erase(v);
                CHECK(deletion(ind, 1ULL << v) ==
                      independence_complex(induced_subgraph(g, keep_del).graph));
                VertexSet keep_link = neighborhood(g, v, true).complement();
                CHECK(link(ind, 1ULL << v) ==
                      independence_complex(induced_subgraph(g, keep_link).graph));
            }
        }
    }
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(6, 0.45, rng);
        auto ind = independence_complex(g);
        int v = static_cast<int>(rng() % 6);
        VertexSet keep_del = VertexSet::full(6);
        keep_del.erase(v);
        CHECK(deletion(ind, 1ULL << v) ==
              independence_complex(induced_subgraph(g, keep_del).graph));
        VertexSet keep_link = neighborhood(g, v, true).complement();
        CHECK(link(ind, 1ULL << v) ==
              independence_complex(induced_subgraph(g, keep_link).graph));
    }
}

TEST_CASE("induced subcomplexes") {
    auto pentagon = independence_complex(cycle_graph(5));
    CHECK(induced_subcomplex(pentagon, 0b11111) == pentagon);
    CHECK(induced_subcomplex(pentagon, 0) == SimplicialComplex::empty_complex(0));

    // Ind(G)[W] = Ind(G[W]): exhaustive over all graphs and subsets on 5 vertices
    for (std::uint64_t mask = 0; mask < (1ULL << 10); ++mask) {
        std::vector<std::pair<int, int>> edges;
        int bit = 0;
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v, ++bit)
                if ((mask >> bit) & 1) edges.emplace_back(u, v);
        Graph g(5, std::move(edges));
        auto ind = independence_complex(g);
        for (std::uint64_t w = 0; w < 32; ++w)
            CHECK(induced_subcomplex(ind, w) ==
                  independence_complex(induced_subgraph(g, VertexSet::from_mask(5, w)).graph));
    }
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(6, 0.5, rng);
        std::uint64_t w = rng() & 0b111111;
        CHECK(induced_subcomplex(independence_complex(g), w) ==
              independence_complex(induced_subgraph(g, VertexSet::from_mask(6, w)).graph));
    }
}

TEST_CASE("skeleton and pure part") {
    auto simplex2 = SimplicialComplex::simplex(3);
    auto boundary = skeleton(simplex2, 1);
    CHECK(boundary.facets() == std::vector<std::uint64_t>{0b011, 0b101, 0b110});
    CHECK(skeleton(simplex2, 0).facets() == std::vector<std::uint64_t>{0b001, 0b010, 0b100});
    auto pentagon = independence_complex(cycle_graph(5));
    CHECK(skeleton(pentagon, 1) == pentagon);
    CHECK(skeleton(simplex2, -1) == SimplicialComplex::empty_complex(3));

    auto mixed = SimplicialComplex::from_facets(3, {0b011, 0b100});
    CHECK(pure_part_above(mixed, 1).facets() == std::vector<std::uint64_t>{0b011});
    CHECK(pure_part_above(mixed, 0) == mixed);
    CHECK(pure_part_above(mixed, 5).is_void());
}

TEST_CASE("join and purity") {
    auto s0 = independence_complex(complete_graph(2));
    auto square = join(s0, s0);
    CHECK(square.facets().size() == 4);
    CHECK(square.dim() == 1);
    CHECK(square == independence_complex(disjoint_union(complete_graph(2), complete_graph(2))));

    CHECK(is_pure(independence_complex(cycle_graph(5))));
    CHECK_FALSE(is_pure(SimplicialComplex::from_facets(3, {0b011, 0b100})));

    // Ind(G ⊔ H) = Ind(G) * Ind(H)
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(4, 0.5, rng), h = random_graph(3, 0.5, rng);
        CHECK(independence_complex(disjoint_union(g, h)) ==
              join(independence_complex(g), independence_complex(h)));
    }

    // join associativity on small instances
    auto a = SimplicialComplex::from_facets(2, {0b01, 0b10});
    auto b = SimplicialComplex::simplex(2);
    auto c = SimplicialComplex::from_facets(3, {0b011, 0b110});
    CHECK(join(join(a, b), c) == join(a, join(b, c)));
}

TEST_CASE("void and empty complexes") {
    auto v = SimplicialComplex::void_complex(3);
    CHECK(v.is_void());
    CHECK(v.dim() == -2);
    CHECK_FALSE(v.is_face(0));
    auto e = SimplicialComplex::empty_complex(3);
    CHECK_FALSE(e.is_void());
    CHECK(e.dim() == -1);
    CHECK(e.is_face(0));
    CHECK(e.facets() == std::vector<std::uint64_t>{0});
    CHECK(join(v, e).is_void());
    CHECK(join(e, e) == SimplicialComplex::empty_complex(6));
}

TEST_CASE("facet normalization keeps the antichain invariant") {
    auto d = SimplicialComplex::from_facets(4, {0b0001, 0b0011, 0b0011, 0b1100, 0b0100});
    CHECK(d.facets() == std::vector<std::uint64_t>{0b0011, 0b1100});
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint64_t> raw;
        int count = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < count; ++i) raw.push_back(rng() & 0b11111);
        auto dd = SimplicialComplex::from_facets(5, raw);
        const auto& fs = dd.facets();
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = 0; j < fs.size(); ++j)
                if (i != j) CHECK((fs[i] & ~fs[j]) != 0);
    }
}
