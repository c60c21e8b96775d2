#include "doctest.h"

#include <random>

#include "edgeideal/homology.hpp"

using namespace edgeideal;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

// Minimal 6-vertex triangulation of the real projective plane.
SimplicialComplex projective_plane() {
    auto tri = [](int a, int b, int c) {
        return (1ULL << a) | (1ULL << b) | (1ULL << c);
    };
    return SimplicialComplex::from_facets(
        6, {tri(0, 1, 4), tri(0, 1, 5), tri(0, 2, 3), tri(0, 2, 5), tri(0, 3, 4),
            tri(1, 2, 3), tri(1, 2, 4), tri(1, 3, 5), tri(2, 4, 5), tri(3, 4, 5)});
}

SimplicialComplex random_complex(int ground, std::mt19937_64& rng) {
    std::uint64_t all = (1ULL << ground) - 1;
    int count = 1 + static_cast<int>(rng() % 5);
    std::vector<std::uint64_t> facets;
    for (int i = 0; i < count; ++i) facets.push_back(rng() & all);
    return SimplicialComplex::from_facets(ground, facets);
}

} // namespace

TEST_CASE("field parsing and primality") {
    CHECK(FieldSpec::parse("Q").is_rationals());
    CHECK(FieldSpec::parse("GF(7)").characteristic() == 7);
    CHECK(FieldSpec::parse("2").characteristic() == 2);
    CHECK_THROWS_AS(FieldSpec::prime(6), InputError);
    CHECK_THROWS_AS(FieldSpec::parse("banana"), InputError);
}

TEST_CASE("boundary matrices") {
    auto simplex2 = SimplicialComplex::simplex(3);
    auto d1 = boundary_matrix(simplex2, 1);
    CHECK(d1.rows == 3);
    CHECK(d1.cols == 3);
    CHECK(matrix_rank(d1, Q) == 2);

    auto points = SimplicialComplex::from_facets(3, {0b001, 0b010, 0b100});
    auto d0 = boundary_matrix(points, 0);
    CHECK(d0.rows == 1);
    CHECK(d0.cols == 3);
    for (int c = 0; c < 3; ++c) CHECK(d0.at(0, c) == 1);

    auto pentagon = SimplicialComplex::from_facets(
        5, {0b00011, 0b00110, 0b01100, 0b11000, 0b10001});
    auto p1 = boundary_matrix(pentagon, 1);
    CHECK(p1.rows == 5);
    CHECK(p1.cols == 5);
    CHECK(matrix_rank(p1, Q) == 4);
}

TEST_CASE("matrix rank over different fields") {
    IntMatrix id3(3, 3);
    for (int i = 0; i < 3; ++i) id3.at(i, i) = 1;
    CHECK(matrix_rank(id3, Q) == 3);
    CHECK(matrix_rank(id3, F2) == 3);

    IntMatrix ones(2, 2);
    ones.a = {1, 1, 1, 1};
    CHECK(matrix_rank(ones, F2) == 1);
    CHECK(matrix_rank(ones, Q) == 1);

    IntMatrix twos(2, 2);
    twos.at(0, 0) = 2;
    twos.at(1, 1) = 2;
    CHECK(matrix_rank(twos, F2) == 0);
    CHECK(matrix_rank(twos, Q) == 2);
}

TEST_CASE("reduced homology of standard spaces") {
    auto two_points = SimplicialComplex::from_facets(2, {0b01, 0b10});
    auto h = reduced_homology(two_points, Q);
    CHECK(h.dim(0) == 1);
    CHECK(h.dim(-1) == 0);
    CHECK(h.dim(1) == 0);

    auto pentagon = SimplicialComplex::from_facets(
        5, {0b00011, 0b00110, 0b01100, 0b11000, 0b10001});
    auto hp = reduced_homology(pentagon, Q);
    CHECK(hp.dim(0) == 0);
    CHECK(hp.dim(1) == 1);

    CHECK(reduced_homology(SimplicialComplex::void_complex(3), Q).trivial());
    auto he = reduced_homology(SimplicialComplex::empty_complex(2), F2);
    CHECK(he.dim(-1) == 1);
    CHECK(reduced_homology(SimplicialComplex::simplex(4), F3).trivial());
}

TEST_CASE("projective plane separates characteristic 2") {
    auto rp2 = projective_plane();
    auto hq = reduced_homology(rp2, Q);
    CHECK(hq.dim(1) == 0);
    CHECK(hq.dim(2) == 0);
    auto h2 = reduced_homology(rp2, F2);
    CHECK(h2.dim(1) == 1);
    CHECK(h2.dim(2) == 1);
    auto h3 = reduced_homology(rp2, F3);
    CHECK(h3 == hq);

    CHECK_FALSE(torsion_probe(rp2, {2, 3}));
    auto pentagon = SimplicialComplex::from_facets(
        5, {0b00011, 0b00110, 0b01100, 0b11000, 0b10001});
    CHECK(torsion_probe(pentagon, {2, 3}));
    CHECK(torsion_probe(SimplicialComplex::simplex(4), {2, 3, 5}));
    CHECK_THROWS_AS(torsion_probe(pentagon, {4}), InputError);
    CHECK_THROWS_AS(torsion_probe(pentagon, {}), InputError);
}

TEST_CASE("boundary of boundary vanishes") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        auto d = random_complex(6, rng);
        for (int dim = 1; dim <= d.dim(); ++dim) {
            auto lower = boundary_matrix(d, dim - 1 + 1); // d_dim
            auto upper = boundary_matrix(d, dim + 1);     // d_{dim+1}
            if (lower.cols == 0 || upper.cols == 0) continue;
            REQUIRE(lower.cols == upper.rows);
            for (int r = 0; r < lower.rows; ++r)
                for (int c = 0; c < upper.cols; ++c) {
                    long long sum = 0;
                    for (int k = 0; k < lower.cols; ++k) sum += lower.at(r, k) * upper.at(k, c);
                    CHECK(sum == 0);
                }
        }
    }
}

TEST_CASE("reduced Euler characteristic matches homology") {
    std::mt19937_64 rng(29);
    for (const FieldSpec& k : {Q, F2, F3}) {
        for (int trial = 0; trial < 80; ++trial) {
            auto d = random_complex(7, rng);
            long long chi = 0;
            auto levels = d.faces_by_dim();
            for (std::size_t i = 0; i < levels.size(); ++i) {
                long long sign = (static_cast<int>(i) - 1) % 2 == 0 ? 1 : -1;
                chi += sign * static_cast<long long>(levels[i].size());
            }
            auto h = reduced_homology(d, k);
            long long hchi = 0;
            for (int deg = -1; deg <= d.dim(); ++deg)
                hchi += (deg % 2 == 0 ? 1 : -1) * h.dim(deg);
            CHECK(chi == hchi);
        }
    }
}

TEST_CASE("suspension shifts the homology profile") {
    auto s0 = SimplicialComplex::from_facets(2, {0b01, 0b10});
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        auto d = random_complex(5, rng);
        if (d.is_void()) continue;
        auto susp = join(d, s0);
        for (const FieldSpec& k : {Q, F2}) {
            auto h = reduced_homology(d, k);
            auto hs = reduced_homology(susp, k);
            for (int deg = -1; deg <= d.dim() + 1; ++deg) CHECK(hs.dim(deg + 1) == h.dim(deg));
        }
    }
}

TEST_CASE("fold reduction preserves independence-complex homology") {
    std::mt19937_64 rng(137);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 7); // up to 10
        std::bernoulli_distribution coin(0.15 + 0.1 * (trial % 6));
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) edges.emplace_back(u, v);
        Graph g(n, std::move(edges));
        Graph reduced = fold_reduce(g).graph;
        for (const FieldSpec& k : {F2, F3, Q})
            CHECK(reduced_homology(independence_complex(g), k) ==
                  reduced_homology(independence_complex(reduced), k));
    }
}

TEST_CASE("homology profile JSON range") {
    auto pentagon = SimplicialComplex::from_facets(
        5, {0b00011, 0b00110, 0b01100, 0b11000, 0b10001});
    auto m = reduced_homology(pentagon, Q).as_map();
    REQUIRE(m.size() == 3);
    CHECK(m.at(-1) == 0);
    CHECK(m.at(0) == 0);
    CHECK(m.at(1) == 1);
}
