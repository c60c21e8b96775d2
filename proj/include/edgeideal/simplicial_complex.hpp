#pragma once

#include <cstdint>
#include <vector>

#include "edgeideal/graph.hpp"
#include "edgeideal/vertex_set.hpp"

namespace edgeideal {

/// Orders face masks by size, then lexicographically on the sorted vertex list.
bool face_less(std::uint64_t a, std::uint64_t b);

/// Facet-represented simplicial complex on ground vertices 0..ground-1.
/// The void complex (no faces at all) has an empty facet list; the complex
/// {∅} has the single facet 0. Ground sets are capped at 64 vertices.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex void_complex(int ground);
    static SimplicialComplex empty_complex(int ground); // {∅}
    static SimplicialComplex simplex(int ground);       // full simplex on the ground set

    /// Normalizes to the inclusion-maximal antichain in canonical order.
    /// An empty facet list yields the void complex.
    static SimplicialComplex from_facets(int ground, std::vector<std::uint64_t> facets);
    static SimplicialComplex from_facet_sets(int ground, const std::vector<VertexSet>& facets);

    int ground() const { return ground_; }
    bool is_void() const { return facets_.empty(); }
    const std::vector<std::uint64_t>& facets() const { return facets_; }
    std::vector<VertexSet> facet_sets() const;

    /// -1 for {∅}; by convention -2 for the void complex.
    int dim() const;

    bool is_face(std::uint64_t sigma) const;
    bool is_pure() const;

    /// Vertices of the complex, i.e. ground elements that are 0-faces.
    std::uint64_t vertex_mask() const;

    /// All faces grouped by dimension: index d+1 holds the dim-d faces in
    /// canonical order (index 0 is {∅} when the complex is nonvoid).
    std::vector<std::vector<std::uint64_t>> faces_by_dim() const;

    /// Number of faces, counting ∅.
    std::size_t face_count() const;

    bool operator==(const SimplicialComplex& o) const {
        return ground_ == o.ground_ && facets_ == o.facets_;
    }

private:
    int ground_ = 0;
    std::vector<std::uint64_t> facets_;
};

SimplicialComplex independence_complex(const Graph& g);
SimplicialComplex clique_complex(const Graph& g);

/// Faces are vertex sets whose induced subgraphs have all components smaller
/// than r; the Stanley-Reisner ideal of the result is the r-component ideal.
SimplicialComplex component_complex(const Graph& g, int r);

SimplicialComplex link(const SimplicialComplex& d, std::uint64_t sigma);
SimplicialComplex deletion(const SimplicialComplex& d, std::uint64_t sigma);

/// Like link/deletion but keeps the ambient ground set (no relabeling).
SimplicialComplex link_unrelabeled(const SimplicialComplex& d, std::uint64_t sigma);

SimplicialComplex induced_subcomplex(const SimplicialComplex& d, std::uint64_t w);

/// Faces of dimension at most k (k = -1 gives {∅}).
SimplicialComplex skeleton(const SimplicialComplex& d, int k);

/// Subcomplex generated by the facets of dimension at least m.
SimplicialComplex pure_part_above(const SimplicialComplex& d, int m);

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

bool is_pure(const SimplicialComplex& d);

/// Maximal independent sets of g as masks (Bron-Kerbosch with pivoting).
std::vector<std::uint64_t> maximal_independent_sets(const Graph& g);

/// Maximal cliques of the masked adjacency structure restricted to `within`.
std::vector<std::uint64_t> maximal_cliques_masked(const std::vector<std::uint64_t>& adj,
                                                  std::uint64_t within);

/// Minimal nonfaces of the complex (for small ground sets).
std::vector<std::uint64_t> minimal_nonfaces(const SimplicialComplex& d);

} // namespace edgeideal
