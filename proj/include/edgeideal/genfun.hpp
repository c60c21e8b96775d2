#pragma once

#include <functional>

#include "edgeideal/betti_polynomial.hpp"
#include "edgeideal/hochster.hpp"

namespace edgeideal {

/// Supplies the polynomial of a smaller graph inside a reduction identity.
using PolyFn = std::function<BettiPolynomial(const Graph&)>;

/// Wraps the Hochster oracle as a PolyFn.
PolyFn oracle_poly_fn(const FieldSpec& k, const OracleOptions& opts = {});

BettiPolynomial genfun_oracle(const Graph& g, const FieldSpec& k, const OracleOptions& opts = {});

/// B(G) = B(G - v) for an isolated vertex v.
BettiPolynomial reduce_isolated_vertex(const Graph& g, int v, const PolyFn& sub);

/// B(G) = (1 + xy) B(G - {u,v}) for an isolated edge uv.
BettiPolynomial reduce_isolated_edge(const Graph& g, int u, int v, const PolyFn& sub);

/// B(G) = B(G-v) + (1+y)^|U| (B(G-U) - B(G-U-v)) when N(v) is contained in
/// N(u) for every u in the nonempty set U (v outside U).
BettiPolynomial reduce_dominated_set(const Graph& g, int v, const VertexSet& u_set,
                                     const PolyFn& sub);

/// B(G) = B(G-v) + xy (1+y)^(deg(w)-1) B(G - N[w]) for a leaf v hanging on w.
BettiPolynomial reduce_leaf(const Graph& g, int v, const PolyFn& sub);

enum class LeafPivot {
    SmallestLeafFirstComponent, // canonical: least large component, smallest leaf
    LargestLeafLastComponent    // alternative rule; must give the same polynomial
};

/// Exact field-independent Betti polynomial of a forest by leaf recursion.
BettiPolynomial genfun_forest(const Graph& g,
                              LeafPivot pivot = LeafPivot::SmallestLeafFirstComponent);

/// The displayed max-recursions for the x- and y-degrees on forests;
/// returns (regularity degree, projective-dimension degree).
std::pair<int, int> reg_pdim_forest(const Graph& g);

/// True when the oracle tables agree over every listed prime and the rationals.
bool field_independence_probe(const Graph& g, const std::vector<long long>& primes,
                              const OracleOptions& opts = {});

} // namespace edgeideal
