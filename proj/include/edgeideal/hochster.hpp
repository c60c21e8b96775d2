#pragma once

#include "edgeideal/betti_table.hpp"
#include "edgeideal/field.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/simplicial_complex.hpp"

namespace edgeideal {

struct OracleOptions {
    bool fold_reduce_per_subset = false; // only meaningful on the graph routes
    int workers = 1;                     // 0 means all hardware threads
    int n_cap = 20;                      // refuse 2^n sweeps beyond this
};

/// Brute-force graded Betti numbers via Hochster's formula: for i > 0,
/// beta(i,j) sums dim H~(j-i-1) of the induced subcomplexes on j vertices.
BettiTable betti_table(const SimplicialComplex& d, const FieldSpec& k,
                       const OracleOptions& opts = {});

/// Oracle for the edge ideal of a graph (independence-complex route). With
/// fold_reduce_per_subset each induced subgraph is fold-reduced first; the
/// result is unchanged, folding only speeds up the homology.
BettiTable betti_table_graph(const Graph& g, const FieldSpec& k,
                             const OracleOptions& opts = {});

/// Oracle for the r-component ideal of a graph.
BettiTable betti_table_component_ideal(const Graph& g, int r, const FieldSpec& k,
                                       const OracleOptions& opts = {});

} // namespace edgeideal
