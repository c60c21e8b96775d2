#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

#include "edgeideal/betti_table.hpp"
#include "edgeideal/field.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/hochster.hpp"

namespace edgeideal {

/// Closed-form Betti table when the complement is chordal: the table is
/// 2-linear and beta(j-1,j) counts, over all j-subsets I, the components of
/// the complement's induced subgraph beyond the first.
BettiTable betti_complement_chordal(const Graph& g);

/// (pdim, depth) for complement-chordal graphs, via the connectivity of the
/// complement: 0 if the complement is complete, else n - kappa - 1.
std::pair<int, int> pdim_depth_complement_chordal(const Graph& g);

struct FrobergResult {
    bool linear = false;
    std::vector<int> elimination_order; // of the complement, when linear
    std::vector<int> witness_cycle;     // induced cycle in the complement, otherwise
};

/// The edge ideal has a 2-linear resolution iff the complement is chordal.
FrobergResult froberg_linear(const Graph& g);

/// Betti numbers of a Ferrers graph by the alternating binomial formula.
BettiTable ferrers_betti(const Partition& lambda);

/// Independent oracle: counts l x w rectangles inside the diagram directly.
BettiTable ferrers_betti_rectangles(const Partition& lambda);

enum class BoundKind { General, MaxDegree, ClawFree, Z2Lattice, Component };

struct BoundReport {
    BoundKind kind;
    std::string kind_name;
    std::map<std::string, std::string> params;
    mpq_class bound;
    std::optional<bool> holds;    // set once compared against an oracle pdim
    std::optional<int> oracle_pdim;
};

BoundReport pdim_bound_general(long long n, const mpq_class& a, const mpq_class& b);
BoundReport pdim_bound_max_degree(long long n, long long d);
BoundReport pdim_bound_claw_free(long long n, long long d);
BoundReport pdim_bound_z2(long long n);
BoundReport pdim_bound_component(long long n, long long d, long long r);

/// Checks oracle pdim <= floor(bound) for the bound kind matching the graph.
/// For Component, r names the component ideal; General and Z2Lattice are not
/// accepted here (z2 verification takes lattice points below).
BoundReport verify_bound(const Graph& g, BoundKind kind, const FieldSpec& k,
                         const OracleOptions& opts = {}, long long r = 2);

/// Z^2-lattice variant; the graph is built from the points, which certifies
/// the lattice-subgraph precondition by construction.
BoundReport verify_bound_z2(const std::vector<std::pair<long long, long long>>& points,
                            const FieldSpec& k, const OracleOptions& opts = {});

/// floor of an exact rational.
long long floor_rational(const mpq_class& q);

} // namespace edgeideal
