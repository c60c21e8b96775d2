#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "edgeideal/field.hpp"
#include "edgeideal/simplicial_complex.hpp"

namespace edgeideal {

/// Shedding-vertex decision tree. Vertices are named in the labeling of the
/// node's own complex; children are the deletion and the link, in that order.
struct VDWitness {
    bool simplex = false;
    int shed = -1;
    std::vector<VDWitness> children;
};

struct VDResult {
    bool decomposable = false;
    std::optional<VDWitness> witness; // present exactly when decomposable
};

/// Memoized vertex-decomposability checker. One instance may serve many
/// queries; results are cached on normalized facet lists (and on packed
/// adjacency keys for the graph route), so bulk sweeps share work.
class VertexDecomposability {
public:
    VertexDecomposability();
    ~VertexDecomposability();

    bool decide(const SimplicialComplex& d);
    VDResult check(const SimplicialComplex& d);

    /// Same predicate for Ind(g) without building the complex up front;
    /// dominated vertices are tried first as shedding candidates.
    bool decide_graph(const Graph& g);
    VDResult check_graph(const Graph& g);

    /// decide_graph on packed adjacency rows (row v = neighbor mask of v).
    bool decide_adjacency(const std::vector<std::uint64_t>& rows);

private:
    struct State;
    std::unique_ptr<State> state_;
};

VDResult is_vertex_decomposable(const SimplicialComplex& d);
VDResult is_vertex_decomposable_graph(const Graph& g);

/// Re-verifies a stored witness tree against the definition.
bool replay_vd_witness(const SimplicialComplex& d, const VDWitness& w);

struct ShellingResult {
    bool shellable = false;
    std::vector<std::uint64_t> order; // facets in shelling order, when shellable
};

/// Exact bounded search over facet orders; throws CapExceeded above the cap
/// rather than guessing.
ShellingResult is_shellable(const SimplicialComplex& d, std::size_t facet_cap = 12);

bool verify_shelling_order(const SimplicialComplex& d, const std::vector<std::uint64_t>& order);

/// Reisner's criterion: every link's reduced homology vanishes below its dimension.
bool is_cohen_macaulay(const SimplicialComplex& d, const FieldSpec& k);

bool is_sequentially_acyclic(const SimplicialComplex& d, const FieldSpec& k);
bool is_sequentially_cm(const SimplicialComplex& d, const FieldSpec& k);

/// A pair (u, v) with N[u] contained in N[v]; v is then a valid shedding
/// vertex of Ind(g). Lexicographically least such pair.
std::optional<std::pair<int, int>> dominated_pair_shedding(const Graph& g);

struct ClassificationReport {
    bool pure = false;
    VDResult vertex_decomposable;
    std::optional<bool> shellable; // unset when the facet cap refused the search
    std::vector<std::uint64_t> shelling_order;
    std::map<std::string, bool> cohen_macaulay;    // by field name
    std::map<std::string, bool> sequentially_cm;   // by field name
    std::vector<std::string> violations;           // broken implications, if any
    bool chain_consistent() const { return violations.empty(); }
};

/// Runs every predicate and audits the implication chain
/// vertex-decomposable => shellable => sequentially CM (any field).
ClassificationReport audit_chain(const SimplicialComplex& d, const std::vector<FieldSpec>& fields);

} // namespace edgeideal
