#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgeideal/vertex_set.hpp"

namespace edgeideal {

/// Finite simple graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n, std::vector<std::pair<int, int>> edge_list = {},
                   std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return m_; }

    bool has_edge(int u, int v) const { return adj_[u].contains(v); }

    const VertexSet& neighbors(int v) const { return adj_[v]; }

    int degree(int v) const { return adj_[v].count(); }

    int max_degree() const;

    /// Edges as sorted (u,v) pairs with u < v.
    std::vector<std::pair<int, int>> edges() const;

    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    /// Packed adjacency rows; only for n <= 64.
    std::vector<std::uint64_t> adjacency_masks() const;

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

/// A weakly decreasing sequence of positive row lengths.
class Partition {
public:
    explicit Partition(std::vector<long long> parts);

    const std::vector<long long>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    long long row(int i) const { return parts_[i]; } // 0-based
    long long cells() const;

private:
    std::vector<long long> parts_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> original; // new vertex i was original[i] in the parent
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w);

/// Convenience: delete a vertex set.
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed);

Graph complement(const Graph& g);

VertexSet neighborhood(const Graph& g, int v, bool closed);

struct ChordalityResult {
    bool chordal;
    std::vector<int> elimination_order; // perfect elimination order, when chordal
    std::vector<int> witness_cycle;     // induced chordless cycle, length >= 4, when not
};

ChordalityResult is_chordal(const Graph& g);

/// Certificate checks, independent of the search that produced them.
bool verify_elimination_order(const Graph& g, const std::vector<int>& order);
bool verify_chordless_cycle(const Graph& g, const std::vector<int>& cycle);

std::vector<VertexSet> connected_components(const Graph& g);

Graph whisker(const Graph& g, const VertexSet& at);
Graph whisker_all(const Graph& g);

Graph add_ear(const Graph& g, int u, int v);

Graph ferrers_graph(const Partition& lambda);

Graph cycle_graph(int r);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph grid_subgraph(const std::vector<std::pair<long long, long long>>& points);

/// Open-neighborhood fold: a pair (v, w), v != w, with N(w) subseteq N(v).
/// Deleting v preserves the homotopy type of Ind(G). Lexicographically least pair.
std::optional<std::pair<int, int>> find_fold(const Graph& g);

struct FoldReduction {
    Graph graph;
    std::vector<int> removed; // original labels, in removal order
};

FoldReduction fold_reduce(const Graph& g);

/// Reflexive (closed-neighborhood) dismantlability by greedy dominated-vertex removal.
bool is_dismantlable(const Graph& g);

bool is_claw_free(const Graph& g);

/// Vertex connectivity; n-1 for complete graphs, 0 for disconnected ones.
int vertex_connectivity(const Graph& g);

} // namespace edgeideal
