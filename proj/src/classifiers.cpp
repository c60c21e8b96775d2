#include "edgeideal/classifiers.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "edgeideal/homology.hpp"

namespace edgeideal {

namespace {

std::uint64_t all_mask(int n) { return n == 64 ? ~0ULL : (1ULL << n) - 1; }

// Shedding condition at v: every facet through v stays dominated after v
// leaves, i.e. F \ {v} lies inside some facet avoiding v.
bool shedding_ok(const std::vector<std::uint64_t>& facets, int v) {
    std::uint64_t bit = 1ULL << v;
    for (auto f : facets) {
        if (!(f & bit)) continue;
        std::uint64_t cut = f & ~bit;
        bool covered = false;
        for (auto g : facets)
            if (!(g & bit) && (cut & ~g) == 0) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

struct FacetKey {
    int ground;
    std::vector<std::uint64_t> facets;
    bool operator==(const FacetKey& o) const {
        return ground == o.ground && facets == o.facets;
    }
};

struct FacetKeyHash {
    std::size_t operator()(const FacetKey& k) const {
        std::size_t h = std::hash<int>()(k.ground);
        for (auto f : k.facets) h = h * 1099511628211ULL + std::hash<std::uint64_t>()(f);
        return h;
    }
};

struct VecKeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& k) const {
        std::size_t h = 1469598103934665603ULL;
        for (auto f : k) h = h * 1099511628211ULL + std::hash<std::uint64_t>()(f);
        return h;
    }
};

std::uint64_t compress(std::uint64_t m, std::uint64_t keep) {
    std::uint64_t out = 0;
    int pos = 0;
    while (keep) {
        int v = std::countr_zero(keep);
        if ((m >> v) & 1) out |= 1ULL << pos;
        ++pos;
        keep &= keep - 1;
    }
    return out;
}

} // namespace

struct VertexDecomposability::State {
    std::unordered_map<FacetKey, bool, FacetKeyHash> complex_memo;
    std::unordered_map<std::uint64_t, bool> packed_graph_memo;
    std::unordered_map<std::vector<std::uint64_t>, bool, VecKeyHash> graph_memo;

    bool decide_complex(const SimplicialComplex& d) {
        if (d.facets().size() <= 1) return true; // void, {∅}, or a simplex
        FacetKey key{d.ground(), d.facets()};
        auto it = complex_memo.find(key);
        if (it != complex_memo.end()) return it->second;
        bool result = false;
        std::uint64_t verts = d.vertex_mask();
        for (std::uint64_t t = verts; t && !result; t &= t - 1) {
            int v = std::countr_zero(t);
            if (!shedding_ok(d.facets(), v)) continue;
            std::uint64_t bit = 1ULL << v;
            if (decide_complex(deletion(d, bit)) && decide_complex(link(d, bit))) result = true;
        }
        complex_memo[key] = result;
        return result;
    }

    // Ind(G) route on compacted adjacency rows.
    bool decide_rows(const std::vector<std::uint64_t>& rows) {
        int n = static_cast<int>(rows.size());
        bool edgeless = true;
        for (auto r : rows) edgeless &= r == 0;
        if (edgeless) return true; // Ind is a simplex

        std::uint64_t packed = 0;
        bool small = n <= 11;
        if (small) {
            packed = static_cast<std::uint64_t>(n);
            int shift = 4;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++shift)
                    if ((rows[u] >> v) & 1) packed |= 1ULL << shift;
            auto it = packed_graph_memo.find(packed);
            if (it != packed_graph_memo.end()) return it->second;
        } else {
            auto it = graph_memo.find(rows);
            if (it != graph_memo.end()) return it->second;
        }

        bool result = false;
        std::uint64_t all = all_mask(n);
        // Dominating vertices of closed-neighborhood pairs shed for free
        // (Ind-side shortcut); try them first.
        std::uint64_t preferred = 0;
        for (int u = 0; u < n && preferred == 0; ++u) {
            std::uint64_t nu = rows[u] | (1ULL << u);
            for (int v = 0; v < n; ++v)
                if (v != u && (nu & ~(rows[v] | (1ULL << v))) == 0) {
                    preferred |= 1ULL << v;
                    break;
                }
        }
        std::vector<std::uint64_t> coadj(n);
        for (int v = 0; v < n; ++v) coadj[v] = all & ~rows[v] & ~(1ULL << v);
        auto try_vertex = [&](int v) {
            // Every maximal independent set of G - v must meet N(v); then the
            // deletion's facets are facets and v is a shedding vertex.
            for (auto mis : maximal_cliques_masked(coadj, all & ~(1ULL << v)))
                if ((mis & rows[v]) == 0) return false;
            if (!decide_subgraph(rows, all & ~(1ULL << v))) return false;
            return decide_subgraph(rows, all & ~(rows[v] | (1ULL << v)));
        };
        for (std::uint64_t t = preferred; t && !result; t &= t - 1)
            result = try_vertex(std::countr_zero(t));
        for (int v = 0; v < n && !result; ++v)
            if (!((preferred >> v) & 1)) result = try_vertex(v);

        if (small) packed_graph_memo[packed] = result;
        else graph_memo[rows] = result;
        return result;
    }

    bool decide_subgraph(const std::vector<std::uint64_t>& rows, std::uint64_t live) {
        std::vector<std::uint64_t> sub(std::popcount(live));
        int i = 0;
        for (std::uint64_t t = live; t; t &= t - 1, ++i)
            sub[i] = compress(rows[std::countr_zero(t)] & live, live);
        return decide_rows(sub);
    }

    // Rebuild the decision tree along memoized answers.
    VDWitness witness_complex(const SimplicialComplex& d) {
        VDWitness w;
        if (d.facets().size() <= 1) {
            w.simplex = true;
            return w;
        }
        std::uint64_t verts = d.vertex_mask();
        for (std::uint64_t t = verts; t; t &= t - 1) {
            int v = std::countr_zero(t);
            if (!shedding_ok(d.facets(), v)) continue;
            std::uint64_t bit = 1ULL << v;
            auto del = deletion(d, bit);
            auto lk = link(d, bit);
            if (decide_complex(del) && decide_complex(lk)) {
                w.shed = v;
                w.children.push_back(witness_complex(del));
                w.children.push_back(witness_complex(lk));
                return w;
            }
        }
        throw InternalError("witness requested for a non-decomposable complex");
    }
};

VertexDecomposability::VertexDecomposability() : state_(std::make_unique<State>()) {}
VertexDecomposability::~VertexDecomposability() = default;

bool VertexDecomposability::decide(const SimplicialComplex& d) {
    return state_->decide_complex(d);
}

VDResult VertexDecomposability::check(const SimplicialComplex& d) {
    VDResult r;
    r.decomposable = state_->decide_complex(d);
    if (r.decomposable) r.witness = state_->witness_complex(d);
    return r;
}

bool VertexDecomposability::decide_graph(const Graph& g) {
    if (g.vertex_count() > 64) throw CapExceeded("decide_graph: more than 64 vertices");
    return state_->decide_rows(g.adjacency_masks());
}

bool VertexDecomposability::decide_adjacency(const std::vector<std::uint64_t>& rows) {
    if (rows.size() > 64) throw CapExceeded("decide_adjacency: more than 64 vertices");
    return state_->decide_rows(rows);
}

VDResult VertexDecomposability::check_graph(const Graph& g) {
    VDResult r;
    r.decomposable = decide_graph(g);
    if (r.decomposable) r.witness = state_->witness_complex(independence_complex(g));
    return r;
}

VDResult is_vertex_decomposable(const SimplicialComplex& d) {
    VertexDecomposability checker;
    return checker.check(d);
}

VDResult is_vertex_decomposable_graph(const Graph& g) {
    VertexDecomposability checker;
    return checker.check_graph(g);
}

bool replay_vd_witness(const SimplicialComplex& d, const VDWitness& w) {
    if (w.simplex) return d.facets().size() <= 1;
    if (w.shed < 0 || w.shed >= d.ground() || w.children.size() != 2) return false;
    std::uint64_t bit = 1ULL << w.shed;
    if (!d.is_face(bit)) return false;
    if (!shedding_ok(d.facets(), w.shed)) return false;
    return replay_vd_witness(deletion(d, bit), w.children[0]) &&
           replay_vd_witness(link(d, bit), w.children[1]);
}

namespace {

bool valid_next_facet(const std::vector<std::uint64_t>& placed, std::uint64_t f) {
    std::vector<std::uint64_t> cuts;
    cuts.reserve(placed.size());
    for (auto p : placed) cuts.push_back(p & f);
    int want = std::popcount(f) - 1;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < cuts.size() && maximal; ++j)
            maximal = i == j || (cuts[i] & ~cuts[j]) != 0 || (cuts[i] == cuts[j] && i < j);
        if (maximal && std::popcount(cuts[i]) != want) return false;
    }
    return true;
}

} // namespace

ShellingResult is_shellable(const SimplicialComplex& d, std::size_t facet_cap) {
    const auto& facets = d.facets();
    if (facets.size() > facet_cap)
        throw CapExceeded("is_shellable: " + std::to_string(facets.size()) +
                          " facets exceed the exact-search cap of " + std::to_string(facet_cap));
    if (facets.size() <= 1) return {true, facets};
    int n = static_cast<int>(facets.size());
    std::unordered_set<std::uint32_t> dead;
    std::vector<int> order_idx;
    std::vector<std::uint64_t> placed;

    auto dfs = [&](auto&& self, std::uint32_t used) -> bool {
        if (static_cast<int>(order_idx.size()) == n) return true;
        if (dead.count(used)) return false;
        for (int i = 0; i < n; ++i) {
            if ((used >> i) & 1) continue;
            if (!placed.empty() && !valid_next_facet(placed, facets[i])) continue;
            order_idx.push_back(i);
            placed.push_back(facets[i]);
            if (self(self, used | (1u << i))) return true;
            order_idx.pop_back();
            placed.pop_back();
        }
        dead.insert(used);
        return false;
    };
    if (!dfs(dfs, 0)) return {false, {}};
    ShellingResult r;
    r.shellable = true;
    for (int i : order_idx) r.order.push_back(facets[i]);
    return r;
}

bool verify_shelling_order(const SimplicialComplex& d, const std::vector<std::uint64_t>& order) {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    auto facets = d.facets();
    std::sort(facets.begin(), facets.end());
    if (sorted != facets) return false;
    std::vector<std::uint64_t> placed;
    for (auto f : order) {
        if (!placed.empty() && !valid_next_facet(placed, f)) return false;
        placed.push_back(f);
    }
    return true;
}

bool is_cohen_macaulay(const SimplicialComplex& d, const FieldSpec& k) {
    if (d.is_void()) return true;
    for (const auto& level : d.faces_by_dim())
        for (auto face : level) {
            auto lk = link_unrelabeled(d, face);
            int top = lk.dim();
            auto h = reduced_homology(lk, k);
            for (int i = -1; i < top; ++i)
                if (h.dim(i) != 0) return false;
        }
    return true;
}

bool is_sequentially_acyclic(const SimplicialComplex& d, const FieldSpec& k) {
    for (int m = 0; m <= d.dim(); ++m) {
        auto part = pure_part_above(d, m);
        auto h = reduced_homology(part, k);
        for (int r = -1; r < m; ++r)
            if (h.dim(r) != 0) return false;
    }
    return true;
}

bool is_sequentially_cm(const SimplicialComplex& d, const FieldSpec& k) {
    if (d.ground() > 25)
        throw CapExceeded("is_sequentially_cm: face sweep refused for ground > 25");
    if (d.is_void()) return true;
    for (const auto& level : d.faces_by_dim())
        for (auto face : level)
            if (!is_sequentially_acyclic(link_unrelabeled(d, face), k)) return false;
    return true;
}

std::optional<std::pair<int, int>> dominated_pair_shedding(const Graph& g) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        VertexSet nu = neighborhood(g, u, true);
        for (int v = 0; v < n; ++v)
            if (v != u && nu.subset_of(neighborhood(g, v, true))) return std::make_pair(u, v);
    }
    return std::nullopt;
}

ClassificationReport audit_chain(const SimplicialComplex& d, const std::vector<FieldSpec>& fields) {
    ClassificationReport r;
    r.pure = d.is_pure();
    r.vertex_decomposable = is_vertex_decomposable(d);
    try {
        auto sh = is_shellable(d);
        r.shellable = sh.shellable;
        r.shelling_order = sh.order;
    } catch (const CapExceeded&) {
        r.shellable.reset();
    }
    for (const auto& k : fields) {
        r.cohen_macaulay[k.name()] = is_cohen_macaulay(d, k);
        r.sequentially_cm[k.name()] = is_sequentially_cm(d, k);
    }
    bool vd = r.vertex_decomposable.decomposable;
    if (vd && r.shellable.has_value() && !*r.shellable)
        r.violations.push_back("vertex-decomposable but not shellable");
    for (const auto& k : fields) {
        bool scm = r.sequentially_cm.at(k.name());
        bool cm = r.cohen_macaulay.at(k.name());
        if (vd && !scm)
            r.violations.push_back("vertex-decomposable but not sequentially CM over " + k.name());
        if (r.shellable.value_or(false) && !scm)
            r.violations.push_back("shellable but not sequentially CM over " + k.name());
        if (r.shellable.value_or(false) && r.pure && !cm)
            r.violations.push_back("pure shellable but not CM over " + k.name());
        if (cm && !scm)
            r.violations.push_back("CM but not sequentially CM over " + k.name());
    }
    return r;
}

} // namespace edgeideal
