#include "edgeideal/genfun.hpp"

#include <map>

namespace edgeideal {

namespace {

Graph drop(const Graph& g, const VertexSet& removed) {
    return induced_subgraph(g, removed.complement()).graph;
}

Graph drop_one(const Graph& g, int v) {
    VertexSet s(g.vertex_count());
    s.insert(v);
    return drop(g, s);
}

void check_vertex(const Graph& g, int v, const char* who) {
    if (v < 0 || v >= g.vertex_count()) throw InputError(std::string(who) + ": vertex out of range");
}

bool is_forest(const Graph& g) {
    return g.edge_count() + connected_components(g).size() ==
           static_cast<std::size_t>(g.vertex_count());
}

} // namespace

PolyFn oracle_poly_fn(const FieldSpec& k, const OracleOptions& opts) {
    return [k, opts](const Graph& g) { return genfun_oracle(g, k, opts); };
}

BettiPolynomial genfun_oracle(const Graph& g, const FieldSpec& k, const OracleOptions& opts) {
    return BettiPolynomial::from_table(betti_table_graph(g, k, opts));
}

BettiPolynomial reduce_isolated_vertex(const Graph& g, int v, const PolyFn& sub) {
    check_vertex(g, v, "reduce_isolated_vertex");
    if (g.degree(v) != 0) throw InputError("reduce_isolated_vertex: vertex is not isolated");
    return sub(drop_one(g, v));
}

BettiPolynomial reduce_isolated_edge(const Graph& g, int u, int v, const PolyFn& sub) {
    check_vertex(g, u, "reduce_isolated_edge");
    check_vertex(g, v, "reduce_isolated_edge");
    if (!g.has_edge(u, v) || g.degree(u) != 1 || g.degree(v) != 1)
        throw InputError("reduce_isolated_edge: uv is not an isolated edge");
    VertexSet s(g.vertex_count());
    s.insert(u);
    s.insert(v);
    return (BettiPolynomial::one() + BettiPolynomial::xy()) * sub(drop(g, s));
}

BettiPolynomial reduce_dominated_set(const Graph& g, int v, const VertexSet& u_set,
                                     const PolyFn& sub) {
    check_vertex(g, v, "reduce_dominated_set");
    if (u_set.universe() != g.vertex_count())
        throw InputError("reduce_dominated_set: universe mismatch");
    if (u_set.empty()) throw InputError("reduce_dominated_set: U must be nonempty");
    if (u_set.contains(v)) throw InputError("reduce_dominated_set: v must lie outside U");
    for (int u : u_set.members())
        if (!g.neighbors(v).subset_of(g.neighbors(u)))
            throw InputError("reduce_dominated_set: N(v) not dominated by N(u) for all u in U");
    VertexSet with_v = u_set;
    with_v.insert(v);
    BettiPolynomial result =
        sub(drop_one(g, v)) + BettiPolynomial::one_plus_y_pow(u_set.count()) *
                                  (sub(drop(g, u_set)) - sub(drop(g, with_v)));
    if (!result.nonnegative())
        throw InternalError("reduce_dominated_set: negative coefficient in the final polynomial");
    return result;
}

BettiPolynomial reduce_leaf(const Graph& g, int v, const PolyFn& sub) {
    check_vertex(g, v, "reduce_leaf");
    if (g.degree(v) != 1) throw InputError("reduce_leaf: vertex is not a leaf");
    int w = g.neighbors(v).min();
    BettiPolynomial result =
        sub(drop_one(g, v)) +
        BettiPolynomial::xy() * BettiPolynomial::one_plus_y_pow(g.degree(w) - 1) *
            sub(drop(g, neighborhood(g, w, true)));
    if (!result.nonnegative())
        throw InternalError("reduce_leaf: negative coefficient in the final polynomial");
    return result;
}

namespace {

struct ForestEvaluator {
    LeafPivot pivot;
    std::map<std::vector<std::uint64_t>, BettiPolynomial> memo;

    BettiPolynomial eval(const Graph& g) {
        if (g.vertex_count() > 64) throw CapExceeded("genfun_forest: more than 64 vertices");
        auto key = g.adjacency_masks();
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        BettiPolynomial result;
        auto comps = connected_components(g);
        bool all_small = true;
        for (const auto& c : comps) all_small &= c.count() <= 2;
        if (all_small) {
            result = BettiPolynomial::one();
            auto edge_factor = BettiPolynomial::one() + BettiPolynomial::xy();
            for (std::size_t e = 0; e < g.edge_count(); ++e) result = result * edge_factor;
        } else {
            int v = -1;
            if (pivot == LeafPivot::SmallestLeafFirstComponent) {
                for (const auto& c : comps) {
                    if (c.count() < 3) continue;
                    for (int x : c.members())
                        if (g.degree(x) == 1) {
                            v = x;
                            break;
                        }
                    break;
                }
            } else {
                for (auto ci = comps.rbegin(); ci != comps.rend(); ++ci) {
                    if (ci->count() < 3) continue;
                    auto mem = ci->members();
                    for (auto xi = mem.rbegin(); xi != mem.rend(); ++xi)
                        if (g.degree(*xi) == 1) {
                            v = *xi;
                            break;
                        }
                    break;
                }
            }
            if (v < 0) throw InternalError("genfun_forest: no leaf in a large tree component");
            result = reduce_leaf(g, v, [this](const Graph& h) { return eval(h); });
        }
        memo.emplace(std::move(key), result);
        return result;
    }
};

} // namespace

BettiPolynomial genfun_forest(const Graph& g, LeafPivot pivot) {
    if (!is_forest(g)) throw InputError("genfun_forest: graph has a cycle");
    ForestEvaluator ev{pivot, {}};
    auto poly = ev.eval(g);
    if (!poly.nonnegative()) throw InternalError("genfun_forest: negative coefficient");
    return poly;
}

std::pair<int, int> reg_pdim_forest(const Graph& g) {
    if (!is_forest(g)) throw InputError("reg_pdim_forest: graph has a cycle");
    auto comps = connected_components(g);
    bool all_small = true;
    for (const auto& c : comps) all_small &= c.count() <= 2;
    if (all_small) {
        int e = static_cast<int>(g.edge_count());
        return {e, e};
    }
    int v = -1;
    for (const auto& c : comps) {
        if (c.count() < 3) continue;
        for (int x : c.members())
            if (g.degree(x) == 1) {
                v = x;
                break;
            }
        break;
    }
    if (v < 0) throw InternalError("reg_pdim_forest: no leaf in a large tree component");
    int w = g.neighbors(v).min();
    int deg_w = g.degree(w);
    auto [x1, y1] = reg_pdim_forest(drop_one(g, v));
    auto [x2, y2] = reg_pdim_forest(drop(g, neighborhood(g, w, true)));
    return {std::max(x1, x2 + 1), std::max(y1, y2 + deg_w)};
}

bool field_independence_probe(const Graph& g, const std::vector<long long>& primes,
                              const OracleOptions& opts) {
    if (primes.empty()) throw InputError("field_independence_probe: need at least one prime");
    auto over_q = betti_table_graph(g, FieldSpec::rationals(), opts);
    for (long long p : primes)
        if (betti_table_graph(g, FieldSpec::prime(p), opts) != over_q) return false;
    return true;
}

} // namespace edgeideal
