#include "edgeideal/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace edgeideal {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list, std::vector<std::string> labels)
    : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), VertexSet(std::max(n, 0))),
      labels_(std::move(labels)) {
    if (n < 0) throw InputError("Graph: negative vertex count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
        throw InputError("Graph: label count must match vertex count");
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("Graph: edge endpoint out of range");
        if (u == v) throw InputError("Graph: loops are not allowed");
        if (!adj_[u].contains(v)) {
            adj_[u].insert(v);
            adj_[v].insert(u);
            ++m_;
        }
    }
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u].members())
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
    if (n_ > 64) throw InternalError("adjacency_masks: graph has more than 64 vertices");
    std::vector<std::uint64_t> rows(n_);
    for (int v = 0; v < n_; ++v) rows[v] = adj_[v].mask();
    return rows;
}

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InputError("Partition: needs at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw InputError("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InputError("Partition: parts must be weakly decreasing");
    }
}

long long Partition::cells() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w) {
    if (w.universe() != g.vertex_count())
        throw InputError("induced_subgraph: subset universe does not match graph");
    std::vector<int> original = w.members();
    std::vector<int> new_index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < original.size(); ++i) new_index[original[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edge_list;
    for (std::size_t i = 0; i < original.size(); ++i)
        for (int v : (g.neighbors(original[i]) & w).members())
            if (original[i] < v) edge_list.emplace_back(static_cast<int>(i), new_index[v]);
    return {Graph(static_cast<int>(original.size()), std::move(edge_list)), std::move(original)};
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed) {
    return induced_subgraph(g, removed.complement());
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edge_list;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edge_list.emplace_back(u, v);
    return Graph(n, std::move(edge_list), g.labels());
}

VertexSet neighborhood(const Graph& g, int v, bool closed) {
    if (v < 0 || v >= g.vertex_count()) throw InputError("neighborhood: vertex out of range");
    VertexSet s = g.neighbors(v);
    if (closed) s.insert(v);
    return s;
}

bool verify_elimination_order(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || pos[order[i]] != -1) return false;
        pos[order[i]] = i;
    }
    for (int v = 0; v < n; ++v) {
        std::vector<int> later;
        for (int u : g.neighbors(v).members())
            if (pos[u] > pos[v]) later.push_back(u);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                if (!g.has_edge(later[a], later[b])) return false;
    }
    return true;
}

bool verify_chordless_cycle(const Graph& g, const std::vector<int>& cycle) {
    int k = static_cast<int>(cycle.size());
    if (k < 4) return false;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : cycle) {
        if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

namespace {

// Find an induced chordless cycle of length >= 4. Exists iff the graph is not
// chordal: for a path u..w avoiding N[v]\{u,w}, v-u-...-w-v is induced.
std::vector<int> chordless_cycle_witness(const Graph& g) {
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        auto nv = g.neighbors(v).members();
        for (std::size_t a = 0; a < nv.size(); ++a) {
            for (std::size_t b = a + 1; b < nv.size(); ++b) {
                int u = nv[a], w = nv[b];
                if (g.has_edge(u, w)) continue;
                VertexSet banned = g.neighbors(v);
                banned.insert(v);
                banned.erase(u);
                banned.erase(w);
                std::vector<int> parent(n, -2);
                std::deque<int> queue{u};
                parent[u] = -1;
                while (!queue.empty()) {
                    int x = queue.front();
                    queue.pop_front();
                    if (x == w) break;
                    for (int y : g.neighbors(x).members()) {
                        if (parent[y] == -2 && !banned.contains(y)) {
                            parent[y] = x;
                            queue.push_back(y);
                        }
                    }
                }
                if (parent[w] == -2) continue;
                std::vector<int> path;
                for (int x = w; x != -1; x = parent[x]) path.push_back(x);
                std::reverse(path.begin(), path.end()); // u ... w
                std::vector<int> cycle{v};
                cycle.insert(cycle.end(), path.begin(), path.end());
                if (verify_chordless_cycle(g, cycle)) return cycle;
            }
        }
    }
    return {};
}

} // namespace

ChordalityResult is_chordal(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return {true, {}, {}};
    // Maximum cardinality search; the reverse visit order is a perfect
    // elimination order exactly when the graph is chordal.
    std::vector<int> weight(n, 0), visit;
    std::vector<char> visited(n, 0);
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!visited[v] && (best == -1 || weight[v] > weight[best])) best = v;
        visited[best] = 1;
        visit.push_back(best);
        for (int u : g.neighbors(best).members())
            if (!visited[u]) ++weight[u];
    }
    std::vector<int> order(visit.rbegin(), visit.rend());
    if (verify_elimination_order(g, order)) return {true, std::move(order), {}};
    std::vector<int> cycle = chordless_cycle_witness(g);
    if (cycle.empty()) throw InternalError("is_chordal: failed order but no chordless cycle found");
    return {false, {}, std::move(cycle)};
}

std::vector<VertexSet> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<VertexSet> out;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet comp(n);
        std::deque<int> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            comp.insert(v);
            for (int u : g.neighbors(v).members())
                if (!seen[u]) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

Graph whisker(const Graph& g, const VertexSet& at) {
    if (at.universe() != g.vertex_count())
        throw InputError("whisker: subset universe does not match graph");
    int n = g.vertex_count();
    auto edge_list = g.edges();
    int next = n;
    for (int v : at.members()) edge_list.emplace_back(v, next++);
    return Graph(next, std::move(edge_list));
}

Graph whisker_all(const Graph& g) {
    return whisker(g, VertexSet::full(g.vertex_count()));
}

Graph add_ear(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() || !g.has_edge(u, v))
        throw InputError("add_ear: not an edge of the graph");
    int n = g.vertex_count();
    auto edge_list = g.edges();
    edge_list.emplace_back(u, n);
    edge_list.emplace_back(v, n);
    return Graph(n + 1, std::move(edge_list));
}

Graph ferrers_graph(const Partition& lambda) {
    int m = lambda.rows();
    long long cols = lambda.row(0);
    if (m + cols > 100000) throw InputError("ferrers_graph: partition too large");
    std::vector<std::pair<int, int>> edge_list;
    for (int i = 0; i < m; ++i)
        for (long long j = 1; j <= lambda.row(i); ++j)
            edge_list.emplace_back(i, static_cast<int>(m + j - 1));
    return Graph(static_cast<int>(m + cols), std::move(edge_list));
}

Graph cycle_graph(int r) {
    if (r < 3) throw InputError("cycle: length must be at least 3");
    std::vector<std::pair<int, int>> edge_list;
    for (int i = 0; i < r; ++i) edge_list.emplace_back(i, (i + 1) % r);
    return Graph(r, std::move(edge_list));
}

Graph path_graph(int n) {
    if (n < 0) throw InputError("path: negative vertex count");
    std::vector<std::pair<int, int>> edge_list;
    for (int i = 0; i + 1 < n; ++i) edge_list.emplace_back(i, i + 1);
    return Graph(n, std::move(edge_list));
}

Graph complete_graph(int n) {
    if (n < 0) throw InputError("complete: negative vertex count");
    std::vector<std::pair<int, int>> edge_list;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edge_list.emplace_back(u, v);
    return Graph(n, std::move(edge_list));
}

Graph complete_bipartite_graph(int a, int b) {
    if (a < 0 || b < 0) throw InputError("kbipartite: negative side size");
    std::vector<std::pair<int, int>> edge_list;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edge_list.emplace_back(u, a + v);
    return Graph(a + b, std::move(edge_list));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int offset = g.vertex_count();
    auto edge_list = g.edges();
    for (auto [u, v] : h.edges()) edge_list.emplace_back(u + offset, v + offset);
    return Graph(offset + h.vertex_count(), std::move(edge_list));
}

Graph grid_subgraph(const std::vector<std::pair<long long, long long>>& points) {
    std::vector<std::pair<long long, long long>> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::map<std::pair<long long, long long>, int> index;
    for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edge_list;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto [x, y] = pts[i];
        for (auto [dx, dy] : {std::pair<long long, long long>{1, 0}, {0, 1}}) {
            auto it = index.find({x + dx, y + dy});
            if (it != index.end()) edge_list.emplace_back(static_cast<int>(i), it->second);
        }
    }
    return Graph(static_cast<int>(pts.size()), std::move(edge_list));
}

std::optional<std::pair<int, int>> find_fold(const Graph& g) {
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (v != w && g.neighbors(w).subset_of(g.neighbors(v))) return std::make_pair(v, w);
    return std::nullopt;
}

FoldReduction fold_reduce(const Graph& g) {
    Graph cur = g;
    std::vector<int> label(g.vertex_count());
    std::iota(label.begin(), label.end(), 0);
    std::vector<int> removed;
    while (auto fold = find_fold(cur)) {
        int v = fold->first;
        removed.push_back(label[v]);
        label.erase(label.begin() + v);
        VertexSet keep = VertexSet::full(cur.vertex_count());
        keep.erase(v);
        cur = induced_subgraph(cur, keep).graph;
    }
    return {std::move(cur), std::move(removed)};
}

bool is_dismantlable(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    Graph cur = g;
    while (cur.vertex_count() > 1) {
        int n = cur.vertex_count();
        int dominated = -1;
        for (int v = 0; v < n && dominated < 0; ++v) {
            VertexSet nv = neighborhood(cur, v, true);
            for (int w = 0; w < n; ++w) {
                if (w == v) continue;
                if (nv.subset_of(neighborhood(cur, w, true))) {
                    dominated = v;
                    break;
                }
            }
        }
        if (dominated < 0) return false;
        VertexSet keep = VertexSet::full(n);
        keep.erase(dominated);
        cur = induced_subgraph(cur, keep).graph;
    }
    return true;
}

bool is_claw_free(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto nv = g.neighbors(v).members();
        for (std::size_t a = 0; a < nv.size(); ++a)
            for (std::size_t b = a + 1; b < nv.size(); ++b) {
                if (g.has_edge(nv[a], nv[b])) continue;
                for (std::size_t c = b + 1; c < nv.size(); ++c)
                    if (!g.has_edge(nv[a], nv[c]) && !g.has_edge(nv[b], nv[c])) return false;
            }
    }
    return true;
}

namespace {

// Max-flow count of internally vertex-disjoint s-t paths on the split network.
int disjoint_paths(const Graph& g, int s, int t) {
    int n = g.vertex_count();
    // Node 2v = v_in, 2v+1 = v_out.
    std::vector<std::vector<int>> cap(2 * n, std::vector<int>(2 * n, 0));
    const int inf = 1 << 20;
    for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? inf : 1;
    for (auto [u, v] : g.edges()) {
        cap[2 * u + 1][2 * v] = inf;
        cap[2 * v + 1][2 * u] = inf;
    }
    int source = 2 * s + 1, sink = 2 * t, flow = 0;
    while (true) {
        std::vector<int> parent(2 * n, -1);
        std::deque<int> queue{source};
        parent[source] = source;
        while (!queue.empty() && parent[sink] == -1) {
            int x = queue.front();
            queue.pop_front();
            for (int y = 0; y < 2 * n; ++y)
                if (cap[x][y] > 0 && parent[y] == -1) {
                    parent[y] = x;
                    queue.push_back(y);
                }
        }
        if (parent[sink] == -1) break;
        for (int y = sink; y != source; y = parent[y]) {
            cap[parent[y]][y] -= 1;
            cap[y][parent[y]] += 1;
        }
        ++flow;
    }
    return flow;
}

} // namespace

int vertex_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return 0;
    if (g.edge_count() == static_cast<std::size_t>(n) * (n - 1) / 2) return n - 1;
    int best = n;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!g.has_edge(s, t)) best = std::min(best, disjoint_paths(g, s, t));
    return best;
}

} // namespace edgeideal
