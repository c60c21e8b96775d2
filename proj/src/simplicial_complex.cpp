#include "edgeideal/simplicial_complex.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace edgeideal {

bool face_less(std::uint64_t a, std::uint64_t b) {
    if (a == b) return false;
    int v = std::countr_zero(a ^ b);
    return (a >> v) & 1;
}

namespace {

bool canonical_facet_less(std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return face_less(a, b);
}

void check_ground(int ground) {
    if (ground < 0) throw InputError("SimplicialComplex: negative ground size");
    if (ground > 64) throw CapExceeded("SimplicialComplex: ground sets above 64 vertices unsupported");
}

std::uint64_t ground_mask(int ground) {
    return ground == 64 ? ~0ULL : (1ULL << ground) - 1;
}

// Compress the bits of `m` selected by `keep` into the low positions.
std::uint64_t compress_mask(std::uint64_t m, std::uint64_t keep) {
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

SimplicialComplex SimplicialComplex::void_complex(int ground) {
    check_ground(ground);
    SimplicialComplex d;
    d.ground_ = ground;
    return d;
}

SimplicialComplex SimplicialComplex::empty_complex(int ground) {
    check_ground(ground);
    SimplicialComplex d;
    d.ground_ = ground;
    d.facets_ = {0};
    return d;
}

SimplicialComplex SimplicialComplex::simplex(int ground) {
    check_ground(ground);
    SimplicialComplex d;
    d.ground_ = ground;
    d.facets_ = {ground_mask(ground)};
    return d;
}

SimplicialComplex SimplicialComplex::from_facets(int ground, std::vector<std::uint64_t> facets) {
    check_ground(ground);
    for (auto f : facets)
        if (f & ~ground_mask(ground)) throw InputError("SimplicialComplex: facet outside ground set");
    std::sort(facets.begin(), facets.end(), canonical_facet_less);
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<std::uint64_t> kept;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = i + 1; j < facets.size() && !dominated; ++j)
            dominated = (facets[i] & ~facets[j]) == 0;
        if (!dominated) kept.push_back(facets[i]);
    }
    SimplicialComplex d;
    d.ground_ = ground;
    d.facets_ = std::move(kept);
    return d;
}

SimplicialComplex SimplicialComplex::from_facet_sets(int ground, const std::vector<VertexSet>& facets) {
    std::vector<std::uint64_t> masks;
    masks.reserve(facets.size());
    for (const auto& f : facets) {
        if (f.universe() != ground) throw InputError("SimplicialComplex: facet universe mismatch");
        masks.push_back(f.mask());
    }
    return from_facets(ground, std::move(masks));
}

std::vector<VertexSet> SimplicialComplex::facet_sets() const {
    std::vector<VertexSet> out;
    out.reserve(facets_.size());
    for (auto f : facets_) out.push_back(VertexSet::from_mask(ground_, f));
    return out;
}

int SimplicialComplex::dim() const {
    if (is_void()) return -2;
    int d = -1;
    for (auto f : facets_) d = std::max(d, std::popcount(f) - 1);
    return d;
}

bool SimplicialComplex::is_face(std::uint64_t sigma) const {
    for (auto f : facets_)
        if ((sigma & ~f) == 0) return true;
    return false;
}

bool SimplicialComplex::is_pure() const {
    for (auto f : facets_)
        if (std::popcount(f) != std::popcount(facets_[0])) return false;
    return true;
}

std::uint64_t SimplicialComplex::vertex_mask() const {
    std::uint64_t m = 0;
    for (auto f : facets_) m |= f;
    return m;
}

std::vector<std::vector<std::uint64_t>> SimplicialComplex::faces_by_dim() const {
    std::vector<std::vector<std::uint64_t>> out;
    if (is_void()) return out;
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> stack(facets_.begin(), facets_.end());
    while (!stack.empty()) {
        std::uint64_t f = stack.back();
        stack.pop_back();
        if (!seen.insert(f).second) continue;
        int d = std::popcount(f) - 1;
        if (static_cast<int>(out.size()) < d + 2) out.resize(d + 2);
        out[d + 1].push_back(f);
        std::uint64_t rest = f;
        while (rest) {
            std::uint64_t low = rest & -rest;
            if (!seen.count(f ^ low)) stack.push_back(f ^ low);
            rest ^= low;
        }
    }
    for (auto& level : out) std::sort(level.begin(), level.end(), face_less);
    return out;
}

std::size_t SimplicialComplex::face_count() const {
    std::size_t total = 0;
    for (const auto& level : faces_by_dim()) total += level.size();
    return total;
}

std::vector<std::uint64_t> maximal_cliques_masked(const std::vector<std::uint64_t>& adj,
                                                  std::uint64_t within) {
    std::vector<std::uint64_t> out;
    if (within == 0) return {0}; // the empty clique is the unique maximal one
    // Bron-Kerbosch with pivoting.
    struct Rec {
        const std::vector<std::uint64_t>& adj;
        std::vector<std::uint64_t>& out;
        void run(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
            if (p == 0 && x == 0) {
                out.push_back(r);
                return;
            }
            std::uint64_t px = p | x;
            int pivot = -1, best = -1;
            for (std::uint64_t t = px; t;) {
                int u = std::countr_zero(t);
                t &= t - 1;
                int deg = std::popcount(p & adj[u]);
                if (deg > best) {
                    best = deg;
                    pivot = u;
                }
            }
            std::uint64_t candidates = p & ~adj[pivot];
            while (candidates) {
                int v = std::countr_zero(candidates);
                candidates &= candidates - 1;
                std::uint64_t bit = 1ULL << v;
                run(r | bit, p & adj[v], x & adj[v]);
                p &= ~bit;
                x |= bit;
            }
        }
    };
    std::vector<std::uint64_t> restricted(adj.size());
    for (std::size_t v = 0; v < adj.size(); ++v) restricted[v] = adj[v] & within;
    Rec rec{restricted, out};
    rec.run(0, within, 0);
    return out;
}

std::vector<std::uint64_t> maximal_independent_sets(const Graph& g) {
    if (g.vertex_count() > 64) throw CapExceeded("maximal_independent_sets: more than 64 vertices");
    int n = g.vertex_count();
    std::uint64_t all = ground_mask(n);
    std::vector<std::uint64_t> coadj(n);
    auto rows = g.adjacency_masks();
    for (int v = 0; v < n; ++v) coadj[v] = all & ~rows[v] & ~(1ULL << v);
    return maximal_cliques_masked(coadj, all);
}

SimplicialComplex independence_complex(const Graph& g) {
    return SimplicialComplex::from_facets(g.vertex_count(), maximal_independent_sets(g));
}

SimplicialComplex clique_complex(const Graph& g) {
    if (g.vertex_count() > 64) throw CapExceeded("clique_complex: more than 64 vertices");
    int n = g.vertex_count();
    return SimplicialComplex::from_facets(n, maximal_cliques_masked(g.adjacency_masks(), ground_mask(n)));
}

namespace {

// Every connected component of g[w] has fewer than r vertices.
bool small_components(const std::vector<std::uint64_t>& adj, std::uint64_t w, int r) {
    std::uint64_t rest = w;
    while (rest) {
        std::uint64_t comp = rest & -rest, frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t t = frontier; t;) {
                int v = std::countr_zero(t);
                t &= t - 1;
                next |= adj[v] & w & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        if (std::popcount(comp) >= r) return false;
        rest &= ~comp;
    }
    return true;
}

} // namespace

SimplicialComplex component_complex(const Graph& g, int r) {
    if (r < 2) throw InputError("component_complex: r must be at least 2");
    int n = g.vertex_count();
    if (n > 22) throw CapExceeded("component_complex: 2^n facet scan refused for n > 22");
    if (r == 2) return independence_complex(g);
    auto adj = g.adjacency_masks();
    std::vector<std::uint64_t> facets;
    std::uint64_t all = ground_mask(n);
    for (std::uint64_t w = 0; w <= all && n > 0; ++w) {
        if (!small_components(adj, w, r)) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!((w >> v) & 1)) maximal = !small_components(adj, w | (1ULL << v), r);
        if (maximal) facets.push_back(w);
        if (w == all) break;
    }
    if (n == 0) facets.push_back(0);
    return SimplicialComplex::from_facets(n, std::move(facets));
}

namespace {

SimplicialComplex relabel_off(const SimplicialComplex& d, std::uint64_t removed,
                              std::vector<std::uint64_t> facets) {
    std::uint64_t keep = ground_mask(d.ground()) & ~removed;
    for (auto& f : facets) f = compress_mask(f, keep);
    return SimplicialComplex::from_facets(std::popcount(keep), std::move(facets));
}

} // namespace

SimplicialComplex link_unrelabeled(const SimplicialComplex& d, std::uint64_t sigma) {
    if (!d.is_face(sigma)) throw InputError("link: sigma is not a face");
    std::vector<std::uint64_t> facets;
    for (auto f : d.facets())
        if ((sigma & ~f) == 0) facets.push_back(f & ~sigma);
    return SimplicialComplex::from_facets(d.ground(), std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& d, std::uint64_t sigma) {
    if (!d.is_face(sigma)) throw InputError("link: sigma is not a face");
    std::vector<std::uint64_t> facets;
    for (auto f : d.facets())
        if ((sigma & ~f) == 0) facets.push_back(f & ~sigma);
    // Vertices of d that carry no face of the link leave the ground set, so
    // that lk of v in Ind(G) lands on the vertex set of G minus N[v].
    std::uint64_t support = 0;
    for (auto f : facets) support |= f;
    std::uint64_t dead = d.vertex_mask() & ~sigma & ~support;
    return relabel_off(d, sigma | dead, std::move(facets));
}

SimplicialComplex deletion(const SimplicialComplex& d, std::uint64_t sigma) {
    if (!d.is_face(sigma)) throw InputError("deletion: sigma is not a face");
    std::vector<std::uint64_t> facets;
    for (auto f : d.facets()) facets.push_back(f & ~sigma);
    return relabel_off(d, sigma, std::move(facets));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& d, std::uint64_t w) {
    if (w & ~ground_mask(d.ground())) throw InputError("induced_subcomplex: subset outside ground");
    if (d.is_void()) return SimplicialComplex::void_complex(std::popcount(w));
    std::vector<std::uint64_t> facets;
    for (auto f : d.facets()) facets.push_back(f & w);
    for (auto& f : facets) f = compress_mask(f, w);
    return SimplicialComplex::from_facets(std::popcount(w), std::move(facets));
}

namespace {

void subsets_of_size(std::uint64_t mask, int size, std::vector<std::uint64_t>& out) {
    std::vector<int> bits;
    for (std::uint64_t t = mask; t; t &= t - 1) bits.push_back(std::countr_zero(t));
    if (size > static_cast<int>(bits.size())) return;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
        std::uint64_t m = 0;
        for (int i : idx) m |= 1ULL << bits[i];
        out.push_back(m);
        int i = size - 1;
        while (i >= 0 && idx[i] == static_cast<int>(bits.size()) - size + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

SimplicialComplex skeleton(const SimplicialComplex& d, int k) {
    if (k < -1) throw InputError("skeleton: k must be at least -1");
    if (d.is_void()) return d;
    if (k >= d.dim()) return d;
    std::vector<std::uint64_t> facets;
    for (auto f : d.facets()) {
        if (std::popcount(f) <= k + 1) facets.push_back(f);
        else subsets_of_size(f, k + 1, facets);
    }
    if (facets.empty()) facets.push_back(0);
    return SimplicialComplex::from_facets(d.ground(), std::move(facets));
}

SimplicialComplex pure_part_above(const SimplicialComplex& d, int m) {
    std::vector<std::uint64_t> facets;
    for (auto f : d.facets())
        if (std::popcount(f) - 1 >= m) facets.push_back(f);
    return SimplicialComplex::from_facets(d.ground(), std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.ground() + b.ground() > 64) throw CapExceeded("join: combined ground exceeds 64");
    std::vector<std::uint64_t> facets;
    for (auto fa : a.facets())
        for (auto fb : b.facets()) facets.push_back(fa | (fb << a.ground()));
    return SimplicialComplex::from_facets(a.ground() + b.ground(), std::move(facets));
}

bool is_pure(const SimplicialComplex& d) { return d.is_pure(); }

std::vector<std::uint64_t> minimal_nonfaces(const SimplicialComplex& d) {
    int n = d.ground();
    if (n > 22) throw CapExceeded("minimal_nonfaces: 2^n scan refused for n > 22");
    std::vector<std::uint64_t> out;
    std::uint64_t all = ground_mask(n);
    for (std::uint64_t m = 1; m <= all && all; ++m) {
        if (d.is_face(m)) continue;
        bool minimal = true;
        for (std::uint64_t t = m; t && minimal; t &= t - 1)
            minimal = d.is_face(m ^ (t & -t));
        if (minimal) out.push_back(m);
        if (m == all) break;
    }
    std::sort(out.begin(), out.end(), canonical_facet_less);
    return out;
}

} // namespace edgeideal
