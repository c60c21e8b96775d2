#include "edgeideal/formulas.hpp"

#include <bit>
#include <sstream>

namespace edgeideal {

namespace {

void require_complement_chordal(const Graph& g, ChordalityResult& out) {
    out = is_chordal(complement(g));
    if (!out.chordal) {
        std::ostringstream msg;
        msg << "complement is not chordal; induced chordless cycle:";
        for (int v : out.witness_cycle) msg << ' ' << v;
        throw InputError(msg.str());
    }
}

unsigned long long binomial(long long a, long long b) {
    if (b < 0 || b > a || a < 0) return 0;
    if (b > a - b) b = a - b;
    unsigned __int128 acc = 1;
    for (long long i = 1; i <= b; ++i) {
        acc = acc * static_cast<unsigned long long>(a - b + i) / static_cast<unsigned long long>(i);
        if (acc > static_cast<unsigned __int128>(~0ULL))
            throw CapExceeded("binomial overflows 64 bits");
    }
    return static_cast<unsigned long long>(acc);
}

mpq_class ratio(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

std::string q_str(const mpq_class& q) {
    std::ostringstream s;
    s << q;
    return s.str();
}

} // namespace

BettiTable betti_complement_chordal(const Graph& g) {
    ChordalityResult cert;
    require_complement_chordal(g, cert);
    int n = g.vertex_count();
    if (n > 22) throw CapExceeded("betti_complement_chordal: 2^n component sweep refused for n > 22");
    Graph h = complement(g);
    auto adj = h.adjacency_masks();
    BettiTable t(n);
    std::uint64_t all = n == 0 ? 0 : (1ULL << n) - 1;
    for (std::uint64_t w = 1; w <= all && n > 0; ++w) {
        // component count of the complement restricted to w
        int comps = 0;
        std::uint64_t rest = w;
        while (rest) {
            ++comps;
            std::uint64_t comp = rest & -rest, frontier = comp;
            while (frontier) {
                std::uint64_t next = 0;
                for (std::uint64_t tt = frontier; tt; tt &= tt - 1)
                    next |= adj[std::countr_zero(tt)] & w & ~comp;
                comp |= next;
                frontier = next;
            }
            rest &= ~comp;
        }
        int j = std::popcount(w);
        if (comps > 1 && j >= 2) t.add(j - 1, j, comps - 1);
        if (w == all) break;
    }
    return t;
}

std::pair<int, int> pdim_depth_complement_chordal(const Graph& g) {
    ChordalityResult cert;
    require_complement_chordal(g, cert);
    int n = g.vertex_count();
    if (g.edge_count() == 0) return {0, n}; // complement complete
    int kappa = vertex_connectivity(complement(g));
    return {n - kappa - 1, kappa + 1};
}

FrobergResult froberg_linear(const Graph& g) {
    auto cc = is_chordal(complement(g));
    FrobergResult r;
    r.linear = cc.chordal;
    r.elimination_order = std::move(cc.elimination_order);
    r.witness_cycle = std::move(cc.witness_cycle);
    return r;
}

BettiTable ferrers_betti(const Partition& lambda) {
    int m = lambda.rows();
    long long cols = lambda.row(0);
    int n = static_cast<int>(m + cols);
    BettiTable t(n);
    for (long long i = 1; i <= cols + m - 1; ++i) {
        unsigned long long sum = 0;
        for (int k = 1; k <= m; ++k) sum += binomial(lambda.row(k - 1) + k - 1, i);
        unsigned long long drop = binomial(m, i + 1);
        if (sum < drop) throw InternalError("ferrers_betti: negative multiplicity");
        if (sum > drop) t.add(static_cast<int>(i), static_cast<int>(i + 1), sum - drop);
    }
    return t;
}

BettiTable ferrers_betti_rectangles(const Partition& lambda) {
    int m = lambda.rows();
    long long cols = lambda.row(0);
    if (m + cols > 26)
        throw CapExceeded("ferrers_betti_rectangles: diagram too large for the subset scan");
    int n = static_cast<int>(m + cols);
    BettiTable t(n);
    for (std::uint64_t rows = 1; rows < (1ULL << m); ++rows) {
        int deepest = 63 - std::countl_zero(rows); // largest chosen row index, smallest row
        long long width = lambda.row(deepest);
        int l = std::popcount(rows);
        for (std::uint64_t cset = 1; cset < (1ULL << cols); ++cset) {
            int widest = 63 - std::countl_zero(cset); // 0-based column index
            if (widest + 1 > width) continue;
            int size = l + std::popcount(cset);
            t.add(size - 1, size, 1);
        }
    }
    return t;
}

long long floor_rational(const mpq_class& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f.get_si();
}

BoundReport pdim_bound_general(long long n, const mpq_class& a, const mpq_class& b) {
    if (n < 0 || a <= 0) throw InputError("pdim_bound_general: need n >= 0 and a > 0");
    mpq_class qn(static_cast<long>(n));
    BoundReport r{BoundKind::General, "general", {}, qn * (1 - a) - b - 1, {}, {}};
    r.params = {{"n", std::to_string(n)}, {"a", q_str(a)}, {"b", q_str(b)}};
    return r;
}

BoundReport pdim_bound_max_degree(long long n, long long d) {
    if (n < 0 || d < 1) throw InputError("pdim_bound_max_degree: need d >= 1");
    mpq_class inv = ratio(1, static_cast<long>(2 * d));
    mpq_class qn(static_cast<long>(n));
    BoundReport r{BoundKind::MaxDegree, "max_degree", {}, qn * (1 - inv) + inv, {}, {}};
    r.params = {{"n", std::to_string(n)}, {"d", std::to_string(d)}};
    return r;
}

BoundReport pdim_bound_claw_free(long long n, long long d) {
    if (n < 0 || d < 1) throw InputError("pdim_bound_claw_free: need d >= 1");
    mpq_class frac = ratio(2, static_cast<long>(3 * d + 2));
    mpq_class qn(static_cast<long>(n));
    BoundReport r{BoundKind::ClawFree, "claw_free", {}, qn * (1 - frac) + frac, {}, {}};
    r.params = {{"n", std::to_string(n)}, {"d", std::to_string(d)}};
    return r;
}

BoundReport pdim_bound_z2(long long n) {
    if (n < 0) throw InputError("pdim_bound_z2: need n >= 0");
    BoundReport r{BoundKind::Z2Lattice, "z2_lattice",
                  {{"n", std::to_string(n)}},
                  ratio(static_cast<long>(5 * n), 6) + ratio(1, 2),
                  {}, {}};
    return r;
}

BoundReport pdim_bound_component(long long n, long long d, long long r) {
    if (n < 0 || d < 1 || r < 2) throw InputError("pdim_bound_component: need d >= 1 and r >= 2");
    mpq_class big_d = mpq_class(static_cast<long>(d - 1)) + ratio(static_cast<long>(d + 1), static_cast<long>(r - 1));
    mpq_class inv = 1 / big_d;
    mpq_class qn(static_cast<long>(n));
    BoundReport rep{BoundKind::Component, "component", {}, qn * (1 - inv) + 1 + inv, {}, {}};
    rep.params = {{"n", std::to_string(n)}, {"d", std::to_string(d)}, {"r", std::to_string(r)}};
    return rep;
}

namespace {

BoundReport finish_verification(BoundReport rep, int pdim) {
    rep.oracle_pdim = pdim;
    rep.holds = pdim <= floor_rational(rep.bound);
    return rep;
}

} // namespace

BoundReport verify_bound(const Graph& g, BoundKind kind, const FieldSpec& k,
                         const OracleOptions& opts, long long r) {
    long long n = g.vertex_count();
    long long d = g.max_degree();
    switch (kind) {
    case BoundKind::MaxDegree: {
        auto rep = pdim_bound_max_degree(n, d);
        return finish_verification(std::move(rep), summarize(betti_table_graph(g, k, opts)).pdim);
    }
    case BoundKind::ClawFree: {
        if (!is_claw_free(g)) throw InputError("verify_bound: graph is not claw-free");
        auto rep = pdim_bound_claw_free(n, d);
        return finish_verification(std::move(rep), summarize(betti_table_graph(g, k, opts)).pdim);
    }
    case BoundKind::Component: {
        auto rep = pdim_bound_component(n, d, r);
        return finish_verification(std::move(rep),
                                   summarize(betti_table_component_ideal(g, static_cast<int>(r), k, opts)).pdim);
    }
    case BoundKind::Z2Lattice:
        throw InputError("verify_bound: use verify_bound_z2 with lattice points");
    case BoundKind::General:
        throw InputError("verify_bound: the general bound needs explicit a and b");
    }
    throw InputError("verify_bound: unknown kind");
}

BoundReport verify_bound_z2(const std::vector<std::pair<long long, long long>>& points,
                            const FieldSpec& k, const OracleOptions& opts) {
    Graph g = grid_subgraph(points);
    auto rep = pdim_bound_z2(g.vertex_count());
    return finish_verification(std::move(rep), summarize(betti_table_graph(g, k, opts)).pdim);
}

} // namespace edgeideal
