#include "edgeideal/hochster.hpp"

#include <atomic>
#include <mutex>
#include <bit>
#include <functional>
#include <thread>

#include "edgeideal/homology.hpp"

namespace edgeideal {

namespace {

using Accumulator = std::map<std::pair<int, int>, unsigned long long>;

int resolve_workers(int requested) {
    if (requested < 0) throw InputError("workers must be nonnegative");
    if (requested == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }
    return requested;
}

void check_cap(int n, const OracleOptions& opts, const char* who) {
    int cap = std::min(opts.n_cap, 62);
    if (n > cap)
        throw CapExceeded(std::string(who) + ": refusing 2^" + std::to_string(n) +
                          " subset sweep (cap " + std::to_string(cap) +
                          "; raise the cap explicitly to override)");
}

// Add the Hochster contributions of one subset: dims[t] is dim H~(t-1) of the
// induced subcomplex on the j chosen vertices, which lands in beta(j-t, j).
void accumulate(int j, const std::vector<long long>& dims, Accumulator& acc) {
    for (std::size_t t = 0; t < dims.size(); ++t) {
        int i = j - static_cast<int>(t);
        if (i >= 1 && dims[t] > 0) acc[{i, j}] += static_cast<unsigned long long>(dims[t]);
    }
}

// Enumerate all vertex subsets grouped by popcount (plain lexicographic order
// within each size) and fan the per-subset work out to a small pool. Results
// merge by integer addition, so the schedule cannot affect the table.
BettiTable sweep(int n, int workers,
                 const std::function<void(std::uint64_t, int, Accumulator&)>& per_subset) {
    BettiTable table(n);
    Accumulator total;
    for (int j = 1; j <= n; ++j) {
        std::vector<std::uint64_t> masks;
        std::uint64_t w = (1ULL << j) - 1;
        std::uint64_t limit = w << (n - j);
        while (true) {
            masks.push_back(w);
            if (w == limit || masks.size() > (1ULL << n)) break;
            std::uint64_t c = w & -w, r = w + c; // Gosper's hack
            w = (((r ^ w) >> 2) / c) | r;
        }
        int pool = std::min<int>(workers, static_cast<int>(masks.size()));
        if (pool <= 1) {
            for (auto m : masks) per_subset(m, j, total);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<Accumulator> parts(pool);
            std::vector<std::thread> threads;
            std::exception_ptr error;
            std::mutex error_lock;
            for (int t = 0; t < pool; ++t)
                threads.emplace_back([&, t] {
                    try {
                        while (true) {
                            std::size_t base = next.fetch_add(64);
                            if (base >= masks.size()) break;
                            std::size_t end = std::min(masks.size(), base + 64);
                            for (std::size_t idx = base; idx < end; ++idx)
                                per_subset(masks[idx], j, parts[t]);
                        }
                    } catch (...) {
                        std::lock_guard<std::mutex> guard(error_lock);
                        if (!error) error = std::current_exception();
                        next.store(masks.size());
                    }
                });
            for (auto& th : threads) th.join();
            if (error) std::rethrow_exception(error);
            for (const auto& part : parts)
                for (const auto& [ij, mult] : part) total[ij] += mult;
        }
    }
    for (const auto& [ij, mult] : total) table.add(ij.first, ij.second, mult);
    return table;
}

} // namespace

BettiTable betti_table(const SimplicialComplex& d, const FieldSpec& k, const OracleOptions& opts) {
    if (d.is_void()) throw InputError("betti_table: the void complex has no Stanley-Reisner ring");
    int n = d.ground();
    check_cap(n, opts, "betti_table");
    const auto& facets = d.facets();
    auto per_subset = [&](std::uint64_t w, int j, Accumulator& acc) {
        std::vector<std::uint64_t> cut;
        cut.reserve(facets.size());
        for (auto f : facets) cut.push_back(f & w);
        // keep only inclusion-maximal restrictions
        std::vector<std::uint64_t> maximal;
        for (std::size_t i = 0; i < cut.size(); ++i) {
            bool dominated = false;
            for (std::size_t l = 0; l < cut.size() && !dominated; ++l)
                dominated = l != i && (cut[i] & ~cut[l]) == 0 && (cut[i] != cut[l] || l < i);
            if (!dominated) maximal.push_back(cut[i]);
        }
        accumulate(j, reduced_homology_dims(maximal, k), acc);
    };
    return sweep(n, resolve_workers(opts.workers), per_subset);
}

BettiTable betti_table_graph(const Graph& g, const FieldSpec& k, const OracleOptions& opts) {
    int n = g.vertex_count();
    check_cap(n, opts, "betti_table_graph");
    auto adj = g.adjacency_masks();
    std::vector<std::uint64_t> coadj(n);
    std::uint64_t all = n == 0 ? 0 : (n == 64 ? ~0ULL : (1ULL << n) - 1);
    for (int v = 0; v < n; ++v) coadj[v] = all & ~adj[v] & ~(1ULL << v);

    auto per_subset = [&](std::uint64_t w, int j, Accumulator& acc) {
        std::uint64_t live = w;
        if (opts.fold_reduce_per_subset) {
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::uint64_t tv = live; tv && !changed; tv &= tv - 1) {
                    int v = std::countr_zero(tv);
                    std::uint64_t nv = adj[v] & live;
                    for (std::uint64_t tw = live; tw; tw &= tw - 1) {
                        int u = std::countr_zero(tw);
                        if (u == v) continue;
                        if ((adj[u] & live & ~nv) == 0) { // N(u) within live is inside N(v)
                            live &= ~(1ULL << v);
                            changed = true;
                            break;
                        }
                    }
                }
            }
        }
        // Isolated vertex makes the independence complex a cone: no homology.
        for (std::uint64_t t = live; t; t &= t - 1) {
            int v = std::countr_zero(t);
            if ((adj[v] & live) == 0) return;
        }
        if (live == 0) return;
        accumulate(j, reduced_homology_dims(maximal_cliques_masked(coadj, live), k), acc);
    };
    return sweep(n, resolve_workers(opts.workers), per_subset);
}

BettiTable betti_table_component_ideal(const Graph& g, int r, const FieldSpec& k,
                                       const OracleOptions& opts) {
    return betti_table(component_complex(g, r), k, opts);
}

} // namespace edgeideal
