#include "edgeideal/homology.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include <gmpxx.h>

namespace edgeideal {

namespace {

// Faces of the complex generated by an inclusion-maximal facet list, grouped
// by dimension: level[d+1] holds the dim-d faces sorted lexicographically.
std::vector<std::vector<std::uint64_t>> face_levels(const std::vector<std::uint64_t>& facets) {
    std::vector<std::vector<std::uint64_t>> out;
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> stack(facets.begin(), facets.end());
    while (!stack.empty()) {
        std::uint64_t f = stack.back();
        stack.pop_back();
        if (!seen.insert(f).second) continue;
        int d = std::popcount(f) - 1;
        if (static_cast<int>(out.size()) < d + 2) out.resize(d + 2);
        out[d + 1].push_back(f);
        for (std::uint64_t rest = f; rest;) {
            std::uint64_t low = rest & -rest;
            rest ^= low;
            if (!seen.count(f ^ low)) stack.push_back(f ^ low);
        }
    }
    for (auto& level : out) std::sort(level.begin(), level.end(), face_less);
    return out;
}

int rank_mod_p(std::vector<long long> a, int rows, int cols, long long p) {
    for (auto& x : a) {
        x %= p;
        if (x < 0) x += p;
    }
    auto at = [&](int r, int c) -> long long& { return a[static_cast<std::size_t>(r) * cols + c]; };
    auto mod_inv = [&](long long v) {
        long long result = 1, base = v % p, e = p - 2;
        while (e) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    };
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = col; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
        long long inv = mod_inv(at(rank, col));
        for (int r = rank + 1; r < rows; ++r) {
            long long factor = at(r, col) * inv % p;
            if (factor == 0) continue;
            for (int c = col; c < cols; ++c)
                at(r, c) = ((at(r, c) - factor * at(rank, c)) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

// Fraction-free elimination; exact over the integers, hence the rank over Q.
// Returns nothing if an intermediate minor leaves the int64 range.
std::optional<int> rank_bareiss_i64(std::vector<long long> a, int rows, int cols) {
    auto at = [&](int r, int c) -> long long& { return a[static_cast<std::size_t>(r) * cols + c]; };
    long long prev = 1;
    int k = 0;
    while (k < rows && k < cols) {
        int pr = -1, pc = -1;
        for (int c = k; c < cols && pr < 0; ++c)
            for (int r = k; r < rows; ++r)
                if (at(r, c) != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr < 0) return k;
        if (pr != k)
            for (int c = 0; c < cols; ++c) std::swap(at(pr, c), at(k, c));
        if (pc != k)
            for (int r = 0; r < rows; ++r) std::swap(at(r, pc), at(r, k));
        for (int r = k + 1; r < rows; ++r) {
            for (int c = k + 1; c < cols; ++c) {
                __int128 num = static_cast<__int128>(at(k, k)) * at(r, c) -
                               static_cast<__int128>(at(r, k)) * at(k, c);
                __int128 q = num / prev;
                if (num % prev != 0 || q > INT64_MAX || q < INT64_MIN) return std::nullopt;
                at(r, c) = static_cast<long long>(q);
            }
            at(r, k) = 0;
        }
        prev = at(k, k);
        ++k;
    }
    return k;
}

int rank_bareiss_mpz(const std::vector<long long>& input, int rows, int cols) {
    std::vector<mpz_class> a(input.size());
    for (std::size_t i = 0; i < input.size(); ++i) a[i] = static_cast<long>(input[i]);
    auto at = [&](int r, int c) -> mpz_class& { return a[static_cast<std::size_t>(r) * cols + c]; };
    mpz_class prev = 1;
    int k = 0;
    while (k < rows && k < cols) {
        int pr = -1, pc = -1;
        for (int c = k; c < cols && pr < 0; ++c)
            for (int r = k; r < rows; ++r)
                if (at(r, c) != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr < 0) return k;
        if (pr != k)
            for (int c = 0; c < cols; ++c) std::swap(at(pr, c), at(k, c));
        if (pc != k)
            for (int r = 0; r < rows; ++r) std::swap(at(r, pc), at(r, k));
        for (int r = k + 1; r < rows; ++r) {
            for (int c = k + 1; c < cols; ++c)
                at(r, c) = (at(k, k) * at(r, c) - at(r, k) * at(k, c)) / prev;
            at(r, k) = 0;
        }
        prev = at(k, k);
        ++k;
    }
    return k;
}

int rank_flat(const std::vector<long long>& a, int rows, int cols, const FieldSpec& k) {
    if (rows == 0 || cols == 0) return 0;
    if (!k.is_rationals()) return rank_mod_p(a, rows, cols, k.characteristic());
    if (auto r = rank_bareiss_i64(a, rows, cols)) return *r;
    return rank_bareiss_mpz(a, rows, cols);
}

std::vector<long long> boundary_entries(const std::vector<std::uint64_t>& rows,
                                        const std::vector<std::uint64_t>& cols) {
    std::unordered_map<std::uint64_t, int> row_index;
    row_index.reserve(rows.size() * 2);
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<int>(i);
    std::vector<long long> m(rows.size() * cols.size(), 0);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        std::uint64_t f = cols[c];
        int position = 0;
        for (std::uint64_t rest = f; rest; rest &= rest - 1, ++position) {
            std::uint64_t sub = f ^ (rest & -rest);
            m[static_cast<std::size_t>(row_index.at(sub)) * cols.size() + c] =
                (position % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

} // namespace

IntMatrix boundary_matrix(const SimplicialComplex& d, int dim) {
    if (dim < 0) throw InputError("boundary_matrix: dimension must be nonnegative");
    auto levels = d.faces_by_dim();
    auto level = [&](int i) -> std::vector<std::uint64_t> {
        if (i < 0 || i >= static_cast<int>(levels.size())) return {};
        return levels[i];
    };
    auto rows = level(dim);     // (dim-1)-faces
    auto cols = level(dim + 1); // dim-faces
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    m.a = boundary_entries(rows, cols);
    if (m.a.empty()) m.a.assign(static_cast<std::size_t>(m.rows) * m.cols, 0);
    return m;
}

int matrix_rank(const IntMatrix& m, const FieldSpec& k) {
    return rank_flat(m.a, m.rows, m.cols, k);
}

std::vector<long long> reduced_homology_dims(const std::vector<std::uint64_t>& maximal_facets,
                                             const FieldSpec& k) {
    if (maximal_facets.empty()) return {};
    if (maximal_facets.size() == 1 && maximal_facets[0] == 0) return {1};
    std::uint64_t apex = ~0ULL;
    for (auto f : maximal_facets) apex &= f;
    if (apex != 0) return {}; // cone, contractible
    auto levels = face_levels(maximal_facets);
    int top = static_cast<int>(levels.size()) - 1; // faces of dim top-1 exist
    std::vector<int> ranks(top + 1, 0);            // ranks[i] = rank of boundary from dim i-1
    for (int i = 1; i <= top; ++i) {
        auto entries = boundary_entries(levels[i - 1], levels[i]);
        ranks[i] = rank_flat(entries, static_cast<int>(levels[i - 1].size()),
                             static_cast<int>(levels[i].size()), k);
    }
    std::vector<long long> dims(top + 1, 0);
    for (int i = 0; i <= top; ++i) {
        long long faces = static_cast<long long>(levels[i].size());
        long long below = ranks[i];
        long long above = (i + 1 <= top) ? ranks[i + 1] : 0;
        dims[i] = faces - below - above;
        if (dims[i] < 0) throw InternalError("reduced_homology: negative dimension");
    }
    return dims;
}

HomologyProfile reduced_homology(const SimplicialComplex& d, const FieldSpec& k) {
    auto dims = reduced_homology_dims(d.facets(), k);
    int want = d.is_void() ? 0 : d.dim() + 2;
    dims.resize(std::max<std::size_t>(dims.size(), want), 0);
    return HomologyProfile(std::move(dims));
}

bool torsion_probe(const SimplicialComplex& d, const std::vector<long long>& primes) {
    if (primes.empty()) throw InputError("torsion_probe: need at least one prime");
    HomologyProfile over_q = reduced_homology(d, FieldSpec::rationals());
    for (long long p : primes)
        if (reduced_homology(d, FieldSpec::prime(p)) != over_q) return false;
    return true;
}

} // namespace edgeideal
