#pragma once

#include <map>
#include <vector>

#include "edgeideal/field.hpp"
#include "edgeideal/simplicial_complex.hpp"

namespace edgeideal {

/// Reduced homology dimensions per degree, from -1 up to the complex dimension.
class HomologyProfile {
public:
    HomologyProfile() = default;

    /// dims[i] is the dimension in degree i-1.
    explicit HomologyProfile(std::vector<long long> dims) : dims_(std::move(dims)) {}

    long long dim(int degree) const {
        int i = degree + 1;
        if (i < 0 || i >= static_cast<int>(dims_.size())) return 0;
        return dims_[i];
    }

    /// Largest degree carrying homology, or -2 when everything vanishes.
    int top_degree() const {
        for (int i = static_cast<int>(dims_.size()) - 1; i >= 0; --i)
            if (dims_[i] != 0) return i - 1;
        return -2;
    }

    bool trivial() const { return top_degree() == -2; }

    long long total() const {
        long long t = 0;
        for (auto d : dims_) t += d;
        return t;
    }

    /// Degrees -1..top of the computed range, zeros included.
    std::map<int, long long> as_map() const {
        std::map<int, long long> m;
        for (int i = 0; i < static_cast<int>(dims_.size()); ++i) m[i - 1] = dims_[i];
        if (m.empty()) m[-1] = 0;
        return m;
    }

    bool operator==(const HomologyProfile& o) const {
        int hi = std::max(dims_.size(), o.dims_.size());
        for (int i = 0; i < hi; ++i)
            if (dim(i - 1) != o.dim(i - 1)) return false;
        return true;
    }
    bool operator!=(const HomologyProfile& o) const { return !(*this == o); }

private:
    std::vector<long long> dims_;
};

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<long long> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

/// Boundary map from d-faces to (d-1)-faces; rows and columns are sorted
/// lexicographically by vertex list. d = 0 gives the augmentation row.
IntMatrix boundary_matrix(const SimplicialComplex& d, int dim);

/// Exact rank over GF(p) or over the rationals.
int matrix_rank(const IntMatrix& m, const FieldSpec& k);

HomologyProfile reduced_homology(const SimplicialComplex& d, const FieldSpec& k);

/// Lean entry point for hot loops: facets must already be inclusion-maximal.
/// Returns dims indexed from degree -1; empty facet list means the void complex.
std::vector<long long> reduced_homology_dims(const std::vector<std::uint64_t>& maximal_facets,
                                             const FieldSpec& k);

/// True when the homology profile agrees across every listed prime and Q.
/// A disagreement proves torsion; agreement rules it out for the probed primes.
bool torsion_probe(const SimplicialComplex& d, const std::vector<long long>& primes);

} // namespace edgeideal
