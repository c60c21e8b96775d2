#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "edgeideal/betti_table.hpp"

namespace edgeideal {

/// Sparse bivariate polynomial over Z; the coefficient of x^p y^q records
/// beta(q, p+q). Intermediate values may go negative during the dominated-set
/// reduction; any final Betti polynomial must be coefficient-nonnegative.
class BettiPolynomial {
public:
    BettiPolynomial() = default;

    static BettiPolynomial one() {
        BettiPolynomial b;
        b.coef_[{0, 0}] = 1;
        return b;
    }

    static BettiPolynomial from_table(const BettiTable& t) {
        BettiPolynomial b;
        for (const auto& [ij, mult] : t.entries()) {
            auto [i, j] = ij;
            b.coef_[{j - i, i}] = static_cast<unsigned long>(mult);
        }
        return b;
    }

    /// (1 + y)^k expanded.
    static BettiPolynomial one_plus_y_pow(int k);

    /// The monomial x*y.
    static BettiPolynomial xy() {
        BettiPolynomial b;
        b.coef_[{1, 1}] = 1;
        return b;
    }

    const std::map<std::pair<int, int>, mpz_class>& terms() const { return coef_; }

    mpz_class coefficient(int p, int q) const {
        auto it = coef_.find({p, q});
        return it == coef_.end() ? mpz_class(0) : it->second;
    }

    BettiPolynomial operator+(const BettiPolynomial& o) const;
    BettiPolynomial operator-(const BettiPolynomial& o) const;
    BettiPolynomial operator*(const BettiPolynomial& o) const;

    bool operator==(const BettiPolynomial& o) const { return coef_ == o.coef_; }
    bool operator!=(const BettiPolynomial& o) const { return !(*this == o); }

    int x_degree() const;
    int y_degree() const;
    bool nonnegative() const;

    /// Canonical rendering, terms by total degree then x-degree: "1 + 2*x*y + x*y^2".
    std::string str() const;

private:
    void prune();
    std::map<std::pair<int, int>, mpz_class> coef_;
};

} // namespace edgeideal
