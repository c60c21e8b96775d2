#include "edgeideal/betti_polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace edgeideal {

BettiPolynomial BettiPolynomial::one_plus_y_pow(int k) {
    if (k < 0) throw InputError("one_plus_y_pow: negative exponent");
    BettiPolynomial b;
    mpz_class c = 1;
    for (int l = 0; l <= k; ++l) {
        b.coef_[{0, l}] = c;
        c = c * (k - l) / (l + 1);
    }
    return b;
}

BettiPolynomial BettiPolynomial::operator+(const BettiPolynomial& o) const {
    BettiPolynomial r = *this;
    for (const auto& [pq, c] : o.coef_) r.coef_[pq] += c;
    r.prune();
    return r;
}

BettiPolynomial BettiPolynomial::operator-(const BettiPolynomial& o) const {
    BettiPolynomial r = *this;
    for (const auto& [pq, c] : o.coef_) r.coef_[pq] -= c;
    r.prune();
    return r;
}

BettiPolynomial BettiPolynomial::operator*(const BettiPolynomial& o) const {
    BettiPolynomial r;
    for (const auto& [pq, c] : coef_)
        for (const auto& [pq2, c2] : o.coef_)
            r.coef_[{pq.first + pq2.first, pq.second + pq2.second}] += c * c2;
    r.prune();
    return r;
}

void BettiPolynomial::prune() {
    for (auto it = coef_.begin(); it != coef_.end();)
        it = (it->second == 0) ? coef_.erase(it) : std::next(it);
}

int BettiPolynomial::x_degree() const {
    int d = 0;
    for (const auto& [pq, c] : coef_) d = std::max(d, pq.first);
    return d;
}

int BettiPolynomial::y_degree() const {
    int d = 0;
    for (const auto& [pq, c] : coef_) d = std::max(d, pq.second);
    return d;
}

bool BettiPolynomial::nonnegative() const {
    for (const auto& [pq, c] : coef_)
        if (c < 0) return false;
    return true;
}

std::string BettiPolynomial::str() const {
    if (coef_.empty()) return "0";
    std::vector<std::pair<std::pair<int, int>, mpz_class>> terms(coef_.begin(), coef_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta < tb;
        return a.first.first < b.first.first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [pq, c] : terms) {
        mpz_class a = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        auto [p, q] = pq;
        std::vector<std::string> factors;
        if (a != 1 || (p == 0 && q == 0)) factors.push_back(a.get_str());
        if (p == 1) factors.push_back("x");
        if (p > 1) factors.push_back("x^" + std::to_string(p));
        if (q == 1) factors.push_back("y");
        if (q > 1) factors.push_back("y^" + std::to_string(q));
        for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
    }
    return out.str();
}

} // namespace edgeideal
