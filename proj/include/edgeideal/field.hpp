#pragma once

#include <string>

#include "edgeideal/errors.hpp"

namespace edgeideal {

/// Coefficient field for homology: a prime field GF(p) or the rationals.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }

    static FieldSpec prime(long long p) {
        if (!is_prime(p)) throw InputError("FieldSpec: " + std::to_string(p) + " is not prime");
        if (p > (1LL << 31)) throw InputError("FieldSpec: prime too large");
        return FieldSpec(p);
    }

    /// Accepts "Q", "q", a prime number, or "GF(p)".
    static FieldSpec parse(const std::string& s) {
        if (s == "Q" || s == "q") return rationals();
        std::string digits = s;
        if (s.size() > 4 && s.substr(0, 3) == "GF(" && s.back() == ')')
            digits = s.substr(3, s.size() - 4);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("FieldSpec: cannot parse field '" + s + "'");
        return prime(std::stoll(digits));
    }

    bool is_rationals() const { return p_ == 0; }
    long long characteristic() const { return p_; }

    std::string name() const { return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")"; }

    bool operator==(const FieldSpec& o) const { return p_ == o.p_; }

    static bool is_prime(long long p) {
        if (p < 2) return false;
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

private:
    explicit FieldSpec(long long p) : p_(p) {}
    long long p_;
};

} // namespace edgeideal
