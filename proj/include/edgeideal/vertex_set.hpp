#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "edgeideal/errors.hpp"

namespace edgeideal {

/// Subset of {0,...,n-1} stored as a fixed-width bit set. A single word covers
/// the n <= 64 fast path; larger universes spill into further words.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : n_(universe), words_(word_count(universe), 0) {
        if (universe < 0) throw InputError("VertexSet: negative universe");
    }

    VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
        for (int v : members) insert(v);
    }

    static VertexSet from_mask(int universe, std::uint64_t mask) {
        VertexSet s(universe);
        if (universe < 64 && universe >= 0 && (mask >> universe) != 0)
            throw InputError("VertexSet: mask exceeds universe");
        if (!s.words_.empty()) s.words_[0] = mask;
        else if (mask != 0) throw InputError("VertexSet: mask exceeds universe");
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~0ULL;
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    bool contains(int v) const {
        return v >= 0 && v < n_ && (words_[v >> 6] >> (v & 63)) & 1;
    }

    void insert(int v) {
        check(v);
        words_[v >> 6] |= 1ULL << (v & 63);
    }

    void erase(int v) {
        check(v);
        words_[v >> 6] &= ~(1ULL << (v & 63));
    }

    /// Smallest member, or -1 when empty.
    int min() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    bool subset_of(const VertexSet& other) const {
        same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    VertexSet operator|(const VertexSet& o) const { return apply(o, [](auto a, auto b) { return a | b; }); }
    VertexSet operator&(const VertexSet& o) const { return apply(o, [](auto a, auto b) { return a & b; }); }
    VertexSet operator-(const VertexSet& o) const { return apply(o, [](auto a, auto b) { return a & ~b; }); }

    VertexSet complement() const {
        VertexSet r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    /// Single-word view; only valid for universes up to 64.
    std::uint64_t mask() const {
        if (n_ > 64) throw InternalError("VertexSet::mask on universe > 64");
        return words_.empty() ? 0 : words_[0];
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    std::size_t hash() const {
        std::size_t h = std::hash<int>()(n_);
        for (auto w : words_) h = h * 1099511628211ULL + std::hash<std::uint64_t>()(w);
        return h;
    }

private:
    static std::size_t word_count(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

    void check(int v) const {
        if (v < 0 || v >= n_) throw InputError("VertexSet: member out of range");
    }

    void same_universe(const VertexSet& o) const {
        if (n_ != o.n_) throw InternalError("VertexSet: universe mismatch");
    }

    template <typename F>
    VertexSet apply(const VertexSet& o, F f) const {
        same_universe(o);
        VertexSet r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = f(words_[i], o.words_[i]);
        return r;
    }

    void trim() {
        if (n_ % 64 != 0 && !words_.empty())
            words_.back() &= (1ULL << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace edgeideal
