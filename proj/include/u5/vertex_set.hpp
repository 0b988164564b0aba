#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "u5/errors.hpp"

namespace u5 {

/// Set of vertex indices over a fixed universe {0, ..., universe-1},
/// packed into 64-bit words. Value type; all operations require matching
/// universes.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> members) {
        VertexSet s(universe);
        for (int v : members) s.insert(v);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int v) const {
        return v >= 0 && v < universe_ && (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void insert(int v) {
        check_range(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(int v) {
        check_range(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    bool any() const { return !empty(); }

    /// Least member, or -1 when empty.
    int first() const { return next(-1); }

    /// Least member greater than `after`, or -1.
    int next(int after) const {
        int start = after + 1;
        if (start >= universe_) return -1;
        std::size_t wi = static_cast<std::size_t>(start) >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (start & 63));
        while (true) {
            if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v = first(); v != -1; v = next(v)) out.push_back(v);
        return out;
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    bool intersects(const VertexSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    /// Complement within the universe.
    VertexSet complement() const {
        VertexSet s(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
        s.trim();
        return s;
    }

private:
    void check_range(int v) const {
        if (v < 0 || v >= universe_)
            throw ContractViolation("vertex " + std::to_string(v) + " outside universe of size " +
                                    std::to_string(universe_));
    }
    void check_same(const VertexSet& o) const {
        if (universe_ != o.universe_)
            throw ContractViolation("vertex-set universe mismatch: " + std::to_string(universe_) +
                                    " vs " + std::to_string(o.universe_));
    }
    void trim() {
        if (universe_ & 63) words_.back() &= (~std::uint64_t{0}) >> (64 - (universe_ & 63));
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace u5
