#pragma once

#include <cstdint>
#include <vector>

namespace u5 {

/// Minimal arbitrary-precision unsigned integer: just enough for exact
/// power comparisons (multiply, compare, pow, shifts, k-th roots).
class BigNat {
public:
    BigNat() = default;
    explicit BigNat(std::uint64_t v);

    static BigNat pow(const BigNat& base, unsigned exp);
    static BigNat pow_u64(std::uint64_t base, unsigned exp);

    BigNat& operator*=(const BigNat& o);
    friend BigNat operator*(BigNat a, const BigNat& b) { return a *= b; }

    BigNat& operator+=(std::uint64_t v);
    BigNat& operator+=(const BigNat& o);
    friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }

    /// Multiply by 2^k.
    BigNat shifted_left(unsigned k) const;

    /// Floor division by a small divisor.
    BigNat divided_by(std::uint64_t d) const;

    /// -1, 0, 1 as *this compares to o.
    int compare(const BigNat& o) const;

    friend bool operator<(const BigNat& a, const BigNat& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigNat& a, const BigNat& b) { return a.compare(b) <= 0; }
    friend bool operator==(const BigNat& a, const BigNat& b) { return a.compare(b) == 0; }

    bool is_zero() const { return limbs_.empty(); }
    std::size_t bit_length() const;

    /// Largest r with r^k <= *this (integer k-th root), k >= 1.
    BigNat iroot(unsigned k) const;

private:
    void trim();
    // little-endian 32-bit limbs; empty means zero
    std::vector<std::uint32_t> limbs_;
};

} // namespace u5
