#include "u5/bignat.hpp"

#include <algorithm>

#include "u5/errors.hpp"

namespace u5 {

BigNat::BigNat(std::uint64_t v) {
    if (v) {
        limbs_.push_back(static_cast<std::uint32_t>(v));
        if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }
}

void BigNat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigNat& BigNat::operator*=(const BigNat& o) {
    if (is_zero() || o.is_zero()) {
        limbs_.clear();
        return *this;
    }
    std::vector<std::uint32_t> out(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j] +
                                out[i + j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + o.limbs_.size();
        while (carry) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    limbs_ = std::move(out);
    trim();
    return *this;
}

BigNat& BigNat::operator+=(std::uint64_t v) {
    std::uint64_t carry = v;
    std::size_t i = 0;
    while (carry) {
        if (i == limbs_.size()) limbs_.push_back(0);
        std::uint64_t cur = limbs_[i] + (carry & 0xFFFFFFFFULL);
        limbs_[i] = static_cast<std::uint32_t>(cur);
        carry = (carry >> 32) + (cur >> 32);
        ++i;
    }
    return *this;
}

BigNat& BigNat::operator+=(const BigNat& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) +
                            (i < o.limbs_.size() ? o.limbs_[i] : 0) + carry;
        limbs_[i] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigNat BigNat::shifted_left(unsigned k) const {
    if (is_zero()) return BigNat{};
    BigNat r;
    unsigned words = k / 32, bits = k % 32;
    r.limbs_.assign(limbs_.size() + words + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) << bits;
        r.limbs_[i + words] |= static_cast<std::uint32_t>(cur);
        r.limbs_[i + words + 1] |= static_cast<std::uint32_t>(cur >> 32);
    }
    r.trim();
    return r;
}

BigNat BigNat::divided_by(std::uint64_t d) const {
    if (d == 0) throw ContractViolation("division by zero");
    BigNat r;
    r.limbs_.assign(limbs_.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        r.limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    r.trim();
    return r;
}

int BigNat::compare(const BigNat& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::size_t BigNat::bit_length() const {
    if (is_zero()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

BigNat BigNat::pow(const BigNat& base, unsigned exp) {
    BigNat result(1);
    BigNat b = base;
    while (exp) {
        if (exp & 1u) result *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return result;
}

BigNat BigNat::pow_u64(std::uint64_t base, unsigned exp) { return pow(BigNat(base), exp); }

BigNat BigNat::iroot(unsigned k) const {
    if (k == 0) throw ContractViolation("zeroth root");
    if (k == 1 || is_zero()) return *this;
    // binary search over the 2^(ceil(bits/k)) candidate range
    std::size_t rbits = bit_length() / k + 2;
    BigNat lo(0), hi = BigNat(1).shifted_left(static_cast<unsigned>(rbits));
    // invariant: lo^k <= *this < hi^k
    while (true) {
        BigNat mid = (lo + hi).divided_by(2);
        if (!(lo < mid)) break; // converged: hi - lo <= 1
        if (pow(mid, k) <= *this)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

} // namespace u5
