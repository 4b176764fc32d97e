// SPDX-License-Identifier: Apache-2.0
#include "besselcert/bignat.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace besselcert::detail {

BigNat BigNat::from_u64(std::uint64_t v) {
    BigNat n;
    while (v != 0) {
        n.limbs_.push_back(static_cast<std::uint32_t>(v));
        v >>= 32;
    }
    return n;
}

BigNat BigNat::power_of_two(int bits) {
    BigNat n = from_u64(1);
    n.shift_left(bits);
    return n;
}

int BigNat::bit_length() const noexcept {
    if (limbs_.empty()) return 0;
    return static_cast<int>(32 * (limbs_.size() - 1)) + std::bit_width(limbs_.back());
}

void BigNat::trim() noexcept {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

void BigNat::mul_small(std::uint64_t m) {
    if (m == 0 || limbs_.empty()) {
        limbs_.clear();
        return;
    }
    u128 carry = 0;
    for (auto& limb : limbs_) {
        const u128 cur = static_cast<u128>(limb) * m + carry;
        limb = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    while (carry != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(carry));
        carry >>= 32;
    }
}

u128 BigNat::div_small(u128 d) {
    assert(d != 0 && (d >> 96) == 0);
    u128 rem = 0;
    if ((d >> 32) == 0) {
        const std::uint64_t dd = static_cast<std::uint64_t>(d);
        std::uint64_t r = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            const std::uint64_t cur = (r << 32) | limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(cur / dd);
            r = cur % dd;
        }
        rem = r;
    } else {
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            const u128 cur = (rem << 32) | limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
    }
    trim();
    return rem;
}

void BigNat::shift_left(int bits) {
    if (limbs_.empty() || bits == 0) return;
    if (bits < 0) {
        shift_right(-bits);
        return;
    }
    const std::size_t whole = static_cast<std::size_t>(bits) / 32;
    const int part = bits % 32;
    if (part != 0) {
        std::uint32_t carry = 0;
        for (auto& limb : limbs_) {
            const std::uint32_t next = limb >> (32 - part);
            limb = (limb << part) | carry;
            carry = next;
        }
        if (carry != 0) limbs_.push_back(carry);
    }
    limbs_.insert(limbs_.begin(), whole, 0u);
}

void BigNat::shift_right(int bits) {
    if (limbs_.empty() || bits == 0) return;
    if (bits < 0) {
        shift_left(-bits);
        return;
    }
    const std::size_t whole = static_cast<std::size_t>(bits) / 32;
    if (whole >= limbs_.size()) {
        limbs_.clear();
        return;
    }
    limbs_.erase(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(whole));
    const int part = bits % 32;
    if (part != 0) {
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            const std::uint32_t hi = i + 1 < limbs_.size() ? limbs_[i + 1] : 0u;
            limbs_[i] = (limbs_[i] >> part) | (hi << (32 - part));
        }
    }
    trim();
}

void BigNat::add(const BigNat& other) {
    if (other.limbs_.size() > limbs_.size()) limbs_.resize(other.limbs_.size(), 0u);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        const std::uint64_t cur =
            std::uint64_t{limbs_[i]} + (i < other.limbs_.size() ? other.limbs_[i] : 0u) + carry;
        limbs_[i] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
        if (carry == 0 && i >= other.limbs_.size()) break;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
}

void BigNat::sub(const BigNat& other) {
    assert(compare(*this, other) >= 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t cur = std::int64_t{limbs_[i]} -
                           (i < other.limbs_.size() ? std::int64_t{other.limbs_[i]} : 0) - borrow;
        borrow = cur < 0 ? 1 : 0;
        if (cur < 0) cur += (std::int64_t{1} << 32);
        limbs_[i] = static_cast<std::uint32_t>(cur);
        if (borrow == 0 && i >= other.limbs_.size()) break;
    }
    trim();
}

int compare(const BigNat& a, const BigNat& b) noexcept {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

qreal BigNat::to_quad(int scale_bits) const {
    if (limbs_.empty()) return 0;
    const std::size_t n = limbs_.size();
    const std::size_t take = std::min<std::size_t>(n, 5);
    qreal acc = 0;
    for (std::size_t k = 0; k < take; ++k) {
        const std::size_t i = n - 1 - k;
        acc += q_ldexp(static_cast<qreal>(limbs_[i]), static_cast<int>(32 * i) - scale_bits);
    }
    return acc;
}

}  // namespace besselcert::detail
