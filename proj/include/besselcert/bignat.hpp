// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "besselcert/quad_float.hpp"

namespace besselcert::detail {

using u128 = unsigned __int128;

/// Arbitrary-size natural number, little-endian base-2^32 limbs. Only the
/// operations the series summation needs: multiply by a word, divide by a
/// value below 2^96, shifts, add, subtract and compare.
class BigNat {
public:
    BigNat() = default;
    static BigNat from_u64(std::uint64_t v);
    static BigNat power_of_two(int bits);

    bool is_zero() const noexcept { return limbs_.empty(); }
    int bit_length() const noexcept;
    std::size_t limb_count() const noexcept { return limbs_.size(); }

    void mul_small(std::uint64_t m);
    /// Truncating division; returns the remainder. Requires 0 < d < 2^96.
    u128 div_small(u128 d);
    void shift_left(int bits);
    /// Truncating right shift.
    void shift_right(int bits);

    void add(const BigNat& other);
    /// this -= other; requires *this >= other.
    void sub(const BigNat& other);

    friend int compare(const BigNat& a, const BigNat& b) noexcept;

    /// value · 2^(−scale_bits), correctly to about 2^−150 relative.
    qreal to_quad(int scale_bits) const;

private:
    void trim() noexcept;
    std::vector<std::uint32_t> limbs_;
};

int compare(const BigNat& a, const BigNat& b) noexcept;

}  // namespace besselcert::detail
