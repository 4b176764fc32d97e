// SPDX-License-Identifier: Apache-2.0
//
// Zeros a_s of Ai(−x) and j_{ν,s} of J_ν(x): closed-form estimates with
// certified half-widths, and oracle-refined values to test them against.
#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "besselcert/bounds.hpp"
#include "besselcert/order.hpp"

namespace besselcert::zeros {

enum class Family { airy, bessel };

struct ZeroEstimate {
    Family family = Family::airy;
    int s = 1;
    double nu = 0.0;  // bessel only
    double center = 0.0;
    double half_width = 0.0;
    bool one_sided = false;  // bracket [center, center + half_width]

    double lo() const noexcept { return one_sided ? center : center - half_width; }
    double hi() const noexcept { return center + half_width; }
    bool contains(double v) const noexcept { return v >= lo() && v <= hi(); }
};

enum class AiryZeroMode { full, simplified };
std::optional<AiryZeroMode> parse_airy_zero_mode(std::string_view name) noexcept;

inline constexpr int kMaxAiryIndex = 50;

/// m = (12s − 3)π.
double zero_phase(int s);

/// full: 16^{−2/3}(m + √(m²+40))^{2/3} ± 1280π/(9m³(m²+40)^{1/6});
/// simplified: (1/4)(m²+20)^{1/3} ± 456/(m³(m²+40)^{1/6}).
ZeroEstimate airy_zero_estimate(int s, AiryZeroMode mode);

/// One-sided [ν + 2^{−1/3}a_sν^{1/3}, that + (3·2^{−2/3}a_s²/10)ν^{−1/3}] with the refined a_s.
ZeroEstimate bessel_first_zeros_estimate(const Order& order, int s);

/// s-th positive zero of Ai(−x), 1 ≤ s ≤ 50, to 1e−11.
double refine_airy_zero(int s);

/// s-th positive zero of J_ν for ν > 0, searched below the oracle cap x ≤ 200.
double refine_bessel_zero(const Order& order, int s);

/// a_s < 16^{−2/3}(m + √(m²+40))^{2/3}. Informational: the inequality is a conjecture.
bounds::BoundReport conjecture_check(int s);

/// 0 < (1/4)(m²+20)^{1/3} − 16^{−2/3}(m + √(m²+40))^{2/3} < 25/(3m³(m²+40)^{1/6}),
/// evaluated in quad precision because the two centers agree to ~1e−16 relative.
std::array<bounds::BoundReport, 2> airy_center_chain(int s);

}  // namespace besselcert::zeros
