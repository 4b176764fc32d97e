// SPDX-License-Identifier: Apache-2.0
#include "besselcert/zeros.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "besselcert/oracle.hpp"
#include "besselcert/quad_float.hpp"

namespace besselcert::zeros {

namespace {

constexpr double kRootTol = 1e-11;

void check_index(int s) {
    if (s < 1) throw PreconditionViolation("zero index must be >= 1");
}

// All zeros a_1 … a_50 from one scan of Ai(−x); a_50 ≈ 38.0 and the
// spacing there is ≈ 0.5, so a step of 0.02 cannot skip a pair.
std::vector<double> scan_airy_zeros() {
    constexpr double kStep = 0.02;
    constexpr double kLimit = 40.0;
    auto f = [](double x) { return oracle::airy_ai_neg_ref(x).value; };
    std::vector<double> out;
    double lo = kStep;
    double flo = f(lo);
    for (int i = 2; out.size() < static_cast<std::size_t>(kMaxAiryIndex); ++i) {
        const double hi = kStep * i;
        if (hi > kLimit) throw ScanFailure("refine_airy_zero: scan reached x = 40 before a_50");
        const double fhi = f(hi);
        if ((flo > 0.0) != (fhi > 0.0)) out.push_back(oracle::refine_root(f, lo, hi, kRootTol));
        lo = hi;
        flo = fhi;
    }
    return out;
}

}  // namespace

std::optional<AiryZeroMode> parse_airy_zero_mode(std::string_view name) noexcept {
    if (name == "full") return AiryZeroMode::full;
    if (name == "simplified") return AiryZeroMode::simplified;
    return std::nullopt;
}

double zero_phase(int s) {
    check_index(s);
    return (12.0 * s - 3.0) * std::numbers::pi;
}

ZeroEstimate airy_zero_estimate(int s, AiryZeroMode mode) {
    const double m = zero_phase(s);
    const double m2 = m * m;
    const double r6 = std::pow(m2 + 40.0, 1.0 / 6.0);
    ZeroEstimate z;
    z.family = Family::airy;
    z.s = s;
    if (mode == AiryZeroMode::full) {
        z.center = std::pow(m + std::sqrt(m2 + 40.0), 2.0 / 3.0) / std::pow(16.0, 2.0 / 3.0);
        z.half_width = 1280.0 * std::numbers::pi / (9.0 * m2 * m * r6);
    } else {
        z.center = std::cbrt(m2 + 20.0) / 4.0;
        z.half_width = 456.0 / (m2 * m * r6);
    }
    return z;
}

double refine_airy_zero(int s) {
    check_index(s);
    if (s > kMaxAiryIndex) throw ScanFailure("refine_airy_zero: index beyond the scan cap of 50");
    static const std::vector<double> zeros = scan_airy_zeros();
    return zeros[static_cast<std::size_t>(s - 1)];
}

double refine_bessel_zero(const Order& order, int s) {
    check_index(s);
    if (!(order.nu() > 0.0)) throw DomainError("refine_bessel_zero: requires nu > 0");
    // j_{ν,1} > ν, and consecutive zeros are more than 0.5 apart.
    constexpr double kStep = 0.05;
    auto f = [&](double x) { return oracle::bessel_j_ref(order, x).value; };
    double lo = order.nu();
    double flo = f(lo);
    int found = 0;
    for (int i = 1;; ++i) {
        const double hi = order.nu() + kStep * i;
        if (hi > oracle::kMaxBesselArg) throw ScanFailure("refine_bessel_zero: zero lies beyond x = 200");
        const double fhi = f(hi);
        if ((flo > 0.0) != (fhi > 0.0) && ++found == s) return oracle::refine_root(f, lo, hi, kRootTol);
        lo = hi;
        flo = fhi;
    }
}

ZeroEstimate bessel_first_zeros_estimate(const Order& order, int s) {
    const double nu = order.nu();
    if (!(nu > 0.0)) throw DomainError("bessel_first_zeros_estimate: requires nu > 0");
    const double a = refine_airy_zero(s);
    const double c13 = std::cbrt(2.0);
    ZeroEstimate z;
    z.family = Family::bessel;
    z.s = s;
    z.nu = nu;
    z.center = nu + a * std::cbrt(nu) / c13;
    z.half_width = 3.0 * a * a / (10.0 * c13 * c13) / std::cbrt(nu);
    z.one_sided = true;
    return z;
}

bounds::BoundReport conjecture_check(int s) {
    const double a = refine_airy_zero(s);
    const double rhs = airy_zero_estimate(s, AiryZeroMode::full).center;
    // refine_root tolerance plus a few ulps of the closed form.
    return bounds::make_report("airy_zero_conjecture", 0.0, static_cast<double>(s), a, rhs,
                               kRootTol + 8.0 * std::numeric_limits<double>::epsilon() * rhs, true);
}

std::array<bounds::BoundReport, 2> airy_center_chain(int s) {
    check_index(s);
    const qreal m = qreal(12 * s - 3) * q_pi();
    const qreal m2 = m * m;
    const qreal full = q_pow(m + q_sqrt(m2 + 40), qreal(2) / 3) / q_pow(qreal(16), qreal(2) / 3);
    const qreal simplified = q_cbrt(m2 + 20) / 4;
    const qreal gap = simplified - full;
    const qreal upper = qreal(25) / (3 * m2 * m * q_pow(m2 + 40, qreal(1) / 6));
    // Each closed form carries a few units of 2^−112 relative error.
    const double slack = static_cast<double>(16 * q_ldexp(simplified, -112));
    const double x = static_cast<double>(s);
    return {bounds::make_report("airy_chain_positive", 0.0, x, 0.0, static_cast<double>(gap), slack, true),
            bounds::make_report("airy_chain_upper", 0.0, x, static_cast<double>(gap), static_cast<double>(upper),
                                slack, true)};
}

}  // namespace besselcert::zeros
