// SPDX-License-Identifier: Apache-2.0
#include "besselcert/approx.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "besselcert/oracle.hpp"

namespace besselcert::approx {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2OverPi = std::sqrt(2.0 / kPi);

constexpr std::array<std::string_view, 9> kMethodNames{
    "classic", "olver", "sharp_low", "sharp_high", "simplified",
    "transition", "airy_classic", "airy_sharp", "airy_simplified"};

void require_positive(double x, const char* who) {
    if (!(x > 0.0)) throw DomainError(std::string(who) + ": x must be positive");
}

Region bessel_region(const Order& order, double x) {
    return order.low() || x > order.sqrt_mu() ? Region::oscillatory : Region::monotonicity;
}

// Ai(0) = 3^{−2/3}/Γ(2/3); the oracle only covers x > 0.
double airy_neg(double x) {
    if (x == 0.0) return 1.0 / (std::cbrt(9.0) * oracle::gamma(2.0 / 3.0));
    return oracle::airy_ai_neg_ref(x).value;
}

}  // namespace

std::string_view method_name(Method m) noexcept { return kMethodNames[static_cast<std::size_t>(m)]; }

std::optional<Method> parse_method(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kMethodNames.size(); ++i) {
        if (kMethodNames[i] == name) return static_cast<Method>(i);
    }
    return std::nullopt;
}

std::string_view region_name(Region r) noexcept {
    switch (r) {
        case Region::oscillatory: return "oscillatory";
        case Region::transition: return "transition";
        case Region::monotonicity: return "monotonicity";
    }
    return "?";
}

ApproxValue classic_oscillatory(const Order& order, double x) {
    require_positive(x, "classic_oscillatory");
    double c = 0.0;
    if (order.low()) {
        c = std::pow(2.0 / kPi, 1.5);
    } else if (x >= order.sqrt_mu()) {
        c = std::numbers::sqrt2 / 2.0;
    } else {
        c = 1.25;
    }
    ApproxValue out;
    out.value = std::sqrt(2.0 / (kPi * x)) * std::cos(x - order.omega());
    out.half_width = c * order.mu() * std::pow(x, -1.5);
    out.method = Method::classic;
    out.region = bessel_region(order, x);
    out.x = x;
    return out;
}

double olver_coefficient(double nu, int i) {
    if (i < 0) throw PreconditionViolation("olver_coefficient: index must be nonnegative");
    double a = 1.0;
    for (int k = 0; k < i; ++k) a *= (0.5 - nu + k) * (0.5 + nu + k) / (2.0 * (k + 1));
    return a;
}

int olver_min_l1(double nu) { return std::max(1, static_cast<int>(std::ceil(nu / 2.0 - 0.25))); }
int olver_min_l2(double nu) { return std::max(1, static_cast<int>(std::ceil(nu / 2.0 - 0.75))); }

ApproxValue olver_expansion(const Order& order, double x, int l1, int l2, OlverSigns signs) {
    const double nu = order.nu();
    if (!(nu >= 0.0)) throw PreconditionViolation("olver_expansion: requires nu >= 0");
    require_positive(x, "olver_expansion");
    if (l1 < olver_min_l1(nu) || l2 < olver_min_l2(nu)) {
        throw PreconditionViolation("olver_expansion: need l1 >= max(nu/2 - 1/4, 1) and l2 >= max(nu/2 - 3/4, 1)");
    }
    const bool alt = signs == OlverSigns::hankel;
    double even = 0.0;
    double odd = 0.0;
    for (int i = 0; i < l1; ++i) {
        const double s = alt && (i % 2 == 1) ? -1.0 : 1.0;
        even += s * olver_coefficient(nu, 2 * i) / std::pow(x, 2 * i);
    }
    for (int i = 0; i < l2; ++i) {
        const double s = alt && (i % 2 == 0) ? -1.0 : 1.0;
        odd += s * olver_coefficient(nu, 2 * i + 1) / std::pow(x, 2 * i + 1);
    }
    const double w = x - order.omega();
    const double lead = std::sqrt(2.0 / (kPi * x));
    ApproxValue out;
    out.value = lead * (std::cos(w) * even - std::sin(w) * odd);
    out.half_width = lead * (std::fabs(olver_coefficient(nu, 2 * l1)) / std::pow(x, 2 * l1) +
                             std::fabs(olver_coefficient(nu, 2 * l2 + 1)) / std::pow(x, 2 * l2 + 1));
    out.method = Method::olver;
    out.region = bessel_region(order, x);
    out.x = x;
    return out;
}

OlverSigns calibrate_olver_signs() {
    const Order order(0.0);
    constexpr double x = 20.0;
    const double truth = oracle::bessel_j_ref(order, x).value;
    auto certifies = [&](OlverSigns s) {
        const ApproxValue a = olver_expansion(order, x, 3, 3, s);
        return std::fabs(a.value - truth) <= a.half_width;
    };
    const bool printed = certifies(OlverSigns::printed);
    const bool hankel = certifies(OlverSigns::hankel);
    if (printed == hankel) throw NonConvergence("calibrate_olver_signs: calibration point is not decisive");
    return hankel ? OlverSigns::hankel : OlverSigns::printed;
}

PhaseValue phase_B(const Order& order, double x) {
    require_positive(x, "phase_B");
    const double mu = order.mu();
    const double rmu = order.sqrt_mu();
    PhaseValue p;
    if (order.low()) {
        const double r = std::sqrt(x * x + mu);
        p.B = r + rmu * std::log(x / (rmu + r));
        p.b = r / x;
    } else {
        if (!(x > rmu)) throw DomainError("phase_B: high branch needs x > sqrt(mu)");
        const double r = std::sqrt(x * x - mu);
        p.B = r + rmu * std::asin(rmu / x);
        p.b = r / x;
    }
    return p;
}

ApproxValue sharper_oscillatory(const Order& order, double x) {
    require_positive(x, "sharper_oscillatory");
    const double mu = order.mu();
    const PhaseValue p = [&] {
        if (!order.low() && !(x > mu && x > order.sqrt_mu())) {
            throw DomainError("sharper_oscillatory: high branch needs x > max(mu, sqrt(mu))");
        }
        return phase_B(order, x);
    }();
    ApproxValue out;
    out.x = x;
    out.region = Region::oscillatory;
    if (order.low()) {
        const double q = x * x + mu;
        out.value = kSqrt2OverPi * std::pow(q, -0.25) * std::cos(p.B - order.omega());
        out.half_width = mu / (std::sqrt(2.0 * kPi * x) * std::pow(q, 1.5));
        out.method = Method::sharp_low;
    } else {
        const double q = x * x - mu;
        out.value = kSqrt2OverPi * std::pow(q, -0.25) * std::cos(p.B - order.omega());
        out.half_width = 13.0 * mu / (12.0 * std::sqrt(2.0 * kPi) * std::pow(q, 1.75));
        out.method = Method::sharp_high;
    }
    return out;
}

ApproxValue simplified_oscillatory(const Order& order, double x) {
    if (!order.low()) throw DomainError("simplified_oscillatory: requires |nu| <= 1/2");
    require_positive(x, "simplified_oscillatory");
    const double mu = order.mu();
    const double q4 = std::pow(x * x + mu, 0.25);
    ApproxValue out;
    out.value = kSqrt2OverPi * std::cos(x - mu / (2.0 * x) - order.omega()) / q4;
    out.half_width = 25.0 * mu / (24.0 * std::sqrt(2.0 * kPi) * x * x * x * q4);
    out.method = Method::simplified;
    out.region = Region::oscillatory;
    out.x = x;
    return out;
}

ApproxValue transition(const Order& order, double z) {
    const double nu = order.nu();
    if (!(nu >= 0.5)) throw DomainError("transition: requires nu >= 1/2");
    if (!(z >= 0.0)) throw DomainError("transition: requires z >= 0");
    const double n23 = std::cbrt(nu * nu);
    const double root = std::sqrt(n23 + z);
    const double c13 = std::cbrt(2.0);
    ApproxValue out;
    out.value = c13 * airy_neg(c13 * z) / root;
    out.half_width = 23.0 * std::max(1.0, std::pow(z, 2.25)) / (2.0 * n23 * root);
    out.method = Method::transition;
    out.region = Region::transition;
    out.x = nu + std::cbrt(nu) * z;
    return out;
}

std::optional<AiryMode> parse_airy_mode(std::string_view name) noexcept {
    if (name == "classic") return AiryMode::classic;
    if (name == "sharp") return AiryMode::sharp;
    if (name == "simplified") return AiryMode::simplified;
    return std::nullopt;
}

ApproxValue airy_approx(double x, AiryMode mode) {
    require_positive(x, "airy_approx");
    const double sqrt_pi = std::sqrt(kPi);
    const double x32 = x * std::sqrt(x);
    const double q = 16.0 * x * x * x + 5.0;
    const double sqrt5 = std::sqrt(5.0);
    ApproxValue out;
    out.x = x;
    out.region = Region::oscillatory;
    switch (mode) {
        case AiryMode::classic: {
            const double zeta = 2.0 * x32 / 3.0;
            out.value = std::cos(zeta - kPi / 4.0) / (sqrt_pi * std::pow(x, 0.25));
            out.half_width = 5.0 / (6.0 * std::sqrt(3.0) * std::pow(kPi, 1.5) * std::pow(x, 1.75));
            out.method = Method::airy_classic;
            break;
        }
        case AiryMode::sharp: {
            const double sq = std::sqrt(q);
            const double phase = sq / 6.0 - sqrt5 / 6.0 * std::log((sq + sqrt5) / (4.0 * x32)) - kPi / 4.0;
            out.value = 2.0 * std::sqrt(x) * std::cos(phase) / (sqrt_pi * std::pow(q, 0.25));
            out.half_width = 10.0 * std::sqrt(3.0) / (sqrt_pi * std::pow(x, 0.25) * q * sq);
            out.method = Method::airy_sharp;
            break;
        }
        case AiryMode::simplified: {
            const double phase = 2.0 / 3.0 * x32 - 5.0 / (48.0 * x32) - kPi / 4.0;
            out.value = 2.0 * std::sqrt(x) * std::cos(phase) / (sqrt_pi * std::pow(q, 0.25));
            out.half_width = 5.0 / (9.0 * sqrt_pi * std::pow(x, 4.0) * std::pow(q, 0.25));
            out.method = Method::airy_simplified;
            break;
        }
    }
    return out;
}

bool applicable(Method m, const Order& order, double x) noexcept {
    if (!(x > 0.0)) return false;
    const double nu = order.nu();
    switch (m) {
        case Method::classic: return nu >= -0.5;
        case Method::olver: return nu >= 0.0;
        case Method::sharp_low: return order.low();
        case Method::sharp_high: return !order.low() && nu > 0.5 && x > order.mu() && x > order.sqrt_mu();
        case Method::simplified: return order.low();
        case Method::transition: return nu >= 0.5 && x >= nu;
        case Method::airy_classic:
        case Method::airy_sharp:
        case Method::airy_simplified: return true;
    }
    return false;
}

ApproxValue evaluate(Method m, const Order& order, double x, std::optional<int> l1, std::optional<int> l2) {
    switch (m) {
        case Method::classic: return classic_oscillatory(order, x);
        case Method::olver:
            return olver_expansion(order, x, l1.value_or(olver_min_l1(order.nu())),
                                   l2.value_or(olver_min_l2(order.nu())));
        case Method::sharp_low:
            if (!order.low()) throw DomainError("sharp_low: requires |nu| <= 1/2");
            return sharper_oscillatory(order, x);
        case Method::sharp_high:
            if (order.low()) throw DomainError("sharp_high: requires nu > 1/2");
            return sharper_oscillatory(order, x);
        case Method::simplified: return simplified_oscillatory(order, x);
        case Method::transition: {
            if (!(x >= order.nu())) throw DomainError("transition: requires x >= nu");
            return transition(order, (x - order.nu()) / std::cbrt(order.nu()));
        }
        case Method::airy_classic: return airy_approx(x, AiryMode::classic);
        case Method::airy_sharp: return airy_approx(x, AiryMode::sharp);
        case Method::airy_simplified: return airy_approx(x, AiryMode::simplified);
    }
    throw PreconditionViolation("evaluate: unknown method");
}

ApproxValue best_approx(const Order& order, double x) {
    require_positive(x, "best_approx");
    constexpr std::array<Method, 6> kOrder{Method::sharp_high, Method::sharp_low, Method::simplified,
                                           Method::olver,      Method::classic,   Method::transition};
    std::optional<ApproxValue> best;
    for (Method m : kOrder) {
        if (!applicable(m, order, x)) continue;
        const ApproxValue a = evaluate(m, order, x);
        if (!best || a.half_width < best->half_width) best = a;
    }
    if (!best) throw DomainError("best_approx: no method applies");
    return *best;
}

Bracket jnunu_bracket(double nu) {
    if (!(nu > 0.0)) throw DomainError("jnunu_bracket: requires nu > 0");
    const double k = std::cbrt(2.0) / (std::cbrt(9.0) * oracle::gamma(2.0 / 3.0));
    Bracket b;
    b.lo = k / std::cbrt(nu + kJnunuAlpha);
    b.hi = k / std::cbrt(nu);
    b.lo_closed = false;
    b.hi_closed = true;
    return b;
}

}  // namespace besselcert::approx
