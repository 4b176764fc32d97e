// SPDX-License-Identifier: Apache-2.0
#include "besselcert/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "besselcert/oracle.hpp"
#include "besselcert/zeros.hpp"

namespace besselcert::bounds {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRootTol = 1e-11;

// Relative rounding allowance for the closed-form sides, which go through a
// handful of libm calls each.
constexpr double kRoundRel = 1e-14;

double rounding(double lhs, double rhs) { return kRoundRel * (std::fabs(lhs) + std::fabs(rhs)); }

struct Pair {
    double value;
    double err;
};

Pair bessel(double nu, double x) {
    const oracle::EvalResult r = oracle::bessel_j_ref(Order(nu), x);
    return {r.value, r.abs_err_estimate};
}

// J′_ν on the whole oracle domain ν ≥ −1/2.
Pair bessel_prime(double nu, double x) {
    const oracle::EvalResult r =
        nu >= 0.5 ? oracle::bessel_j_prime_ref(Order(nu), x) : oracle::bessel_j_prime_any(Order(nu), x);
    return {r.value, r.abs_err_estimate};
}

// Ai(−x) and d/dx Ai(−x), with the x = 0 limits Ai(0) and −Ai′(0).
struct AiryValues {
    Pair value;
    Pair derivative;
};

AiryValues airy(double x) {
    if (x == 0.0) {
        const double ai0 = 1.0 / (std::cbrt(9.0) * oracle::gamma(2.0 / 3.0));
        const double dai0 = 1.0 / (std::cbrt(3.0) * oracle::gamma(1.0 / 3.0));
        return {{ai0, 4e-16 * ai0}, {dai0, 4e-16 * dai0}};
    }
    const oracle::AiryPair p = oracle::airy_ai_neg_both(x);
    return {{p.value.value, p.value.abs_err_estimate}, {p.derivative.value, p.derivative.abs_err_estimate}};
}

void require_oracle_x(double x, const char* who) {
    if (!(x > 0.0)) throw DomainError(std::string(who) + ": x must be positive");
    if (x > oracle::kMaxBesselArg) throw DomainError(std::string(who) + ": x beyond oracle cap 200");
}

// Sign of 𝓗′_ν, up to a positive factor: x J + 2(x² − μ) J′ above √μ, its
// negative below.
double h_slope_sign(const Order& order, double x) {
    const double j = bessel(order.nu(), x).value;
    const double jp = bessel_prime(order.nu(), x).value;
    const double g = x * j + 2.0 * (x * x - order.mu()) * jp;
    return x > order.sqrt_mu() ? g : -g;
}

// f′ for f = (x + c)^{1/4} Ai(−x), up to the positive factor (x + c)^{−3/4}/4.
double airy_slope(double x) {
    const AiryValues a = airy(x);
    return a.value.value + 4.0 * (x + kAiryShift) * a.derivative.value;
}

constexpr std::array<std::string_view, 10> kBoundNames{
    "watson", "envelope",         "derivative",   "monotonic",       "log_derivative",
    "airy_envelope", "wronskian_kernel", "leftmost_max", "near_first_zero", "lemma_integral"};

}  // namespace

BoundReport make_report(std::string name, double nu, double x, double lhs, double rhs, double slack, bool strict) {
    BoundReport r;
    r.name = std::move(name);
    r.nu = nu;
    r.x = x;
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = rhs - lhs;
    r.slack = slack;
    r.strict = strict;
    r.holds = strict ? r.margin > slack : r.margin >= -slack;
    return r;
}

BoundReport bound_watson(const Order& order, double x) {
    require_oracle_x(x, "bound_watson");
    const double nu = order.nu();
    const Pair j = bessel(nu, x);
    const double rhs = std::pow(x / 2.0, nu) / oracle::gamma(nu + 1.0);
    return make_report("watson", nu, x, j.value, rhs, j.err + rounding(j.value, rhs), false);
}

BoundReport bound_envelope(const Order& order, double x) {
    require_oracle_x(x, "bound_envelope");
    const double nu = order.nu();
    const Pair j = bessel(nu, x);
    if (order.low()) {
        const double w = std::sqrt(kPi * x / 2.0);
        const double lhs = w * std::fabs(j.value);
        return make_report("envelope", nu, x, lhs, 1.0, w * j.err + rounding(lhs, 1.0), false);
    }
    if (x == order.sqrt_mu()) throw DomainError("bound_envelope: x = sqrt(mu) is excluded");
    const double w = std::sqrt(kPi / 2.0) * std::pow(std::fabs(x * x - order.mu()), 0.25);
    const double lhs = w * std::fabs(j.value);
    return make_report("envelope", nu, x, lhs, 1.0, w * j.err + rounding(lhs, 1.0), true);
}

double derivative_threshold(double nu) {
    return nu + (std::sqrt(7.0) - 1.0) / std::cbrt(4.0) * std::cbrt(nu);
}

double derivative_psi(double nu, double x) {
    const double d = x * x - nu * nu;
    const double x2 = x * x;
    const double n2 = nu * nu;
    const double psi = 4.0 * d * d * d - 3.0 * x2 * x2 - 10.0 * x2 * n2 + n2 * n2;
    // The terms reach 4(x²−ν²)³ + 3x⁴ + … in size; anything below their
    // rounding is zero. This matters at ν = 1/2, where ψ vanishes exactly at
    // the threshold.
    const double scale = 4.0 * std::fabs(d * d * d) + 3.0 * x2 * x2 + 10.0 * x2 * n2 + n2 * n2;
    if (std::fabs(psi) <= 64.0 * std::numeric_limits<double>::epsilon() * scale) return 0.0;
    return psi;
}

std::array<BoundReport, 2> bound_derivative(const Order& order, double x) {
    const double nu = order.nu();
    if (!(nu >= 0.5)) throw DomainError("bound_derivative: requires nu >= 1/2");
    const double threshold = derivative_threshold(nu);
    if (!(x >= threshold)) throw DomainError("bound_derivative: x below nu + ((sqrt 7 - 1)/2^{2/3}) nu^{1/3}");
    require_oracle_x(x, "bound_derivative");
    const double psi = derivative_psi(nu, x);
    const Pair jp = bessel_prime(nu, x);
    const double w = x * std::pow(std::max(psi, 0.0), 0.25) / (x * x - nu * nu);
    const double lhs = w * std::fabs(jp.value);
    const double rhs = 2.0 / std::sqrt(kPi);
    const bool at_threshold = x == threshold;
    return {make_report("derivative", nu, x, lhs, rhs, w * jp.err + rounding(lhs, rhs), true),
            make_report("derivative_psi", nu, x, 0.0, psi, 0.0, !at_threshold)};
}

std::array<BoundReport, 2> bound_monotonic(const Order& order, double t) {
    const double nu = order.nu();
    if (!(nu > 0.0)) throw DomainError("bound_monotonic: requires nu > 0");
    if (!(t > 0.0 && t <= 1.0)) throw DomainError("bound_monotonic: requires 0 < t <= 1");
    const double x = t * nu;
    require_oracle_x(x, "bound_monotonic");
    const Pair lhs = bessel(nu, x);
    const Pair at_nu = bessel(nu, nu);
    const double grow = std::pow(t, nu) * std::exp(nu * nu * (1.0 - t * t) / (2.0 * nu + 1.0));
    const double rhs1 = at_nu.value * grow;
    const double k = std::cbrt(2.0) / (std::cbrt(9.0) * oracle::gamma(2.0 / 3.0));
    const double rhs2 = k * std::pow(t, nu) / std::cbrt(nu) * std::exp((nu * nu - x * x) / (2.0 * nu + 1.0));
    return {make_report("monotonic", nu, x, lhs.value, rhs1,
                        lhs.err + grow * at_nu.err + rounding(lhs.value, rhs1), false),
            make_report("monotonic_airy", nu, x, lhs.value, rhs2, lhs.err + rounding(lhs.value, rhs2), true)};
}

std::array<BoundReport, 2> bound_log_derivative(const Order& order, double x) {
    const double nu = order.nu();
    if (!(nu >= -0.5)) throw DomainError("bound_log_derivative: requires nu >= -1/2");
    if (!(x > 0.0 && x <= nu + 0.5)) throw DomainError("bound_log_derivative: requires 0 < x <= nu + 1/2");
    const Pair j = bessel(nu, x);
    if (!(j.value > j.err)) throw DomainError("bound_log_derivative: J_nu vanishes on (0, x]");
    // 𝒥′_ν = −x^{−ν}J_{ν+1}, so t = −J_{ν+1}/J_ν with no cancellation.
    const Pair j1 = bessel(nu + 1.0, x);
    const double t = -j1.value / j.value;
    const double t_err = (j1.err + std::fabs(t) * j.err) / j.value;
    const double a = 2.0 * nu + 1.0;
    // (√(a² − 4x²) − a)/(2x) written without the cancellation.
    const double middle = -2.0 * x / (std::sqrt(a * a - 4.0 * x * x) + a);
    const double outer = -2.0 * x / a;
    return {make_report("log_derivative", nu, x, middle, t, t_err + rounding(middle, t), false),
            make_report("log_derivative_chain", nu, x, outer, middle, rounding(outer, middle), false)};
}

BoundReport bound_airy_envelope(double x) {
    if (!(x >= 0.0)) throw DomainError("bound_airy_envelope: requires x >= 0");
    const Pair a = airy(x).value;
    const double w = std::pow(x + kAiryShift, 0.25);
    const double lhs = w * a.value;
    const double rhs = 9.0 / 14.0;
    return make_report("airy_envelope", 0.0, x, lhs, rhs, w * a.err + rounding(lhs, rhs), true);
}

std::vector<LocalMax> airy_envelope_maxima(double lo, double hi, double step) {
    if (!(lo >= 0.0) || !(hi > lo) || !(step > 0.0)) {
        throw PreconditionViolation("airy_envelope_maxima: need 0 <= lo < hi and step > 0");
    }
    std::vector<LocalMax> out;
    double a = lo;
    double fa = airy_slope(a);
    const long n = static_cast<long>(std::ceil((hi - lo) / step));
    for (long i = 1; i <= n; ++i) {
        const double b = std::min(hi, lo + step * static_cast<double>(i));
        const double fb = airy_slope(b);
        if (fa > 0.0 && fb <= 0.0) {
            const double xi = fb == 0.0 ? b : oracle::refine_root(airy_slope, a, b, kRootTol);
            const double value = std::pow(xi + kAiryShift, 0.25) * airy(xi).value.value;
            out.push_back({xi, value});
        }
        a = b;
        fa = fb;
    }
    return out;
}

std::vector<BoundReport> airy_envelope_maxima_check(double lo, double hi, double step) {
    std::vector<BoundReport> out;
    const double floor = 1.0 / std::sqrt(kPi);
    const double ceiling = 9.0 / 14.0;
    for (const LocalMax& m : airy_envelope_maxima(lo, hi, step)) {
        // The value at a refined maximum is stationary, so the root tolerance
        // enters only quadratically; the oracle error dominates.
        const double slack = 1e-14 + rounding(m.value, ceiling);
        out.push_back(make_report("airy_local_max_upper", 0.0, m.x, m.value, ceiling, slack, true));
        out.push_back(make_report("airy_local_max_lower", 0.0, m.x, floor, m.value, slack, true));
    }
    return out;
}

double wronskian_kernel(double nu, double x1, double x2) {
    const double a = bessel(-nu, x1).value * bessel(nu, x2).value;
    const double b = bessel(-nu, x2).value * bessel(nu, x1).value;
    return std::sqrt(x1 * x2) * (a - b);
}

BoundReport bound_wronskian_kernel(double nu, double x1, double x2) {
    if (!(nu >= 0.0 && nu <= 0.5)) throw DomainError("bound_wronskian_kernel: requires 0 <= nu <= 1/2");
    require_oracle_x(x1, "bound_wronskian_kernel");
    require_oracle_x(x2, "bound_wronskian_kernel");
    const Pair m1 = bessel(-nu, x1);
    const Pair p2 = bessel(nu, x2);
    const Pair m2 = bessel(-nu, x2);
    const Pair p1 = bessel(nu, x1);
    const double r = std::sqrt(x1 * x2);
    const double lhs = r * std::fabs(m1.value * p2.value - m2.value * p1.value);
    const double rhs = 2.0 / kPi * std::sin(kPi * nu);
    const double err = r * (m1.err * std::fabs(p2.value) + p2.err * std::fabs(m1.value) +
                            m2.err * std::fabs(p1.value) + p1.err * std::fabs(m2.value)) +
                       r * 4.0 * std::numeric_limits<double>::epsilon() *
                           (std::fabs(m1.value * p2.value) + std::fabs(m2.value * p1.value));
    BoundReport rep = make_report("wronskian_kernel", nu, x1, lhs, rhs, err + rounding(0.0, rhs), false);
    return rep;
}

std::string_view sonin_variant_name(SoninVariant v) noexcept {
    switch (v) {
        case SoninVariant::szego: return "szego";
        case SoninVariant::envelope: return "envelope";
        case SoninVariant::airy: return "airy";
    }
    return "?";
}

int sonin_direction(SoninVariant v) noexcept { return v == SoninVariant::airy ? -1 : 1; }

SoninSample sonin_eval(SoninVariant variant, const Order& order, double x) {
    SoninSample out;
    out.x = x;
    out.variant = variant;
    const double mu = order.mu();
    switch (variant) {
        case SoninVariant::szego: {
            if (!order.low()) throw DomainError("sonin_eval szego: requires |nu| <= 1/2");
            require_oracle_x(x, "sonin_eval");
            const double y = bessel(order.nu(), x).value;
            const double yp = bessel_prime(order.nu(), x).value;
            const double rx = std::sqrt(x);
            const double d = y / (2.0 * rx) + rx * yp;  // (√x y)′
            out.S = x * y * y + x * x / (x * x + mu) * d * d;
            break;
        }
        case SoninVariant::envelope: {
            if (order.low()) throw DomainError("sonin_eval envelope: requires nu > 1/2");
            if (!(x > order.sqrt_mu())) throw DomainError("sonin_eval envelope: requires x > sqrt(mu)");
            require_oracle_x(x, "sonin_eval");
            const double y = bessel(order.nu(), x).value;
            const double yp = bessel_prime(order.nu(), x).value;
            const double q = x * x - mu;
            const double q4 = std::pow(q, 0.25);
            const double h = q4 * y;
            const double hp = x / (2.0 * q4 * q4 * q4) * y + q4 * yp;
            const double weight = 4.0 * x * x * q * q / (4.0 * q * q * q + (6.0 * x * x - mu) * mu);
            out.S = h * h + weight * hp * hp;
            break;
        }
        case SoninVariant::airy: {
            if (!(x >= 0.0)) throw DomainError("sonin_eval airy: requires x >= 0");
            const AiryValues a = airy(x);
            const double s = x + kAiryShift;
            const double s4 = std::pow(s, 0.25);
            const double f = s4 * a.value.value;
            const double fp = a.value.value / (4.0 * s4 * s4 * s4) + s4 * a.derivative.value;
            out.S = f * f + fp * fp / (x + 5.0 / (16.0 * s * s));
            break;
        }
    }
    return out;
}

double leftmost_max(const Order& order, double step) {
    if (order.low()) throw DomainError("leftmost_max: requires nu > 1/2");
    if (!(step > 0.0)) throw PreconditionViolation("leftmost_max: step must be positive");
    const double limit = order.sqrt_mu() + 5.0;
    auto slope = [&](double x) { return h_slope_sign(order, x); };
    double a = step;
    double fa = slope(a);
    for (long i = 2;; ++i) {
        const double b = step * static_cast<double>(i);
        if (b > limit) throw ScanFailure("leftmost_max: no maximum below sqrt(mu) + 5");
        const double fb = slope(b);
        // At √μ itself 𝓗 has a cusp minimum, a − to + jump that is skipped here.
        if (fa > 0.0 && fb <= 0.0 && !(a < order.sqrt_mu() && b >= order.sqrt_mu())) {
            return fb == 0.0 ? b : oracle::refine_root(slope, a, b, kRootTol);
        }
        a = b;
        fa = fb;
    }
}

BoundReport leftmost_max_check(const Order& order) {
    const double nu = order.nu();
    if (!(nu >= 5.0 / 3.0)) throw DomainError("leftmost_max_check: requires nu >= 5/3");
    const double xi = leftmost_max(order);
    const double lhs = nu * std::sqrt(1.0 - std::pow(2.0 * nu, -2.0 / 3.0));
    return make_report("leftmost_max", nu, xi, lhs, xi, kRootTol + rounding(lhs, xi), true);
}

double airy_gamma() { return zeros::refine_airy_zero(1) / std::cbrt(2.0); }

std::array<BoundReport, 2> bound_near_first_zero(const Order& order) {
    const double nu = order.nu();
    if (!(nu >= 0.5)) throw DomainError("bound_near_first_zero: requires nu >= 1/2");
    const double x = nu + airy_gamma() * std::cbrt(nu);
    require_oracle_x(x, "bound_near_first_zero");
    const Pair j = bessel(nu, x);
    const double rhs = 7.0 / (6.0 * nu);
    return {make_report("near_first_zero", nu, x, j.value, rhs, j.err + rounding(j.value, rhs), true),
            make_report("near_first_zero_positive", nu, x, 0.0, j.value, j.err, true)};
}

namespace {

constexpr double kIntegralReach = 1e6;  // T + x
constexpr double kIntegralTol = 1e-9;

// g is π-periodic with period mean `mean` and (t+x)^−2 decreases, so on each
// period ∫g·w ≤ mean·(∫w + π·(w(start) − w(end))). Summed from T = Nπ this
// gives tail ≤ mean·(1/(T+x) + π/(T+x)²). The cruder 1/(T+x) exceeds the true
// margin 1/(2x) − I ≈ 1/(4x³) once x is a few dozen.
IntegralParts lemma_integral(double x, double (*g)(double), double mean) {
    if (!(x > 0.0)) throw DomainError("lemma_integral_check: requires x > 0");
    const double periods = std::ceil((kIntegralReach - x) / kPi);
    if (!(periods >= 1.0)) throw DomainError("lemma_integral_check: x too large for the truncation point");
    // Panels end at the kinks kπ of |sin t|.
    std::vector<double> points;
    points.reserve(static_cast<std::size_t>(periods) + 1);
    for (long k = 0; k <= static_cast<long>(periods); ++k) points.push_back(static_cast<double>(k) * kPi);
    const double T = points.back();
    auto f = [&](double t) {
        const double d = t + x;
        return g(t) / (d * d);
    };
    const oracle::QuadResult q = oracle::quad_panels(f, points, kIntegralTol);
    const double r = 1.0 / (T + x);
    return {q.value, q.abs_err, mean * (r + kPi * r * r)};
}

double sin_squared(double t) {
    const double s = std::sin(t);
    return s * s;
}

double abs_sin(double t) { return std::fabs(std::sin(t)); }

}  // namespace

IntegralParts lemma_integral_sin2(double x) { return lemma_integral(x, sin_squared, 0.5); }
IntegralParts lemma_integral_abs_sin(double x) { return lemma_integral(x, abs_sin, 2.0 / kPi); }

std::array<BoundReport, 2> lemma_integral_check(double x) {
    const IntegralParts a = lemma_integral_sin2(x);
    const IntegralParts b = lemma_integral_abs_sin(x);
    const double lhs_a = a.quad + a.tail;
    const double lhs_b = b.quad + b.tail;
    const double rhs_a = 1.0 / (2.0 * x);
    const double rhs_b = 2.0 / (kPi * x);
    return {make_report("lemma_integral_sin2", 0.0, x, lhs_a, rhs_a, a.quad_err + rounding(lhs_a, rhs_a), true),
            make_report("lemma_integral_abs_sin", 0.0, x, lhs_b, rhs_b, b.quad_err + rounding(lhs_b, rhs_b),
                        true)};
}

double envelope_sup(const Order& order, double x_hi, int points) {
    if (order.low()) throw DomainError("envelope_sup: requires nu > 1/2");
    if (points < 2) throw PreconditionViolation("envelope_sup: need at least two points");
    const double lo = order.sqrt_mu() + 0.1;
    if (!(x_hi > lo)) throw PreconditionViolation("envelope_sup: x_hi must exceed sqrt(mu) + 0.1");
    double best = 0.0;
    for (int i = 0; i < points; ++i) {
        const double x = lo + (x_hi - lo) * static_cast<double>(i) / (points - 1);
        best = std::max(best, bound_envelope(order, x).lhs);
    }
    return best;
}

std::string_view bound_name(Bound b) noexcept { return kBoundNames[static_cast<std::size_t>(b)]; }

std::optional<Bound> parse_bound(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kBoundNames.size(); ++i) {
        if (kBoundNames[i] == name) return static_cast<Bound>(i);
    }
    return std::nullopt;
}

bool bound_applicable(Bound b, const Order& order, double x) noexcept {
    const double nu = order.nu();
    const bool in_cap = x > 0.0 && x <= oracle::kMaxBesselArg;
    switch (b) {
        case Bound::watson: return nu >= -0.5 && in_cap;
        case Bound::envelope: return nu >= -0.5 && in_cap && (order.low() || x != order.sqrt_mu());
        case Bound::derivative: return nu >= 0.5 && in_cap && x >= derivative_threshold(nu);
        case Bound::monotonic: return nu > 0.0 && x > 0.0 && x <= 1.0 && x * nu <= oracle::kMaxBesselArg;
        case Bound::log_derivative: return nu > -0.5 && x > 0.0 && x <= nu + 0.5;
        case Bound::airy_envelope: return x >= 0.0 && x <= oracle::kMaxAiryArg;
        case Bound::wronskian_kernel: return nu >= 0.0 && nu <= 0.5 && in_cap;
        case Bound::leftmost_max: return nu >= 5.0 / 3.0;
        case Bound::near_first_zero: return nu >= 0.5 && nu <= 150.0;
        case Bound::lemma_integral: return x > 0.0 && x < kIntegralReach;
    }
    return false;
}

std::vector<BoundReport> evaluate_bound(Bound b, const Order& order, double x, std::optional<double> x2) {
    switch (b) {
        case Bound::watson: return {bound_watson(order, x)};
        case Bound::envelope: return {bound_envelope(order, x)};
        case Bound::derivative: {
            const auto r = bound_derivative(order, x);
            return {r.begin(), r.end()};
        }
        case Bound::monotonic: {
            const auto r = bound_monotonic(order, x);
            return {r.begin(), r.end()};
        }
        case Bound::log_derivative: {
            const auto r = bound_log_derivative(order, x);
            return {r.begin(), r.end()};
        }
        case Bound::airy_envelope: return {bound_airy_envelope(x)};
        case Bound::wronskian_kernel: return {bound_wronskian_kernel(order.nu(), x, x2.value_or(x))};
        case Bound::leftmost_max: return {leftmost_max_check(order)};
        case Bound::near_first_zero: {
            const auto r = bound_near_first_zero(order);
            return {r.begin(), r.end()};
        }
        case Bound::lemma_integral: {
            const auto r = lemma_integral_check(x);
            return {r.begin(), r.end()};
        }
    }
    throw PreconditionViolation("evaluate_bound: unknown bound");
}

}  // namespace besselcert::bounds
