// SPDX-License-Identifier: Apache-2.0
//
// Inequalities for J_ν and Ai(−x), each checked against oracle values.
// A strict inequality holds only when its margin exceeds the evaluation
// slack; a non-strict one holds when the margin is at least −slack.
#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "besselcert/order.hpp"

namespace besselcert::bounds {

struct BoundReport {
    std::string name;
    double nu = 0.0;
    double x = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // rhs − lhs
    double slack = 0.0;   // oracle error plus rounding allowance
    bool strict = true;
    bool holds = false;
};

BoundReport make_report(std::string name, double nu, double x, double lhs, double rhs, double slack,
                        bool strict);

/// J_ν(x) ≤ |x|^ν / (2^ν Γ(ν+1)).
BoundReport bound_watson(const Order& order, double x);

/// |ν| ≤ 1/2: √(πx/2)|J_ν| ≤ 1. ν > 1/2: √(π/2)|x² − μ|^{1/4}|J_ν| < 1.
BoundReport bound_envelope(const Order& order, double x);

/// Smallest x admitted by the derivative bound: ν + ((√7 − 1)/2^{2/3})ν^{1/3}.
double derivative_threshold(double nu);

/// ψ(x) = 4(x²−ν²)³ − 3x⁴ − 10x²ν² + ν⁴, clamped to 0 within rounding.
double derivative_psi(double nu, double x);

/// [0] x ψ^{1/4}/(x²−ν²)·|J′_ν| < 2/√π; [1] ψ > 0 (≥ 0 at the threshold itself).
std::array<BoundReport, 2> bound_derivative(const Order& order, double x);

/// x = tν: [0] J_ν(tν) ≤ J_ν(ν) t^ν e^{ν²(1−t²)/(2ν+1)};
/// [1] J_ν(tν) < 2^{1/3}x^ν e^{(ν²−x²)/(2ν+1)} / (3^{2/3}Γ(2/3)ν^{ν+1/3}).
std::array<BoundReport, 2> bound_monotonic(const Order& order, double t);

/// For 0 < x ≤ ν + 1/2 and t = 𝒥′_ν/𝒥_ν with 𝒥_ν = x^{−ν}J_ν:
/// [0] t ≥ (√((2ν+1)²−4x²) − 2ν − 1)/(2x); [1] that middle term ≥ −2x/(2ν+1).
std::array<BoundReport, 2> bound_log_derivative(const Order& order, double x);

/// c = 15^{1/3}·2^{−4/3}.
inline const double kAiryShift = std::cbrt(15.0) / (2.0 * std::cbrt(2.0));

/// (x + c)^{1/4} Ai(−x) < 9/14.
BoundReport bound_airy_envelope(double x);

struct LocalMax {
    double x = 0.0;
    double value = 0.0;
};

/// Local maxima of (x + c)^{1/4} Ai(−x) on [lo, hi], located by sign changes
/// of the derivative on a uniform step and refined to 1e−11.
std::vector<LocalMax> airy_envelope_maxima(double lo, double hi, double step = 1e-2);

/// One report per local maximum: 1/√π < value < 9/14, emitted as two reports.
std::vector<BoundReport> airy_envelope_maxima_check(double lo = 0.0, double hi = 60.0, double step = 1e-2);

/// Signed kernel √(x₁x₂)(J_{−ν}(x₁)J_ν(x₂) − J_{−ν}(x₂)J_ν(x₁)).
double wronskian_kernel(double nu, double x1, double x2);

/// |kernel| ≤ (2/π) sin πν for 0 ≤ ν ≤ 1/2.
BoundReport bound_wronskian_kernel(double nu, double x1, double x2);

enum class SoninVariant { szego, envelope, airy };

std::string_view sonin_variant_name(SoninVariant v) noexcept;

/// +1 where S is non-decreasing in x (szego, envelope: envelope maxima rise
/// towards their limit), −1 where it is non-increasing (airy: the maxima of
/// (x + c)^{1/4}Ai(−x) fall towards 1/√π).
int sonin_direction(SoninVariant v) noexcept;

struct SoninSample {
    double x = 0.0;
    double S = 0.0;
    SoninVariant variant = SoninVariant::szego;
};

/// szego: |ν| ≤ 1/2, x > 0. envelope: ν > 1/2, x > √μ. airy: x ≥ 0, order ignored.
SoninSample sonin_eval(SoninVariant variant, const Order& order, double x);

/// First positive local maximum of 𝓗_ν(x) = |x² − μ|^{1/4}J_ν(x).
double leftmost_max(const Order& order, double step = 1e-3);

/// ν√(1 − (2ν)^{−2/3}) < ξ, for ν ≥ 5/3.
BoundReport leftmost_max_check(const Order& order);

/// γ = 2^{−1/3}a₁, from the refined first Airy zero.
double airy_gamma();

/// [0] J_ν(ν + γν^{1/3}) < 7/(6ν); [1] that value is positive.
std::array<BoundReport, 2> bound_near_first_zero(const Order& order);

struct IntegralParts {
    double quad = 0.0;       // ∫₀^T
    double quad_err = 0.0;   // quadrature error estimate
    double tail = 0.0;       // upper bound on ∫_T^∞ from the period mean of the numerator
};

/// ∫₀^∞ sin²t/(t+x)² dt and ∫₀^∞ |sin t|/(t+x)² dt truncated at the first
/// multiple of π with T + x ≥ 10⁶.
IntegralParts lemma_integral_sin2(double x);
IntegralParts lemma_integral_abs_sin(double x);

/// [0] ∫ sin²t/(t+x)² < 1/(2x); [1] ∫ |sin t|/(t+x)² < 2/(πx).
/// lhs is quadrature plus the tail bound, an upper bound for the integral.
std::array<BoundReport, 2> lemma_integral_check(double x);

/// sup over a uniform grid on (√μ + 0.1, x_hi] of √(π/2)(x² − μ)^{1/4}|J_ν(x)|.
double envelope_sup(const Order& order, double x_hi = 150.0, int points = 3000);

enum class Bound {
    watson,
    envelope,
    derivative,
    monotonic,
    log_derivative,
    airy_envelope,
    wronskian_kernel,
    leftmost_max,
    near_first_zero,
    lemma_integral,
};

std::string_view bound_name(Bound b) noexcept;
std::optional<Bound> parse_bound(std::string_view name) noexcept;

/// Whether evaluate_bound(b, order, x) lies in the bound's domain. For
/// monotonic, x plays the role of t; wronskian_kernel takes x as x₁ and
/// `x2` as x₂ (default x₂ = x₁); leftmost_max and near_first_zero ignore x.
bool bound_applicable(Bound b, const Order& order, double x) noexcept;

std::vector<BoundReport> evaluate_bound(Bound b, const Order& order, double x,
                                        std::optional<double> x2 = std::nullopt);

}  // namespace besselcert::bounds
