// SPDX-License-Identifier: Apache-2.0
//
// Closed-form approximations of J_ν(x) and Ai(−x), each paired with a
// certified error half-width: |truth − value| ≤ half_width.
#pragma once

#include <optional>
#include <string_view>

#include "besselcert/order.hpp"

namespace besselcert::approx {

enum class Method {
    classic,
    olver,
    sharp_low,
    sharp_high,
    simplified,
    transition,
    airy_classic,
    airy_sharp,
    airy_simplified,
};

enum class Region { oscillatory, transition, monotonicity };

std::string_view method_name(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;
std::string_view region_name(Region r) noexcept;

struct ApproxValue {
    double value = 0.0;
    double half_width = 0.0;
    Method method = Method::classic;
    Region region = Region::oscillatory;
    double x = 0.0;  // evaluation point; for transition() this is ν + ν^{1/3}z
};

/// An enclosure of a real number. One-sided θ² terms give brackets where one
/// endpoint is the main term itself.
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    bool lo_closed = true;
    bool hi_closed = true;

    bool contains(double v) const noexcept {
        const bool above = lo_closed ? v >= lo : v > lo;
        const bool below = hi_closed ? v <= hi : v < hi;
        return above && below;
    }
};

struct PhaseValue {
    double B = 0.0;  // phase
    double b = 0.0;  // dB/dx
};

/// √(2/(πx))·cos(x − ω_ν) with the c·μ·x^{−3/2} error.
ApproxValue classic_oscillatory(const Order& order, double x);

/// Coefficient a_i(ν) = (1/2−ν)_i (1/2+ν)_i / (2^i i!).
double olver_coefficient(double nu, int i);

/// Sign pattern of the two sums in the Hankel-type expansion. `printed`
/// takes every term with a plus sign inside both sums; `hankel` alternates
/// them as σ_{2i} = (−1)^i, σ_{2i+1} = (−1)^{i+1}.
enum class OlverSigns { printed, hankel };

/// The convention the library uses. It is the one calibrate_olver_signs()
/// selects; a unit test keeps the two in agreement.
inline constexpr OlverSigns kOlverSigns = OlverSigns::hankel;

/// Picks the convention that certifies against the oracle at ν = 0, x = 20,
/// l1 = l2 = 3. Throws NonConvergence if neither or both do.
OlverSigns calibrate_olver_signs();

ApproxValue olver_expansion(const Order& order, double x, int l1, int l2, OlverSigns signs = kOlverSigns);

/// Smallest admissible l1 and l2 for order ν.
int olver_min_l1(double nu);
int olver_min_l2(double nu);

PhaseValue phase_B(const Order& order, double x);

/// Low branch for |ν| ≤ 1/2, high branch for ν > 1/2 and x > max(μ, √μ).
ApproxValue sharper_oscillatory(const Order& order, double x);

ApproxValue simplified_oscillatory(const Order& order, double x);

/// J_ν at x = ν + ν^{1/3}z from Ai(−2^{1/3}z); requires ν ≥ 1/2 and z ≥ 0.
ApproxValue transition(const Order& order, double z);

enum class AiryMode { classic, sharp, simplified };
std::optional<AiryMode> parse_airy_mode(std::string_view name) noexcept;

ApproxValue airy_approx(double x, AiryMode mode);

/// Narrowest applicable Bessel approximation; Olver is tried with the
/// smallest admissible l1, l2.
ApproxValue best_approx(const Order& order, double x);

/// Dispatch by method tag, for the grid engine and CLI. Olver uses the
/// smallest admissible l1, l2 unless given; airy methods ignore `order`.
ApproxValue evaluate(Method m, const Order& order, double x, std::optional<int> l1 = {},
                     std::optional<int> l2 = {});

/// Whether `evaluate(m, order, x)` is inside the method's domain.
bool applicable(Method m, const Order& order, double x) noexcept;

/// J_ν(ν) bracket (2^{1/3}/(3^{2/3}Γ(2/3)(ν+α)^{1/3}), 2^{1/3}/(3^{2/3}Γ(2/3)ν^{1/3})]
/// with α = 0.09434980, for ν > 0.
Bracket jnunu_bracket(double nu);

inline constexpr double kJnunuAlpha = 0.09434980;

}  // namespace besselcert::approx
