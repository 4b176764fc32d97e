// SPDX-License-Identifier: Apache-2.0
//
// Ground-truth evaluation. J_ν(x) is summed from its power series in
// scaled-integer arithmetic wide enough that the alternating-series
// cancellation never reaches the leading 40 digits; the accumulated
// truncation error is tracked term by term and returned with the value.
#pragma once

#include <functional>
#include <span>

#include "besselcert/order.hpp"
#include "besselcert/quad_float.hpp"

namespace besselcert::oracle {

struct PrecisionCtx {
    int working_digits = 20;       // lower bound; the series raises it as x grows
    double target_rel_err = 1e-14; // relative to max(|value|, 1e-10)
    int max_digits = 1200;         // beyond this the call fails with PrecisionInfeasible
};

struct EvalResult {
    double value = 0.0;
    double abs_err_estimate = 0.0;
};

/// Same as EvalResult but kept in quad precision, for callers that combine
/// several oracle values before rounding.
struct WideResult {
    qreal value = 0;
    qreal abs_err = 0;
};

inline constexpr double kMaxBesselArg = 200.0;
inline constexpr double kMaxAiryArg = 120.0;

qreal gamma_q(qreal z);
double gamma(double z);

WideResult bessel_j_wide(const Order& order, double x, const PrecisionCtx& ctx = {});
EvalResult bessel_j_ref(const Order& order, double x, const PrecisionCtx& ctx = {});

/// J′_ν = (J_{ν−1} − J_{ν+1})/2, for ν ≥ 1/2.
EvalResult bessel_j_prime_ref(const Order& order, double x, const PrecisionCtx& ctx = {});

/// J′_ν = (ν/x)J_ν − J_{ν+1}; valid on the whole oracle domain ν ≥ −1/2.
EvalResult bessel_j_prime_any(const Order& order, double x, const PrecisionCtx& ctx = {});

WideResult airy_ai_neg_wide(double x, const PrecisionCtx& ctx = {});
EvalResult airy_ai_neg_ref(double x, const PrecisionCtx& ctx = {});

/// d/dx Ai(−x) = −Ai′(−x), from the derivatives of the J_{±1/3} representation.
EvalResult airy_ai_neg_prime_ref(double x, const PrecisionCtx& ctx = {});

/// Ai(−x) and d/dx Ai(−x) from one set of series evaluations.
struct AiryPair {
    EvalResult value;
    EvalResult derivative;
};
AiryPair airy_ai_neg_both(double x, const PrecisionCtx& ctx = {});

double refine_root(const std::function<double(double)>& f, double lo, double hi, double tol);

struct QuadResult {
    double value = 0.0;
    double abs_err = 0.0;
};

/// Adaptive Gauss–Kronrod (7/15) on [a, b] with absolute tolerance `tol`.
QuadResult quad_detail(const std::function<double(double)>& f, double a, double b, double tol,
                       int max_subintervals = 200000);
double quad(const std::function<double(double)>& f, double a, double b, double tol);

/// Integrates over consecutive panels [p_i, p_{i+1}]; the tolerance is split
/// evenly. Used where the integrand has kinks at known points.
QuadResult quad_panels(const std::function<double(double)>& f, std::span<const double> points,
                       double tol);

}  // namespace besselcert::oracle
