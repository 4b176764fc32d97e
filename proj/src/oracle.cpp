// SPDX-License-Identifier: Apache-2.0
#include "besselcert/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "besselcert/bignat.hpp"

namespace besselcert::oracle {

namespace {

using detail::BigNat;
using detail::u128;

// Even Bernoulli numbers B_2 … B_30 as exact fractions.
struct Frac {
    const char* num;
    const char* den;
};
constexpr std::array<Frac, 15> kBernoulli{{
    {"1", "6"},
    {"-1", "30"},
    {"1", "42"},
    {"-1", "30"},
    {"5", "66"},
    {"-691", "2730"},
    {"7", "6"},
    {"-3617", "510"},
    {"43867", "798"},
    {"-174611", "330"},
    {"854513", "138"},
    {"-236364091", "2730"},
    {"8553103", "6"},
    {"-23749461029", "870"},
    {"8615841276005", "14322"},
}};

// ln Γ(w) for w ≥ 40 from the Stirling series; truncation below 1e-40.
qreal stirling_log_gamma(qreal w) {
    const qreal half_log_2pi = q_log(2 * q_pi()) / 2;
    qreal acc = (w - qreal(0.5)) * q_log(w) - w + half_log_2pi;
    const qreal w2 = w * w;
    qreal wpow = w;  // w^(2n−1)
    for (std::size_t i = 0; i < kBernoulli.size(); ++i) {
        const int n = static_cast<int>(i) + 1;
        const qreal b = q_from_string(kBernoulli[i].num) / q_from_string(kBernoulli[i].den);
        acc += b / (qreal(2 * n) * qreal(2 * n - 1) * wpow);
        wpow *= w2;
    }
    return acc;
}

// ν = num / (den · 2^shift), so that j + 1 + ν = ((j+1)·den·2^shift + num) / (den·2^shift).
struct SeriesOrder {
    __int128 num = 0;
    std::uint64_t den = 1;
    int shift = 0;
    qreal value = 0;
};

SeriesOrder order_from_double(double v) {
    SeriesOrder out;
    out.value = static_cast<qreal>(v);
    if (v == 0.0) return out;
    int e = 0;
    const double f = std::frexp(v, &e);  // v = f · 2^e, 0.5 ≤ |f| < 1
    long long m = static_cast<long long>(std::ldexp(f, 53));
    int shift = 53 - e;
    while (shift > 0 && (m % 2 == 0)) {
        m /= 2;
        --shift;
    }
    out.num = m;
    if (shift < 0) {
        out.num <<= -shift;
        shift = 0;
    }
    out.shift = shift;
    return out;
}

SeriesOrder order_thirds(int thirds) {
    SeriesOrder out;
    out.num = thirds;
    out.den = 3;
    out.value = qreal(thirds) / 3;
    return out;
}

// The series variable x²/4 as words · 2^shift / den.
struct SeriesArg {
    std::array<std::uint64_t, 3> words{};
    int word_count = 0;
    int shift = 0;
    std::uint64_t den = 1;
    double quarter_square = 0.0;
    qreal half_arg = 0;  // x/2, for the (x/2)^ν prefactor
};

struct DyadicArg {
    std::uint64_t mantissa = 0;  // odd
    int exponent = 0;            // x = mantissa · 2^exponent
};

DyadicArg dyadic_positive(double x) {
    int e = 0;
    const double f = std::frexp(x, &e);
    std::uint64_t m = static_cast<std::uint64_t>(std::ldexp(f, 53));
    int exponent = e - 53;
    while ((m & 1u) == 0) {
        m >>= 1;
        ++exponent;
    }
    return {m, exponent};
}

// J_ν(x): x²/4 = M² · 2^(2e−2).
SeriesArg plain_arg(double x) {
    const DyadicArg d = dyadic_positive(x);
    SeriesArg a;
    a.words = {d.mantissa, d.mantissa, 0};
    a.word_count = 2;
    a.shift = 2 * d.exponent - 2;
    a.quarter_square = x * x / 4.0;
    a.half_arg = static_cast<qreal>(x) / 2;
    return a;
}

// J_ν(ζ) with ζ = 2x^{3/2}/3: ζ²/4 = x³/9 = M³ · 2^(3e) / 9, exact for any double x.
SeriesArg airy_arg(double x) {
    const DyadicArg d = dyadic_positive(x);
    SeriesArg a;
    a.words = {d.mantissa, d.mantissa, d.mantissa};
    a.word_count = 3;
    a.shift = 3 * d.exponent;
    a.den = 9;
    a.quarter_square = x * x * x / 9.0;
    const qreal xq = static_cast<qreal>(x);
    a.half_arg = xq * q_sqrt(xq) / 3;
    return a;
}

struct SeriesSum {
    qreal value;    // Σ (−1)^j (x²/4)^j / (j! (ν+1)_j)
    qreal abs_err;  // tracked truncation error plus tail
};

// Sums the normalized series at `bits` fractional bits.
SeriesSum sum_series(const SeriesOrder& nu, const SeriesArg& arg, int bits) {
    const double nu_d = static_cast<double>(nu.value);
    const __int128 order_den = static_cast<__int128>(nu.den) << nu.shift;

    BigNat term = BigNat::power_of_two(bits);
    BigNat pos = term;
    BigNat neg;

    // Error of each computed term in units of 2^−bits: the shift and the
    // division each truncate by less than one unit.
    // Kept in quad: near x = 120 on the Airy path it exceeds the double range.
    qreal term_err = 0;
    qreal total_err = 0;
    constexpr double kRounding = 3.0;

    for (long j = 0;; ++j) {
        const __int128 d = static_cast<__int128>(j + 1) * order_den + nu.num;
        if (d <= 0) throw DomainError("bessel series: order gives a nonpositive Pochhammer factor");
        const u128 divisor = static_cast<u128>(d) * static_cast<u128>(j + 1) * arg.den;
        if ((divisor >> 96) != 0) {
            throw PrecisionInfeasible("bessel series: order mantissa too long for the divisor width");
        }
        for (int w = 0; w < arg.word_count; ++w) term.mul_small(arg.words[static_cast<std::size_t>(w)]);
        if (nu.den != 1) term.mul_small(nu.den);
        term.shift_left(arg.shift + nu.shift);
        term.div_small(divisor);

        const double ratio =
            arg.quarter_square / (static_cast<double>(j + 1) * (static_cast<double>(j) + 1.0 + nu_d));
        term_err = static_cast<qreal>(ratio * (1.0 + 1e-14)) * term_err + kRounding;
        total_err += term_err;

        if (j % 2 == 0) {
            neg.add(term);
        } else {
            pos.add(term);
        }

        const double next_ratio =
            arg.quarter_square / (static_cast<double>(j + 2) * (static_cast<double>(j) + 2.0 + nu_d));
        if (next_ratio < 0.5 && term.bit_length() <= 1) {
            // Remaining terms shrink geometrically by at least next_ratio.
            const qreal last = (term.is_zero() ? 0 : 1) + term_err;
            total_err += last * static_cast<qreal>(next_ratio / (1.0 - next_ratio));
            break;
        }
        if (j > 200000) throw NonConvergence("bessel series: term budget exhausted");
    }

    qreal value = 0;
    if (compare(pos, neg) >= 0) {
        pos.sub(neg);
        value = pos.to_quad(bits);
    } else {
        neg.sub(pos);
        value = -neg.to_quad(bits);
    }
    const qreal err = q_ldexp(total_err, -bits) + q_abs(value) * q_ldexp(1, -110);
    return {value, err};
}

int digits_to_bits(int digits) { return static_cast<int>(std::ceil(digits * 3.3219280948873623)) + 8; }

void check_ctx(const PrecisionCtx& ctx) {
    if (ctx.working_digits < 20) throw PreconditionViolation("PrecisionCtx: working_digits must be >= 20");
    if (!(ctx.target_rel_err >= 1e-14)) throw PreconditionViolation("PrecisionCtx: target_rel_err must be >= 1e-14");
}

// Argument magnitude for the precision rule: the series behaves like e^x at x.
WideResult bessel_series(const SeriesOrder& nu, const SeriesArg& arg, double magnitude, const PrecisionCtx& ctx) {
    check_ctx(ctx);
    if (nu.value + 1 >= 64) throw DomainError("bessel_j_ref: order too large for the gamma base case");
    int digits = std::max(ctx.working_digits, static_cast<int>(std::ceil(0.45 * magnitude)) + 40);
    const qreal scale = q_pow(arg.half_arg, nu.value) / gamma_q(nu.value + 1);
    for (;;) {
        if (digits > ctx.max_digits) {
            throw PrecisionInfeasible("bessel_j_ref: needs more than " + std::to_string(ctx.max_digits) +
                                      " working digits");
        }
        const SeriesSum s = sum_series(nu, arg, digits_to_bits(digits));
        WideResult out;
        out.value = s.value * scale;
        // powq and the gamma quotient each contribute a few units of 2^−112.
        out.abs_err = s.abs_err * q_abs(scale) + q_abs(out.value) * q_ldexp(1, -104);
            const double tol = ctx.target_rel_err * std::max(std::fabs(static_cast<double>(out.value)), 1e-10);
        if (static_cast<double>(out.abs_err) <= tol * 1e-3) return out;
        digits *= 2;
    }
}

EvalResult round_result(const WideResult& w) {
    EvalResult r;
    r.value = static_cast<double>(w.value);
    r.abs_err_estimate = static_cast<double>(w.abs_err + q_abs(w.value - static_cast<qreal>(r.value)));
    // Rounding the error itself to double must not shrink it.
    r.abs_err_estimate = std::nextafter(r.abs_err_estimate, std::numeric_limits<double>::infinity());
    return r;
}

// Gauss–Kronrod 7/15 nodes and weights.
constexpr std::array<double, 8> kXgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double resk = fc * kWgk[7];
    double resg = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    const double value = resk * half;
    const double err = std::fabs((resk - resg) * half);
    return {a, b, value, err};
}

}  // namespace

qreal gamma_q(qreal z) {
    if (!(z > 0)) throw DomainError("gamma: argument must be positive");
    if (!(z < 64)) throw DomainError("gamma: argument must be below 64");
    // Shift into the Stirling range: Γ(z) = Γ(z+k) / (z (z+1) … (z+k−1)).
    const int k = std::max(0, 40 - static_cast<int>(z));
    qreal denom = 1;
    for (int i = 0; i < k; ++i) denom *= z + i;
    return q_exp(stirling_log_gamma(z + k)) / denom;
}

double gamma(double z) { return static_cast<double>(gamma_q(static_cast<qreal>(z))); }

WideResult bessel_j_wide(const Order& order, double x, const PrecisionCtx& ctx) {
    if (!(x > 0.0)) throw DomainError("bessel_j_ref: x must be positive");
    if (x > kMaxBesselArg) throw DomainError("bessel_j_ref: x beyond oracle cap 200");
    if (!(order.nu() >= -0.5)) throw DomainError("bessel_j_ref: order below -1/2");
    return bessel_series(order_from_double(order.nu()), plain_arg(x), x, ctx);
}

EvalResult bessel_j_ref(const Order& order, double x, const PrecisionCtx& ctx) {
    return round_result(bessel_j_wide(order, x, ctx));
}

EvalResult bessel_j_prime_ref(const Order& order, double x, const PrecisionCtx& ctx) {
    if (!(order.nu() >= 0.5)) throw DomainError("bessel_j_prime_ref: order must be >= 1/2");
    const WideResult lo = bessel_j_wide(Order(order.nu() - 1.0), x, ctx);
    const WideResult hi = bessel_j_wide(Order(order.nu() + 1.0), x, ctx);
    WideResult w;
    w.value = (lo.value - hi.value) / 2;
    w.abs_err = (lo.abs_err + hi.abs_err) / 2 + q_abs(w.value) * q_ldexp(1, -110);
    return round_result(w);
}

EvalResult bessel_j_prime_any(const Order& order, double x, const PrecisionCtx& ctx) {
    const WideResult j = bessel_j_wide(order, x, ctx);
    const WideResult j1 = bessel_j_wide(Order(order.nu() + 1.0), x, ctx);
    const qreal ratio = static_cast<qreal>(order.nu()) / static_cast<qreal>(x);
    WideResult w;
    w.value = ratio * j.value - j1.value;
    w.abs_err = q_abs(ratio) * j.abs_err + j1.abs_err +
                (q_abs(w.value) + q_abs(ratio * j.value)) * q_ldexp(1, -110);
    return round_result(w);
}

namespace {

// J_{−1/3}, J_{1/3} (and J_{2/3}, J_{4/3} for the derivative) at ζ = 2x^{3/2}/3,
// summed with the exact rational orders and the exact series variable x³/9.
struct AiryParts {
    qreal zeta = 0;
    qreal sqrt_x = 0;
    WideResult jm, jp, jm_next, jp_next;
};

AiryParts airy_parts(double x, const PrecisionCtx& ctx, bool with_derivative) {
    if (!(x > 0.0)) throw DomainError("airy_ai_neg_ref: x must be positive");
    if (x > kMaxAiryArg) throw DomainError("airy_ai_neg_ref: x beyond oracle cap 120");
    AiryParts p;
    const SeriesArg arg = airy_arg(x);
    p.sqrt_x = q_sqrt(static_cast<qreal>(x));
    p.zeta = 2 * arg.half_arg;
    const double magnitude = static_cast<double>(p.zeta);
    p.jm = bessel_series(order_thirds(-1), arg, magnitude, ctx);
    p.jp = bessel_series(order_thirds(1), arg, magnitude, ctx);
    if (with_derivative) {
        p.jm_next = bessel_series(order_thirds(2), arg, magnitude, ctx);
        p.jp_next = bessel_series(order_thirds(4), arg, magnitude, ctx);
    }
    return p;
}

WideResult airy_value(const AiryParts& p) {
    WideResult w;
    w.value = p.sqrt_x / 3 * (p.jm.value + p.jp.value);
    w.abs_err = p.sqrt_x / 3 * (p.jm.abs_err + p.jp.abs_err) +
                p.sqrt_x / 3 * (q_abs(p.jm.value) + q_abs(p.jp.value)) * q_ldexp(1, -108);
    return w;
}

// dζ/dx = √x and J′_ν(ζ) = (ν/ζ)J_ν(ζ) − J_{ν+1}(ζ).
WideResult airy_derivative(const AiryParts& p, double x) {
    const qreal third = qreal(1) / 3;
    const qreal djm = (-third / p.zeta) * p.jm.value - p.jm_next.value;
    const qreal djp = (third / p.zeta) * p.jp.value - p.jp_next.value;
    const qreal xq = static_cast<qreal>(x);
    WideResult w;
    w.value = (p.jm.value + p.jp.value) / (6 * p.sqrt_x) + xq / 3 * (djm + djp);
    const qreal jerr = p.jm.abs_err + p.jp.abs_err;
    const qreal derr = (third / p.zeta) * jerr + p.jm_next.abs_err + p.jp_next.abs_err;
    const qreal scale = (q_abs(p.jm.value) + q_abs(p.jp.value)) / (6 * p.sqrt_x) +
                        xq / 3 * (q_abs(djm) + q_abs(djp) + q_abs(p.jm_next.value) + q_abs(p.jp_next.value));
    w.abs_err = jerr / (6 * p.sqrt_x) + xq / 3 * derr + scale * q_ldexp(1, -106);
    return w;
}

}  // namespace

WideResult airy_ai_neg_wide(double x, const PrecisionCtx& ctx) { return airy_value(airy_parts(x, ctx, false)); }

EvalResult airy_ai_neg_ref(double x, const PrecisionCtx& ctx) { return round_result(airy_ai_neg_wide(x, ctx)); }

EvalResult airy_ai_neg_prime_ref(double x, const PrecisionCtx& ctx) {
    return round_result(airy_derivative(airy_parts(x, ctx, true), x));
}

AiryPair airy_ai_neg_both(double x, const PrecisionCtx& ctx) {
    const AiryParts p = airy_parts(x, ctx, true);
    return {round_result(airy_value(p)), round_result(airy_derivative(p, x))};
}

double refine_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(tol > 0.0)) throw PreconditionViolation("refine_root: tol must be positive");
    if (lo > hi) std::swap(lo, hi);
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) throw NoSignChange("refine_root: no sign change on bracket");

    constexpr int kBudget = 400;
    int it = 0;
    while (hi - lo > tol) {
        if (++it > kBudget) throw NonConvergence("refine_root: iteration budget exhausted");
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    // Secant polish inside the final bracket.
    const double s = lo - flo * (hi - lo) / (fhi - flo);
    if (s > lo && s < hi && std::isfinite(s)) return s;
    return lo + 0.5 * (hi - lo);
}

QuadResult quad_detail(const std::function<double(double)>& f, double a, double b, double tol,
                       int max_subintervals) {
    if (!(tol > 0.0)) throw PreconditionViolation("quad: tol must be positive");
    if (a == b) return {};
    const double sign = b < a ? -1.0 : 1.0;
    if (b < a) std::swap(a, b);

    std::priority_queue<Panel> heap;
    Panel first = gk15(f, a, b);
    double total = first.value;
    double err = first.err;
    heap.push(first);
    int count = 1;
    while (err > tol) {
        if (count >= max_subintervals) throw NonConvergence("quad: subinterval budget exhausted");
        const Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            throw NonConvergence("quad: interval collapsed below floating-point resolution");
        }
        const Panel left = gk15(f, worst.a, mid);
        const Panel right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        ++count;
    }
    // Re-sum to drop accumulated cancellation in the running totals.
    double sum = 0.0;
    double esum = 0.0;
    while (!heap.empty()) {
        sum += heap.top().value;
        esum += heap.top().err;
        heap.pop();
    }
    return {sign * sum, esum};
}

double quad(const std::function<double(double)>& f, double a, double b, double tol) {
    return quad_detail(f, a, b, tol).value;
}

QuadResult quad_panels(const std::function<double(double)>& f, std::span<const double> points, double tol) {
    if (points.size() < 2) throw PreconditionViolation("quad_panels: need at least two points");
    const double per_panel = tol / static_cast<double>(points.size() - 1);
    QuadResult out;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const QuadResult r = quad_detail(f, points[i], points[i + 1], per_panel);
        out.value += r.value;
        out.abs_err += r.abs_err;
    }
    return out;
}

}  // namespace besselcert::oracle
