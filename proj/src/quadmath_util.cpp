// SPDX-License-Identifier: Apache-2.0
#include <array>
#include <charconv>
#include <cmath>

#include "besselcert/order.hpp"
#include "besselcert/quad_float.hpp"

extern "C" {
#include <quadmath.h>
}

namespace besselcert {

qreal q_from_string(const char* s) { return strtoflt128(s, nullptr); }

std::string q_to_string(qreal v, int digits) {
    std::array<char, 128> buf{};
    quadmath_snprintf(buf.data(), buf.size(), "%.*Qg", digits, v);
    return std::string(buf.data());
}

qreal q_abs(qreal v) { return fabsq(v); }
qreal q_sqrt(qreal v) { return sqrtq(v); }
qreal q_log(qreal v) { return logq(v); }
qreal q_exp(qreal v) { return expq(v); }
qreal q_pow(qreal a, qreal b) { return powq(a, b); }
qreal q_cbrt(qreal v) { return cbrtq(v); }
qreal q_ldexp(qreal v, int e) { return ldexpq(v, e); }
qreal q_pi() {
    static const qreal pi = strtoflt128("3.14159265358979323846264338327950288419716939937510582", nullptr);
    return pi;
}

std::string format_real(double v) {
    if (v == 0.0) return "0";
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

}  // namespace besselcert
