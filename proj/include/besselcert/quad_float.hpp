// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace besselcert {

// IEEE binary128 via GCC's libquadmath; about 34 significant digits.
using qreal = __float128;

qreal q_from_string(const char* s);
std::string q_to_string(qreal v, int digits = 36);

qreal q_abs(qreal v);
qreal q_sqrt(qreal v);
qreal q_log(qreal v);
qreal q_exp(qreal v);
qreal q_pow(qreal a, qreal b);
qreal q_cbrt(qreal v);
qreal q_ldexp(qreal v, int e);
qreal q_pi();

}  // namespace besselcert
