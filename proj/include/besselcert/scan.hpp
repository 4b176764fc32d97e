// SPDX-License-Identifier: Apache-2.0
//
// Grid sweeps that compare approximations and bounds with the oracle, and the
// sup experiment for x^{3/2}|J_ν(x) − √(2/(πx)) cos(x − ω_ν)|.
#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "besselcert/approx.hpp"
#include "besselcert/bounds.hpp"
#include "besselcert/order.hpp"

namespace besselcert::scan {

enum class Spacing { linear, log };

struct GridSpec {
    std::vector<double> nu_values;
    double x_lo = 0.1;
    double x_hi = 150.0;
    int x_points = 200;
    Spacing spacing = Spacing::log;
};

/// The x (or z, or t) values of a grid, endpoints included.
std::vector<double> grid_points(const GridSpec& grid);

struct Violation {
    std::string tag;
    double nu = 0.0;
    double x = 0.0;
    double excess = 0.0;  // for approximations |error| − half_width − slack; for bounds −margin
};

/// One CSV row. For approximations `oracle` is the reference value and
/// `ratio` = max(0, |value − oracle| − slack)/half_width. For bounds
/// `value`/`oracle` hold lhs/rhs, `half_width` the slack, and `ratio` is empty.
struct Row {
    std::string subject;
    double nu = 0.0;
    double x = 0.0;
    double value = 0.0;
    double oracle = 0.0;
    double half_width = 0.0;
    std::optional<double> ratio;
    bool holds = true;
};

struct ScanReport {
    std::size_t total = 0;    // admissible points evaluated
    std::size_t skipped = 0;  // grid points outside the method's domain
    std::vector<Violation> violations;
    double max_ratio = 0.0;
    double max_ratio_nu = 0.0;
    double max_ratio_x = 0.0;
    std::vector<Row> rows;
};

/// Absolute slack added to the oracle's own error estimate when certifying an
/// approximation; it covers the double-precision evaluation of the closed
/// forms, whose phases reach a few hundred radians.
inline constexpr double kEvalSlack = 1e-11;

/// Ratio of an observed error to a certified width after removing `slack`.
/// Zero width with an error inside the slack gives 0; outside it, infinity.
double certified_ratio(double error, double half_width, double slack);

/// For `transition` the grid variable is z (x = ν + ν^{1/3}z); for the Airy
/// methods ν is ignored. Olver uses l1, l2 when given, else the smallest
/// admissible pair. Throws ScanFailure if no grid point is admissible.
ScanReport verify_approx_grid(approx::Method method, const GridSpec& grid, std::optional<int> l1 = {},
                              std::optional<int> l2 = {});

/// For wronskian_kernel every (x₁, x₂) pair of grid points is checked; for
/// monotonic the grid variable is t; leftmost_max and near_first_zero are
/// evaluated once per ν.
ScanReport verify_bounds_grid(bounds::Bound bound, const GridSpec& grid);

struct SupResult {
    double nu = 0.0;
    double sup_value = 0.0;
    double argmax_x = 0.0;
    double normalized = 0.0;  // sup_value/μ; NaN when μ = 0
};

/// x^{3/2}|J_ν(x) − √(2/(πx)) cos(x − ω_ν)| at one point.
double olenko_remainder(const Order& order, double x);

/// Coarse scan on (0, x_max] followed by golden-section polish around the five
/// largest coarse local maxima.
SupResult olenko_sup(const Order& order, double x_max = 150.0, int coarse_points = 3000);

inline constexpr const char* kCsvHeader = "subject,nu,x,value,oracle,half_width,ratio,holds";

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const Row& row);

/// A row fails if its ratio exceeds 1 or it does not hold.
bool row_fails(const Row& row) noexcept;

Row approx_row(const approx::ApproxValue& a, double nu, double oracle_value, double oracle_err);
Row bound_row(const bounds::BoundReport& r);

}  // namespace besselcert::scan
