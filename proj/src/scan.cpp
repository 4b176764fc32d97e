// SPDX-License-Identifier: Apache-2.0
#include "besselcert/scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "besselcert/oracle.hpp"

namespace besselcert::scan {

namespace {

bool is_airy(approx::Method m) {
    return m == approx::Method::airy_classic || m == approx::Method::airy_sharp ||
           m == approx::Method::airy_simplified;
}

void record(ScanReport& rep, const Row& row, const std::string& tag, double excess) {
    ++rep.total;
    if (row.ratio && *row.ratio > rep.max_ratio) {
        rep.max_ratio = *row.ratio;
        rep.max_ratio_nu = row.nu;
        rep.max_ratio_x = row.x;
    }
    if (!row.holds) rep.violations.push_back({tag, row.nu, row.x, excess});
    rep.rows.push_back(row);
}

void add_bound_reports(ScanReport& rep, const std::vector<bounds::BoundReport>& reports) {
    for (const auto& r : reports) record(rep, bound_row(r), r.name, -r.margin);
}

}  // namespace

std::vector<double> grid_points(const GridSpec& grid) {
    if (grid.x_points < 2) throw PreconditionViolation("GridSpec: x_points must be >= 2");
    if (!(grid.x_hi > grid.x_lo)) throw PreconditionViolation("GridSpec: x_hi must exceed x_lo");
    if (grid.spacing == Spacing::log && !(grid.x_lo > 0.0)) {
        throw PreconditionViolation("GridSpec: log spacing needs x_lo > 0");
    }
    std::vector<double> xs(static_cast<std::size_t>(grid.x_points));
    const double n = grid.x_points - 1;
    for (int i = 0; i < grid.x_points; ++i) {
        const double f = i / n;
        xs[static_cast<std::size_t>(i)] = grid.spacing == Spacing::linear
                                              ? grid.x_lo + (grid.x_hi - grid.x_lo) * f
                                              : grid.x_lo * std::pow(grid.x_hi / grid.x_lo, f);
    }
    // Pin the endpoints against rounding in pow.
    xs.front() = grid.x_lo;
    xs.back() = grid.x_hi;
    return xs;
}

double certified_ratio(double error, double half_width, double slack) {
    const double excess = std::max(0.0, error - slack);
    if (excess == 0.0) return 0.0;
    if (half_width == 0.0) return std::numeric_limits<double>::infinity();
    return excess / half_width;
}

Row approx_row(const approx::ApproxValue& a, double nu, double oracle_value, double oracle_err) {
    Row row;
    row.subject = std::string(approx::method_name(a.method));
    row.nu = nu;
    row.x = a.x;
    row.value = a.value;
    row.oracle = oracle_value;
    row.half_width = a.half_width;
    row.ratio = certified_ratio(std::fabs(a.value - oracle_value), a.half_width, oracle_err + kEvalSlack);
    row.holds = *row.ratio <= 1.0;
    return row;
}

Row bound_row(const bounds::BoundReport& r) {
    Row row;
    row.subject = r.name;
    row.nu = r.nu;
    row.x = r.x;
    row.value = r.lhs;
    row.oracle = r.rhs;
    row.half_width = r.slack;
    row.holds = r.holds;
    return row;
}

ScanReport verify_approx_grid(approx::Method method, const GridSpec& grid, std::optional<int> l1,
                              std::optional<int> l2) {
    const std::vector<double> xs = grid_points(grid);
    const std::vector<double> nus = is_airy(method) ? std::vector<double>{0.0} : grid.nu_values;
    if (nus.empty()) throw PreconditionViolation("verify_approx_grid: no nu values");
    ScanReport rep;
    for (double nu : nus) {
        const Order order(nu);
        for (double t : xs) {
            approx::ApproxValue a;
            if (method == approx::Method::transition) {
                if (!(nu >= 0.5 && t >= 0.0)) {
                    ++rep.skipped;
                    continue;
                }
                a = approx::transition(order, t);
            } else {
                if (!approx::applicable(method, order, t)) {
                    ++rep.skipped;
                    continue;
                }
                a = approx::evaluate(method, order, t, l1, l2);
            }
            const oracle::EvalResult truth =
                is_airy(method) ? oracle::airy_ai_neg_ref(a.x) : oracle::bessel_j_ref(order, a.x);
            const Row row = approx_row(a, nu, truth.value, truth.abs_err_estimate);
            const double excess =
                std::fabs(a.value - truth.value) - a.half_width - truth.abs_err_estimate - kEvalSlack;
            record(rep, row, row.subject, excess);
        }
    }
    if (rep.total == 0) throw ScanFailure("verify_approx_grid: no admissible grid point");
    return rep;
}

ScanReport verify_bounds_grid(bounds::Bound bound, const GridSpec& grid) {
    using bounds::Bound;
    const std::vector<double> xs = grid_points(grid);
    const bool x_free = bound == Bound::airy_envelope || bound == Bound::lemma_integral;
    const std::vector<double> nus = x_free ? std::vector<double>{0.0} : grid.nu_values;
    if (nus.empty()) throw PreconditionViolation("verify_bounds_grid: no nu values");
    ScanReport rep;
    for (double nu : nus) {
        const Order order(nu);
        if (bound == Bound::leftmost_max || bound == Bound::near_first_zero) {
            if (!bounds::bound_applicable(bound, order, 1.0)) {
                ++rep.skipped;
                continue;
            }
            add_bound_reports(rep, bounds::evaluate_bound(bound, order, 1.0));
            continue;
        }
        for (double x1 : xs) {
            if (!bounds::bound_applicable(bound, order, x1)) {
                rep.skipped += bound == Bound::wronskian_kernel ? xs.size() : 1;
                continue;
            }
            if (bound == Bound::wronskian_kernel) {
                for (double x2 : xs) {
                    if (!bounds::bound_applicable(bound, order, x2)) {
                        ++rep.skipped;
                        continue;
                    }
                    add_bound_reports(rep, bounds::evaluate_bound(bound, order, x1, x2));
                }
                continue;
            }
            add_bound_reports(rep, bounds::evaluate_bound(bound, order, x1));
        }
    }
    if (rep.total == 0) throw ScanFailure("verify_bounds_grid: no admissible grid point");
    return rep;
}

double olenko_remainder(const Order& order, double x) {
    const double j = oracle::bessel_j_ref(order, x).value;
    const double main = std::sqrt(2.0 / (std::numbers::pi * x)) * std::cos(x - order.omega());
    return x * std::sqrt(x) * std::fabs(j - main);
}

SupResult olenko_sup(const Order& order, double x_max, int coarse_points) {
    if (!(x_max > 0.0 && x_max <= oracle::kMaxBesselArg)) {
        throw DomainError("olenko_sup: x_max must lie in (0, 200]");
    }
    if (coarse_points < 3) throw PreconditionViolation("olenko_sup: need at least three coarse points");
    const double h = x_max / coarse_points;
    std::vector<double> xs(static_cast<std::size_t>(coarse_points));
    std::vector<double> rs(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        xs[i] = x_max * static_cast<double>(i + 1) / coarse_points;
        rs[i] = olenko_remainder(order, xs[i]);
    }

    SupResult out;
    out.nu = order.nu();
    const auto best = std::max_element(rs.begin(), rs.end());
    out.sup_value = *best;
    out.argmax_x = xs[static_cast<std::size_t>(best - rs.begin())];

    // Local maxima of the coarse samples, largest first; index order breaks ties.
    std::vector<std::size_t> peaks;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const bool left = i == 0 || rs[i] >= rs[i - 1];
        const bool right = i + 1 == rs.size() || rs[i] >= rs[i + 1];
        if (left && right) peaks.push_back(i);
    }
    std::stable_sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) { return rs[a] > rs[b]; });
    if (peaks.size() > 5) peaks.resize(5);

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (std::size_t i : peaks) {
        double a = std::max(xs[i] - h, 0.5 * h);
        double b = std::min(xs[i] + h, x_max);
        double c = b - inv_phi * (b - a);
        double d = a + inv_phi * (b - a);
        double fc = olenko_remainder(order, c);
        double fd = olenko_remainder(order, d);
        for (int it = 0; it < 60 && b - a > 1e-10 * std::max(1.0, xs[i]); ++it) {
            if (fc > fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - inv_phi * (b - a);
                fc = olenko_remainder(order, c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + inv_phi * (b - a);
                fd = olenko_remainder(order, d);
            }
        }
        const double xm = fc > fd ? c : d;
        const double fm = std::max(fc, fd);
        if (fm > out.sup_value) {
            out.sup_value = fm;
            out.argmax_x = xm;
        }
    }
    out.normalized = order.mu() > 0.0 ? out.sup_value / order.mu() : std::numeric_limits<double>::quiet_NaN();
    return out;
}

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& out, const Row& row) {
    out << row.subject << ',' << format_real(row.nu) << ',' << format_real(row.x) << ',' << format_real(row.value)
        << ',' << format_real(row.oracle) << ',' << format_real(row.half_width) << ','
        << (row.ratio ? format_real(*row.ratio) : std::string()) << ',' << (row.holds ? "true" : "false") << '\n';
}

bool row_fails(const Row& row) noexcept { return !row.holds || (row.ratio && *row.ratio > 1.0); }

}  // namespace besselcert::scan
