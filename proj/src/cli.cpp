// SPDX-License-Identifier: Apache-2.0
#include "besselcert/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>

#include "besselcert/approx.hpp"
#include "besselcert/bounds.hpp"
#include "besselcert/oracle.hpp"
#include "besselcert/scan.hpp"
#include "besselcert/zeros.hpp"

namespace besselcert::cli {

namespace {

using scan::Row;

// Oracle values are printed from the quad-precision sum, so the 17 digits are
// those of the true value rather than of its nearest double.
std::string format_wide(qreal v) {
    if (v == 0) return "0";
    return q_to_string(v, 17);
}

void write_plain(std::ostream& out, const Row& row) {
    out << row.subject << " nu=" << format_real(row.nu) << " x=" << format_real(row.x)
        << " value=" << format_real(row.value) << " oracle=" << format_real(row.oracle)
        << " half_width=" << format_real(row.half_width);
    if (row.ratio) out << " ratio=" << format_real(*row.ratio);
    out << " holds=" << (row.holds ? "true" : "false") << '\n';
}

struct Output {
    bool plain = false;
    std::vector<Row> rows;

    int emit(std::ostream& out) const {
        if (!plain) scan::write_csv_header(out);
        bool failed = false;
        for (const Row& r : rows) {
            if (plain) {
                write_plain(out, r);
            } else {
                scan::write_csv_row(out, r);
            }
            failed = failed || scan::row_fails(r);
        }
        return failed ? kExitViolation : kExitOk;
    }
};

Row zero_row(const zeros::ZeroEstimate& z, double refined, const std::string& subject) {
    constexpr double kRefineTol = 1e-11;
    Row row;
    row.subject = subject;
    row.nu = z.nu;
    row.x = z.s;
    row.value = z.center;
    row.oracle = refined;
    row.half_width = z.half_width;
    if (z.one_sided) {
        row.ratio = refined < z.center - kRefineTol
                        ? std::numeric_limits<double>::infinity()
                        : scan::certified_ratio(std::max(0.0, refined - z.center), z.half_width, kRefineTol);
    } else {
        row.ratio = scan::certified_ratio(std::fabs(refined - z.center), z.half_width, kRefineTol);
    }
    row.holds = *row.ratio <= 1.0;
    return row;
}

std::optional<scan::Spacing> parse_spacing(const std::string& s) {
    if (s == "linear") return scan::Spacing::linear;
    if (s == "log") return scan::Spacing::log;
    return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified approximations and bounds for J_nu(x) and Ai(-x)", "besselcert"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string output;
    app.add_option("--format", format, "csv or plain")->check(CLI::IsMember({"csv", "plain"}));
    app.add_option("--output", output, "write results to this file instead of stdout");

    double nu = 0.0;
    double x = 0.0;

    auto* eval = app.add_subcommand("eval", "oracle value of J_nu(x), J'_nu(x) or Ai(-x)");
    std::string function = "j";
    eval->add_option("--nu", nu, "order")->required();
    eval->add_option("--x", x, "argument")->required();
    eval->add_option("--function", function, "j, jprime or airy")->check(CLI::IsMember({"j", "jprime", "airy"}));

    auto* approx_cmd = app.add_subcommand("approx", "one approximation compared with the oracle");
    std::string method = "best";
    std::optional<int> l1;
    std::optional<int> l2;
    approx_cmd->add_option("--nu", nu, "order")->required();
    approx_cmd->add_option("--x", x, "argument (z for transition)")->required();
    approx_cmd->add_option("--method", method, "method tag or 'best'");
    approx_cmd->add_option("--l1", l1, "olver: number of cosine terms");
    approx_cmd->add_option("--l2", l2, "olver: number of sine terms");

    auto* bounds_cmd = app.add_subcommand("bounds", "check one inequality against the oracle");
    std::string bound_name;
    std::optional<double> bound_x;
    std::optional<double> bound_x2;
    bounds_cmd->add_option("--name", bound_name, "bound tag, or airy_maxima")->required();
    bounds_cmd->add_option("--nu", nu, "order");
    bounds_cmd->add_option("--x", bound_x, "argument (t for monotonic)");
    bounds_cmd->add_option("--x2", bound_x2, "second argument for wronskian_kernel");

    auto* zeros_cmd = app.add_subcommand("zeros", "zero estimate with its certified bracket");
    std::string family;
    int s = 1;
    std::string mode = "full";
    zeros_cmd->add_option("--family", family, "airy or bessel")->required()->check(CLI::IsMember({"airy", "bessel"}));
    zeros_cmd->add_option("--s", s, "zero index")->required()->check(CLI::PositiveNumber);
    zeros_cmd->add_option("--nu", nu, "order (bessel)");
    zeros_cmd->add_option("--mode", mode, "full or simplified (airy)")->check(CLI::IsMember({"full", "simplified"}));

    auto* scan_cmd = app.add_subcommand("scan", "grid sweep of a method or bound");
    std::string scan_method;
    std::string scan_bound;
    std::vector<double> nu_list;
    scan::GridSpec grid;
    std::string spacing = "log";
    auto* m_opt = scan_cmd->add_option("--method", scan_method, "approximation method");
    auto* b_opt = scan_cmd->add_option("--bound", scan_bound, "bound tag");
    m_opt->excludes(b_opt);
    scan_cmd->add_option("--nu-list", nu_list, "comma-separated orders")->delimiter(',');
    scan_cmd->add_option("--x-lo", grid.x_lo, "grid start")->required();
    scan_cmd->add_option("--x-hi", grid.x_hi, "grid end")->required();
    scan_cmd->add_option("--points", grid.x_points, "number of grid points")->required();
    scan_cmd->add_option("--spacing", spacing, "linear or log")->check(CLI::IsMember({"linear", "log"}));

    auto* sup_cmd = app.add_subcommand("sup", "sup of x^{3/2}|J_nu(x) - sqrt(2/(pi x)) cos(x - omega)|");
    double x_max = 150.0;
    int coarse = 3000;
    sup_cmd->add_option("--nu", nu, "order")->required();
    sup_cmd->add_option("--x-max", x_max, "scan end");
    sup_cmd->add_option("--points", coarse, "coarse grid size");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "besselcert: " << e.what() << '\n';
        return kExitUsage;
    }

    Output result;
    result.plain = format == "plain";
    try {
        const Order order(nu);
        if (*eval) {
            Row row;
            row.subject = function == "j" ? "bessel_j" : function == "jprime" ? "bessel_j_prime" : "airy_ai_neg";
            row.nu = nu;
            row.x = x;
            std::string exact;
            if (function == "j") {
                const oracle::WideResult w = oracle::bessel_j_wide(order, x);
                row.value = static_cast<double>(w.value);
                row.half_width = oracle::bessel_j_ref(order, x).abs_err_estimate;
                exact = format_wide(w.value);
            } else if (function == "airy") {
                const oracle::WideResult w = oracle::airy_ai_neg_wide(x);
                row.value = static_cast<double>(w.value);
                row.half_width = oracle::airy_ai_neg_ref(x).abs_err_estimate;
                exact = format_wide(w.value);
            } else {
                const oracle::EvalResult r = oracle::bessel_j_prime_any(order, x);
                row.value = r.value;
                row.half_width = r.abs_err_estimate;
                exact = format_real(r.value);
            }
            row.oracle = row.value;
            std::ostringstream buf;
            if (result.plain) {
                buf << row.subject << " nu=" << format_real(nu) << " x=" << format_real(x) << " value=" << exact
                    << " abs_err=" << format_real(row.half_width) << '\n';
            } else {
                scan::write_csv_header(buf);
                buf << row.subject << ',' << format_real(nu) << ',' << format_real(x) << ',' << exact << ','
                    << exact << ',' << format_real(row.half_width) << ",,true\n";
            }
            if (output.empty()) {
                out << buf.str();
            } else {
                std::ofstream f(output);
                if (!f) throw PreconditionViolation("cannot open output file " + output);
                f << buf.str();
            }
            return kExitOk;
        }
        if (*approx_cmd) {
            approx::ApproxValue a;
            if (method == "best") {
                a = approx::best_approx(order, x);
            } else {
                const auto m = approx::parse_method(method);
                if (!m) throw PreconditionViolation("unknown method '" + method + "'");
                a = *m == approx::Method::transition ? approx::transition(order, x)
                                                     : approx::evaluate(*m, order, x, l1, l2);
            }
            const bool airy = a.method == approx::Method::airy_classic || a.method == approx::Method::airy_sharp ||
                              a.method == approx::Method::airy_simplified;
            const oracle::EvalResult truth = airy ? oracle::airy_ai_neg_ref(a.x) : oracle::bessel_j_ref(order, a.x);
            result.rows.push_back(scan::approx_row(a, airy ? 0.0 : nu, truth.value, truth.abs_err_estimate));
        } else if (*bounds_cmd) {
            if (bound_name == "airy_maxima") {
                for (const auto& r : bounds::airy_envelope_maxima_check()) result.rows.push_back(scan::bound_row(r));
            } else {
                const auto b = bounds::parse_bound(bound_name);
                if (!b) throw PreconditionViolation("unknown bound '" + bound_name + "'");
                const bool needs_x = *b != bounds::Bound::leftmost_max && *b != bounds::Bound::near_first_zero;
                if (needs_x && !bound_x) throw PreconditionViolation("bound '" + bound_name + "' needs --x");
                for (const auto& r : bounds::evaluate_bound(*b, order, bound_x.value_or(1.0), bound_x2)) {
                    result.rows.push_back(scan::bound_row(r));
                }
            }
        } else if (*zeros_cmd) {
            if (family == "airy") {
                const auto zm = zeros::parse_airy_zero_mode(mode).value();
                const zeros::ZeroEstimate z = zeros::airy_zero_estimate(s, zm);
                result.rows.push_back(zero_row(z, zeros::refine_airy_zero(s), "airy_zero_" + mode));
            } else {
                const zeros::ZeroEstimate z = zeros::bessel_first_zeros_estimate(order, s);
                result.rows.push_back(zero_row(z, zeros::refine_bessel_zero(order, s), "bessel_zero"));
            }
        } else if (*scan_cmd) {
            grid.nu_values = nu_list;
            grid.spacing = parse_spacing(spacing).value();
            scan::ScanReport rep;
            if (!scan_bound.empty()) {
                const auto b = bounds::parse_bound(scan_bound);
                if (!b) throw PreconditionViolation("unknown bound '" + scan_bound + "'");
                rep = scan::verify_bounds_grid(*b, grid);
            } else if (!scan_method.empty()) {
                const auto m = approx::parse_method(scan_method);
                if (!m) throw PreconditionViolation("unknown method '" + scan_method + "'");
                rep = scan::verify_approx_grid(*m, grid);
            } else {
                throw PreconditionViolation("scan needs --method or --bound");
            }
            result.rows = std::move(rep.rows);
        } else if (*sup_cmd) {
            const scan::SupResult r = scan::olenko_sup(order, x_max, coarse);
            Row row;
            row.subject = "olenko_sup";
            row.nu = r.nu;
            row.x = r.argmax_x;
            row.value = r.sup_value;
            row.oracle = r.normalized;  // sup/μ
            result.rows.push_back(row);
        }
    } catch (const std::exception& e) {
        err << "besselcert: " << e.what() << '\n';
        return kExitUsage;
    }

    if (output.empty()) return result.emit(out);
    std::ofstream f(output);
    if (!f) {
        err << "besselcert: cannot open output file " << output << '\n';
        return kExitUsage;
    }
    return result.emit(f);
}

}  // namespace besselcert::cli
