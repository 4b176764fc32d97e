// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace besselcert {

// Errors raised across the library. Every precondition failure is one of these.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class PrecisionInfeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoSignChange : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ScanFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PreconditionViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Order ν of J_ν together with the two quantities every error term is built
/// from: μ = |ν² − 1/4| and the phase shift ω_ν = πν/2 + π/4.
class Order {
public:
    constexpr explicit Order(double nu) noexcept
        : nu_(nu),
          mu_(nu * nu - 0.25 < 0.0 ? 0.25 - nu * nu : nu * nu - 0.25),
          omega_(std::numbers::pi * nu / 2.0 + std::numbers::pi / 4.0) {}

    constexpr double nu() const noexcept { return nu_; }
    constexpr double mu() const noexcept { return mu_; }
    constexpr double omega() const noexcept { return omega_; }
    double sqrt_mu() const noexcept { return std::sqrt(mu_); }

    /// |ν| ≤ 1/2, the branch where Szegő-type envelopes and the low phase apply.
    constexpr bool low() const noexcept { return nu_ >= -0.5 && nu_ <= 0.5; }

    friend constexpr bool operator==(const Order&, const Order&) = default;

private:
    double nu_;
    double mu_;
    double omega_;
};

std::string format_real(double v);

}  // namespace besselcert
