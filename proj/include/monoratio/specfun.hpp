#pragma once

/**
 * @file specfun.hpp
 * @brief Log-gamma, reciprocal gamma, digamma and the two-parameter
 *        Mittag-Leffler function for positive real arguments.
 *
 * Every evaluator returns an EvalResult carrying an a-posteriori absolute
 * error bound. Series-based evaluators also report the number of terms used.
 */

#include "errors.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace monoratio {

struct EvalResult {
    double value = 0.0;
    double abs_error_bound = 0.0;
    int terms_used = 0;
};

namespace detail {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

// Stirling correction coefficients B_{2n} / (2n (2n-1)), n = 1..8.
inline constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,         -1.0 / 360.0,     1.0 / 1260.0,  -1.0 / 1680.0,
    1.0 / 1188.0,       -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0,
};

// Asymptotic digamma coefficients B_{2n} / (2n), n = 1..7.
inline constexpr std::array<double, 7> kDigammaAsym = {
    1.0 / 12.0,  -1.0 / 120.0,      1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0,  1.0 / 12.0,
};

inline constexpr double kAsymptoticFloor = 10.0;

inline void require_positive(double x, const char* what)
{
    if (!(x > 0.0) || std::isinf(x))
        throw domain_error(std::string(what) + ": argument must be a finite positive real, got " +
                           std::to_string(x));
}

} // namespace detail

/// ln Gamma(x) for x > 0. Upward recurrence to x >= 10, then Stirling's series.
inline EvalResult ln_gamma(double x)
{
    detail::require_positive(x, "ln_gamma");

    double shift_log = 0.0;
    double y = x;
    if (y < detail::kAsymptoticFloor) {
        double product = 1.0;
        while (y < detail::kAsymptoticFloor) {
            product *= y;
            y += 1.0;
        }
        shift_log = std::log(product);
    }

    const double inv = 1.0 / y;
    const double inv2 = inv * inv;
    double series = 0.0;
    double power = inv;
    for (double c : detail::kStirling) {
        series += c * power;
        power *= inv2;
    }
    const double head = (y - 0.5) * std::log(y) - y + 0.5 * std::log(2.0 * std::numbers::pi);
    const double value = head + series - shift_log;

    // Truncation: the first omitted term is below 2e-16 at y = 10 and decays as y^-17.
    const double truncation = 2e-16 * std::pow(detail::kAsymptoticFloor / y, 17);
    const double rounding = 8.0 * detail::kEps * (std::abs(head) + std::abs(shift_log) + std::abs(value));
    return {value, truncation + rounding, 0};
}

/// 1 / Gamma(x) for x > 0. Underflows to zero for very large x.
inline EvalResult reciprocal_gamma(double x)
{
    const EvalResult lg = ln_gamma(x);
    constexpr double kUnderflowLog = -708.3964185322641; // ln(DBL_MIN)
    if (-lg.value < kUnderflowLog)
        return {0.0, std::numeric_limits<double>::min(), 0};
    const double value = std::exp(-lg.value);
    const double rel = std::expm1(lg.abs_error_bound) + 2.0 * detail::kEps;
    return {value, value * rel, 0};
}

/// psi(x) = Gamma'(x)/Gamma(x) for x > 0.
inline EvalResult digamma(double x)
{
    detail::require_positive(x, "digamma");

    double shift = 0.0;
    double y = x;
    while (y < detail::kAsymptoticFloor) {
        shift += 1.0 / y;
        y += 1.0;
    }

    const double inv2 = 1.0 / (y * y);
    double series = 0.0;
    double power = inv2;
    for (double c : detail::kDigammaAsym) {
        series += c * power;
        power *= inv2;
    }
    const double log_part = std::log(y) - 0.5 / y;
    const double value = log_part - series - shift;

    const double truncation = 5e-17 * std::pow(detail::kAsymptoticFloor / y, 16);
    const double rounding = 8.0 * detail::kEps * (std::abs(log_part) + shift + std::abs(value));
    return {value, truncation + rounding, 0};
}

/// Controls for series evaluations in this module.
struct SeriesLimits {
    double rel_tol = 1e-15;
    int max_terms = 100000;
};

/**
 * E_{a,b}(t) = sum_k t^k / Gamma(a k + b) for a, b > 0 and t >= 0.
 *
 * Terms are formed in log space. The ratio of consecutive terms is decreasing
 * in k (log-convexity of Gamma), so once it drops below 1/2 the tail is bounded
 * by twice the next term.
 */
inline EvalResult mittag_leffler(double a, double b, double t, SeriesLimits limits = {})
{
    detail::require_positive(a, "mittag_leffler(a)");
    detail::require_positive(b, "mittag_leffler(b)");
    if (!(t >= 0.0) || std::isinf(t))
        throw domain_error("mittag_leffler: t must be a finite nonnegative real");

    if (t == 0.0) {
        EvalResult r = reciprocal_gamma(b);
        r.terms_used = 1;
        return r;
    }

    const double log_t = std::log(t);
    auto log_term = [&](int k) { return k * log_t - ln_gamma(a * k + b).value; };

    double sum = 0.0;
    double lt = log_term(0);
    for (int k = 0; k < limits.max_terms; ++k) {
        const double term = std::exp(lt);
        sum += term;
        if (!std::isfinite(sum))
            throw nonconvergence_error("mittag_leffler: partial sum overflowed");
        const double lt_next = log_term(k + 1);
        const double next = std::exp(lt_next);
        const bool geometric = (lt_next - lt) < -std::numbers::ln2;
        if (geometric && 2.0 * next <= limits.rel_tol * sum) {
            const double bound = 2.0 * next + 4.0 * detail::kEps * sum * std::sqrt(k + 1.0);
            return {sum, bound, k + 1};
        }
        lt = lt_next;
    }
    throw nonconvergence_error("mittag_leffler: term cap of " + std::to_string(limits.max_terms) +
                               " reached");
}

} // namespace monoratio
