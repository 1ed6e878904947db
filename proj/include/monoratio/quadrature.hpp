#pragma once

/**
 * @file quadrature.hpp
 * @brief Globally adaptive Gauss-Kronrod (7/15) quadrature with a
 *        u = 1/(1 + t - alpha) map for semi-infinite intervals.
 */

#include "errors.hpp"
#include "specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace monoratio {

struct QuadratureOptions {
    double rel_tol = 1e-11;
    double abs_tol = 1e-300;
    int max_subdivisions = 4000;
};

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double a, b, estimate, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gk15(F& f, double a, double b)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kKronrodNodes[i];
        const double s = f(c - dx) + f(c + dx);
        kronrod += kKronrodWeights[i] * s;
        if (i % 2 == 1)
            gauss += kGaussWeights[i / 2] * s;
    }
    kronrod *= h;
    gauss *= h;
    double err = std::abs(kronrod - gauss);
    // Floor for panels whose Gauss and Kronrod sums agree to rounding.
    err = std::max(err, 50.0 * kEps * std::abs(kronrod));
    return {a, b, kronrod, err};
}

} // namespace detail

/// Integrate f over the finite interval [a, b].
template <class F>
EvalResult integrate(F&& f, double a, double b, const QuadratureOptions& opt = {})
{
    if (!(a <= b) || !std::isfinite(a) || !std::isfinite(b))
        throw domain_error("integrate: need finite a <= b");
    if (a == b)
        return {0.0, 0.0, 0};

    std::priority_queue<detail::Panel> panels;
    panels.push(detail::gk15(f, a, b));
    double total = panels.top().estimate;
    double error = panels.top().error;
    int evaluations = 15;

    for (int it = 0; it < opt.max_subdivisions; ++it) {
        if (!std::isfinite(total))
            throw nonconvergence_error("integrate: integrand produced a non-finite value");
        if (error <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total)))
            return {total, error, evaluations};
        detail::Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Cannot split further; accept the panel as is.
            panels.push(worst);
            break;
        }
        const detail::Panel left = detail::gk15(f, worst.a, mid);
        const detail::Panel right = detail::gk15(f, mid, worst.b);
        evaluations += 30;
        total += left.estimate + right.estimate - worst.estimate;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }

    // Re-sum to shed accumulated drift from the incremental updates.
    double resum = 0.0, reerr = 0.0;
    while (!panels.empty()) {
        resum += panels.top().estimate;
        reerr += panels.top().error;
        panels.pop();
    }
    if (reerr <= std::max(opt.abs_tol, opt.rel_tol * std::abs(resum)))
        return {resum, reerr, evaluations};
    throw nonconvergence_error("integrate: refinement limit reached (error estimate " +
                               std::to_string(reerr) + ", value " + std::to_string(resum) + ")");
}

/// Integrate f over [alpha, inf) using t = alpha + 1/u - 1, u in (0, 1].
template <class F>
EvalResult integrate_to_infinity(F&& f, double alpha, const QuadratureOptions& opt = {})
{
    if (!std::isfinite(alpha))
        throw domain_error("integrate_to_infinity: alpha must be finite");
    auto mapped = [&](double u) {
        if (u <= 0.0)
            return 0.0;
        const double t = alpha + 1.0 / u - 1.0;
        const double v = f(t);
        if (v == 0.0)
            return 0.0;
        return v / (u * u);
    };
    return integrate(mapped, 0.0, 1.0, opt);
}

} // namespace monoratio
