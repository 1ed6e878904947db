#pragma once

/**
 * @file ratio_engine.hpp
 * @brief Series ratios A(t)/B(t), transform ratios F(x)/G(x), Yang's H
 *        function H = (F'/G') G - F, and one-sided limits of H.
 *
 * The identity (F/G)' = (G'/G^2) H ties the sign of H to the direction of
 * the ratio. Series are summed in a running log scale so that ratios and the
 * sign of H stay meaningful when A and B themselves overflow.
 */

#include "coefficients.hpp"
#include "errors.hpp"
#include "kernels.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace monoratio {

enum class Side { Numerator, Denominator };
enum class Endpoint { Lower, Upper };
enum class LimitSign { Positive, Negative, Zero, Undetermined };
enum class Confidence { Converged, Extrapolated, Failed };

inline std::string_view to_string(Endpoint e) { return e == Endpoint::Lower ? "lower" : "upper"; }
inline std::string_view to_string(LimitSign s)
{
    switch (s) {
    case LimitSign::Positive: return "Positive";
    case LimitSign::Negative: return "Negative";
    case LimitSign::Zero: return "Zero";
    case LimitSign::Undetermined: return "Undetermined";
    }
    return "?";
}
inline std::string_view to_string(Confidence c)
{
    switch (c) {
    case Confidence::Converged: return "Converged";
    case Confidence::Extrapolated: return "Extrapolated";
    case Confidence::Failed: return "Failed";
    }
    return "?";
}

/// One-sided limit of H estimated along a ladder of points.
struct LimitEstimate {
    Endpoint endpoint = Endpoint::Lower;
    double value = 0.0; // may be +-inf
    LimitSign sign = LimitSign::Undetermined;
    std::vector<std::pair<double, double>> samples;
    Confidence confidence = Confidence::Failed;
    std::optional<double> closed_form; // PowerK lower end: b0 (a1/b1 - a0/b0)
    std::optional<bool> closed_form_agrees;
    std::string note;

    bool nonnegative() const { return sign == LimitSign::Positive || sign == LimitSign::Zero; }
    bool nonpositive() const { return sign == LimitSign::Negative || sign == LimitSign::Zero; }
};

/// Controls for endpoint ladders.
struct LadderOptions {
    int min_steps = 12;
    int max_steps_lower = 48;
    int max_steps_upper = 20;
    double lower_start = 1.0;  // eps: points eps * 2^{-j}
    double upper_start = 1.0;  // X: points X * 2^{j} when the domain is unbounded
    double zero_band = 1e-9;   // relative to the local scale |A| + |A' B / B'|
    double converged_rel = 1e-3;
};

//--------------------------------------------------------------------------
// Series
//--------------------------------------------------------------------------

struct SeriesRatioProblem {
    CoefficientSource a;
    CoefficientSource b;
    DiscreteKernelFamily family;
    double tol = 1e-13;
    int max_terms = 100000;
};

/// Sums of orders 0..2 of one side, all scaled by exp(-log_scale).
struct ScaledSeries {
    double log_scale = -kInf;
    std::array<double, 3> value{};
    std::array<double, 3> error{};
    int terms = 0;

    double unscaled(int order) const
    {
        if (value[order] == 0.0)
            return 0.0;
        const double l = std::log(std::abs(value[order])) + log_scale;
        if (l > 709.78)
            return value[order] > 0 ? kInf : -kInf;
        return value[order] * std::exp(log_scale);
    }
};

namespace detail {

inline ScaledSeries sum_series(const CoefficientSource& src, const DiscreteKernelFamily& fam, double t,
                               int max_order, double tol, int max_terms)
{
    ScaledSeries out;
    std::array<double, 3> abs_sum{};
    const auto len = src.length();
    const int limit = len ? *len : max_terms;

    double prev_mag = -kInf;
    std::array<double, 4> ratios{};
    int ratio_count = 0;
    std::array<double, 3> last_log{-kInf, -kInf, -kInf};

    for (int k = 0; k < limit; ++k) {
        const SignedLog c = src.log_at(k);
        double mag = -kInf;
        std::array<SignedLog, 3> terms{};
        if (c.sign != 0) {
            for (int o = 0; o <= max_order; ++o) {
                const SignedLog w = eval_discrete_log(fam, k, t, o);
                if (w.sign == 0)
                    continue;
                terms[o] = {c.log_abs + w.log_abs, c.sign * w.sign};
                mag = std::max(mag, terms[o].log_abs);
            }
        }
        if (mag > out.log_scale) {
            if (std::isfinite(out.log_scale)) {
                const double f = std::exp(out.log_scale - mag);
                for (int o = 0; o < 3; ++o) {
                    out.value[o] *= f;
                    abs_sum[o] *= f;
                }
            }
            out.log_scale = mag;
        }
        for (int o = 0; o <= max_order; ++o) {
            if (terms[o].sign == 0)
                continue;
            const double v = std::exp(terms[o].log_abs - out.log_scale);
            out.value[o] += terms[o].sign * v;
            abs_sum[o] += v;
            last_log[o] = terms[o].log_abs;
        }
        out.terms = k + 1;
        if (len)
            continue;

        // Convergence bookkeeping for unbounded sources.
        if (std::isfinite(mag)) {
            if (std::isfinite(prev_mag)) {
                std::rotate(ratios.begin(), ratios.begin() + 1, ratios.end());
                ratios.back() = std::exp(mag - prev_mag);
                ratio_count = std::min(ratio_count + 1, 4);
            }
            prev_mag = mag;
        }
        if (ratio_count < 4)
            continue;
        bool below_one = true, ratios_fall = true;
        for (int i = 0; i < 4; ++i) {
            if (!(ratios[i] < 1.0))
                below_one = false;
            if (i > 0 && ratios[i] > ratios[i - 1] * (1.0 + 1e-12))
                ratios_fall = false;
        }
        if (!below_one)
            continue;
        // Falling ratios bound the tail geometrically. Rising ratios mean a
        // power-law tail (Dirichlet-type kernels): term ~ k^{-p}, tail ~ term k / (p - 1),
        // doubled for safety.
        const double rho = ratios.back();
        double tail_factor = rho / (1.0 - rho);
        if (!ratios_fall) {
            const double p_exp = -std::log(rho) / std::log1p(1.0 / k);
            if (!(p_exp > 1.5))
                continue;
            tail_factor = 2.0 * (k + 1.0) / (p_exp - 1.0);
        }
        bool done = true;
        std::array<double, 3> tails{};
        for (int o = 0; o <= max_order; ++o) {
            if (!std::isfinite(last_log[o]))
                continue;
            tails[o] = std::exp(last_log[o] - out.log_scale) * tail_factor;
            if (tails[o] > tol * abs_sum[o])
                done = false;
        }
        if (done) {
            for (int o = 0; o <= max_order; ++o)
                out.error[o] = tails[o] + 4.0 * kEps * abs_sum[o] * std::sqrt(out.terms);
            return out;
        }
    }
    if (!len)
        throw nonconvergence_error("series: term cap of " + std::to_string(max_terms) + " reached at t = " +
                                   std::to_string(t));
    for (int o = 0; o <= max_order; ++o)
        out.error[o] = 4.0 * kEps * abs_sum[o] * std::sqrt(std::max(out.terms, 1));
    return out;
}

} // namespace detail

/// Values of A, A', A'' and B, B', B'' at one point.
struct SeriesPoint {
    double t = 0.0;
    ScaledSeries A;
    ScaledSeries B;

    double ratio() const
    {
        if (!(B.value[0] > 0.0))
            throw domain_error("series ratio: B(t) <= 0 at t = " + std::to_string(t));
        return A.value[0] / B.value[0] * std::exp(A.log_scale - B.log_scale);
    }
    double ratio_rel_error() const
    {
        const double ea = A.value[0] != 0.0 ? A.error[0] / std::abs(A.value[0]) : 0.0;
        return ea + B.error[0] / std::abs(B.value[0]);
    }
    /// H scaled by exp(-A.log_scale); the sign is exact.
    double h_scaled() const
    {
        const double b1 = B.value[1];
        if (!(std::abs(b1) >= 1e-12 * std::abs(B.value[0]) / t))
            throw degeneracy_error("H undefined: |B'(t)| is below the zero band at t = " + std::to_string(t));
        return A.value[1] * B.value[0] / b1 - A.value[0];
    }
    /// |A| + |A' B / B'| on the same scale as h_scaled().
    double h_local_scale() const
    {
        return std::abs(A.value[0]) + std::abs(A.value[1] * B.value[0] / B.value[1]);
    }
    double h() const
    {
        const double hs = h_scaled();
        if (hs == 0.0)
            return 0.0;
        const double l = std::log(std::abs(hs)) + A.log_scale;
        if (l > 709.78)
            return hs > 0 ? kInf : -kInf;
        return hs * std::exp(A.log_scale);
    }
    /// (B'/B^2) * H, the derivative of the ratio through the H identity.
    double ratio_derivative_via_h() const
    {
        const double b0 = B.value[0];
        return std::exp(A.log_scale - B.log_scale) * (B.value[1] / (b0 * b0)) * h_scaled();
    }
};

inline SeriesPoint eval_series_point(const SeriesRatioProblem& p, double t, int max_order = 1)
{
    return {t, detail::sum_series(p.a, p.family, t, max_order, p.tol, p.max_terms),
            detail::sum_series(p.b, p.family, t, max_order, p.tol, p.max_terms)};
}

/// A^(order)(t) or B^(order)(t), truncated with a tail bound below tol (relative).
inline EvalResult eval_series(const SeriesRatioProblem& p, Side side, double t, int order)
{
    detail::check_order(order);
    const auto& src = side == Side::Numerator ? p.a : p.b;
    const ScaledSeries s = detail::sum_series(src, p.family, t, order, p.tol, p.max_terms);
    const double v = s.unscaled(order);
    if (std::isinf(v))
        throw nonconvergence_error("series value overflows double at t = " + std::to_string(t));
    return {v, s.error[order] * std::exp(s.log_scale), s.terms};
}

inline double eval_series_ratio(const SeriesRatioProblem& p, double t)
{
    return eval_series_point(p, t, 0).ratio();
}

inline double eval_H_series(const SeriesRatioProblem& p, double t) { return eval_series_point(p, t, 1).h(); }

//--------------------------------------------------------------------------
// Transforms
//--------------------------------------------------------------------------

struct TransformRatioProblem {
    Integrand f;
    Integrand g;
    ContinuousKernel kernel; // integration interval is [kernel.alpha, kernel.beta]
    double tol = 1e-11;
    int max_subdivisions = 4000;

    bool improper() const { return std::isinf(kernel.beta); }
};

namespace detail {

inline double integrand_times_kernel(const Integrand& f, const ContinuousKernel& ker, double t, double x,
                                     int order)
{
    const SignedLog w = eval_continuous_log(ker, t, x, order);
    if (w.sign == 0)
        return 0.0;
    if (f.has_log()) {
        const double lf = f.log_at(t);
        if (lf == -kInf)
            return 0.0;
        return w.sign * std::exp(lf + w.log_abs);
    }
    const double fv = f(t);
    if (fv == 0.0)
        return 0.0;
    return fv * w.value();
}

inline EvalResult transform_side(const TransformRatioProblem& p, const Integrand& f, double x, int order)
{
    if (!(x > 0.0) || std::isinf(x))
        throw domain_error("transform: x must be a finite positive real");
    QuadratureOptions opt;
    opt.rel_tol = p.tol;
    opt.max_subdivisions = p.max_subdivisions;
    // Nodes can round onto the open end alpha; a single point carries no mass.
    auto integrand = [&](double t) {
        return t <= p.kernel.alpha ? 0.0 : integrand_times_kernel(f, p.kernel, t, x, order);
    };
    if (p.improper())
        return integrate_to_infinity(integrand, p.kernel.alpha, opt);
    return integrate(integrand, p.kernel.alpha, p.kernel.beta, opt);
}

} // namespace detail

inline EvalResult eval_transform(const TransformRatioProblem& p, Side side, double x, int order)
{
    detail::check_order(order);
    return detail::transform_side(p, side == Side::Numerator ? p.f : p.g, x, order);
}

struct TransformPoint {
    double x = 0.0;
    std::array<double, 2> F{};
    std::array<double, 2> G{};

    double ratio() const
    {
        if (!(G[0] > 0.0))
            throw domain_error("transform ratio: G(x) <= 0 at x = " + std::to_string(x));
        return F[0] / G[0];
    }
    double h_scaled() const
    {
        if (!(std::abs(G[1]) >= 1e-12 * std::abs(G[0]) / x))
            throw degeneracy_error("H undefined: |G'(x)| is below the zero band at x = " + std::to_string(x));
        return F[1] * G[0] / G[1] - F[0];
    }
    double h_local_scale() const { return std::abs(F[0]) + std::abs(F[1] * G[0] / G[1]); }
    double h() const { return h_scaled(); }
    double ratio_derivative_via_h() const { return G[1] / (G[0] * G[0]) * h_scaled(); }
};

inline TransformPoint eval_transform_point(const TransformRatioProblem& p, double x, int max_order = 1)
{
    TransformPoint tp;
    tp.x = x;
    for (int o = 0; o <= max_order && o < 2; ++o) {
        tp.F[o] = detail::transform_side(p, p.f, x, o).value;
        tp.G[o] = detail::transform_side(p, p.g, x, o).value;
    }
    return tp;
}

inline double eval_transform_ratio(const TransformRatioProblem& p, double x)
{
    return eval_transform_point(p, x, 0).ratio();
}

inline double eval_H_transform(const TransformRatioProblem& p, double x) { return eval_transform_point(p, x, 1).h(); }

//--------------------------------------------------------------------------
// Endpoint limits of H
//--------------------------------------------------------------------------

namespace detail {

struct HSample {
    double point;
    double scaled;      // H * exp(-log_scale)
    double log_scale;
    double local_scale; // on the same scale as `scaled`
};

inline double unscale(double v, double log_scale)
{
    if (v == 0.0)
        return 0.0;
    const double l = std::log(std::abs(v)) + log_scale;
    if (l > 709.78)
        return v > 0 ? kInf : -kInf;
    return v * std::exp(log_scale);
}

/// Walk the ladder and classify the tail of the H samples.
template <class Sampler, class Ladder>
LimitEstimate ladder_limit(Endpoint endpoint, Sampler&& sample, Ladder&& point_at, const LadderOptions& opt,
                           int max_steps)
{
    LimitEstimate est;
    est.endpoint = endpoint;
    std::vector<HSample> hs;

    auto classify = [&]() -> bool {
        if (hs.size() < 4)
            return false;
        const auto n = hs.size();
        bool all_zero = true;
        int pos = 0, neg = 0;
        for (std::size_t i = n - 4; i < n; ++i) {
            const bool in_band = std::abs(hs[i].scaled) <= opt.zero_band * hs[i].local_scale;
            if (!in_band)
                all_zero = false;
            if (hs[i].scaled > 0 && !in_band)
                ++pos;
            if (hs[i].scaled < 0 && !in_band)
                ++neg;
        }
        if (all_zero) {
            est.sign = LimitSign::Zero;
            est.value = 0.0;
            est.confidence = Confidence::Converged;
            return true;
        }
        if (pos != 4 && neg != 4)
            return false;
        // Monotone magnitudes on a common scale.
        std::array<double, 4> mags{};
        for (int i = 0; i < 4; ++i) {
            const auto& s = hs[n - 4 + i];
            mags[i] = std::log(std::abs(s.scaled)) + s.log_scale;
        }
        bool nondec = true, noninc = true;
        for (int i = 1; i < 4; ++i) {
            if (mags[i] < mags[i - 1] - 1e-12)
                nondec = false;
            if (mags[i] > mags[i - 1] + 1e-12)
                noninc = false;
        }
        if (!nondec && !noninc)
            return false;
        est.sign = pos == 4 ? LimitSign::Positive : LimitSign::Negative;
        const double rel_change = std::abs(std::expm1(mags[3] - mags[2]));
        const double last = unscale(hs[n - 1].scaled, hs[n - 1].log_scale);
        if (rel_change <= opt.converged_rel) {
            est.confidence = Confidence::Converged;
            est.value = last;
        } else {
            est.confidence = Confidence::Extrapolated;
            const bool diverging = nondec && (mags[3] - mags[2]) > std::log(1.5) && (mags[2] - mags[1]) > std::log(1.5);
            est.value = diverging ? (pos == 4 ? kInf : -kInf) : last;
        }
        return true;
    };

    bool decided = false;
    for (int j = 1; j <= max_steps; ++j) {
        const double pt = point_at(j);
        if (!(pt > 0.0) || !std::isfinite(pt))
            break;
        try {
            hs.push_back(sample(pt));
        } catch (const std::exception& e) {
            est.note = std::string("ladder stopped at ") + std::to_string(pt) + ": " + e.what();
            break;
        }
        est.samples.emplace_back(pt, unscale(hs.back().scaled, hs.back().log_scale));
        if (j < opt.min_steps)
            continue;
        decided = classify();
        if (decided && est.confidence == Confidence::Converged)
            break;
    }
    if (!decided)
        decided = classify();
    if (!decided) {
        est.sign = LimitSign::Undetermined;
        est.confidence = Confidence::Failed;
        if (est.note.empty())
            est.note = "tail samples disagree in sign or are not monotone";
    }
    return est;
}

} // namespace detail

/// H_{A,B} at 0^+ (Lower) or r^- (Upper).
inline LimitEstimate endpoint_limit_H_series(const SeriesRatioProblem& p, Endpoint endpoint,
                                             const LadderOptions& opt = {})
{
    const double r = p.family.r;
    auto sample = [&](double t) {
        const SeriesPoint sp = eval_series_point(p, t, 1);
        return detail::HSample{t, sp.h_scaled(), sp.A.log_scale, sp.h_local_scale()};
    };
    LimitEstimate est;
    if (endpoint == Endpoint::Lower) {
        const double eps = std::min(opt.lower_start, std::isfinite(r) ? 0.5 * r : opt.lower_start);
        est = detail::ladder_limit(endpoint, sample, [eps](int j) { return std::ldexp(eps, -j); }, opt,
                                   opt.max_steps_lower);
    } else if (std::isfinite(r)) {
        est = detail::ladder_limit(endpoint, sample, [r](int j) { return r * (1.0 - std::ldexp(1.0, -j)); }, opt,
                                   opt.max_steps_lower);
    } else {
        const double x0 = opt.upper_start;
        est = detail::ladder_limit(endpoint, sample, [x0](int j) { return std::ldexp(x0, j); }, opt,
                                   opt.max_steps_upper);
    }

    if (endpoint == Endpoint::Lower && p.family.id == DiscreteFamilyId::PowerK) {
        const double a0 = p.a.at(0), a1 = p.a.at(1), b0 = p.b.at(0), b1 = p.b.at(1);
        if (b0 > 0.0 && b1 > 0.0) {
            const double cf = b0 * (a1 / b1 - a0 / b0);
            est.closed_form = cf;
            const double band = 1e-12 * (std::abs(a1 * b0 / b1) + std::abs(a0));
            const LimitSign cf_sign =
                std::abs(cf) <= band ? LimitSign::Zero : (cf > 0 ? LimitSign::Positive : LimitSign::Negative);
            if (est.sign != LimitSign::Undetermined)
                est.closed_form_agrees = cf_sign == est.sign || (cf_sign == LimitSign::Zero || est.sign == LimitSign::Zero);
        }
    }
    return est;
}

/// H_{F,G} at 0^+ (Lower) or infinity (Upper).
inline LimitEstimate endpoint_limit_H_transform(const TransformRatioProblem& p, Endpoint endpoint,
                                                const LadderOptions& opt = {})
{
    auto sample = [&](double x) {
        const TransformPoint tp = eval_transform_point(p, x, 1);
        return detail::HSample{x, tp.h_scaled(), 0.0, tp.h_local_scale()};
    };
    if (endpoint == Endpoint::Lower) {
        const double eps = opt.lower_start;
        return detail::ladder_limit(endpoint, sample, [eps](int j) { return std::ldexp(eps, -j); }, opt,
                                    opt.max_steps_lower);
    }
    const double x0 = opt.upper_start;
    return detail::ladder_limit(endpoint, sample, [x0](int j) { return std::ldexp(x0, j); }, opt,
                                opt.max_steps_upper);
}

//--------------------------------------------------------------------------
// Sign-change location
//--------------------------------------------------------------------------

/// First sign change of `fn` on [lo, hi] by a log-spaced scan followed by
/// geometric bisection. Zero values count as the sign of their left neighbour.
template <class Fn>
std::optional<double> locate_sign_change(Fn&& fn, double lo, double hi, int scan_points = 64,
                                         double rel_width = 1e-10)
{
    if (!(lo > 0.0) || !(hi > lo))
        return std::nullopt;
    const double llo = std::log(lo), lhi = std::log(hi);
    double prev_x = lo;
    double prev_v = fn(lo);
    for (int i = 1; i < scan_points; ++i) {
        const double x = std::exp(llo + (lhi - llo) * i / (scan_points - 1.0));
        const double v = fn(x);
        if ((prev_v > 0 && v < 0) || (prev_v < 0 && v > 0)) {
            double a = prev_x, b = x;
            const double sa = prev_v;
            for (int it = 0; it < 200 && (b - a) > rel_width * b; ++it) {
                const double m = std::sqrt(a * b);
                const double vm = fn(m);
                if (vm == 0.0)
                    return m;
                if ((vm > 0) == (sa > 0))
                    a = m;
                else
                    b = m;
            }
            return std::sqrt(a * b);
        }
        if (v != 0.0) {
            prev_v = v;
        }
        prev_x = x;
    }
    return std::nullopt;
}

} // namespace monoratio
