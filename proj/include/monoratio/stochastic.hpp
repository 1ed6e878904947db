#pragma once

/**
 * @file stochastic.hpp
 * @brief Laplace-Stieltjes transforms of nonnegative random variables and the
 *        Laplace-transform-ratio (Lt-r) order.
 *
 * X <=_{Lt-r} Y means x -> L_Y(x) / L_X(x) is decreasing on (0, inf).
 */

#include "classifier.hpp"
#include "coefficients.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "quadrature.hpp"
#include "ratio_engine.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace monoratio {

enum class VariableKind { Discrete, Continuous };

/// A nonnegative random variable given by a pmf on {0, 1, ...} or a pdf on (0, support].
struct RandomVariableModel {
    VariableKind kind = VariableKind::Discrete;
    std::string name;
    std::vector<double> pmf;                // truncated masses
    std::function<double(int)> log_mass;    // untruncated log p_k for built-in families
    Integrand pdf;
    double support = kInf; // effective support bound of the pdf
    double normalization_check = 0.0;
};

namespace rv {

inline constexpr double kTruncationTail = 1e-12;

/// Discrete model from explicit masses p_0, p_1, ...
inline RandomVariableModel discrete(std::string name, std::vector<double> pmf)
{
    if (pmf.empty())
        throw domain_error("pmf must have at least one mass");
    double total = 0.0;
    for (std::size_t k = 0; k < pmf.size(); ++k) {
        if (!(pmf[k] >= 0.0) || !std::isfinite(pmf[k]))
            throw domain_error("pmf mass at k = " + std::to_string(k) + " is negative or not finite");
        total += pmf[k];
    }
    if (std::abs(total - 1.0) > 1e-6)
        throw domain_error("pmf sums to " + std::to_string(total) + ", not 1");
    RandomVariableModel m;
    m.kind = VariableKind::Discrete;
    m.name = std::move(name);
    m.pmf = std::move(pmf);
    m.normalization_check = total;
    return m;
}

/// Discrete model from a log-mass function, truncated once the remaining mass is below 1e-12.
template <class LogMass>
RandomVariableModel discrete_truncated(std::string name, LogMass&& log_mass, int max_support = 10000000)
{
    std::vector<double> p;
    double total = 0.0;
    for (int k = 0; k < max_support; ++k) {
        const double v = std::exp(log_mass(k));
        p.push_back(v);
        total += v;
        if (1.0 - total < kTruncationTail && k > 0)
            break;
    }
    RandomVariableModel m = discrete(std::move(name), std::move(p));
    m.log_mass = std::forward<LogMass>(log_mass);
    return m;
}

/// P(X = k) = p (1-p)^k
inline RandomVariableModel geometric(double p)
{
    if (!(p > 0.0 && p <= 1.0))
        throw domain_error("geometric needs 0 < p <= 1");
    const double lq = std::log1p(-p);
    const double lp = std::log(p);
    return discrete_truncated("geom:" + std::to_string(p),
                              [lp, lq](int k) { return k == 0 ? lp : lp + k * lq; });
}

/// Size-biased geometric: P(X = k) = p^2 (k+1) (1-p)^k
inline RandomVariableModel size_biased_geometric(double p)
{
    if (!(p > 0.0 && p < 1.0))
        throw domain_error("size-biased geometric needs 0 < p < 1");
    const double lq = std::log1p(-p);
    const double lp = std::log(p);
    return discrete_truncated("sbgeom:" + std::to_string(p),
                              [lp, lq](int k) { return 2.0 * lp + std::log1p(k) + k * lq; });
}

inline RandomVariableModel poisson(double mu)
{
    if (!(mu > 0.0))
        throw domain_error("poisson needs mu > 0");
    const double lmu = std::log(mu);
    return discrete_truncated("poisson:" + std::to_string(mu),
                              [mu, lmu](int k) { return k * lmu - mu - ln_gamma(k + 1.0).value; });
}

/// Continuous model; normalization is checked by quadrature over (0, support].
inline RandomVariableModel continuous(std::string name, Integrand pdf, double support = kInf)
{
    QuadratureOptions opt;
    opt.rel_tol = 1e-10;
    auto f = [&pdf](double t) { return t > 0.0 ? pdf(t) : 0.0; };
    const double total = std::isinf(support) ? integrate_to_infinity(f, 0.0, opt).value : integrate(f, 0.0, support, opt).value;
    if (std::abs(total - 1.0) > 1e-6)
        throw domain_error("pdf integrates to " + std::to_string(total) + ", not 1");
    RandomVariableModel m;
    m.kind = VariableKind::Continuous;
    m.name = std::move(name);
    m.pdf = std::move(pdf);
    m.support = support;
    m.normalization_check = total;
    return m;
}

inline RandomVariableModel exponential(double lambda)
{
    if (!(lambda > 0.0))
        throw domain_error("exponential needs lambda > 0");
    const double ll = std::log(lambda);
    return continuous("exp:" + std::to_string(lambda),
                      {"exp-pdf", [lambda](double t) { return lambda * std::exp(-lambda * t); },
                       [lambda, ll](double t) { return ll - lambda * t; }});
}

/// Gamma with shape k and rate theta.
inline RandomVariableModel gamma(double shape, double rate)
{
    if (!(shape > 0.0) || !(rate > 0.0))
        throw domain_error("gamma needs shape, rate > 0");
    const double norm = shape * std::log(rate) - ln_gamma(shape).value;
    auto lg = [shape, rate, norm](double t) {
        if (t <= 0.0)
            return shape == 1.0 ? norm : (shape > 1.0 ? -kInf : kInf);
        return norm + (shape - 1.0) * std::log(t) - rate * t;
    };
    return continuous("gamma:" + std::to_string(shape) + "," + std::to_string(rate),
                      {"gamma-pdf", [lg](double t) { return std::exp(lg(t)); }, lg});
}

/// Uniform on (0, theta).
inline RandomVariableModel uniform(double theta)
{
    if (!(theta > 0.0))
        throw domain_error("uniform needs theta > 0");
    const double lt = -std::log(theta);
    return continuous("uniform:" + std::to_string(theta),
                      {"uniform-pdf", [theta](double t) { return t <= theta ? 1.0 / theta : 0.0; },
                       [theta, lt](double t) { return t <= theta ? lt : -kInf; }},
                      theta);
}

/// Density proportional to 1/Gamma(a t + b) on (0, inf).
inline RandomVariableModel reciprocal_gamma_weight(double a, double b)
{
    const Integrand w = integrands::recip_gamma(a, b);
    QuadratureOptions opt;
    opt.rel_tol = 1e-12;
    const double z = integrate_to_infinity([&w](double t) { return w(t); }, 0.0, opt).value;
    const double lz = std::log(z);
    return continuous("recip-gamma:" + std::to_string(a) + "," + std::to_string(b),
                      {"recip-gamma-pdf", [w, z](double t) { return w(t) / z; },
                       [w, lz](double t) { return w.log_at(t) - lz; }});
}

} // namespace rv

namespace detail {

/// Masses as coefficients; built-in families keep their full support.
inline CoefficientSource mass_source(const RandomVariableModel& z)
{
    if (z.log_mass)
        return {z.name, [lm = z.log_mass](int k) {
                    const double l = lm(k);
                    return l == -kInf ? SignedLog{} : SignedLog{l, 1};
                }};
    return coeffs::finite(z.pmf, z.name);
}

inline SeriesRatioProblem lt_series(const RandomVariableModel& num, const RandomVariableModel& den)
{
    SeriesRatioProblem p;
    p.a = mass_source(num);
    p.b = mass_source(den);
    p.family = {DiscreteFamilyId::ExpDecayK};
    return p;
}

inline TransformRatioProblem lt_transform(const RandomVariableModel& num, const RandomVariableModel& den)
{
    TransformRatioProblem p;
    p.f = num.pdf;
    p.g = den.pdf;
    p.kernel = {ContinuousKernelId::ExpDecayX, 0.0, std::max(num.support, den.support)};
    return p;
}

} // namespace detail

/// L_Z(x) = E[exp(-x Z)] for x > 0.
inline EvalResult laplace_transform(const RandomVariableModel& z, double x)
{
    if (!(x > 0.0) || std::isinf(x))
        throw domain_error("laplace_transform: x must be a finite positive real");
    if (z.kind == VariableKind::Discrete) {
        SeriesRatioProblem p;
        p.a = detail::mass_source(z);
        p.b = p.a;
        p.family = {DiscreteFamilyId::ExpDecayK};
        return eval_series(p, Side::Numerator, x, 0);
    }
    TransformRatioProblem p;
    p.f = z.pdf;
    p.g = z.pdf;
    p.kernel = {ContinuousKernelId::ExpDecayX, 0.0, z.support};
    return eval_transform(p, Side::Numerator, x, 0);
}

/// L_Y(x) / L_X(x), computed on a common scale so that underflow of both sides is harmless.
inline double laplace_ratio(const RandomVariableModel& y, const RandomVariableModel& x_model, double x)
{
    if (y.kind == VariableKind::Discrete && x_model.kind == VariableKind::Discrete)
        return eval_series_ratio(detail::lt_series(y, x_model), x);
    return laplace_transform(y, x).value / laplace_transform(x_model, x).value;
}

enum class OrderRelation { X_le_ltr_Y, Y_le_ltr_X, Neither, Inconclusive };

inline std::string_view to_string(OrderRelation r)
{
    switch (r) {
    case OrderRelation::X_le_ltr_Y: return "X_le_ltr_Y";
    case OrderRelation::Y_le_ltr_X: return "Y_le_ltr_X";
    case OrderRelation::Neither: return "Neither";
    case OrderRelation::Inconclusive: return "Inconclusive";
    }
    return "?";
}

struct OrderVerdict {
    OrderRelation relation = OrderRelation::Inconclusive;
    std::string provenance = "numeric-fallback";
    std::vector<LimitEstimate> diagnostics;
    std::vector<std::string> notes;
    std::optional<OrderRelation> fallback_relation; // set when the fallback ran
    std::optional<Pattern> fallback_pattern;

    /// True when a theorem verdict and the fallback point in opposite directions.
    bool theorem_contradicted() const
    {
        if (provenance == "numeric-fallback" || !fallback_relation)
            return false;
        return (relation == OrderRelation::X_le_ltr_Y && *fallback_relation == OrderRelation::Y_le_ltr_X) ||
               (relation == OrderRelation::Y_le_ltr_X && *fallback_relation == OrderRelation::X_le_ltr_Y);
    }
};

struct OrderOptions {
    bool always_fallback = false; // also run the grid check when a theorem condition fires
    int fallback_n = 512;
    double fallback_lo = 1e-4;
    double fallback_hi = 1e4;
    PredictOptions predict;
};

namespace detail {

inline void run_order_fallback(OrderVerdict& v, const RandomVariableModel& X, const RandomVariableModel& Y,
                               const OrderOptions& opt)
{
    try {
        const ObservedPattern obs = detect_pattern([&](double x) { return laplace_ratio(Y, X, x); }, opt.fallback_lo,
                                                   opt.fallback_hi, std::max(64, opt.fallback_n), 1e-9, Spacing::Log);
        v.fallback_pattern = obs.pattern;
        switch (obs.pattern) {
        case Pattern::Decreasing: v.fallback_relation = OrderRelation::X_le_ltr_Y; break;
        case Pattern::Increasing: v.fallback_relation = OrderRelation::Y_le_ltr_X; break;
        case Pattern::Constant: v.fallback_relation = OrderRelation::X_le_ltr_Y; break;
        default: v.fallback_relation = OrderRelation::Neither; break;
        }
    } catch (const std::exception& e) {
        v.fallback_relation = OrderRelation::Inconclusive;
        v.notes.push_back(std::string("fallback evaluation failed: ") + e.what());
    }
}

} // namespace detail

/**
 * Decide the Lt-r order between X and Y. Condition (i): p_k/q_k (f_X/f_Y)
 * monotone. Condition (ii): unimodal ratio with the sign of H_{L_X,L_Y}(0+).
 * Otherwise the ratio L_Y/L_X is sampled on a log grid.
 */
inline OrderVerdict lt_ratio_order(const RandomVariableModel& X, const RandomVariableModel& Y,
                                   const OrderOptions& opt = {})
{
    OrderVerdict v;
    std::optional<MonotonicityVerdict> mv;
    std::string prefix;
    if (X.kind != Y.kind) {
        v.notes.push_back("mixed discrete/continuous comparison; theorem conditions do not apply");
    } else {
        PredictOptions po = opt.predict;
        po.numeric_fallback = false;
        try {
            if (X.kind == VariableKind::Discrete) {
                mv = predict_series_ratio(detail::lt_series(X, Y), po);
                prefix = "lt-order-discrete-theorem";
            } else {
                mv = predict_transform_ratio(detail::lt_transform(X, Y), po);
                prefix = "lt-order-continuous-theorem";
            }
        } catch (const std::exception& e) {
            v.notes.push_back(std::string("theorem path failed: ") + e.what());
        }
    }

    bool decided = false;
    if (mv) {
        v.diagnostics = mv->endpoint_diagnostics;
        for (const auto& n : mv->notes)
            v.notes.push_back(n);
        const std::string& pv = mv->provenance;
        const bool cond_i = pv == "series-monotone-rule" || pv == "transform-monotone-rule";
        const bool cond_ii = pv == "series-unimodal-lower-end-rule(i)" || pv == "transform-unimodal-lower-end-rule(i)";
        // L_X / L_Y decreasing means L_Y / L_X increasing: Y <=_{Lt-r} X.
        if ((cond_i || cond_ii) && mv->pattern == Pattern::Decreasing) {
            v.relation = OrderRelation::Y_le_ltr_X;
            decided = true;
        } else if ((cond_i || cond_ii) && mv->pattern == Pattern::Increasing) {
            v.relation = OrderRelation::X_le_ltr_Y;
            decided = true;
        } else if (cond_i && mv->pattern == Pattern::Constant) {
            v.relation = OrderRelation::X_le_ltr_Y;
            v.notes.push_back("L_Y/L_X is constant: both orders hold (symmetric case)");
            decided = true;
        }
        if (decided)
            v.provenance = prefix + (cond_i ? "(i)" : "(ii)");
    }

    if (!decided || opt.always_fallback)
        detail::run_order_fallback(v, X, Y, opt);
    if (!decided) {
        v.provenance = "numeric-fallback";
        v.relation = v.fallback_relation.value_or(OrderRelation::Inconclusive);
        v.notes.push_back("grid-supported on [" + detail::fmt(opt.fallback_lo) + ", " + detail::fmt(opt.fallback_hi) +
                          "], not proven");
        if (v.fallback_pattern == Pattern::Constant)
            v.notes.push_back("L_Y/L_X is constant: both orders hold (symmetric case)");
    }
    return v;
}

} // namespace monoratio
