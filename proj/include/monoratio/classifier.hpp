#pragma once

/**
 * @file classifier.hpp
 * @brief Region partition of (a, b, c, d), gamma-ratio monotonicity,
 *        coefficient-ratio shapes and the rule dispatch that turns them into
 *        verdicts for series and transform ratios.
 */

#include "coefficients.hpp"
#include "errors.hpp"
#include "kernels.hpp"
#include "oracle.hpp"
#include "ratio_engine.hpp"
#include "specfun.hpp"
#include "verdict.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace monoratio {

//--------------------------------------------------------------------------
// Regions
//--------------------------------------------------------------------------

enum class Region { D1, D2, D3, D4, D5, D6, D7 };

inline std::string_view to_string(Region r)
{
    static constexpr std::string_view names[] = {"D1", "D2", "D3", "D4", "D5", "D6", "D7"};
    return names[static_cast<int>(r)];
}

inline std::optional<Region> parse_region(std::string_view s)
{
    for (int i = 0; i < 7; ++i)
        if (to_string(static_cast<Region>(i)) == s)
            return static_cast<Region>(i);
    return std::nullopt;
}

/// c psi(d) - a psi(b), with the zero band used for region decisions.
struct PsiExpression {
    double value;
    double band;
};

inline PsiExpression psi_expression(double a, double b, double c, double d)
{
    const double cp = c * digamma(d).value;
    const double ap = a * digamma(b).value;
    return {cp - ap, 1e-10 * (std::abs(cp) + std::abs(ap))};
}

inline Region classify_region(double a, double b, double c, double d)
{
    detail::require_positive(a, "a");
    detail::require_positive(b, "b");
    detail::require_positive(c, "c");
    detail::require_positive(d, "d");
    if (a == c)
        return Region::D1;
    if (a > c) {
        if (d <= b)
            return Region::D2;
        const auto e = psi_expression(a, b, c, d);
        return e.value > e.band ? Region::D4 : Region::D3;
    }
    if (b <= d)
        return Region::D5;
    const auto e = psi_expression(a, b, c, d);
    return e.value < -e.band ? Region::D7 : Region::D6;
}

/// Q(t) = c psi(ct + d) - a psi(at + b), the log-derivative of Gamma(ct+d)/Gamma(at+b).
inline double q_function(double a, double b, double c, double d, double t)
{
    return c * digamma(c * t + d).value - a * digamma(a * t + b).value;
}

/// log Gamma(ct + d) - log Gamma(at + b).
inline double gamma_ratio_log(double a, double b, double c, double d, double t)
{
    return ln_gamma(c * t + d).value - ln_gamma(a * t + b).value;
}

/**
 * Root of Q on (0, inf). The sign scan starts on 2^j, j = -10..10, and then
 * widens geometrically towards 1e-300 and 1e300; the bracket is bisected to
 * absolute width 1e-10 (or until the midpoint no longer moves).
 */
inline double find_turning_point(double a, double b, double c, double d)
{
    if (a == c)
        throw bracket_error("find_turning_point: Q keeps one sign when a = c");
    auto q = [&](double t) { return q_function(a, b, c, d, t); };
    auto sgn = [](double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };

    std::optional<std::pair<double, double>> bracket;
    double prev_t = std::ldexp(1.0, -10);
    double prev_q = q(prev_t);
    if (prev_q == 0.0)
        return prev_t;
    for (int j = -9; j <= 10 && !bracket; ++j) {
        const double t = std::ldexp(1.0, j);
        const double v = q(t);
        if (v == 0.0)
            return t;
        if (sgn(v) != sgn(prev_q))
            bracket = std::make_pair(prev_t, t);
        prev_t = t;
        prev_q = v;
    }
    if (!bracket) {
        const int s_lo = sgn(q(std::ldexp(1.0, -10)));
        const int s_hi = prev_q > 0 ? 1 : -1;
        double lo_prev = std::ldexp(1.0, -10), hi_prev = std::ldexp(1.0, 10);
        for (int j = 11; j <= 996 && !bracket; ++j) {
            const double tl = std::ldexp(1.0, -j);
            const double th = std::ldexp(1.0, j);
            // A strict flip is required: far out, Q can cancel to an exact zero.
            if (sgn(q(tl)) == -s_lo) {
                bracket = std::make_pair(tl, lo_prev);
                break;
            }
            if (sgn(q(th)) == -s_hi) {
                bracket = std::make_pair(hi_prev, th);
                break;
            }
            lo_prev = tl;
            hi_prev = th;
        }
    }
    if (!bracket)
        throw bracket_error("find_turning_point: Q has no sign change on (1e-300, 1e300)");

    double lo = bracket->first, hi = bracket->second;
    const int s_lo = sgn(q(lo));
    for (int it = 0; it < 400 && hi - lo > 1e-10; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const double v = q(mid);
        if (v == 0.0)
            return mid;
        if (sgn(v) == s_lo)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

/// Pattern of t -> Gamma(ct+d)/Gamma(at+b) on (0, inf).
inline MonotonicityVerdict gamma_ratio_pattern(double a, double b, double c, double d)
{
    MonotonicityVerdict v;
    const Region r = classify_region(a, b, c, d);
    switch (r) {
    case Region::D1:
        v.pattern = d > b ? Pattern::Increasing : (d < b ? Pattern::Decreasing : Pattern::Constant);
        v.provenance = "gamma-ratio-lemma(i)";
        break;
    case Region::D2:
    case Region::D3:
        v.pattern = Pattern::Decreasing;
        v.provenance = "gamma-ratio-lemma(ii)";
        break;
    case Region::D5:
    case Region::D6:
        v.pattern = Pattern::Increasing;
        v.provenance = "gamma-ratio-lemma(iv)";
        break;
    case Region::D4:
    case Region::D7: {
        const bool d4 = r == Region::D4;
        v.provenance = d4 ? "gamma-ratio-lemma(iii)" : "gamma-ratio-lemma(v)";
        try {
            v.turning_point = find_turning_point(a, b, c, d);
            v.pattern = d4 ? Pattern::IncThenDec : Pattern::DecThenInc;
        } catch (const bracket_error& e) {
            // The turning point lies beyond double range; only one piece is visible.
            v.pattern = d4 ? Pattern::Decreasing : Pattern::Increasing;
            v.notes.push_back(e.what());
        }
        break;
    }
    }
    return v;
}

/// Restrict a verdict on (0, inf) to the interval [lo, hi].
inline MonotonicityVerdict restrict_verdict(MonotonicityVerdict v, double lo, double hi)
{
    if (is_unimodal(v.pattern) && v.turning_point) {
        if (*v.turning_point <= lo) {
            v.pattern = trailing_piece(v.pattern);
            v.turning_point.reset();
            v.notes.push_back("turning point below the interval");
        } else if (*v.turning_point >= hi) {
            v.pattern = leading_piece(v.pattern);
            v.turning_point.reset();
            v.notes.push_back("turning point above the interval");
        }
    }
    return v;
}

//--------------------------------------------------------------------------
// Coefficient-ratio shapes
//--------------------------------------------------------------------------

struct CoefficientShape {
    Pattern kind = Pattern::Other;
    std::optional<int> m; // change index for the unimodal kinds
    int scan_horizon = 0;
    std::string note;
};

namespace detail {

/// Point at which the tail of a series is probed.
inline double tail_probe_point(const DiscreteKernelFamily& fam)
{
    if (std::isfinite(fam.r))
        return 0.5 * fam.r;
    switch (fam.id) {
    case DiscreteFamilyId::InversePowerK:
    case DiscreteFamilyId::DirichletK: return 2.0;
    default: return 1.0;
    }
}

/// Shape of a sequence of values, with plateaus (relative 1e-12) ignored.
/// `logs` says the values are logarithms of positive ratios. `noise`, when
/// given, is a per-entry rounding estimate that widens the plateau band.
inline CoefficientShape shape_of(const std::vector<std::pair<int, double>>& seq, bool logs,
                                 const std::vector<double>& noise = {})
{
    CoefficientShape out;
    std::vector<int> signs;
    std::vector<std::size_t> at; // index into seq of the right end of each nonzero step
    auto band_at = [&](std::size_t i, std::size_t j, double x, double y) {
        double band = logs ? 1e-12 : 1e-12 * std::max(std::abs(x), std::abs(y));
        if (!noise.empty())
            band = std::max(band, noise[i] + noise[j]);
        return band;
    };
    for (std::size_t i = 1; i < seq.size(); ++i) {
        const double x = seq[i - 1].second, y = seq[i].second;
        const double diff = y - x;
        const double band = band_at(i - 1, i, x, y);
        if (std::abs(diff) <= band || (std::isinf(x) && x == y))
            continue;
        signs.push_back(diff > 0 ? 1 : -1);
        at.push_back(i);
    }
    int changes = 0;
    for (std::size_t i = 1; i < signs.size(); ++i)
        if (signs[i] != signs[i - 1])
            ++changes;
    if (signs.empty()) {
        out.kind = Pattern::Constant;
    } else if (changes == 0) {
        out.kind = signs.front() > 0 ? Pattern::Increasing : Pattern::Decreasing;
    } else if (changes == 1) {
        out.kind = signs.front() > 0 ? Pattern::IncThenDec : Pattern::DecThenInc;
        // m: first index of the extreme value.
        std::size_t best = 0;
        for (std::size_t i = 1; i < seq.size(); ++i) {
            const double y = seq[i].second, b = seq[best].second;
            const double band = band_at(i, best, y, b);
            if (out.kind == Pattern::IncThenDec ? y > b + band : y < b - band)
                best = i;
        }
        out.m = seq[best].first;
    } else {
        out.kind = Pattern::Other;
    }
    return out;
}

} // namespace detail

/**
 * Shape of k -> a_k / b_k. For infinite sequences the horizon doubles (up to
 * max_horizon) until |a_k w_k| + |b_k w_k| at the probe point has fallen below
 * tol relative to its peak; the ratios themselves are always scanned out to
 * max_horizon, since a direction change can sit past the point where the
 * terms become negligible at the probe.
 */
inline CoefficientShape coefficient_ratio_shape(const SeriesRatioProblem& p, int horizon = 64,
                                                int max_horizon = 1024)
{
    if (horizon < 2)
        throw domain_error("coefficient_ratio_shape: horizon must be at least 2");
    const double t_probe = detail::tail_probe_point(p.family);
    const auto la = p.a.length(), lb = p.b.length();
    const bool finite = la && lb;
    const int finite_len = finite ? std::max(*la, *lb) : 0;

    for (int h = horizon;; h *= 2) {
        const int last = finite ? std::min(finite_len - 1, h) : std::max(h, max_horizon);
        std::vector<std::pair<int, double>> logs, vals;
        std::vector<double> log_noise;
        bool all_positive = true;
        double peak = -kInf, tail = -kInf;
        for (int k = 0; k <= last; ++k) {
            const SignedLog ak = p.a.log_at(k), bk = p.b.log_at(k);
            if (bk.sign == 0) {
                if (ak.sign == 0)
                    continue;
                CoefficientShape out;
                out.scan_horizon = h;
                out.note = "b_k = 0 with a_k != 0 at k = " + std::to_string(k);
                return out;
            }
            if (bk.sign < 0) {
                CoefficientShape out;
                out.scan_horizon = h;
                out.note = "b_k < 0 at k = " + std::to_string(k);
                return out;
            }
            if (ak.sign <= 0)
                all_positive = false;
            logs.emplace_back(k, ak.sign > 0 ? ak.log_abs - bk.log_abs : 0.0);
            log_noise.push_back(4.0 * detail::kEps * (std::abs(ak.log_abs) + std::abs(bk.log_abs)));
            vals.emplace_back(k, ak.sign == 0 ? 0.0 : ak.sign * std::exp(ak.log_abs - bk.log_abs));

            if (!finite && k <= h) {
                const SignedLog w = eval_discrete_log(p.family, k, t_probe, 0);
                if (w.sign != 0) {
                    const double ma = ak.sign ? ak.log_abs + w.log_abs : -kInf;
                    const double mb = bk.log_abs + w.log_abs;
                    const double hi = std::max(ma, mb);
                    const double m = hi + std::log1p(std::exp(std::min(ma, mb) - hi));
                    peak = std::max(peak, m);
                    if (k == h)
                        tail = m;
                } else if (k == h) {
                    tail = -kInf;
                }
            }
        }
        const bool tail_ok = finite || tail == -kInf || tail - peak < std::log(p.tol);
        if (tail_ok || h >= max_horizon) {
            CoefficientShape out = all_positive ? detail::shape_of(logs, true, log_noise) : detail::shape_of(vals, false);
            out.scan_horizon = h;
            if (!tail_ok) {
                out.kind = Pattern::Other;
                out.m.reset();
                out.note = "tail has not decayed below tol by k = " + std::to_string(h);
            }
            return out;
        }
    }
}

/**
 * Shape of k -> Gamma(ck+d)/Gamma(ak+b). In D4 and D7 the sequence changes
 * direction at an index m >= 1 only when the continuous turning point leaves
 * room for it; otherwise it is monotone from k = 0.
 */
inline CoefficientShape gamma_sequence_shape(double a, double b, double c, double d)
{
    CoefficientShape out;
    const MonotonicityVerdict cont = gamma_ratio_pattern(a, b, c, d);
    out.kind = cont.pattern;
    if (!is_unimodal(cont.pattern))
        return out;
    auto lr = [&](int k) { return gamma_ratio_log(a, b, c, d, k); };
    const double tstar = *cont.turning_point;
    const bool peak = cont.pattern == Pattern::IncThenDec;
    if (tstar > 1e8) {
        out.m = 100000000;
        out.note = "turning point beyond 1e8; change index capped";
        return out;
    }
    // Integer extremum: floor or ceil of t*, ties to the smaller index.
    const int k0 = static_cast<int>(std::floor(tstar));
    int m = k0;
    if (peak ? lr(k0 + 1) > lr(k0) : lr(k0 + 1) < lr(k0))
        m = k0 + 1;
    if (m == 0) {
        out.kind = peak ? Pattern::Decreasing : Pattern::Increasing;
        out.note = "change index would be 0 (t* = " + std::to_string(tstar) + "); sequence is monotone";
        return out;
    }
    out.m = m;
    return out;
}

//--------------------------------------------------------------------------
// Rule dispatch
//--------------------------------------------------------------------------

struct PredictOptions {
    int horizon = 64;
    int max_horizon = 1024;
    LadderOptions ladder;
    bool numeric_fallback = true;
    int fallback_n = 512;
    std::optional<double> lo; // numeric fallback interval
    std::optional<double> hi;
};

/// Provenance strings for the outcomes of one rule family.
struct RuleLabels {
    std::string constant;
    std::string monotone;
    std::string upper_monotone;
    std::string upper_unimodal;
    std::string lower_monotone;
    std::string lower_unimodal;
};

inline RuleLabels series_rule_labels()
{
    return {"series-monotone-rule",
            "series-monotone-rule",
            "series-unimodal-upper-end-rule(i)",
            "series-unimodal-upper-end-rule(ii)",
            "series-unimodal-lower-end-rule(i)",
            "series-unimodal-lower-end-rule(ii)"};
}

inline RuleLabels transform_rule_labels()
{
    return {"transform-monotone-rule",
            "transform-monotone-rule",
            "transform-unimodal-upper-end-rule(i)",
            "transform-unimodal-upper-end-rule(ii)",
            "transform-unimodal-lower-end-rule(i)",
            "transform-unimodal-lower-end-rule(ii)"};
}

namespace detail {

struct RuleContext {
    Pattern shape = Pattern::Other;
    bool same = false;        // DW11 / CW11
    bool flip = false;        // DW12 / CW12
    bool upper_rule = false;  // DW2 / CW2
    bool lower_rule = false;  // DW3 / CW3
    std::function<LimitEstimate(Endpoint)> limit;
    std::function<int(double)> h_sign; // sign of H at a point; throws when undefined
    double search_lo = 1e-9;
    double search_hi = 16.0;
    double search_max = 1e6;
    double radius = kInf;     // finite for series on (0, r)
    RuleLabels labels;
};

/// First sign change of H, widening the window by 16x until evaluation fails.
inline std::optional<double> search_h_sign_change(const std::function<int(double)>& h_sign, double lo,
                                                  double hi, double hi_max, double reflect_at = kInf)
{
    bool any_ok = false;
    auto fn = [&](double x) -> double {
        try {
            const int s = h_sign(x);
            any_ok = true;
            return s;
        } catch (const std::exception&) {
            return 0.0;
        }
    };
    hi = std::min(hi, hi_max);
    if (std::isfinite(reflect_at)) {
        // Log spacing is too coarse next to a finite radius, so the upper half
        // is scanned in the distance r - t. One change is expected there.
        const double mid = 0.5 * reflect_at;
        if (auto r = locate_sign_change(fn, lo, mid, 64, 1e-10))
            return r;
        auto fu = [&](double u) { return fn(reflect_at - u); };
        if (auto u = locate_sign_change(fu, reflect_at - hi, mid, 64, 1e-10))
            return reflect_at - *u;
        return std::nullopt;
    }
    while (true) {
        any_ok = false;
        if (auto r = locate_sign_change(fn, lo, hi, 64, 1e-10))
            return r;
        if (!any_ok || hi >= hi_max)
            return std::nullopt;
        lo = hi;
        hi = std::min(hi * 16.0, hi_max);
    }
}

inline MonotonicityVerdict apply_rules(const RuleContext& cx)
{
    MonotonicityVerdict v;
    const Pattern s = cx.shape;
    if (s == Pattern::Constant) {
        v.pattern = Pattern::Constant;
        v.provenance = cx.labels.constant;
        return v;
    }
    if (is_monotone(s)) {
        if (cx.same) {
            v.pattern = s;
            v.provenance = cx.labels.monotone;
        } else if (cx.flip) {
            v.pattern = flipped(s);
            v.provenance = cx.labels.monotone;
        } else {
            v.notes.push_back("kernel has no declared class that transfers a monotone ratio");
        }
        return v;
    }
    if (!is_unimodal(s)) {
        v.notes.push_back("coefficient ratio shape is " + std::string(to_string(s)));
        return v;
    }
    const bool peak = s == Pattern::IncThenDec;
    if (cx.upper_rule) {
        const LimitEstimate est = cx.limit(Endpoint::Upper);
        v.endpoint_diagnostics.push_back(est);
        if (est.confidence == Confidence::Failed) {
            v.notes.push_back("upper endpoint limit of H failed: " + est.note);
            return v;
        }
        if (peak ? est.nonnegative() : est.nonpositive()) {
            v.pattern = peak ? Pattern::Increasing : Pattern::Decreasing;
            v.provenance = cx.labels.upper_monotone;
        } else {
            v.pattern = s;
            v.provenance = cx.labels.upper_unimodal;
        }
    } else if (cx.lower_rule) {
        const LimitEstimate est = cx.limit(Endpoint::Lower);
        v.endpoint_diagnostics.push_back(est);
        if (est.confidence == Confidence::Failed) {
            v.notes.push_back("lower endpoint limit of H failed: " + est.note);
            return v;
        }
        if (peak ? est.nonnegative() : est.nonpositive()) {
            v.pattern = peak ? Pattern::Decreasing : Pattern::Increasing;
            v.provenance = cx.labels.lower_monotone;
        } else {
            v.pattern = s;
            v.provenance = cx.labels.lower_unimodal;
        }
    } else {
        v.notes.push_back("kernel has no declared class for a unimodal ratio");
        return v;
    }
    if (!v.endpoint_diagnostics.empty() && v.endpoint_diagnostics.back().confidence == Confidence::Extrapolated)
        v.notes.push_back("endpoint limit of H is extrapolated, not converged");

    if (is_unimodal(v.pattern)) {
        v.turning_point = search_h_sign_change(cx.h_sign, cx.search_lo, cx.search_hi, cx.search_max, cx.radius);
        if (!v.turning_point) {
            v.notes.push_back("sign change of H not located; verdict withheld");
            v.pattern = Pattern::Inconclusive;
            v.provenance = "numeric-only";
        }
    }
    return v;
}

inline int sign_of(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

inline RuleContext series_context(const SeriesRatioProblem& p, Pattern shape, const PredictOptions& opt)
{
    const ClassMembership cls = declared_classes(AnyKernel{p.family});
    RuleContext cx;
    cx.shape = shape;
    cx.same = cls.has(KernelClass::DW11);
    cx.flip = cls.has(KernelClass::DW12);
    cx.upper_rule = cls.has(KernelClass::DW2);
    cx.lower_rule = cls.has(KernelClass::DW3);
    cx.limit = [p, ladder = opt.ladder](Endpoint e) { return endpoint_limit_H_series(p, e, ladder); };
    cx.h_sign = [p](double t) { return sign_of(eval_series_point(p, t, 1).h_scaled()); };
    const double r = p.family.r;
    if (std::isfinite(r)) {
        cx.search_lo = 1e-9 * r;
        cx.search_hi = cx.search_max = r * (1.0 - 1e-9);
        cx.radius = r;
    }
    cx.labels = series_rule_labels();
    return cx;
}

inline RuleContext transform_context(const TransformRatioProblem& p, Pattern shape, const PredictOptions& opt)
{
    const ClassMembership cls = declared_classes(AnyKernel{p.kernel});
    RuleContext cx;
    cx.shape = shape;
    cx.same = cls.has(KernelClass::CW11);
    cx.flip = cls.has(KernelClass::CW12);
    cx.upper_rule = cls.has(KernelClass::CW2);
    cx.lower_rule = cls.has(KernelClass::CW3);
    cx.limit = [p, ladder = opt.ladder](Endpoint e) { return endpoint_limit_H_transform(p, e, ladder); };
    cx.h_sign = [p](double x) { return sign_of(eval_transform_point(p, x, 1).h_scaled()); };
    cx.search_lo = 1e-8;
    cx.search_hi = 16.0;
    cx.search_max = 1e6;
    cx.labels = transform_rule_labels();
    return cx;
}

inline std::pair<double, double> series_fallback_interval(const SeriesRatioProblem& p, const PredictOptions& opt)
{
    const double r = p.family.r;
    const double lo = opt.lo.value_or(std::isfinite(r) ? 1e-3 * r : 1e-3);
    const double hi = opt.hi.value_or(std::isfinite(r) ? 0.999 * r : 1e2);
    return {lo, hi};
}

inline std::pair<double, double> transform_fallback_interval(const PredictOptions& opt)
{
    return {opt.lo.value_or(1e-3), opt.hi.value_or(1e2)};
}

template <class Fn>
void attach_numeric_pattern(MonotonicityVerdict& v, Fn&& ratio, double lo, double hi, const PredictOptions& opt)
{
    if (!opt.numeric_fallback || v.provenance != "numeric-only")
        return;
    try {
        const ObservedPattern obs = detect_pattern(ratio, lo, hi, std::max(64, opt.fallback_n));
        v.numeric_pattern = obs.pattern;
        std::string msg = "numeric fallback on [" + fmt(lo) + ", " + fmt(hi) + "]: " + std::string(to_string(obs.pattern));
        for (double cp : obs.change_points)
            msg += " change@" + fmt(cp);
        v.notes.push_back(msg);
    } catch (const std::exception& e) {
        v.notes.push_back(std::string("numeric fallback failed: ") + e.what());
    }
}

} // namespace detail

/// Verdict for t -> A(t)/B(t) from the coefficient-ratio shape and the family's classes.
inline MonotonicityVerdict predict_series_ratio(const SeriesRatioProblem& p, const PredictOptions& opt = {})
{
    const CoefficientShape shape = coefficient_ratio_shape(p, opt.horizon, opt.max_horizon);
    MonotonicityVerdict v = detail::apply_rules(detail::series_context(p, shape.kind, opt));
    std::string sn = "coefficient ratio shape " + std::string(to_string(shape.kind));
    if (shape.m)
        sn += " (m = " + std::to_string(*shape.m) + ")";
    if (!shape.note.empty())
        sn += "; " + shape.note;
    v.notes.insert(v.notes.begin(), sn);
    const auto [lo, hi] = detail::series_fallback_interval(p, opt);
    detail::attach_numeric_pattern(v, [&p](double t) { return eval_series_ratio(p, t); }, lo, hi, opt);
    return v;
}

/// Shape of t -> f(t)/g(t) on the kernel's interval by dense sampling.
inline ObservedPattern integrand_ratio_shape(const TransformRatioProblem& p, int n = 2048)
{
    const double alpha = p.kernel.alpha;
    auto logratio = [&p](double t) {
        const double lf = p.f.log_at(t), lg = p.g.log_at(t);
        if (!std::isfinite(lf) || !std::isfinite(lg))
            throw domain_error("f or g is not positive at t = " + std::to_string(t));
        return lf - lg;
    };
    if (p.improper()) {
        // Offsets from alpha on a log grid.
        return detect_pattern([&](double s) { return logratio(alpha + s); }, 1e-6, 1e3, n, 1e-9, Spacing::Log);
    }
    const double lo = alpha, hi = p.kernel.beta;
    const double pad = 1e-9 * (hi - lo);
    return detect_pattern(logratio, lo + pad, hi - pad, n, 1e-9, Spacing::Linear);
}

/// Verdict for x -> F(x)/G(x) with F, G integral transforms of f, g.
inline MonotonicityVerdict predict_transform_ratio(const TransformRatioProblem& p, const PredictOptions& opt = {})
{
    Pattern shape = Pattern::Other;
    std::string sn;
    try {
        const ObservedPattern obs = integrand_ratio_shape(p);
        // Log-ratio noise is relative to |log(f/g)|; treat a zero log-ratio as Constant.
        shape = obs.pattern;
        sn = "integrand ratio shape " + std::string(to_string(shape));
        for (double cp : obs.change_points)
            sn += " change@" + detail::fmt(cp + (p.improper() ? p.kernel.alpha : 0.0));
    } catch (const std::exception& e) {
        sn = std::string("integrand ratio shape undetermined: ") + e.what();
    }
    MonotonicityVerdict v = detail::apply_rules(detail::transform_context(p, shape, opt));
    v.notes.insert(v.notes.begin(), sn);
    const auto [lo, hi] = detail::transform_fallback_interval(opt);
    detail::attach_numeric_pattern(v, [&p](double x) { return eval_transform_ratio(p, x); }, lo, hi, opt);
    return v;
}

//--------------------------------------------------------------------------
// Reciprocal-gamma ratios
//--------------------------------------------------------------------------

/// Series problem sum w_k / Gamma(ak+b) over sum w_k / Gamma(ck+d).
inline SeriesRatioProblem de_series_problem(double a, double b, double c, double d, const DiscreteKernelFamily& fam)
{
    SeriesRatioProblem p;
    p.a = coeffs::recip_gamma(a, b);
    p.b = coeffs::recip_gamma(c, d);
    p.family = fam;
    return p;
}

/// Transform problem with integrands 1/Gamma(at+b) and 1/Gamma(ct+d).
inline TransformRatioProblem de_transform_problem(double a, double b, double c, double d, const ContinuousKernel& ker)
{
    TransformRatioProblem p;
    p.f = integrands::recip_gamma(a, b);
    p.g = integrands::recip_gamma(c, d);
    p.kernel = ker;
    return p;
}

namespace detail {

/// Case labels of the reciprocal-gamma theorems for a region and the class used.
inline RuleLabels de_labels(std::string_view prefix, Region r, bool flip_class)
{
    auto L = [&](std::string_view c) { return std::string(prefix) + "(" + std::string(c) + ")"; };
    RuleLabels l;
    switch (r) {
    case Region::D1: l.constant = l.monotone = L(flip_class ? "ii" : "i"); break;
    case Region::D2:
    case Region::D3: l.constant = l.monotone = L("iii"); break;
    case Region::D5:
    case Region::D6: l.constant = l.monotone = L("vi"); break;
    case Region::D4:
        l.upper_monotone = l.upper_unimodal = L("iv");
        l.lower_monotone = l.lower_unimodal = L("v");
        l.monotone = std::string(prefix == "reciprocal-gamma-series-theorem" ? "series" : "transform") +
                     "-monotone-rule";
        break;
    case Region::D7:
        l.upper_monotone = l.upper_unimodal = L("vii");
        l.lower_monotone = l.lower_unimodal = L("viii");
        l.monotone = std::string(prefix == "reciprocal-gamma-series-theorem" ? "series" : "transform") +
                     "-monotone-rule";
        break;
    }
    return l;
}

inline std::string region_note(Region r) { return "region " + std::string(to_string(r)); }

} // namespace detail

/**
 * Verdict for the ratio of reciprocal-gamma series (discrete family) or
 * transforms (continuous kernel). The numerator uses (a, b).
 */
inline MonotonicityVerdict predict_de_ratio(double a, double b, double c, double d, const AnyKernel& kernel,
                                            const PredictOptions& opt = {})
{
    const Region region = classify_region(a, b, c, d);

    if (const auto* fam = std::get_if<DiscreteKernelFamily>(&kernel)) {
        const SeriesRatioProblem p = de_series_problem(a, b, c, d, *fam);
        const CoefficientShape shape = gamma_sequence_shape(a, b, c, d);
        detail::RuleContext cx = detail::series_context(p, shape.kind, opt);
        const bool power = fam->id == DiscreteFamilyId::PowerK && std::isinf(fam->r);
        cx.labels = detail::de_labels("reciprocal-gamma-series-theorem", region, cx.flip && !cx.same);

        MonotonicityVerdict v;
        if (power && is_unimodal(shape.kind)) {
            // For t^k on (0, inf) the unimodal cases are settled without an endpoint test.
            v.pattern = shape.kind;
            v.provenance = region == Region::D4 ? "mittag-leffler-corollary(iii)" : "mittag-leffler-corollary(v)";
            const LimitEstimate est = cx.limit(Endpoint::Upper);
            v.endpoint_diagnostics.push_back(est);
            const bool peak = shape.kind == Pattern::IncThenDec;
            if (est.confidence != Confidence::Failed && (peak ? est.nonnegative() : est.nonpositive()))
                v.notes.push_back("H at the working upper bound has sign " + std::string(to_string(est.sign)) +
                                  ", contrary to the corollary");
            v.turning_point =
                detail::search_h_sign_change(cx.h_sign, cx.search_lo, cx.search_hi, cx.search_max, cx.radius);
            if (!v.turning_point) {
                v.notes.push_back("sign change of H not located; verdict withheld");
                v.pattern = Pattern::Inconclusive;
                v.provenance = "numeric-only";
            }
        } else {
            v = detail::apply_rules(cx);
        }
        v.notes.insert(v.notes.begin(), detail::region_note(region));
        if (!shape.note.empty())
            v.notes.push_back(shape.note);
        if (region == Region::D7)
            v.notes.push_back("D7 sequence case read as decreasing-then-increasing (printed statement repeats "
                              "\"decreasing\")");
        const auto [lo, hi] = detail::series_fallback_interval(p, opt);
        detail::attach_numeric_pattern(v, [&p](double t) { return eval_series_ratio(p, t); }, lo, hi, opt);
        return v;
    }

    const auto& ker = std::get<ContinuousKernel>(kernel);
    const TransformRatioProblem p = de_transform_problem(a, b, c, d, ker);
    const double beta = ker.beta;
    MonotonicityVerdict f_over_g = gamma_ratio_pattern(a, b, c, d);
    f_over_g = restrict_verdict(f_over_g, ker.alpha, beta);
    detail::RuleContext cx = detail::transform_context(p, f_over_g.pattern, opt);
    const bool laplace = ker.id == ContinuousKernelId::ExpDecayX && ker.alpha == 0.0 && std::isinf(beta);
    cx.labels = detail::de_labels(laplace ? "reciprocal-gamma-laplace-corollary" : "reciprocal-gamma-transform-theorem",
                                  region, cx.flip && !cx.same);
    if (laplace) {
        // The corollary numbers its cases (i)..(v) by region.
        RuleLabels& l = cx.labels;
        const std::string pre = "reciprocal-gamma-laplace-corollary";
        switch (region) {
        case Region::D1: l.constant = l.monotone = pre + "(i)"; break;
        case Region::D2:
        case Region::D3: l.constant = l.monotone = pre + "(ii)"; break;
        case Region::D4: l.lower_monotone = l.lower_unimodal = pre + "(iii)"; break;
        case Region::D5:
        case Region::D6: l.constant = l.monotone = pre + "(iv)"; break;
        case Region::D7: l.lower_monotone = l.lower_unimodal = pre + "(v)"; break;
        }
    }
    MonotonicityVerdict v = detail::apply_rules(cx);
    v.notes.insert(v.notes.begin(), detail::region_note(region));
    for (const auto& n : f_over_g.notes)
        v.notes.push_back("integrand ratio: " + n);
    const auto [lo, hi] = detail::transform_fallback_interval(opt);
    detail::attach_numeric_pattern(v, [&p](double x) { return eval_transform_ratio(p, x); }, lo, hi, opt);
    return v;
}

} // namespace monoratio
