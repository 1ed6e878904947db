#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force monotonicity detection by dense sampling, and the
 *        comparison of analytical verdicts against it.
 */

#include "errors.hpp"
#include "grid.hpp"
#include "verdict.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace monoratio {

struct ObservedPattern {
    Pattern pattern = Pattern::Other;
    std::vector<double> change_points;
    int n = 0;
    Spacing spacing = Spacing::Log;
    double lo = 0.0;
    double hi = 0.0;
    double noise_floor = 1e-9;

    /// Local grid step around t.
    double step_at(double t) const
    {
        if (spacing == Spacing::Linear)
            return (hi - lo) / (n - 1);
        return t * std::expm1(std::log(hi / lo) / (n - 1));
    }
};

inline Spacing default_spacing(double lo, double hi)
{
    return (lo > 0.0 && hi / lo >= 100.0) ? Spacing::Log : Spacing::Linear;
}

/**
 * Sample fn on an n-point grid of [lo, hi] and report its sign-change
 * structure. First differences smaller than noise_floor times the median
 * |fn| on the grid count as plateau and are dropped before runs are formed.
 */
template <class Fn>
ObservedPattern detect_pattern(Fn&& fn, double lo, double hi, int n, double noise_floor, Spacing spacing)
{
    if (n < 64)
        throw domain_error("detect_pattern: n must be at least 64");
    const auto grid = make_grid({n, lo, hi, spacing});
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        try {
            vals[i] = fn(grid[i]);
        } catch (const std::exception& e) {
            std::ostringstream os;
            os << "oracle evaluation failed at " << grid[i] << ": " << e.what();
            throw evaluation_error(os.str());
        }
        if (!std::isfinite(vals[i])) {
            std::ostringstream os;
            os << "oracle evaluation produced a non-finite value at " << grid[i];
            throw evaluation_error(os.str());
        }
    }

    ObservedPattern out;
    out.n = n;
    out.spacing = spacing;
    out.lo = lo;
    out.hi = hi;
    out.noise_floor = noise_floor;

    std::vector<double> mags(vals.size());
    std::transform(vals.begin(), vals.end(), mags.begin(), [](double v) { return std::abs(v); });
    std::nth_element(mags.begin(), mags.begin() + mags.size() / 2, mags.end());
    double scale = mags[mags.size() / 2];
    if (scale == 0.0)
        scale = *std::max_element(mags.begin(), mags.end());
    if (scale == 0.0)
        scale = 1.0;
    const double threshold = noise_floor * scale;

    // Runs of equal difference sign: (sign, first diff index, last diff index).
    struct Run {
        int sign;
        std::size_t first, last;
    };
    std::vector<Run> runs;
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
        const double d = vals[i + 1] - vals[i];
        if (std::abs(d) < threshold)
            continue;
        const int s = d > 0 ? 1 : -1;
        if (!runs.empty() && runs.back().sign == s)
            runs.back().last = i;
        else
            runs.push_back({s, i, i});
    }

    auto midpoint = [&](const Run& left, const Run& right) {
        const double a = grid[left.last + 1];
        const double b = grid[right.first];
        return spacing == Spacing::Log ? std::sqrt(a * b) : 0.5 * (a + b);
    };

    if (runs.empty()) {
        out.pattern = Pattern::Constant;
    } else if (runs.size() == 1) {
        out.pattern = runs[0].sign > 0 ? Pattern::Increasing : Pattern::Decreasing;
    } else {
        for (std::size_t i = 0; i + 1 < runs.size(); ++i)
            out.change_points.push_back(midpoint(runs[i], runs[i + 1]));
        if (runs.size() == 2)
            out.pattern = runs[0].sign > 0 ? Pattern::IncThenDec : Pattern::DecThenInc;
        else
            out.pattern = Pattern::Other;
    }
    return out;
}

template <class Fn>
ObservedPattern detect_pattern(Fn&& fn, double lo, double hi, int n = 4096, double noise_floor = 1e-9)
{
    return detect_pattern(std::forward<Fn>(fn), lo, hi, n, noise_floor, default_spacing(lo, hi));
}

enum class AgreementStatus { Agree, Disagree, Unadjudicated };

inline std::string_view to_string(AgreementStatus s)
{
    switch (s) {
    case AgreementStatus::Agree: return "agree";
    case AgreementStatus::Disagree: return "disagree";
    case AgreementStatus::Unadjudicated: return "unadjudicated";
    }
    return "?";
}

struct Agreement {
    AgreementStatus status = AgreementStatus::Unadjudicated;
    Pattern predicted = Pattern::Inconclusive; // after restriction to the oracle interval
    Pattern observed = Pattern::Other;
    std::optional<double> turning_predicted;
    std::optional<double> turning_observed;
    std::string detail;

    bool agrees() const { return status == AgreementStatus::Agree; }
    bool disagrees() const { return status == AgreementStatus::Disagree; }
};

/**
 * Compare a verdict with an observed pattern over the oracle's interval.
 *
 * A unimodal verdict whose turning point falls outside the interval is
 * compared through the monotone piece that covers the interval. A turning
 * point within max(turning_tol, 2 grid steps) of an interval end may also
 * be matched by that monotone piece.
 */
inline Agreement crosscheck(const MonotonicityVerdict& verdict, const ObservedPattern& observed,
                            double turning_tol = 0.0)
{
    Agreement ag;
    ag.predicted = verdict.pattern;
    ag.observed = observed.pattern;
    ag.turning_predicted = verdict.turning_point;
    if (!observed.change_points.empty())
        ag.turning_observed = observed.change_points.front();

    auto describe = [&](std::string what) {
        std::ostringstream os;
        os << what << " (predicted " << to_string(ag.predicted);
        if (ag.turning_predicted)
            os << " t*=" << *ag.turning_predicted;
        os << ", observed " << to_string(observed.pattern);
        for (double c : observed.change_points)
            os << " change@" << c;
        os << ", provenance " << verdict.provenance << ")";
        return os.str();
    };

    if (verdict.pattern == Pattern::Inconclusive) {
        ag.status = AgreementStatus::Unadjudicated;
        ag.detail = describe("inconclusive verdict");
        return ag;
    }
    if (observed.pattern == Pattern::Other) {
        ag.status = AgreementStatus::Unadjudicated;
        ag.detail = describe("oracle pattern Other at the noise floor");
        return ag;
    }

    Pattern pred = verdict.pattern;
    if (is_unimodal(pred) && verdict.turning_point) {
        const double tp = *verdict.turning_point;
        const double tol = std::max(turning_tol, 2.0 * observed.step_at(std::clamp(tp, observed.lo, observed.hi)));
        if (tp <= observed.lo)
            pred = trailing_piece(pred);
        else if (tp >= observed.hi)
            pred = leading_piece(pred);
        else if (observed.pattern != pred) {
            if (tp - observed.lo <= tol && observed.pattern == trailing_piece(pred))
                pred = trailing_piece(pred);
            else if (observed.hi - tp <= tol && observed.pattern == leading_piece(pred))
                pred = leading_piece(pred);
        }
    }
    ag.predicted = pred;

    if (pred != observed.pattern) {
        ag.status = AgreementStatus::Disagree;
        ag.detail = describe("pattern mismatch");
        return ag;
    }
    if (is_unimodal(pred)) {
        if (!verdict.turning_point) {
            ag.status = AgreementStatus::Agree;
            ag.detail = describe("patterns agree; no predicted turning point to compare");
            return ag;
        }
        const double tp = *verdict.turning_point;
        const double cp = observed.change_points.front();
        const double tol = std::max(turning_tol, 2.0 * observed.step_at(tp));
        if (std::abs(tp - cp) > tol) {
            ag.status = AgreementStatus::Disagree;
            ag.detail = describe("turning points differ by more than " + std::to_string(tol));
            return ag;
        }
    }
    ag.status = AgreementStatus::Agree;
    ag.detail = describe("agree");
    return ag;
}

} // namespace monoratio
