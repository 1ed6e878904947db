#pragma once

/**
 * @file kernels.hpp
 * @brief Discrete kernel families {w_k(t)} and continuous kernels w(t,x).
 *
 * Each kernel exposes closed-form value and derivative evaluators (in t for
 * discrete families, in x for continuous kernels), the class memberships it
 * is known to satisfy, and a numerical verifier for the defining conditions
 * of each class.
 */

#include "errors.hpp"
#include "grid.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace monoratio {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class DiscreteFamilyId { PowerK, InversePowerK, ExpDecayK, DirichletK };
enum class ContinuousKernelId { PowerX, InversePowerX, ExpDecayX, ShiftedPowerX, MellinX };
enum class KernelClass { DW11, DW12, DW2, DW3, CW11, CW12, CW2, CW3 };

/// w_k(t) on the open interval (0, r); r may be infinite.
struct DiscreteKernelFamily {
    DiscreteFamilyId id = DiscreteFamilyId::PowerK;
    double r = kInf;
};

/// w(t, x) on [alpha, beta] x (0, inf); beta may be infinite.
struct ContinuousKernel {
    ContinuousKernelId id = ContinuousKernelId::ExpDecayX;
    double alpha = 0.0;
    double beta = kInf;
};

using AnyKernel = std::variant<DiscreteKernelFamily, ContinuousKernel>;

inline std::string_view to_string(DiscreteFamilyId id)
{
    switch (id) {
    case DiscreteFamilyId::PowerK: return "PowerK";
    case DiscreteFamilyId::InversePowerK: return "InversePowerK";
    case DiscreteFamilyId::ExpDecayK: return "ExpDecayK";
    case DiscreteFamilyId::DirichletK: return "DirichletK";
    }
    return "?";
}

inline std::string_view to_string(ContinuousKernelId id)
{
    switch (id) {
    case ContinuousKernelId::PowerX: return "PowerX";
    case ContinuousKernelId::InversePowerX: return "InversePowerX";
    case ContinuousKernelId::ExpDecayX: return "ExpDecayX";
    case ContinuousKernelId::ShiftedPowerX: return "ShiftedPowerX";
    case ContinuousKernelId::MellinX: return "MellinX";
    }
    return "?";
}

inline std::string_view to_string(KernelClass c)
{
    switch (c) {
    case KernelClass::DW11: return "DW11";
    case KernelClass::DW12: return "DW12";
    case KernelClass::DW2: return "DW2";
    case KernelClass::DW3: return "DW3";
    case KernelClass::CW11: return "CW11";
    case KernelClass::CW12: return "CW12";
    case KernelClass::CW2: return "CW2";
    case KernelClass::CW3: return "CW3";
    }
    return "?";
}

inline std::string kernel_name(const AnyKernel& k)
{
    return std::visit([](const auto& v) { return std::string(to_string(v.id)); }, k);
}

/// sign * exp(log_abs); sign == 0 encodes an exact zero.
struct SignedLog {
    double log_abs = -kInf;
    int sign = 0;

    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

namespace detail {

inline void check_order(int order)
{
    if (order < 0 || order > 2)
        throw domain_error("derivative order must be 0, 1 or 2");
}

inline SignedLog signed_log(double log_abs, int sign) { return {sign == 0 ? -kInf : log_abs, sign}; }

} // namespace detail

/// log|d^order/dt^order w_k(t)| and its sign.
inline SignedLog eval_discrete_log(const DiscreteKernelFamily& fam, int k, double t, int order)
{
    detail::check_order(order);
    if (k < 0)
        throw domain_error("kernel index k must be nonnegative");
    if (!(t > 0.0) || !(t < fam.r) || std::isinf(t))
        throw domain_error("t = " + std::to_string(t) + " outside the family's domain (0, r)");

    const double kd = k;
    const double lt = std::log(t);
    switch (fam.id) {
    case DiscreteFamilyId::PowerK:
        if (order == 0) return {kd * lt, 1};
        if (order == 1) return detail::signed_log(std::log(kd) + (kd - 1) * lt, k >= 1 ? 1 : 0);
        return detail::signed_log(std::log(kd * (kd - 1)) + (kd - 2) * lt, k >= 2 ? 1 : 0);
    case DiscreteFamilyId::InversePowerK:
        if (order == 0) return {-kd * lt, 1};
        if (order == 1) return detail::signed_log(std::log(kd) - (kd + 1) * lt, k >= 1 ? -1 : 0);
        return detail::signed_log(std::log(kd * (kd + 1)) - (kd + 2) * lt, k >= 1 ? 1 : 0);
    case DiscreteFamilyId::ExpDecayK:
        if (order == 0) return {-kd * t, 1};
        if (order == 1) return detail::signed_log(std::log(kd) - kd * t, k >= 1 ? -1 : 0);
        return detail::signed_log(2.0 * std::log(kd) - kd * t, k >= 1 ? 1 : 0);
    case DiscreteFamilyId::DirichletK: {
        const double L = std::log1p(kd);
        if (order == 0) return {-t * L, 1};
        if (order == 1) return detail::signed_log(std::log(L) - t * L, k >= 1 ? -1 : 0);
        return detail::signed_log(2.0 * std::log(L) - t * L, k >= 1 ? 1 : 0);
    }
    }
    return {};
}

inline double eval_discrete(const DiscreteKernelFamily& fam, int k, double t, int order)
{
    return eval_discrete_log(fam, k, t, order).value();
}

/// log|d^order/dx^order w(t,x)| and its sign.
inline SignedLog eval_continuous_log(const ContinuousKernel& ker, double t, double x, int order)
{
    detail::check_order(order);
    if (!(t >= ker.alpha) || !(t <= ker.beta) || std::isinf(t))
        throw domain_error("t = " + std::to_string(t) + " outside the kernel's interval [alpha, beta]");
    if (!(x > 0.0) || std::isinf(x))
        throw domain_error("x must be a finite positive real");

    const double lx = std::log(x);
    switch (ker.id) {
    case ContinuousKernelId::PowerX: {
        if (order == 0) return {t * lx, 1};
        if (order == 1) return detail::signed_log(std::log(t) + (t - 1) * lx, t > 0 ? 1 : 0);
        const double c = t * (t - 1);
        const int s = c > 0 ? 1 : (c < 0 ? -1 : 0);
        return detail::signed_log(std::log(std::abs(c)) + (t - 2) * lx, s);
    }
    case ContinuousKernelId::InversePowerX:
        if (order == 0) return {-t * lx, 1};
        if (order == 1) return detail::signed_log(std::log(t) - (t + 1) * lx, t > 0 ? -1 : 0);
        return detail::signed_log(std::log(t * (t + 1)) - (t + 2) * lx, t > 0 ? 1 : 0);
    case ContinuousKernelId::ExpDecayX:
        if (order == 0) return {-t * x, 1};
        if (order == 1) return detail::signed_log(std::log(t) - t * x, t > 0 ? -1 : 0);
        return detail::signed_log(2.0 * std::log(t) - t * x, t > 0 ? 1 : 0);
    case ContinuousKernelId::ShiftedPowerX: {
        if (!(t > -1.0))
            throw domain_error("ShiftedPowerX needs t > -1");
        const double L = std::log1p(t);
        const int s = L > 0 ? 1 : (L < 0 ? -1 : 0);
        if (order == 0) return {-x * L, 1};
        if (order == 1) return detail::signed_log(std::log(std::abs(L)) - x * L, -s);
        return detail::signed_log(2.0 * std::log(std::abs(L)) - x * L, s == 0 ? 0 : 1);
    }
    case ContinuousKernelId::MellinX: {
        if (!(t > 0.0))
            throw domain_error("MellinX needs t > 0");
        const double lt = std::log(t);
        const int s = lt > 0 ? 1 : (lt < 0 ? -1 : 0);
        if (order == 0) return {(x - 1) * lt, 1};
        if (order == 1) return detail::signed_log(std::log(std::abs(lt)) + (x - 1) * lt, s);
        return detail::signed_log(2.0 * std::log(std::abs(lt)) + (x - 1) * lt, s == 0 ? 0 : 1);
    }
    }
    return {};
}

inline double eval_continuous(const ContinuousKernel& ker, double t, double x, int order)
{
    return eval_continuous_log(ker, t, x, order).value();
}

//--------------------------------------------------------------------------
// Class memberships
//--------------------------------------------------------------------------

enum class CheckStatus { Pass, Fail, NotChecked };

struct ClassMembership {
    std::set<KernelClass> declared;
    std::vector<std::pair<KernelClass, CheckStatus>> verified;

    bool has(KernelClass c) const { return declared.count(c) != 0; }
};

inline ClassMembership declared_classes(const AnyKernel& kernel)
{
    ClassMembership m;
    if (const auto* d = std::get_if<DiscreteKernelFamily>(&kernel)) {
        if (d->id == DiscreteFamilyId::PowerK)
            m.declared = {KernelClass::DW11, KernelClass::DW2};
        else
            m.declared = {KernelClass::DW12, KernelClass::DW3};
    } else {
        const auto& c = std::get<ContinuousKernel>(kernel);
        switch (c.id) {
        case ContinuousKernelId::PowerX: m.declared = {KernelClass::CW11, KernelClass::CW2}; break;
        // t^{x-1} is in CW11 only; it belongs to neither CW2 nor CW3.
        case ContinuousKernelId::MellinX: m.declared = {KernelClass::CW11}; break;
        default: m.declared = {KernelClass::CW12, KernelClass::CW3}; break;
        }
    }
    for (KernelClass c : m.declared)
        m.verified.emplace_back(c, CheckStatus::NotChecked);
    return m;
}

//--------------------------------------------------------------------------
// Class-condition verification
//--------------------------------------------------------------------------

struct ConditionCheck {
    std::string label;
    bool passed = true;
    std::string witness; // first failing sample, empty on pass
};

struct VerificationReport {
    std::string kernel;
    KernelClass cls{};
    std::vector<ConditionCheck> conditions;
    std::optional<double> endpoint_constant; // c = w_0 at the class endpoint, when recorded

    bool passed() const
    {
        for (const auto& c : conditions)
            if (!c.passed)
                return false;
        return true;
    }
    const ConditionCheck* find(std::string_view prefix) const
    {
        for (const auto& c : conditions)
            if (std::string_view(c.label).substr(0, prefix.size()) == prefix)
                return &c;
        return nullptr;
    }
};

/// Sample points for verification. For discrete families `outer` samples t and
/// k runs over 0..k_max; for continuous kernels `outer` samples x and `inner`
/// samples t in [alpha, beta].
struct KernelGridSpec {
    GridSpec outer{32, 1e-3, 1e3, Spacing::Log};
    int k_max = 16;
    GridSpec inner{17, 0.0, 8.0, Spacing::Linear};
    int ladder_steps = 300; // endpoint ladder 10^{-j} or 10^{j}, j = 1..ladder_steps
};

inline KernelGridSpec default_grid(const AnyKernel& kernel)
{
    KernelGridSpec g;
    if (const auto* d = std::get_if<DiscreteKernelFamily>(&kernel)) {
        if (std::isfinite(d->r)) {
            g.outer.lo = 1e-3 * d->r;
            g.outer.hi = 0.999 * d->r;
        }
    } else {
        const auto& c = std::get<ContinuousKernel>(kernel);
        const double hi = std::isfinite(c.beta) ? c.beta : c.alpha + 8.0;
        if (c.id == ContinuousKernelId::MellinX && !(c.alpha > 0.0))
            g.inner = {17, 1e-3, hi, Spacing::Log};
        else
            g.inner = {17, c.alpha, hi, Spacing::Linear};
    }
    return g;
}

namespace detail {

inline std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

/// Non-strict monotonicity with a relative slack for rounding.
inline bool ordered(double prev, double next, bool increasing)
{
    const double slack = 1e-12 * (std::abs(prev) + std::abs(next)) + 1e-300;
    return increasing ? next >= prev - slack : next <= prev + slack;
}

inline double ratio_of(const SignedLog& num, const SignedLog& den)
{
    if (num.sign == 0)
        return 0.0;
    return num.sign * den.sign * std::exp(num.log_abs - den.log_abs);
}

/// Ladder approaching an endpoint: toward 0 (lower) or toward r (upper, r may be inf).
inline std::vector<double> endpoint_ladder(bool lower, double r, int steps)
{
    std::vector<double> pts;
    for (int j = 1; j <= steps; ++j) {
        double p;
        if (lower)
            p = std::pow(10.0, -j);
        else if (std::isinf(r))
            p = std::pow(10.0, j);
        else
            p = r * (1.0 - std::pow(10.0, -j));
        if (!lower && std::isfinite(r) && !(p < r))
            break;
        pts.push_back(p);
    }
    return pts;
}

/// log-ratio along the ladder must be non-increasing and end below ln(1e-6).
template <class LogRatio>
inline std::optional<std::string> check_decay(const std::vector<double>& ladder, LogRatio&& log_ratio)
{
    constexpr double kTarget = -13.815510557964274; // ln(1e-6)
    double prev = kInf;
    for (double p : ladder) {
        const double lr = log_ratio(p);
        if (std::isnan(lr))
            return "ratio undefined at " + fmt(p);
        if (lr > prev + 1e-12 * std::abs(prev) + 1e-12)
            return "ratio not monotonically decaying at " + fmt(p);
        prev = lr;
    }
    if (!(prev < kTarget))
        return "ratio " + fmt(std::exp(prev)) + " did not decay below 1e-6 along the ladder";
    return std::nullopt;
}

inline void add(VerificationReport& rep, std::string label, std::optional<std::string> failure)
{
    ConditionCheck c;
    c.label = std::move(label);
    c.passed = !failure.has_value();
    if (failure)
        c.witness = *failure;
    rep.conditions.push_back(std::move(c));
}

inline VerificationReport verify_discrete(const DiscreteKernelFamily& fam, KernelClass cls,
                                          const KernelGridSpec& grid)
{
    VerificationReport rep;
    rep.kernel = std::string(to_string(fam.id));
    rep.cls = cls;
    const auto ts = make_grid(grid.outer);
    const int kmax = grid.k_max;
    const bool second_order = cls == KernelClass::DW2 || cls == KernelClass::DW3;
    auto w = [&](int k, double t, int o) { return eval_discrete_log(fam, k, t, o); };

    // (i) positivity and finite derivatives
    {
        std::optional<std::string> fail;
        for (double t : ts) {
            for (int k = 0; k <= kmax && !fail; ++k) {
                const auto v0 = w(k, t, 0);
                if (v0.sign <= 0 || !std::isfinite(v0.log_abs))
                    fail = "w_" + std::to_string(k) + "(" + fmt(t) + ") not positive";
                for (int o = 1; o <= (second_order ? 2 : 1) && !fail; ++o)
                    if (std::isnan(w(k, t, o).log_abs) || w(k, t, o).log_abs == kInf)
                        fail = "derivative of order " + std::to_string(o) + " not finite at k=" +
                               std::to_string(k) + ", t=" + fmt(t);
            }
        }
        add(rep, "(i) positivity and continuity", fail);
    }

    if (cls == KernelClass::DW11 || cls == KernelClass::DW12) {
        const bool inc = cls == KernelClass::DW11;
        std::optional<std::string> fail;
        for (double t : ts) {
            double prev = detail::ratio_of(w(0, t, 1), w(0, t, 0));
            for (int k = 1; k <= kmax && !fail; ++k) {
                const double cur = detail::ratio_of(w(k, t, 1), w(k, t, 0));
                if (!ordered(prev, cur, inc))
                    fail = "w_k'/w_k not " + std::string(inc ? "increasing" : "decreasing") +
                           " in k at t=" + fmt(t) + ", k=" + std::to_string(k - 1) + "->" +
                           std::to_string(k) + " (" + fmt(prev) + " -> " + fmt(cur) + ")";
                prev = cur;
            }
            if (fail)
                break;
        }
        add(rep, std::string("(ii) w_k'/w_k ") + (inc ? "increasing" : "decreasing") + " in k", fail);
        return rep;
    }

    const bool lower = cls == KernelClass::DW2;
    const auto ladder = endpoint_ladder(lower, fam.r, grid.ladder_steps);

    // (ii) endpoint normalisations
    {
        std::optional<std::string> fail;
        if (ladder.size() < 4)
            fail = "endpoint ladder too short";
        for (int k = 1; k <= kmax && !fail; ++k)
            if (auto f = check_decay(ladder, [&](double p) { return w(k, p, 0).log_abs - w(0, p, 0).log_abs; }))
                fail = "w_" + std::to_string(k) + "/w_0: " + *f;
        for (int k = 2; k <= kmax && !fail; ++k)
            if (auto f = check_decay(ladder, [&](double p) { return w(k, p, 1).log_abs - w(1, p, 1).log_abs; }))
                fail = "w_" + std::to_string(k) + "'/w_1': " + *f;
        if (!fail && !ladder.empty()) {
            const double c_last = w(0, ladder.back(), 0).log_abs;
            const double c_prev = w(0, ladder[ladder.size() - 2], 0).log_abs;
            if (!std::isfinite(c_last) || std::abs(c_last - c_prev) > 1e-6)
                fail = "w_0 has no finite positive limit at the endpoint";
            else
                rep.endpoint_constant = std::exp(c_last);
        }
        add(rep, "(ii) endpoint limits", fail);
    }

    // (iii) sign conditions on w_k'
    {
        std::optional<std::string> fail;
        for (double t : ts) {
            if (w(0, t, 1).sign != 0) {
                fail = "w_0'(" + fmt(t) + ") != 0";
                break;
            }
            for (int k = 1; k <= kmax && !fail; ++k) {
                const int s = w(k, t, 1).sign;
                if (lower ? s < 0 : s > 0)
                    fail = "w_" + std::to_string(k) + "'(" + fmt(t) + ") has the wrong sign";
            }
            if (fail)
                break;
        }
        add(rep, std::string("(iii) w_0' = 0 and w_k' ") + (lower ? ">= 0" : "<= 0"), fail);
    }

    // (iv) k -> w_k''/w_k' monotone for k >= 1
    {
        std::optional<std::string> fail;
        for (double t : ts) {
            double prev = detail::ratio_of(w(1, t, 2), w(1, t, 1));
            for (int k = 2; k <= kmax && !fail; ++k) {
                const double cur = detail::ratio_of(w(k, t, 2), w(k, t, 1));
                if (!ordered(prev, cur, lower))
                    fail = "w_k''/w_k' not monotone at t=" + fmt(t) + ", k=" + std::to_string(k);
                prev = cur;
            }
            if (fail)
                break;
        }
        add(rep, std::string("(iv) w_k''/w_k' ") + (lower ? "increasing" : "decreasing") + " in k", fail);
    }
    return rep;
}

inline VerificationReport verify_continuous(const ContinuousKernel& ker, KernelClass cls,
                                            const KernelGridSpec& grid)
{
    VerificationReport rep;
    rep.kernel = std::string(to_string(ker.id));
    rep.cls = cls;
    const auto xs = make_grid(grid.outer);
    const auto ts = make_grid(grid.inner);
    const bool second_order = cls == KernelClass::CW2 || cls == KernelClass::CW3;
    auto w = [&](double t, double x, int o) { return eval_continuous_log(ker, t, x, o); };

    {
        std::optional<std::string> fail;
        for (double x : xs) {
            for (double t : ts) {
                const auto v0 = w(t, x, 0);
                if (v0.sign <= 0 || !std::isfinite(v0.log_abs)) {
                    fail = "w(" + fmt(t) + "," + fmt(x) + ") not positive";
                    break;
                }
                for (int o = 1; o <= (second_order ? 2 : 1) && !fail; ++o)
                    if (std::isnan(w(t, x, o).log_abs) || w(t, x, o).log_abs == kInf)
                        fail = "x-derivative of order " + std::to_string(o) + " not finite at (" +
                               fmt(t) + "," + fmt(x) + ")";
            }
            if (fail)
                break;
        }
        add(rep, "(i) positivity and continuity", fail);
    }

    if (cls == KernelClass::CW11 || cls == KernelClass::CW12) {
        const bool inc = cls == KernelClass::CW11;
        std::optional<std::string> fail;
        for (double x : xs) {
            double prev = detail::ratio_of(w(ts[0], x, 1), w(ts[0], x, 0));
            for (std::size_t i = 1; i < ts.size() && !fail; ++i) {
                const double cur = detail::ratio_of(w(ts[i], x, 1), w(ts[i], x, 0));
                if (!ordered(prev, cur, inc))
                    fail = "w_x/w not monotone in t at x=" + fmt(x) + ", t=" + fmt(ts[i]);
                prev = cur;
            }
            if (fail)
                break;
        }
        add(rep, std::string("(ii) w_x/w ") + (inc ? "increasing" : "decreasing") + " in t", fail);
        return rep;
    }

    const bool lower = cls == KernelClass::CW2;
    const auto ladder = endpoint_ladder(lower, kInf, grid.ladder_steps);
    const double alpha = ts.front();

    {
        std::optional<std::string> fail;
        // w_x(alpha, .) vanishes identically, so the derivative ratios are taken
        // against the first grid point above alpha.
        const double t_ref = ts.size() > 1 ? ts[1] : ts[0];
        for (std::size_t i = 1; i < ts.size() && !fail; ++i) {
            const double t = ts[i];
            if (auto f = check_decay(ladder, [&](double p) { return w(t, p, 0).log_abs - w(alpha, p, 0).log_abs; }))
                fail = "w(" + fmt(t) + ",.)/w(alpha,.): " + *f;
        }
        for (std::size_t i = 2; i < ts.size() && !fail; ++i) {
            const double t = ts[i];
            if (auto f = check_decay(ladder, [&](double p) { return w(t, p, 1).log_abs - w(t_ref, p, 1).log_abs; }))
                fail = "w_x(" + fmt(t) + ",.)/w_x(" + fmt(t_ref) + ",.): " + *f;
        }
        if (!fail) {
            const double c_last = w(alpha, ladder.back(), 0).log_abs;
            const double c_prev = w(alpha, ladder[ladder.size() - 2], 0).log_abs;
            if (!std::isfinite(c_last) || std::abs(c_last - c_prev) > 1e-6)
                fail = "w(alpha, .) has no finite positive limit at the endpoint";
            else
                rep.endpoint_constant = std::exp(c_last);
        }
        add(rep, "(ii) endpoint limits", fail);
    }

    {
        std::optional<std::string> fail;
        for (double x : xs) {
            if (w(alpha, x, 1).sign != 0) {
                fail = "w_x(alpha," + fmt(x) + ") != 0";
                break;
            }
            for (std::size_t i = 1; i < ts.size() && !fail; ++i) {
                const int s = w(ts[i], x, 1).sign;
                if (lower ? s < 0 : s > 0)
                    fail = "w_x(" + fmt(ts[i]) + "," + fmt(x) + ") has the wrong sign";
            }
            if (fail)
                break;
        }
        add(rep, std::string("(iii) w_x(alpha,.) = 0 and w_x ") + (lower ? ">= 0" : "<= 0"), fail);
    }

    {
        std::optional<std::string> fail;
        for (double x : xs) {
            if (ts.size() < 3)
                break;
            double prev = detail::ratio_of(w(ts[1], x, 2), w(ts[1], x, 1));
            for (std::size_t i = 2; i < ts.size() && !fail; ++i) {
                const double cur = detail::ratio_of(w(ts[i], x, 2), w(ts[i], x, 1));
                if (!ordered(prev, cur, lower))
                    fail = "w_xx/w_x not monotone in t at x=" + fmt(x) + ", t=" + fmt(ts[i]);
                prev = cur;
            }
            if (fail)
                break;
        }
        add(rep, std::string("(iv) w_xx/w_x ") + (lower ? "increasing" : "decreasing") + " in t", fail);
    }
    return rep;
}

} // namespace detail

/// Check each numbered condition of `cls` on the grid. Failures are reported, never thrown.
inline VerificationReport verify_class_conditions(const AnyKernel& kernel, KernelClass cls,
                                                  const KernelGridSpec& grid)
{
    const bool discrete_cls = cls == KernelClass::DW11 || cls == KernelClass::DW12 ||
                              cls == KernelClass::DW2 || cls == KernelClass::DW3;
    if (const auto* d = std::get_if<DiscreteKernelFamily>(&kernel)) {
        if (!discrete_cls) {
            VerificationReport rep{std::string(to_string(d->id)), cls, {}, {}};
            detail::add(rep, "class applies to continuous kernels only", "kind mismatch");
            return rep;
        }
        return detail::verify_discrete(*d, cls, grid);
    }
    const auto& c = std::get<ContinuousKernel>(kernel);
    if (discrete_cls) {
        VerificationReport rep{std::string(to_string(c.id)), cls, {}, {}};
        detail::add(rep, "class applies to discrete families only", "kind mismatch");
        return rep;
    }
    return detail::verify_continuous(c, cls, grid);
}

inline VerificationReport verify_class_conditions(const AnyKernel& kernel, KernelClass cls)
{
    return verify_class_conditions(kernel, cls, default_grid(kernel));
}

} // namespace monoratio
