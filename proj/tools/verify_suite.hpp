#pragma once

// Randomized region draws checked against the sampling oracle, plus
// reciprocal-gamma series checks and kernel class verification.

#include <monoratio/monoratio.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace monoratio::cli {

struct SuiteCounts {
    int agree = 0;
    int disagree = 0;
    int unadjudicated = 0;
};

struct SuiteSummary {
    SuiteCounts lemma;
    SuiteCounts theorem;
    int kernel_pass = 0;
    int kernel_fail = 0;
    int errors = 0;

    int disagreements() const { return lemma.disagree + theorem.disagree + kernel_fail + errors; }
};

class UnitSampler {
public:
    explicit UnitSampler(std::uint64_t seed) : rng_(seed) {}
    /// Uniform on [0, 1) from the top 53 bits.
    double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
    /// Uniform on (lo, hi]; the open end avoids the excluded boundary lo.
    double in(double lo, double hi) { return hi - (hi - lo) * unit(); }

private:
    std::mt19937_64 rng_;
};

inline std::string csv_number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string csv_optional(const std::optional<double>& v) { return v ? csv_number(*v) : ""; }

/// Draw (a, b, c, d) in (lo, hi]^4 landing in the requested region.
inline std::array<double, 4> draw_in_region(UnitSampler& s, Region want, double lo, double hi, double ac_lo,
                                            double ac_hi)
{
    for (int attempt = 0; attempt < 10000000; ++attempt) {
        const double a = s.in(ac_lo, ac_hi);
        const double b = s.in(lo, hi);
        double c = s.in(ac_lo, ac_hi);
        const double d = s.in(lo, hi);
        if (want == Region::D1)
            c = a;
        if (classify_region(a, b, c, d) == want)
            return {a, b, c, d};
    }
    throw nonconvergence_error("no draw found in region " + std::string(to_string(want)));
}

inline void tally(SuiteCounts& c, const Agreement& ag)
{
    switch (ag.status) {
    case AgreementStatus::Agree: ++c.agree; break;
    case AgreementStatus::Disagree: ++c.disagree; break;
    case AgreementStatus::Unadjudicated: ++c.unadjudicated; break;
    }
}

/// Oracle for Gamma(ct+d)/Gamma(at+b) through std::lgamma.
inline ObservedPattern gamma_ratio_oracle(double a, double b, double c, double d, double lo, double hi, int n,
                                          double noise_floor)
{
    return detect_pattern([&](double t) { return std::lgamma(c * t + d) - std::lgamma(a * t + b); }, lo, hi, n,
                          noise_floor, Spacing::Log);
}

/// Oracle for E_{a,b}(t)/E_{c,d}(t) through the standalone Mittag-Leffler evaluator.
inline ObservedPattern mittag_leffler_oracle(double a, double b, double c, double d, double lo, double hi, int n,
                                             double noise_floor)
{
    return detect_pattern([&](double t) { return mittag_leffler(a, b, t).value / mittag_leffler(c, d, t).value; },
                          lo, hi, n, noise_floor, Spacing::Log);
}

inline SuiteSummary run_verify_suite(const RunConfig& cfg, std::ostream& csv, std::ostream& log)
{
    SuiteSummary sum;
    UnitSampler sampler(cfg.seed);
    const double lo = 1e-3, hi = 50.0;

    csv << "region,a,b,c,d,predicted,observed,turning_pred,turning_obs,agree\n";
    for (int ri = 0; ri < 7; ++ri) {
        const Region region = static_cast<Region>(ri);
        for (int i = 0; i < cfg.draws_per_region; ++i) {
            const auto [a, b, c, d] = draw_in_region(sampler, region, 0.05, 20.0, 0.05, 20.0);
            const MonotonicityVerdict v = gamma_ratio_pattern(a, b, c, d);
            const ObservedPattern obs = gamma_ratio_oracle(a, b, c, d, lo, hi, cfg.oracle_n, cfg.oracle_noise_floor);
            const Agreement ag = crosscheck(v, obs);
            tally(sum.lemma, ag);
            if (ag.disagrees())
                log << "lemma disagreement: " << ag.detail << "\n";
            csv << to_string(region) << ',' << csv_number(a) << ',' << csv_number(b) << ',' << csv_number(c) << ','
                << csv_number(d) << ',' << to_string(ag.predicted) << ',' << to_string(obs.pattern) << ','
                << csv_optional(v.turning_point) << ','
                << (obs.change_points.empty() ? "" : csv_number(obs.change_points.front())) << ','
                << to_string(ag.status) << '\n';
        }
    }

    // Reciprocal-gamma series under t^k against the Mittag-Leffler oracle.
    const int theorem_draws = std::max(1, cfg.draws_per_region / 4);
    PredictOptions po;
    po.numeric_fallback = false;
    for (int ri = 0; ri < 7; ++ri) {
        const Region region = static_cast<Region>(ri);
        for (int i = 0; i < theorem_draws; ++i) {
            try {
                const auto [a, b, c, d] = draw_in_region(sampler, region, 0.05, 5.0, 0.6, 3.0);
                const MonotonicityVerdict v =
                    predict_de_ratio(a, b, c, d, AnyKernel{DiscreteKernelFamily{DiscreteFamilyId::PowerK}}, po);
                const ObservedPattern obs = mittag_leffler_oracle(a, b, c, d, 1e-3, 30.0, 1024, cfg.oracle_noise_floor);
                const Agreement ag = crosscheck(v, obs);
                tally(sum.theorem, ag);
                if (ag.disagrees())
                    log << "series disagreement (" << csv_number(a) << "," << csv_number(b) << "," << csv_number(c)
                        << "," << csv_number(d) << "): " << ag.detail << "\n";
            } catch (const std::exception& e) {
                ++sum.errors;
                log << "series check failed: " << e.what() << "\n";
            }
        }
    }

    // Declared kernel classes and one planted non-member.
    struct Pair {
        AnyKernel k;
        KernelClass cls;
        bool expect;
    };
    const std::vector<Pair> pairs = {
        {DiscreteKernelFamily{DiscreteFamilyId::PowerK}, KernelClass::DW11, true},
        {DiscreteKernelFamily{DiscreteFamilyId::PowerK}, KernelClass::DW2, true},
        {DiscreteKernelFamily{DiscreteFamilyId::ExpDecayK}, KernelClass::DW12, true},
        {DiscreteKernelFamily{DiscreteFamilyId::ExpDecayK}, KernelClass::DW3, true},
        {ContinuousKernel{ContinuousKernelId::PowerX}, KernelClass::CW11, true},
        {ContinuousKernel{ContinuousKernelId::PowerX}, KernelClass::CW2, true},
        {ContinuousKernel{ContinuousKernelId::ExpDecayX}, KernelClass::CW12, true},
        {ContinuousKernel{ContinuousKernelId::ExpDecayX}, KernelClass::CW3, true},
        {DiscreteKernelFamily{DiscreteFamilyId::PowerK}, KernelClass::DW12, false},
    };
    for (const auto& p : pairs) {
        const VerificationReport rep = verify_class_conditions(p.k, p.cls);
        if (rep.passed() == p.expect)
            ++sum.kernel_pass;
        else {
            ++sum.kernel_fail;
            log << "kernel check unexpected: " << rep.kernel << " " << to_string(p.cls) << "\n";
        }
    }

    log << "lemma draws: agree " << sum.lemma.agree << ", disagree " << sum.lemma.disagree << ", unadjudicated "
        << sum.lemma.unadjudicated << "\n";
    log << "series draws: agree " << sum.theorem.agree << ", disagree " << sum.theorem.disagree
        << ", unadjudicated " << sum.theorem.unadjudicated << ", errors " << sum.errors << "\n";
    log << "kernel classes: as expected " << sum.kernel_pass << ", unexpected " << sum.kernel_fail << "\n";
    return sum;
}

} // namespace monoratio::cli
