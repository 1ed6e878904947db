#include "test_support.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace monoratio;

namespace {

// Region straight from the defining inequalities, with Boost's digamma.
Region region_oracle(double a, double b, double c, double d)
{
    using boost::math::digamma;
    if (a == c)
        return Region::D1;
    const double e = c * digamma(d) - a * digamma(b);
    if (a > c)
        return d <= b ? Region::D2 : (e > 0 ? Region::D4 : Region::D3);
    return b <= d ? Region::D5 : (e < 0 ? Region::D7 : Region::D6);
}

double q_oracle(double a, double b, double c, double d, double t)
{
    return c * boost::math::digamma(c * t + d) - a * boost::math::digamma(a * t + b);
}

// Plain bisection on Q with Boost's digamma; bracket from a 2^j scan.
double turning_point_oracle(double a, double b, double c, double d)
{
    double lo = std::ldexp(1.0, -10);
    const double s0 = q_oracle(a, b, c, d, lo);
    double hi = lo;
    for (int j = -9; j <= 10; ++j) {
        hi = std::ldexp(1.0, j);
        if ((q_oracle(a, b, c, d, hi) > 0) != (s0 > 0))
            break;
        lo = hi;
    }
    for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
        const double mid = 0.5 * (lo + hi);
        ((q_oracle(a, b, c, d, mid) > 0) == (s0 > 0) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

SeriesRatioProblem series(CoefficientSource a, CoefficientSource b, DiscreteFamilyId id, double r = kInf)
{
    SeriesRatioProblem p;
    p.a = std::move(a);
    p.b = std::move(b);
    p.family = {id, r};
    return p;
}

TransformRatioProblem transform(Integrand f, Integrand g, ContinuousKernelId id, double alpha = 0.0,
                                double beta = kInf)
{
    TransformRatioProblem p;
    p.f = std::move(f);
    p.g = std::move(g);
    p.kernel = {id, alpha, beta};
    return p;
}

ObservedPattern observe_series(const SeriesRatioProblem& p, double lo, double hi)
{
    return detect_pattern([&](double t) { return eval_series_ratio(p, t); }, lo, hi, 512, 1e-9, Spacing::Log);
}

ObservedPattern observe_transform(const TransformRatioProblem& p, double lo, double hi)
{
    return detect_pattern([&](double x) { return eval_transform_ratio(p, x); }, lo, hi, 512, 1e-9, Spacing::Log);
}

} // namespace

TEST(ClassifyRegion, Examples)
{
    EXPECT_EQ(classify_region(1, 2, 1, 1), Region::D1);
    EXPECT_EQ(classify_region(2, 3, 1, 1), Region::D2);
    EXPECT_EQ(classify_region(2, 0.1, 1, 5), Region::D4);
    EXPECT_NEAR(psi_expression(2, 0.1, 1, 5).value,
                boost::math::digamma(5.0) - 2 * boost::math::digamma(0.1), 1e-12);
    EXPECT_NEAR(psi_expression(2, 0.1, 1, 5).value, 22.35, 0.01);
    EXPECT_EQ(classify_region(1, 1, 2, 0.1), Region::D7);
    EXPECT_THROW(classify_region(0, 1, 1, 1), domain_error);
}

TEST(ClassifyRegion, PartitionAndStability)
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.05, 20.0);
    int counts[7] = {};
    for (int i = 0; i < 10000; ++i) {
        const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
        const Region r = classify_region(a, b, c, d);
        ++counts[static_cast<int>(r)];
        const auto e = psi_expression(a, b, c, d);
        const bool near_boundary = std::abs(e.value) <= 1e3 * e.band + 1e-9;
        if (!near_boundary)
            EXPECT_EQ(r, region_oracle(a, b, c, d)) << a << " " << b << " " << c << " " << d;
        for (double eps : {-1e-12, 1e-12}) {
            const double s = 1.0 + eps;
            const Region rp = classify_region(a * s, b * s, c / s, d / s);
            if (!near_boundary && std::abs(b - d) > 1e-10 && std::abs(a - c) > 1e-10)
                EXPECT_EQ(rp, r);
        }
    }
    for (int i = 1; i < 7; ++i)
        EXPECT_GT(counts[i], 0) << "D" << i + 1;
}

TEST(GammaRatioPattern, Examples)
{
    auto v = gamma_ratio_pattern(1, 1, 1, 2);
    EXPECT_EQ(v.pattern, Pattern::Increasing);
    EXPECT_FALSE(v.turning_point);
    EXPECT_EQ(gamma_ratio_pattern(1, 2, 1, 1).pattern, Pattern::Decreasing);
    EXPECT_EQ(gamma_ratio_pattern(1.5, 2, 1.5, 2).pattern, Pattern::Constant);
    EXPECT_EQ(gamma_ratio_pattern(2, 3, 1, 1).pattern, Pattern::Decreasing);
    EXPECT_EQ(gamma_ratio_pattern(1, 1, 2, 3).pattern, Pattern::Increasing);

    v = gamma_ratio_pattern(2, 0.1, 1, 5);
    EXPECT_EQ(v.pattern, Pattern::IncThenDec);
    ASSERT_TRUE(v.turning_point);
    EXPECT_NEAR(*v.turning_point, turning_point_oracle(2, 0.1, 1, 5), 1e-9);
    EXPECT_NEAR(*v.turning_point, 1.40758, 1e-5);
    EXPECT_EQ(v.provenance, "gamma-ratio-lemma(iii)");

    v = gamma_ratio_pattern(1, 1, 2, 0.1);
    EXPECT_EQ(v.pattern, Pattern::DecThenInc);
    ASSERT_TRUE(v.turning_point);
    EXPECT_NEAR(*v.turning_point, turning_point_oracle(1, 1, 2, 0.1), 1e-9);
}

TEST(FindTurningPoint, SignsAroundRoot)
{
    const double d4 = find_turning_point(2, 0.1, 1, 5);
    EXPECT_GT(q_oracle(2, 0.1, 1, 5, d4 - 1e-6), 0.0);
    EXPECT_LT(q_oracle(2, 0.1, 1, 5, d4 + 1e-6), 0.0);
    const double d7 = find_turning_point(1, 1, 2, 0.1);
    EXPECT_LT(q_oracle(1, 1, 2, 0.1, d7 - 1e-6), 0.0);
    EXPECT_GT(q_oracle(1, 1, 2, 0.1, d7 + 1e-6), 0.0);
}

TEST(FindTurningPoint, NoBracketInD1)
{
    EXPECT_THROW(find_turning_point(1, 1, 1, 2), bracket_error);
    EXPECT_THROW(find_turning_point(3, 0.5, 3, 0.7), bracket_error);
}

TEST(FindTurningPoint, QDecreasingAcrossBracketInD4)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.05, 20.0);
    int seen = 0;
    while (seen < 100) {
        const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
        if (classify_region(a, b, c, d) != Region::D4)
            continue;
        ++seen;
        const auto v = gamma_ratio_pattern(a, b, c, d);
        if (!v.turning_point)
            continue;
        const double ts = *v.turning_point;
        double prev = q_function(a, b, c, d, ts / 4);
        for (double t : testing_support::log_grid(ts / 4, ts * 4, 32)) {
            const double q = q_function(a, b, c, d, t);
            if (t > ts / 4)
                EXPECT_LT(q, prev) << a << " " << b << " " << c << " " << d << " t=" << t;
            prev = q;
        }
        EXPECT_NEAR(ts, turning_point_oracle(a, b, c, d), 1e-8 * std::max(1.0, ts));
    }
}

TEST(CoefficientRatioShape, Examples)
{
    auto inc = series(coeffs::poly_geometric(1.0, 1.0), coeffs::constant(1.0), DiscreteFamilyId::ExpDecayK);
    EXPECT_EQ(coefficient_ratio_shape(inc).kind, Pattern::Increasing);

    // Ratios 1, 1, 0.75, 0.5, ...: the leading plateau is ignored.
    auto plateau = series(coeffs::poly_geometric(1.0, 0.5), coeffs::constant(1.0), DiscreteFamilyId::ExpDecayK);
    const auto s1 = coefficient_ratio_shape(plateau);
    EXPECT_EQ(s1.kind, Pattern::Decreasing);
    EXPECT_FALSE(s1.m);

    // Ratios (k+1)^2 0.5^k peak at k = 2.
    auto peaked = series(coeffs::poly_geometric(2.0, 0.5), coeffs::constant(1.0), DiscreteFamilyId::ExpDecayK);
    const auto s2 = coefficient_ratio_shape(peaked);
    EXPECT_EQ(s2.kind, Pattern::IncThenDec);
    int argmax = 0;
    for (int k = 1; k < 64; ++k)
        if ((k + 1.0) * (k + 1.0) * std::pow(0.5, k) > (argmax + 1.0) * (argmax + 1.0) * std::pow(0.5, argmax))
            argmax = k;
    ASSERT_TRUE(s2.m);
    EXPECT_EQ(*s2.m, argmax);

    auto same = series(coeffs::recip_gamma(1, 2), coeffs::recip_gamma(1, 2), DiscreteFamilyId::PowerK);
    EXPECT_EQ(coefficient_ratio_shape(same).kind, Pattern::Constant);

    auto wiggle = series(coeffs::finite({1, 2, 1, 2, 1}), coeffs::constant(1.0, 5), DiscreteFamilyId::PowerK);
    EXPECT_EQ(coefficient_ratio_shape(wiggle).kind, Pattern::Other);

    auto gap = series(coeffs::finite({1, 1, 1}), coeffs::finite({1, 0, 1}), DiscreteFamilyId::PowerK);
    EXPECT_EQ(coefficient_ratio_shape(gap).kind, Pattern::Other);

    EXPECT_THROW(coefficient_ratio_shape(inc, 1), domain_error);
}

TEST(CoefficientRatioShape, ReciprocalGammaMatchesSequenceShape)
{
    // a_k / b_k = Gamma(k+5) / Gamma(2k+0.1) up to scale
    auto p = series(coeffs::recip_gamma(2, 0.1), coeffs::recip_gamma(1, 5), DiscreteFamilyId::PowerK);
    const auto direct = coefficient_ratio_shape(p);
    const auto predicted = gamma_sequence_shape(2, 0.1, 1, 5);
    EXPECT_EQ(direct.kind, predicted.kind);
    EXPECT_EQ(direct.m, predicted.m);

    int argmax = 0;
    auto lr = [](int k) { return std::lgamma(k + 5.0) - std::lgamma(2.0 * k + 0.1); };
    for (int k = 1; k < 64; ++k)
        if (lr(k) > lr(argmax))
            argmax = k;
    if (direct.kind == Pattern::IncThenDec)
        EXPECT_EQ(*direct.m, argmax);
    else
        EXPECT_EQ(argmax, 0);
}

TEST(GammaSequenceShape, AgreesWithBruteForce)
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.05, 5.0), s(0.6, 3.0);
    for (int i = 0; i < 300; ++i) {
        const double a = s(rng), b = u(rng), c = s(rng), d = u(rng);
        const auto shape = gamma_sequence_shape(a, b, c, d);
        std::vector<std::pair<int, double>> seq;
        for (int k = 0; k <= 200; ++k)
            seq.emplace_back(k, std::lgamma(c * k + d) - std::lgamma(a * k + b));
        const auto brute = detail::shape_of(seq, true);
        EXPECT_EQ(shape.kind, brute.kind) << a << " " << b << " " << c << " " << d;
        if (is_unimodal(brute.kind))
            EXPECT_EQ(shape.m, brute.m);
    }
}

TEST(PredictSeries, MonotoneRule)
{
    auto p = series(coeffs::recip_gamma(1, 2), coeffs::recip_gamma(1, 1), DiscreteFamilyId::PowerK);
    auto v = predict_series_ratio(p);
    EXPECT_EQ(v.pattern, Pattern::Decreasing);
    EXPECT_EQ(v.provenance, "series-monotone-rule");
    EXPECT_FALSE(v.turning_point);

    p.family.id = DiscreteFamilyId::ExpDecayK;
    v = predict_series_ratio(p);
    EXPECT_EQ(v.pattern, Pattern::Increasing);
    EXPECT_EQ(v.provenance, "series-monotone-rule");

    auto same = series(coeffs::recip_gamma(1, 2), coeffs::recip_gamma(1, 2), DiscreteFamilyId::DirichletK);
    EXPECT_EQ(predict_series_ratio(same).pattern, Pattern::Constant);
}

TEST(PredictSeries, UnimodalCoefficientsAgreeWithOracle)
{
    struct Case {
        SeriesRatioProblem p;
        double lo, hi;
    };
    std::vector<Case> cases = {
        {series(coeffs::poly_geometric(2.0, 0.5), coeffs::constant(1.0), DiscreteFamilyId::ExpDecayK), 1e-3, 100},
        {series(coeffs::finite({1, 2, 1.5, 1, 0.6}), coeffs::constant(1.0), DiscreteFamilyId::ExpDecayK), 1e-3, 100},
        {series(coeffs::poly_geometric(3.0, 0.6), coeffs::constant(1.0), DiscreteFamilyId::PowerK, 1.0), 1e-3, 0.999},
        {series(coeffs::recip_gamma(2, 0.1), coeffs::recip_gamma(1, 5), DiscreteFamilyId::PowerK, 3.0), 3e-3, 2.997},
        {series(coeffs::recip_gamma(1, 1), coeffs::recip_gamma(2, 0.3), DiscreteFamilyId::ExpDecayK), 1e-3, 100},
    };
    for (const auto& c : cases) {
        const auto v = predict_series_ratio(c.p);
        EXPECT_NE(v.pattern, Pattern::Inconclusive) << c.p.a.name();
        EXPECT_NE(v.provenance, "numeric-only") << c.p.a.name();
        EXPECT_EQ(v.turning_point.has_value(), is_unimodal(v.pattern));
        const auto ag = crosscheck(v, observe_series(c.p, c.lo, c.hi));
        EXPECT_TRUE(ag.agrees()) << c.p.a.name() << ": " << ag.detail;
    }
}

TEST(PredictSeries, LowerEndRuleFiresForFiniteSequence)
{
    auto p = series(coeffs::finite({1, 2, 1.5, 1, 0.6}), coeffs::constant(1.0), DiscreteFamilyId::ExpDecayK);
    const auto v = predict_series_ratio(p);
    EXPECT_EQ(v.pattern, Pattern::IncThenDec);
    EXPECT_EQ(v.provenance, "series-unimodal-lower-end-rule(ii)");
    ASSERT_FALSE(v.endpoint_diagnostics.empty());
    EXPECT_EQ(v.endpoint_diagnostics.front().sign, LimitSign::Negative);
}

TEST(PredictSeries, IrregularCoefficientsFallBackToNumeric)
{
    auto p = series(coeffs::finite({1, 2, 1, 2, 1}), coeffs::constant(1.0, 5), DiscreteFamilyId::PowerK, 1.0);
    const auto v = predict_series_ratio(p);
    EXPECT_EQ(v.pattern, Pattern::Inconclusive);
    EXPECT_EQ(v.provenance, "numeric-only");
    EXPECT_TRUE(v.numeric_pattern.has_value());
}

TEST(PredictTransform, Examples)
{
    // f = t g
    auto p = transform(integrands::gamma_kernel(2.0, 1.0), integrands::exponential(1.0), ContinuousKernelId::ExpDecayX);
    auto v = predict_transform_ratio(p);
    EXPECT_EQ(v.pattern, Pattern::Decreasing);
    EXPECT_EQ(v.provenance, "transform-monotone-rule");

    auto same = transform(integrands::exponential(1.0), integrands::exponential(1.0), ContinuousKernelId::ExpDecayX);
    EXPECT_EQ(predict_transform_ratio(same).pattern, Pattern::Constant);

    auto finite = transform(integrands::polynomial({0, 1}), integrands::constant(1.0), ContinuousKernelId::ExpDecayX,
                            1.0, 2.0);
    EXPECT_EQ(predict_transform_ratio(finite).pattern, Pattern::Decreasing);

    auto pw = transform(integrands::polynomial({0, 1}), integrands::constant(1.0), ContinuousKernelId::PowerX, 0, 2);
    EXPECT_EQ(predict_transform_ratio(pw).pattern, Pattern::Increasing);
}

TEST(PredictTransform, UnimodalLaplaceExample)
{
    // f/g = (1+2t) e^{-t} peaks at t = 1/2; F/G = (1+x)(4+x)/(2+x)^2 peaks at x = 2.
    auto p = transform(integrands::poly_exp(2.0, {1, 2}), integrands::exponential(1.0), ContinuousKernelId::ExpDecayX);
    const auto v = predict_transform_ratio(p);
    EXPECT_EQ(v.pattern, Pattern::IncThenDec);
    EXPECT_EQ(v.provenance, "transform-unimodal-lower-end-rule(ii)");
    ASSERT_TRUE(v.turning_point);
    EXPECT_NEAR(*v.turning_point, 2.0, 1e-6);
    for (double x : {0.5, 1.0, 3.0, 10.0})
        EXPECT_NEAR(eval_transform_ratio(p, x), (1 + x) * (4 + x) / ((2 + x) * (2 + x)), 1e-11);
    EXPECT_TRUE(crosscheck(v, observe_transform(p, 1e-3, 100)).agrees());
}

TEST(PredictDe, Examples)
{
    const AnyKernel power = DiscreteKernelFamily{DiscreteFamilyId::PowerK};
    auto v = predict_de_ratio(1, 1, 1, 2, power);
    EXPECT_EQ(v.pattern, Pattern::Increasing);
    EXPECT_EQ(v.provenance, "reciprocal-gamma-series-theorem(i)");
    v = predict_de_ratio(2, 3, 1, 1, power);
    EXPECT_EQ(v.pattern, Pattern::Decreasing);
    EXPECT_EQ(v.provenance, "reciprocal-gamma-series-theorem(iii)");

    v = predict_de_ratio(2, 0.1, 1, 5, power);
    EXPECT_EQ(v.pattern, Pattern::IncThenDec);
    EXPECT_EQ(v.provenance, "mittag-leffler-corollary(iii)");
    ASSERT_TRUE(v.turning_point);
    const auto obs = detect_pattern(
        [](double t) { return mittag_leffler(2, 0.1, t).value / mittag_leffler(1, 5, t).value; }, 1e-3, 30.0, 1024,
        1e-9, Spacing::Log);
    EXPECT_TRUE(crosscheck(v, obs).agrees());

    const AnyKernel laplace = ContinuousKernel{ContinuousKernelId::ExpDecayX, 0.0, kInf};
    v = predict_de_ratio(2, 0.1, 1, 5, laplace);
    EXPECT_TRUE(v.provenance == "reciprocal-gamma-laplace-corollary(iii)") << v.provenance;
    ASSERT_FALSE(v.endpoint_diagnostics.empty());
    const auto p = de_transform_problem(2, 0.1, 1, 5, std::get<ContinuousKernel>(laplace));
    EXPECT_TRUE(crosscheck(v, observe_transform(p, 1e-3, 100)).agrees());

    v = predict_de_ratio(1, 1, 1, 2, laplace);
    EXPECT_EQ(v.pattern, Pattern::Decreasing);
    EXPECT_EQ(v.provenance, "reciprocal-gamma-laplace-corollary(i)");
}

TEST(PredictDe, TwoPathsAgree)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ac(0.6, 3.0), bd(0.05, 5.0);
    const DiscreteKernelFamily power{DiscreteFamilyId::PowerK};
    for (int i = 0; i < 30; ++i) {
        const double a = ac(rng), b = bd(rng), c = ac(rng), d = bd(rng);
        const auto via_theorem = predict_de_ratio(a, b, c, d, AnyKernel{power});
        const auto via_series = predict_series_ratio(series(coeffs::recip_gamma(a, b), coeffs::recip_gamma(c, d),
                                                            DiscreteFamilyId::PowerK));
        EXPECT_EQ(via_theorem.pattern, via_series.pattern) << a << " " << b << " " << c << " " << d;
        if (via_theorem.turning_point && via_series.turning_point)
            EXPECT_NEAR(*via_theorem.turning_point, *via_series.turning_point, 1e-6 * *via_series.turning_point);
    }
}

TEST(Scaling, VerdictUnchanged)
{
    for (double lambda : {1e-6, 0.3, 40.0}) {
        auto p = series(coeffs::finite({1, 2, 1.5, 1, 0.6}), coeffs::constant(1.0), DiscreteFamilyId::ExpDecayK);
        const auto base = predict_series_ratio(p);
        p.a = p.a.scaled(lambda);
        const auto scaled = predict_series_ratio(p);
        EXPECT_EQ(scaled.pattern, base.pattern);
        ASSERT_TRUE(base.turning_point && scaled.turning_point);
        EXPECT_NEAR(*scaled.turning_point, *base.turning_point, 1e-8);
    }
}

TEST(RestrictVerdict, PicksCoveringPiece)
{
    auto v = gamma_ratio_pattern(2, 0.1, 1, 5);
    EXPECT_EQ(restrict_verdict(v, 2.0, 10.0).pattern, Pattern::Decreasing);
    EXPECT_EQ(restrict_verdict(v, 0.01, 1.0).pattern, Pattern::Increasing);
    EXPECT_EQ(restrict_verdict(v, 0.01, 10.0).pattern, Pattern::IncThenDec);
}
