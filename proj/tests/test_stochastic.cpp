#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace monoratio;

namespace {

double L(const RandomVariableModel& z, double x) { return laplace_transform(z, x).value; }

OrderOptions checked()
{
    OrderOptions o;
    o.always_fallback = true;
    return o;
}

bool has_note(const OrderVerdict& v, const std::string& needle)
{
    for (const auto& n : v.notes)
        if (n.find(needle) != std::string::npos)
            return true;
    return false;
}

} // namespace

TEST(Laplace, PointMassAtZero)
{
    const auto z = rv::discrete("point", {1.0});
    for (double x : {1e-3, 1.0, 50.0})
        EXPECT_NEAR(L(z, x), 1.0, 1e-15);
}

TEST(Laplace, ClosedForms)
{
    EXPECT_NEAR(L(rv::exponential(2.0), 2.0), 0.5, 1e-10);
    EXPECT_NEAR(L(rv::geometric(0.5), std::log(2.0)), 2.0 / 3.0, 1e-12);
    // gamma(k, rate): (rate / (rate + x))^k
    EXPECT_NEAR(L(rv::gamma(3.0, 2.0), 1.0), std::pow(2.0 / 3.0, 3.0), 1e-10);
    // uniform on (0, theta): (1 - e^{-theta x}) / (theta x)
    EXPECT_NEAR(L(rv::uniform(2.0), 0.5), -std::expm1(-1.0), 1e-10);
}

// Plain long-double summation of the pmf.
TEST(Laplace, DiscreteMatchesDirectSum)
{
    for (const auto& z : {rv::geometric(0.3), rv::size_biased_geometric(0.4), rv::poisson(3.5)}) {
        for (double x : {0.01, 0.3, 2.0, 10.0}) {
            long double acc = 0.0L;
            for (std::size_t k = 0; k < z.pmf.size(); ++k)
                acc += static_cast<long double>(z.pmf[k]) * std::exp(-static_cast<long double>(x) * k);
            EXPECT_NEAR(L(z, x), static_cast<double>(acc), 1e-12) << z.name << " x=" << x;
        }
    }
}

TEST(Laplace, PositiveDecreasingConvex)
{
    const std::vector<RandomVariableModel> zs = {rv::exponential(1.5), rv::gamma(2.5, 1.0), rv::uniform(3.0),
                                                 rv::geometric(0.2), rv::poisson(2.0)};
    const auto grid = testing_support::log_grid(1e-2, 20.0, 60);
    for (const auto& z : zs) {
        std::vector<double> v;
        for (double x : grid)
            v.push_back(L(z, x));
        for (std::size_t i = 0; i < v.size(); ++i) {
            EXPECT_GT(v[i], 0.0) << z.name;
            if (i > 0)
                EXPECT_LT(v[i], v[i - 1]) << z.name << " x=" << grid[i];
            if (i > 0 && i + 1 < v.size()) {
                // Convexity on an uneven grid: the chord slope grows.
                const double s1 = (v[i] - v[i - 1]) / (grid[i] - grid[i - 1]);
                const double s2 = (v[i + 1] - v[i]) / (grid[i + 1] - grid[i]);
                EXPECT_GE(s2, s1 - 1e-9 * std::abs(s1)) << z.name << " x=" << grid[i];
            }
        }
    }
}

TEST(Laplace, LimitAtZeroIsOne)
{
    for (const auto& z : {rv::exponential(1.0), rv::gamma(2.0, 3.0), rv::geometric(0.4), rv::poisson(5.0)})
        EXPECT_NEAR(L(z, 1e-9), 1.0, 1e-6) << z.name;
}

TEST(Laplace, RejectsNonPositiveArgument)
{
    EXPECT_THROW(L(rv::exponential(1.0), 0.0), domain_error);
    EXPECT_THROW(L(rv::exponential(1.0), -1.0), domain_error);
}

TEST(Models, RejectBadParameters)
{
    EXPECT_THROW(rv::exponential(0.0), domain_error);
    EXPECT_THROW(rv::geometric(1.5), domain_error);
    EXPECT_THROW(rv::discrete("bad", {0.5, 0.2}), domain_error);
    EXPECT_THROW(rv::discrete("neg", {1.5, -0.5}), domain_error);
}

TEST(LtOrder, ExponentialRates)
{
    // L_Y / L_X = 2(1 + x) / (2 + x) increases.
    const auto v = lt_ratio_order(rv::exponential(1.0), rv::exponential(2.0), checked());
    EXPECT_EQ(v.relation, OrderRelation::Y_le_ltr_X);
    EXPECT_EQ(v.provenance, "lt-order-continuous-theorem(i)");
    EXPECT_EQ(v.fallback_relation, OrderRelation::Y_le_ltr_X);
    EXPECT_FALSE(v.theorem_contradicted());

    const auto w = lt_ratio_order(rv::exponential(2.0), rv::exponential(1.0));
    EXPECT_EQ(w.relation, OrderRelation::X_le_ltr_Y);
}

TEST(LtOrder, IdenticalVariablesAreSymmetric)
{
    const auto v = lt_ratio_order(rv::gamma(2.0, 1.0), rv::gamma(2.0, 1.0));
    EXPECT_EQ(v.relation, OrderRelation::X_le_ltr_Y);
    EXPECT_TRUE(has_note(v, "symmetric")) << v.provenance;

    const auto d = lt_ratio_order(rv::geometric(0.3), rv::geometric(0.3));
    EXPECT_EQ(d.relation, OrderRelation::X_le_ltr_Y);
    EXPECT_TRUE(has_note(d, "symmetric"));
}

TEST(LtOrder, SizeBiasedGeometric)
{
    const auto v = lt_ratio_order(rv::size_biased_geometric(0.5), rv::geometric(0.5), checked());
    EXPECT_EQ(v.relation, OrderRelation::Y_le_ltr_X);
    EXPECT_EQ(v.provenance, "lt-order-discrete-theorem(i)");
    EXPECT_FALSE(v.theorem_contradicted());
}

TEST(LtOrder, GammaShape)
{
    // f_X / f_Y = t increases.
    const auto v = lt_ratio_order(rv::gamma(2.0, 1.0), rv::exponential(1.0), checked());
    EXPECT_EQ(v.relation, OrderRelation::Y_le_ltr_X);
    EXPECT_FALSE(v.theorem_contradicted());
}

TEST(LtOrder, Transitive)
{
    const std::vector<RandomVariableModel> chain = {rv::exponential(3.0), rv::exponential(2.0),
                                                    rv::exponential(1.0)};
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        ASSERT_EQ(lt_ratio_order(chain[i], chain[i + 1]).relation, OrderRelation::X_le_ltr_Y);
    EXPECT_EQ(lt_ratio_order(chain.front(), chain.back()).relation, OrderRelation::X_le_ltr_Y);
}

TEST(LtOrder, MixedKindsFallBack)
{
    const auto v = lt_ratio_order(rv::exponential(1.0), rv::geometric(0.5));
    EXPECT_EQ(v.provenance, "numeric-fallback");
    EXPECT_TRUE(has_note(v, "mixed"));
    EXPECT_TRUE(has_note(v, "not proven"));
    EXPECT_TRUE(v.fallback_relation.has_value());
}

// Theorem verdicts are never contradicted by the grid check.
TEST(LtOrder, TheoremNeverContradicted)
{
    const std::vector<std::pair<RandomVariableModel, RandomVariableModel>> pairs = {
        {rv::exponential(0.5), rv::exponential(4.0)},
        {rv::gamma(3.0, 1.0), rv::gamma(1.5, 1.0)},
        {rv::gamma(2.0, 2.0), rv::exponential(1.0)},
        {rv::geometric(0.2), rv::geometric(0.7)},
        {rv::poisson(1.0), rv::poisson(4.0)},
        {rv::size_biased_geometric(0.3), rv::geometric(0.6)},
        // f_X / f_Y vanishes past 1, so only the grid check applies here.
        {rv::uniform(1.0), rv::uniform(2.0)},
    };
    int theorem = 0;
    for (const auto& [x, y] : pairs) {
        const auto v = lt_ratio_order(x, y, checked());
        EXPECT_FALSE(v.theorem_contradicted()) << x.name << " vs " << y.name;
        if (v.provenance != "numeric-fallback")
            ++theorem;
    }
    EXPECT_EQ(theorem, 6);
}
