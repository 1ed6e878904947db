#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace monoratio;

namespace {

DiscreteKernelFamily fam(DiscreteFamilyId id, double r = kInf) { return {id, r}; }
ContinuousKernel ker(ContinuousKernelId id, double alpha = 0.0, double beta = kInf) { return {id, alpha, beta}; }

const DiscreteFamilyId kDiscrete[] = {DiscreteFamilyId::PowerK, DiscreteFamilyId::InversePowerK,
                                      DiscreteFamilyId::ExpDecayK, DiscreteFamilyId::DirichletK};
const ContinuousKernelId kContinuous[] = {ContinuousKernelId::PowerX, ContinuousKernelId::InversePowerX,
                                          ContinuousKernelId::ExpDecayX, ContinuousKernelId::ShiftedPowerX};

} // namespace

TEST(EvalDiscrete, ClosedForms)
{
    EXPECT_DOUBLE_EQ(eval_discrete(fam(DiscreteFamilyId::PowerK), 3, 2.0, 1), 12.0);
    EXPECT_NEAR(eval_discrete(fam(DiscreteFamilyId::ExpDecayK), 2, 0.5, 0), std::exp(-1.0), 1e-15);
    EXPECT_NEAR(eval_discrete(fam(DiscreteFamilyId::DirichletK), 1, 1.0, 1), -std::numbers::ln2 / 2, 1e-15);
    EXPECT_DOUBLE_EQ(eval_discrete(fam(DiscreteFamilyId::PowerK), 0, 2.0, 1), 0.0);
    EXPECT_DOUBLE_EQ(eval_discrete(fam(DiscreteFamilyId::InversePowerK), 2, 2.0, 2), 6.0 / 16.0);
}

TEST(EvalDiscrete, DomainErrors)
{
    EXPECT_THROW(eval_discrete(fam(DiscreteFamilyId::PowerK, 1.0), 1, 1.0, 0), domain_error);
    EXPECT_THROW(eval_discrete(fam(DiscreteFamilyId::PowerK), 1, 0.0, 0), domain_error);
    EXPECT_THROW(eval_discrete(fam(DiscreteFamilyId::PowerK), 1, 0.5, 3), domain_error);
    EXPECT_THROW(eval_discrete(fam(DiscreteFamilyId::PowerK), -1, 0.5, 0), domain_error);
}

TEST(EvalContinuous, ClosedForms)
{
    EXPECT_NEAR(eval_continuous(ker(ContinuousKernelId::ExpDecayX), 1.0, 2.0, 1), -std::exp(-2.0), 1e-15);
    EXPECT_DOUBLE_EQ(eval_continuous(ker(ContinuousKernelId::ShiftedPowerX), 0.0, 5.0, 0), 1.0);
    EXPECT_NEAR(eval_continuous(ker(ContinuousKernelId::PowerX), 2.0, 3.0, 2), 2.0, 1e-14);
    EXPECT_NEAR(eval_continuous(ker(ContinuousKernelId::MellinX), 2.0, 3.0, 0), 4.0, 1e-14);
}

TEST(EvalContinuous, DomainErrors)
{
    EXPECT_THROW(eval_continuous(ker(ContinuousKernelId::ExpDecayX, 1.0, 2.0), 3.0, 1.0, 0), domain_error);
    EXPECT_THROW(eval_continuous(ker(ContinuousKernelId::ExpDecayX), 1.0, 0.0, 0), domain_error);
}

TEST(EvalDiscrete, DerivativesMatchFiniteDifferences)
{
    for (auto id : kDiscrete) {
        const auto f = fam(id);
        for (int k = 0; k <= 16; ++k)
            for (double t : testing_support::log_grid(0.05, 20.0, 32))
                for (int order = 1; order <= 2; ++order) {
                    const double fd = testing_support::central_difference(
                        [&](double s) { return eval_discrete(f, k, s, order - 1); }, t, 1e-6);
                    const double exact = eval_discrete(f, k, t, order);
                    EXPECT_NEAR(fd, exact, 1e-6 * std::max(1.0, std::abs(exact)))
                        << to_string(id) << " k=" << k << " t=" << t << " order=" << order;
                }
    }
}

TEST(EvalContinuous, DerivativesMatchFiniteDifferences)
{
    for (auto id : kContinuous) {
        const auto kk = ker(id);
        for (double t : {0.0, 0.5, 1.0, 3.0, 8.0})
            for (double x : testing_support::log_grid(0.05, 20.0, 32)) {
                const double fd = testing_support::central_difference(
                    [&](double s) { return eval_continuous(kk, t, s, 0); }, x, 1e-6);
                const double exact = eval_continuous(kk, t, x, 1);
                EXPECT_NEAR(fd, exact, 1e-6 * std::max(1.0, std::abs(exact)))
                    << to_string(id) << " t=" << t << " x=" << x;
            }
    }
}

TEST(Kernels, PositiveOnDefaultGrids)
{
    for (auto id : kDiscrete)
        for (int k = 0; k <= 16; ++k)
            for (double t : make_grid(default_grid(AnyKernel{fam(id)}).outer))
                EXPECT_EQ(eval_discrete_log(fam(id), k, t, 0).sign, 1);
    for (auto id : kContinuous) {
        const auto g = default_grid(AnyKernel{ker(id)});
        for (double x : make_grid(g.outer))
            for (double t : make_grid(g.inner))
                EXPECT_EQ(eval_continuous_log(ker(id), t, x, 0).sign, 1);
    }
}

TEST(DeclaredClasses, MatchTable)
{
    using C = KernelClass;
    EXPECT_EQ(declared_classes(fam(DiscreteFamilyId::PowerK)).declared, (std::set<C>{C::DW11, C::DW2}));
    for (auto id : {DiscreteFamilyId::InversePowerK, DiscreteFamilyId::ExpDecayK, DiscreteFamilyId::DirichletK})
        EXPECT_EQ(declared_classes(fam(id)).declared, (std::set<C>{C::DW12, C::DW3}));
    EXPECT_EQ(declared_classes(ker(ContinuousKernelId::PowerX)).declared, (std::set<C>{C::CW11, C::CW2}));
    for (auto id : {ContinuousKernelId::InversePowerX, ContinuousKernelId::ExpDecayX,
                    ContinuousKernelId::ShiftedPowerX})
        EXPECT_EQ(declared_classes(ker(id)).declared, (std::set<C>{C::CW12, C::CW3}));
    EXPECT_EQ(declared_classes(ker(ContinuousKernelId::MellinX)).declared, (std::set<C>{C::CW11}));
}

TEST(VerifyClassConditions, EveryDeclaredPairPasses)
{
    std::vector<AnyKernel> all;
    for (auto id : kDiscrete)
        all.emplace_back(fam(id));
    all.emplace_back(fam(DiscreteFamilyId::PowerK, 2.0));
    for (auto id : kContinuous)
        all.emplace_back(ker(id));
    all.emplace_back(ker(ContinuousKernelId::PowerX, 0.0, 2.0));
    all.emplace_back(ker(ContinuousKernelId::MellinX));
    for (const auto& k : all)
        for (KernelClass c : declared_classes(k).declared) {
            const auto rep = verify_class_conditions(k, c);
            EXPECT_TRUE(rep.passed()) << kernel_name(k) << " " << to_string(c);
            for (const auto& cond : rep.conditions)
                EXPECT_TRUE(cond.passed) << cond.label << ": " << cond.witness;
        }
}

TEST(VerifyClassConditions, PowerNotInDW12)
{
    const auto rep = verify_class_conditions(fam(DiscreteFamilyId::PowerK), KernelClass::DW12);
    EXPECT_FALSE(rep.passed());
    const auto* c = rep.find("(ii)");
    ASSERT_NE(c, nullptr);
    EXPECT_FALSE(c->passed);
    EXPECT_FALSE(c->witness.empty());
}

TEST(VerifyClassConditions, ClosedFormChecks)
{
    EXPECT_TRUE(verify_class_conditions(fam(DiscreteFamilyId::ExpDecayK), KernelClass::DW3).passed());
    EXPECT_TRUE(verify_class_conditions(ker(ContinuousKernelId::ShiftedPowerX), KernelClass::CW3).passed());
}

// With alpha > 0 the condition w_x(alpha, x) = 0 cannot hold for e^{-tx}.
TEST(VerifyClassConditions, ExpDecayOnShiftedIntervalIsNotCW3)
{
    const auto rep = verify_class_conditions(ker(ContinuousKernelId::ExpDecayX, 1.0, 2.0), KernelClass::CW3);
    EXPECT_FALSE(rep.passed());
    const auto* c = rep.find("(iii)");
    ASSERT_NE(c, nullptr);
    EXPECT_FALSE(c->passed);
    EXPECT_TRUE(verify_class_conditions(ker(ContinuousKernelId::ExpDecayX, 1.0, 2.0), KernelClass::CW12).passed());
}

TEST(VerifyClassConditions, MellinOutsideSecondOrderClasses)
{
    EXPECT_FALSE(verify_class_conditions(ker(ContinuousKernelId::MellinX), KernelClass::CW2).passed());
    EXPECT_FALSE(verify_class_conditions(ker(ContinuousKernelId::MellinX), KernelClass::CW3).passed());
}

TEST(VerifyClassConditions, KindMismatchIsReportedNotThrown)
{
    const auto rep = verify_class_conditions(fam(DiscreteFamilyId::PowerK), KernelClass::CW2);
    EXPECT_FALSE(rep.passed());
}
