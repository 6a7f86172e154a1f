#include <haarcalc/haar_mc.hpp>

#include <gtest/gtest.h>

using namespace haarcalc;

namespace {

double unitarity_residual(const ComplexMatrix& u)
{
    return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

} // namespace

TEST(Sampler, SU1IsIdentity)
{
    CounterRng rng(1, 0);
    const ComplexMatrix u = sample_haar(GroupSpec(Group::special_unitary, 1), rng);
    ASSERT_EQ(u.rows(), 1);
    EXPECT_EQ(u(0, 0), Complex(1.0, 0.0));
}

TEST(Sampler, UnitarityAndDeterminant)
{
    for (int n = 1; n <= 6; ++n) {
        double worst_u = 0.0;
        double worst_det = 0.0;
        for (std::uint64_t s = 0; s < 1000; ++s) {
            CounterRng rng(77, s);
            worst_u = std::max(worst_u, unitarity_residual(sample_haar(GroupSpec(Group::unitary, n), rng)));
            CounterRng rng2(78, s);
            const ComplexMatrix v = sample_haar(GroupSpec(Group::special_unitary, n), rng2);
            worst_u = std::max(worst_u, unitarity_residual(v));
            worst_det = std::max(worst_det, std::abs(v.determinant() - Complex(1.0, 0.0)));
        }
        EXPECT_LT(worst_u, 1e-12) << "N=" << n;
        EXPECT_LT(worst_det, 1e-12) << "N=" << n;
    }
}

TEST(Sampler, GroupSpecRejectsZero)
{
    EXPECT_THROW(GroupSpec(Group::unitary, 0), std::invalid_argument);
    EXPECT_EQ(parse_group("SU"), Group::special_unitary);
    EXPECT_THROW(parse_group("O"), std::invalid_argument);
}

TEST(Estimates, FirstMomentsVanish)
{
    const auto tr = [](const ComplexMatrix& u) { return u.trace(); };
    const MCEstimate su2 = estimate_observable(GroupSpec(Group::special_unitary, 2), 100000, 3, tr);
    EXPECT_TRUE(compare(su2, Complex(0.0, 0.0), 5.0).pass);
    const MCEstimate u3 = estimate_observable(GroupSpec(Group::unitary, 3), 100000, 4, tr);
    EXPECT_TRUE(compare(u3, Complex(0.0, 0.0), 5.0).pass);
}

TEST(Estimates, SecondMoment)
{
    const std::vector<int> one{1};
    const MCEstimate est = estimate_monomial(one, one, one, one, GroupSpec(Group::unitary, 3), 100000, 5);
    EXPECT_TRUE(compare(est, Complex(1.0 / 3.0, 0.0), 5.0).pass) << est.mean;
    // |U11|^2 is real, so the imaginary part is exactly zero.
    EXPECT_EQ(est.stderr_imag, 0.0);
}

TEST(Estimates, SeedDeterminism)
{
    const SourceMatrices src = SourceMatrices::identity(3);
    const GroupSpec spec(Group::unitary, 3);
    const MCEstimate a = estimate_Z(1, 1, src, spec, 5000, 99);
    const MCEstimate b = estimate_Z(1, 1, src, spec, 5000, 99);
    const MCEstimate c = estimate_Z(1, 1, src, spec, 5000, 100);
    EXPECT_EQ(a, b);
    EXPECT_NE(a.mean, c.mean);
}

TEST(Estimates, ThreadCountInvariance)
{
    const SourceMatrices src(0.5 * ComplexMatrix::Random(3, 3), 0.5 * ComplexMatrix::Random(3, 3));
    const GroupSpec spec(Group::special_unitary, 3);
    const MCEstimate one = estimate_Z(4, 1, src, spec, 20000, 8, 1);
    const MCEstimate three = estimate_Z(4, 1, src, spec, 20000, 8, 3);
    EXPECT_EQ(one, three);
}

// For fixed V, U -> VU preserves Haar measure, so E[f(VU)] estimates E[f(U)].
TEST(Estimates, LeftInvariance)
{
    CounterRng rng(123, 456);
    const ComplexMatrix v = sample_haar(GroupSpec(Group::unitary, 3), rng);
    const auto f = [](const ComplexMatrix& u) { return std::norm(u(0, 0)) * std::norm(u(1, 1)); };
    const MCEstimate plain =
        estimate_observable(GroupSpec(Group::unitary, 3), 100000, 9, [&](const ComplexMatrix& u) { return f(u); });
    const MCEstimate moved =
        estimate_observable(GroupSpec(Group::unitary, 3), 100000, 10, [&](const ComplexMatrix& u) { return f(v * u); });
    const double diff = plain.mean.real() - moved.mean.real();
    const double err = std::hypot(plain.stderr_real, moved.stderr_real);
    EXPECT_LT(std::abs(diff), 5.0 * err);
    EXPECT_TRUE(compare(plain, Complex(1.0 / 8.0, 0.0), 5.0).pass);
}

TEST(Estimates, SelectionRuleOnSU3)
{
    const SourceMatrices src(0.6 * ComplexMatrix::Random(3, 3), 0.6 * ComplexMatrix::Random(3, 3));
    const GroupSpec spec(Group::special_unitary, 3);
    for (int p = 0; p <= 6; ++p) {
        for (int n = 0; p + n <= 6; ++n) {
            const int d = p - n;
            if (d % 3 == 0) {
                continue;
            }
            const MCEstimate est = estimate_Z(p, n, src, spec, 40000, 1000 + 10 * p + n);
            EXPECT_TRUE(compare(est, Complex(0.0, 0.0), 5.0).pass) << "p=" << p << " n=" << n;
        }
    }
}

TEST(Estimates, TrivialPowers)
{
    const SourceMatrices src(ComplexMatrix::Random(2, 2), ComplexMatrix::Random(2, 2));
    const MCEstimate e = estimate_Z(0, 0, src, GroupSpec(Group::unitary, 2), 1000, 1);
    EXPECT_EQ(e.mean, Complex(1.0, 0.0));
    EXPECT_EQ(e.stderr_real, 0.0);
    EXPECT_EQ(e.stderr_imag, 0.0);
    // Z_{N,0} = det K, so (tr U)^2 on SU(2) averages to 1.
    const MCEstimate z20 =
        estimate_Z(2, 0, SourceMatrices::identity(2), GroupSpec(Group::special_unitary, 2), 100000, 2);
    EXPECT_TRUE(compare(z20, Complex(1.0, 0.0), 5.0).pass) << z20.mean;
}

TEST(Compare, Examples)
{
    const MCEstimate est{Complex(1.0, 0.5), 0.1, 0.1, 100, 0};
    EXPECT_TRUE(compare(est, Complex(1.2, 0.4), 5.0).pass);
    EXPECT_FALSE(compare(est, Complex(1.6, 0.5), 5.0).pass);
    EXPECT_FALSE(compare(est, Complex(1.0, -0.1), 5.0).pass);
    EXPECT_NEAR(compare(est, Complex(0.8, 0.5), 5.0).pull_real, 2.0, 1e-12);
    const MCEstimate exact{Complex(1.0, 0.0), 0.0, 0.0, 100, 0};
    EXPECT_TRUE(compare(exact, Complex(1.0, 0.0), 5.0).pass);
    EXPECT_FALSE(compare(exact, Complex(1.0 + 1e-9, 0.0), 5.0).pass);
    EXPECT_THROW(compare(est, Complex(1.0, 0.0), 0.0), std::invalid_argument);
}

TEST(Estimates, ArgumentErrors)
{
    const SourceMatrices src = SourceMatrices::identity(3);
    EXPECT_THROW(estimate_Z(1, 1, src, GroupSpec(Group::unitary, 2), 1000, 1), std::invalid_argument);
    EXPECT_THROW(estimate_Z(1, 1, src, GroupSpec(Group::unitary, 3), 50, 1), std::invalid_argument);
    EXPECT_THROW(estimate_Z(-1, 1, src, GroupSpec(Group::unitary, 3), 1000, 1), std::invalid_argument);
    const std::vector<int> bad{4};
    EXPECT_THROW(estimate_monomial(bad, bad, {}, {}, GroupSpec(Group::unitary, 3), 1000, 1), std::out_of_range);
}
