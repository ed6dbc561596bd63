#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vhlfiht/fast_hankel.hpp"
#include "vhlfiht/lowrank.hpp"
#include "vhlfiht/model.hpp"

using namespace vhlfiht;
using vhlfiht::testing::random_matrix;
using vhlfiht::testing::rel_diff;
using vhlfiht::testing::singular_values;

namespace
{

Matrix orthonormal(Index rows, Index cols, std::mt19937_64& rng)
{
    Eigen::HouseholderQR<Matrix> qr(random_matrix(rows, cols, rng));
    return qr.householderQ() * Matrix::Identity(rows, cols);
}

Matrix rank_r(Index m, Index p, Index r, std::mt19937_64& rng)
{
    return random_matrix(m, r, rng) * random_matrix(r, p, rng);
}

} // namespace

TEST(TruncateRank, DiagonalExample)
{
    Matrix w = Matrix::Zero(2, 2);
    w(0, 0)  = 3.0;
    w(1, 1)  = 1.0;
    const LowRankFactors f = truncate_rank(w, 1);
    ASSERT_EQ(f.rank(), 1);
    EXPECT_NEAR(f.sigma(0), 3.0, 1e-14);
    Matrix expected = Matrix::Zero(2, 2);
    expected(0, 0)  = 3.0;
    EXPECT_LT((f.reconstruct() - expected).norm(), 1e-14);
}

TEST(TruncateRank, RankRInputIsReproduced)
{
    std::mt19937_64 rng(1);
    const Matrix w = rank_r(9, 7, 3, rng);
    EXPECT_LT((truncate_rank(w, 3).reconstruct() - w).norm(), 1e-12 * w.norm());
}

TEST(TruncateRank, EckartYoungResidual)
{
    std::mt19937_64 rng(2);
    for (int t = 0; t < 100; ++t)
    {
        const Matrix w      = random_matrix(8, 6, rng);
        const Index r       = 1 + t % 5;
        const RealVector sv = singular_values(w);
        const double tail   = std::sqrt(sv.tail(sv.size() - r).squaredNorm());
        const LowRankFactors f = truncate_rank(w, r);
        EXPECT_LT(std::abs((w - f.reconstruct()).norm() - tail), 1e-10 * sv(0));
    }
}

TEST(TruncateRank, FactorInvariants)
{
    std::mt19937_64 rng(3);
    const LowRankFactors f = truncate_rank(random_matrix(12, 10, rng), 4);
    EXPECT_LT((f.U.adjoint() * f.U - Matrix::Identity(4, 4)).norm(), 1e-12);
    EXPECT_LT((f.V.adjoint() * f.V - Matrix::Identity(4, 4)).norm(), 1e-12);
    for (Index k = 1; k < f.rank(); ++k)
    {
        EXPECT_GE(f.sigma(k - 1), f.sigma(k));
    }
    EXPECT_GT(f.sigma(3), 0.0);
}

TEST(TruncateRank, TrimsVanishingSingularValues)
{
    std::mt19937_64 rng(4);
    const Matrix w = rank_r(10, 8, 2, rng);
    const LowRankFactors f = truncate_rank(w, 4);
    EXPECT_EQ(f.rank(), 2);
    EXPECT_LT((f.reconstruct() - w).norm(), 1e-12 * w.norm());
    EXPECT_EQ(truncate_rank(Matrix::Zero(3, 3), 2).rank(), 0);
}

TEST(TruncateRank, RejectsInfeasibleRank)
{
    EXPECT_THROW(truncate_rank(Matrix::Zero(3, 4), 4), dimension_error);
    EXPECT_THROW(truncate_rank(Matrix::Zero(3, 4), 0), dimension_error);
}

TEST(ProjectTangent, HandExamples)
{
    Matrix e0 = Matrix::Zero(2, 1);
    e0(0)     = 1.0;
    const TangentSpace t(e0, e0);

    Matrix w(2, 2);
    w << 0.0, 0.0, 0.0, 1.0;
    EXPECT_EQ(project_tangent(w, t), Matrix::Zero(2, 2));

    w << 1.0, 2.0, 3.0, 4.0;
    Matrix expected(2, 2);
    expected << 1.0, 2.0, 3.0, 0.0;
    EXPECT_LT((project_tangent(w, t) - expected).norm(), 1e-15);
}

TEST(ProjectTangent, FixesTangentVectors)
{
    std::mt19937_64 rng(5);
    const TangentSpace t(orthonormal(9, 3, rng), orthonormal(7, 3, rng));
    const Matrix w = t.U * random_matrix(3, 7, rng) + random_matrix(9, 3, rng) * t.V.adjoint();
    EXPECT_LT((project_tangent(w, t) - w).norm(), 1e-12 * w.norm());
}

TEST(ProjectTangent, IdempotentSelfAdjointLinear)
{
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 100; ++trial)
    {
        const Index m = 4 + trial % 6;
        const Index p = 3 + trial % 5;
        const Index r = 1 + trial % 3;
        const TangentSpace t(orthonormal(m, r, rng), orthonormal(p, r, rng));
        const Matrix w1 = random_matrix(m, p, rng);
        const Matrix w2 = random_matrix(m, p, rng);

        const Matrix p1 = project_tangent(w1, t);
        EXPECT_LT((project_tangent(p1, t) - p1).norm(), 1e-12 * w1.norm());
        EXPECT_LT(rel_diff(inner(p1, w2), inner(w1, project_tangent(w2, t))), 1e-10);

        const Complex a(0.7, -0.2);
        const Matrix lin = project_tangent(a * w1 + w2, t) - (a * p1 + project_tangent(w2, t));
        EXPECT_LT(lin.norm(), 1e-12 * w1.norm());
    }
}

TEST(ProjectTangent, RejectsMismatch)
{
    std::mt19937_64 rng(7);
    const TangentSpace t(orthonormal(4, 1, rng), orthonormal(3, 1, rng));
    EXPECT_THROW(project_tangent(Matrix::Zero(3, 3), t), dimension_error);
}

TEST(TruncateRankOperator, MatchesDenseOnWrappedMatrix)
{
    std::mt19937_64 rng(8);
    // decaying spectrum keeps a gap after the third singular value
    const Matrix u = orthonormal(30, 10, rng);
    const Matrix v = orthonormal(20, 10, rng);
    RealVector sv(10);
    for (Index k = 0; k < 10; ++k)
    {
        sv(k) = std::pow(0.5, static_cast<double>(k));
    }
    const Matrix w = u * sv.cast<Complex>().asDiagonal() * v.adjoint();

    const LowRankFactors dense = truncate_rank(w, 3);
    const LowRankFactors iter  = truncate_rank_operator(
        [&w](const Matrix& x) { return Matrix(w * x); },
        [&w](const Matrix& x) { return Matrix(w.adjoint() * x); }, 30, 20, 3);
    ASSERT_EQ(iter.rank(), 3);
    EXPECT_LT((iter.sigma - dense.sigma).norm(), 1e-8 * dense.sigma(0));
    EXPECT_LT((iter.reconstruct() - dense.reconstruct()).norm(), 1e-8 * w.norm());
}

TEST(TruncateRankOperator, RankOneOperator)
{
    std::mt19937_64 rng(9);
    const Vector u = random_matrix(15, 1, rng);
    const Vector v = random_matrix(11, 1, rng);
    const Matrix w = u * v.adjoint();
    const LowRankFactors f = truncate_rank_operator(
        [&w](const Matrix& x) { return Matrix(w * x); },
        [&w](const Matrix& x) { return Matrix(w.adjoint() * x); }, 15, 11, 1);
    ASSERT_EQ(f.rank(), 1);
    EXPECT_NEAR(f.sigma(0), u.norm() * v.norm(), 1e-10 * u.norm() * v.norm());
    EXPECT_NEAR(std::abs(inner(Vector(f.U.col(0)), u)), u.norm(), 1e-10 * u.norm());
    EXPECT_NEAR(std::abs(inner(Vector(f.V.col(0)), v)), v.norm(), 1e-10 * v.norm());
}

TEST(TruncateRankOperator, LiftedSignalMatchesDenseSvd)
{
    Rng rng(10);
    const PointSourceModel m = synth_model(2, 64, 3, rng);
    const HankelDims dims    = choose_dims(64, 2);
    const Matrix x           = build_signal(m);
    const LiftedOperator op(x, dims);
    const LowRankFactors f = truncate_rank_operator(
        [&op](const Matrix& v) { return op.apply(v); },
        [&op](const Matrix& u) { return op.apply_adjoint(u); }, op.rows(), op.cols(), 3);
    const RealVector sv = singular_values(lift(x, dims));
    ASSERT_EQ(f.rank(), 3);
    EXPECT_LT((f.sigma - sv.head(3)).cwiseAbs().maxCoeff(), 1e-8 * sv(0));
}

TEST(TruncateRankOperator, NonConvergenceCarriesResidual)
{
    // a noisy map is not linear, so the residual check can never pass
    std::mt19937_64 noise(12);
    auto jitter = [&noise](const Matrix& x) {
        return Matrix(x + 1e-3 * random_matrix(x.rows(), x.cols(), noise));
    };
    SvdControls c;
    c.max_iters = 3;
    try
    {
        truncate_rank_operator(jitter, jitter, 10, 10, 2, c);
        FAIL() << "expected convergence_error";
    }
    catch (const convergence_error& e)
    {
        EXPECT_TRUE(std::isfinite(e.residual()));
        EXPECT_GT(e.residual(), c.tol);
    }
}

TEST(TruncateTangent, MatchesDenseTruncationOfProjection)
{
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t)
    {
        const Index r = 1 + t % 4;
        const TangentSpace ts(orthonormal(24, r, rng), orthonormal(18, r, rng));
        const Matrix y = random_matrix(24, 18, rng);
        const LowRankFactors dense = truncate_rank(project_tangent(y, ts), r);
        const LowRankFactors fast  = truncate_tangent(ts, y * ts.V, y.adjoint() * ts.U, r);
        EXPECT_LT((fast.reconstruct() - dense.reconstruct()).norm(), 1e-10 * y.norm());
    }
}
