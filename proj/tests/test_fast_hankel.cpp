#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vhlfiht/fast_hankel.hpp"

using namespace vhlfiht;
using vhlfiht::testing::naive_lift;
using vhlfiht::testing::random_matrix;

TEST(FastMatvec, UnitVectorSelectsFirstBlockColumn)
{
    std::mt19937_64 rng(1);
    const HankelDims dims = choose_dims(9, 2);
    const Matrix x        = random_matrix(2, 9, rng);
    Vector e0             = Vector::Zero(dims.n2);
    e0(0)                 = 1.0;
    const Vector got      = fast_matvec(x, e0, dims);
    for (Index j = 0; j < dims.n1; ++j)
    {
        EXPECT_LT((got.segment(2 * j, 2) - x.col(j)).norm(), 1e-12);
    }
}

TEST(FastMatvec, AdjointUnitVectorGivesConjugatedFirstRow)
{
    std::mt19937_64 rng(2);
    const HankelDims dims = choose_dims(10, 3);
    const Matrix x        = random_matrix(3, 10, rng);
    Vector e0             = Vector::Zero(dims.rows());
    e0(0)                 = 1.0;
    const Vector got      = fast_adjoint_matvec(x, e0, dims);
    const Matrix dense    = naive_lift(x, dims.n1, dims.n2);
    EXPECT_LT((got - dense.row(0).adjoint()).norm(), 1e-12);
    for (Index k = 0; k < dims.n2; ++k)
    {
        EXPECT_LT(std::abs(got(k) - std::conj(x(0, k))), 1e-12);
    }
}

TEST(FastMatvec, MatchesDenseProductAcrossShapes)
{
    std::mt19937_64 rng(3);
    for (auto [s, n, n1] : std::vector<std::tuple<Index, Index, Index>>{
             {2, 32, 16}, {1, 8, 4}, {1, 33, 10}, {3, 31, 25}, {4, 64, 13}, {2, 100, 51}, {5, 17, 1}})
    {
        const HankelDims dims = make_dims(n, s, n1);
        const Matrix x        = random_matrix(s, n, rng);
        const Matrix z        = naive_lift(x, dims.n1, dims.n2);
        const LiftedOperator op(x, dims);

        const Matrix v = random_matrix(dims.n2, 4, rng);
        const Matrix u = random_matrix(dims.rows(), 4, rng);
        EXPECT_LT((op.apply(v) - z * v).norm(), 1e-10 * (z * v).norm()) << s << " " << n << " " << n1;
        EXPECT_LT((op.apply_adjoint(u) - z.adjoint() * u).norm(), 1e-10 * (z.adjoint() * u).norm());
    }
}

TEST(LowRankPinvLift, MatchesDensePseudoinverse)
{
    std::mt19937_64 rng(4);
    for (auto [s, n, r] : std::vector<std::tuple<Index, Index, Index>>{
             {1, 16, 2}, {2, 32, 3}, {4, 50, 5}, {3, 9, 1}})
    {
        const HankelDims dims = choose_dims(n, s);
        const Matrix u        = random_matrix(dims.rows(), r, rng);
        const Matrix v        = random_matrix(dims.n2, r, rng);
        RealVector sigma(r);
        for (Index l = 0; l < r; ++l)
        {
            sigma(l) = static_cast<double>(r - l);
        }
        const Matrix dense = pinv_lift(u * sigma.cast<Complex>().asDiagonal() * v.adjoint(), dims);
        const Matrix fast  = lowrank_pinv_lift(u, sigma, v, dims);
        EXPECT_LT((fast - dense).norm(), 1e-12 * dense.norm());
    }
}

TEST(LowRankPinvLift, RejectsMismatchedFactors)
{
    const HankelDims dims = choose_dims(8, 2);
    EXPECT_THROW(lowrank_pinv_lift(Matrix::Zero(3, 1), RealVector::Ones(1), Matrix::Zero(dims.n2, 1), dims),
                 dimension_error);
}
