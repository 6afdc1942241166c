#include <gtest/gtest.h>

#include <random>

#include "kanforge/abelian_group.hpp"
#include "kanforge/smith_normal_form.hpp"

using namespace kanforge;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int spread)
{
    std::uniform_int_distribution<int> dist(-spread, spread);
    IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m(r, c) = dist(rng);
    return m;
}

void expect_valid_decomposition(const IntMatrix& M, const SmithDecomposition& s)
{
    EXPECT_EQ(s.U * M * s.V, s.D);
    EXPECT_EQ(s.U * s.U_inv, IntMatrix::identity(M.rows()));
    EXPECT_EQ(s.V * s.V_inv, IntMatrix::identity(M.cols()));
    for (int r = 0; r < s.D.rows(); ++r)
        for (int c = 0; c < s.D.cols(); ++c)
            if (r != c)
                EXPECT_EQ(s.D(r, c), 0);
    for (int i = 0; i < s.rank; ++i) {
        EXPECT_GT(s.D(i, i), 0);
        if (i + 1 < s.rank)
            EXPECT_EQ(s.D(i + 1, i + 1) % s.D(i, i), 0);
    }
    for (int i = s.rank; i < std::min(M.rows(), M.cols()); ++i)
        EXPECT_EQ(s.D(i, i), 0);
}

} // namespace

TEST(SmithNormalForm, HandComputedExamples)
{
    // diag(2, 3) ~ diag(1, 6)
    const IntMatrix a{{2, 0}, {0, 3}};
    auto s = smith_normal_form(a);
    expect_valid_decomposition(a, s);
    EXPECT_EQ(s.invariant_factors(), (std::vector<Integer>{1, 6}));

    const IntMatrix b{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    s = smith_normal_form(b);
    expect_valid_decomposition(b, s);
    EXPECT_EQ(s.invariant_factors(), (std::vector<Integer>{2, 6, 12}));

    const IntMatrix zero(2, 3);
    s = smith_normal_form(zero);
    EXPECT_EQ(s.rank, 0);
    expect_valid_decomposition(zero, s);
}

TEST(SmithNormalForm, RandomMatricesDecomposeCorrectly)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 6);
        const int cols = 1 + static_cast<int>(rng() % 6);
        const auto M = random_matrix(rng, rows, cols, 5);
        expect_valid_decomposition(M, smith_normal_form(M));
    }
}

TEST(SmithNormalForm, SolveAndKernel)
{
    const IntMatrix A{{1, 2, 3}, {4, 5, 6}};
    const auto s = smith_normal_form(A);
    const auto x = solve_integer(s, IntVector{6, 15});
    ASSERT_TRUE(x);
    EXPECT_EQ(A * *x, (IntVector{6, 15}));
    EXPECT_FALSE(solve_integer(s, IntVector{1, 0}).has_value());
    const auto K = kernel_basis(s);
    ASSERT_EQ(K.cols(), 1);
    EXPECT_EQ(A * K.column(0), (IntVector{0, 0}));
}

TEST(AbelianGroup, Formatting)
{
    EXPECT_EQ(FGAbelianGroup{}.to_string(), "0");
    EXPECT_EQ(FGAbelianGroup::free(1).to_string(), "Z");
    EXPECT_EQ(FGAbelianGroup::free(2).to_string(), "Z^2");
    EXPECT_EQ(FGAbelianGroup::cyclic(2).to_string(), "Z/2");
    EXPECT_EQ((FGAbelianGroup{1, {2}}.to_string()), "Z + Z/2");
    EXPECT_EQ(FGAbelianGroup::from_relations(IntMatrix{{2, 0}, {0, 3}}).to_string(), "Z/6");
}

TEST(AbelianGroup, SubquotientCoordinates)
{
    // Z = ℤ^2, B = <(2, 0)>: group ℤ/2 ⊕ ℤ
    const IntMatrix Z = IntMatrix::identity(2);
    const IntMatrix B{{2}, {0}};
    const Subquotient q(Z, B);
    EXPECT_EQ(q.group().to_string(), "Z + Z/2");
    const auto gens = q.generators();
    ASSERT_EQ(gens.size(), 2u);
    EXPECT_EQ(*q.coordinates(gens[0]), (IntVector{1, 0}));
    EXPECT_EQ(*q.coordinates(gens[1]), (IntVector{0, 1}));
    EXPECT_TRUE(q.is_boundary(IntVector{4, 0}));
    EXPECT_FALSE(q.is_boundary(IntVector{1, 0}));
}
