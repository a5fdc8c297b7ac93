#include "detcond/matrix.hpp"
#include "detcond/oracle.hpp"
#include "detcond/random.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

using namespace detcond;

TEST(Matrix, GetIsOneBased) {
    const auto a = test_support::worked_matrix();
    EXPECT_EQ(get(a, 1, 1), Float(2));
    EXPECT_DOUBLE_EQ(get(a, 4, 4).value(), 1.7320508075688772);
    EXPECT_EQ(get(Matrix<Integer>::identity(3), 1, 2), Integer(0));
}

TEST(Matrix, GetOutOfRange) {
    const auto id = Matrix<Integer>::identity(3);
    EXPECT_THROW(get(id, 0, 1), std::out_of_range);
    EXPECT_THROW(get(id, 4, 1), std::out_of_range);
    EXPECT_THROW(get(id, 1, 4), std::out_of_range);
}

TEST(Matrix, EntryCountMismatchThrows) {
    EXPECT_THROW(Matrix<Integer>(2, 2, std::vector<Integer>(3)), std::invalid_argument);
    EXPECT_THROW((Matrix<Integer>{{1, 2}, {3}}), std::invalid_argument);
}

TEST(RemoveRowsCols, TopLeftBlock) {
    const Matrix<Integer> a{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    EXPECT_EQ(remove_rows_cols(a, {3}, {3}), (Matrix<Integer>{{1, 2}, {4, 5}}));
    EXPECT_EQ(remove_rows_cols(a, {1}, {2}), (Matrix<Integer>{{4, 6}, {7, 9}}));
}

TEST(RemoveRowsCols, EmptyMinor) {
    const Matrix<Integer> a{{1, 2}, {3, 4}};
    const auto empty = remove_rows_cols(a, {1, 2}, {1, 2});
    EXPECT_EQ(empty.rows(), 0u);
    EXPECT_EQ(empty.cols(), 0u);
    EXPECT_EQ(det_trivial(empty), Integer(1));
}

TEST(RemoveRowsCols, WorkedLeadingBlock) {
    const auto a = test_support::worked_matrix();
    const auto lead = remove_rows_cols(a, {6, 7}, {6, 7});
    ASSERT_EQ(lead.rows(), 5u);
    for (std::size_t i = 1; i <= 5; ++i) {
        for (std::size_t j = 1; j <= 5; ++j) EXPECT_EQ(lead(i, j), a(i, j));
    }
}

TEST(RemoveRowsCols, RejectsBadIndices) {
    const auto a = Matrix<Integer>::identity(3);
    EXPECT_THROW(remove_rows_cols(a, {1, 1}, {}), std::invalid_argument);
    EXPECT_THROW(remove_rows_cols(a, {4}, {}), std::out_of_range);
    EXPECT_THROW(remove_rows_cols(a, {}, {0}), std::out_of_range);
}

TEST(RemoveRowsCols, PreservesOrderProperty) {
    SplitMix64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 7));
        const auto a = random_integer_matrix(rng, n, 50);
        std::vector<std::size_t> rows, cols;
        for (std::size_t i = 1; i <= n; ++i) {
            if (rng.uniform(0, 2) == 0) rows.push_back(i);
            if (rng.uniform(0, 2) == 0) cols.push_back(i);
        }
        const auto minor = remove_rows_cols(a, std::span<const std::size_t>(rows), std::span<const std::size_t>(cols));
        std::vector<std::size_t> kept_rows, kept_cols;
        for (std::size_t i = 1; i <= n; ++i) {
            if (std::find(rows.begin(), rows.end(), i) == rows.end()) kept_rows.push_back(i);
            if (std::find(cols.begin(), cols.end(), i) == cols.end()) kept_cols.push_back(i);
        }
        ASSERT_EQ(minor.rows(), kept_rows.size());
        ASSERT_EQ(minor.cols(), kept_cols.size());
        for (std::size_t i = 1; i <= minor.rows(); ++i) {
            for (std::size_t j = 1; j <= minor.cols(); ++j) {
                ASSERT_EQ(minor(i, j), a(kept_rows[i - 1], kept_cols[j - 1]));
            }
        }
    }
}

TEST(RotatePivot, IdentityPivot) {
    const Matrix<Integer> a{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
    const auto [b, sign] = rotate_pivot_to_front(a, {1, 1});
    EXPECT_EQ(b, a);
    EXPECT_EQ(sign, 1);
}

TEST(RotatePivot, SingleRowSwap) {
    const Matrix<Integer> a{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
    const auto [b, sign] = rotate_pivot_to_front(a, {2, 1});
    EXPECT_EQ(b, (Matrix<Integer>{{4, 5, 6}, {1, 2, 3}, {7, 8, 10}}));
    EXPECT_EQ(sign, -1);
}

TEST(RotatePivot, IsARotationNotATransposition) {
    const Matrix<Integer> a{{11, 12, 13, 14}, {21, 22, 23, 24}, {31, 32, 33, 34}, {41, 42, 43, 44}};
    const auto [b, sign] = rotate_pivot_to_front(a, {3, 4});
    EXPECT_EQ(b, (Matrix<Integer>{{34, 31, 32, 33}, {14, 11, 12, 13}, {24, 21, 22, 23}, {44, 41, 42, 43}}));
    EXPECT_EQ(sign, -1);  // (3-1) + (4-1) = 5
}

TEST(RotatePivot, OutOfRange) {
    EXPECT_THROW(rotate_pivot_to_front(Matrix<Integer>::identity(3), {4, 1}), std::out_of_range);
    EXPECT_THROW(rotate_pivot_to_front(Matrix<Integer>::identity(3), {1, 0}), std::out_of_range);
}

TEST(RotatePivot, SignLawOnRandomRationals) {
    SplitMix64 rng(12);
    for (int t = 0; t < 20; ++t) {
        const auto a = random_rational_matrix(rng, 4, 9);
        const auto det_a = test_support::leibniz_det(a);
        for (std::size_t k = 1; k <= 4; ++k) {
            for (std::size_t l = 1; l <= 4; ++l) {
                const auto [b, sign] = rotate_pivot_to_front(a, {k, l});
                ASSERT_EQ(b(1, 1), a(k, l));
                const auto det_b = test_support::leibniz_det(b);
                ASSERT_EQ(sign == 1 ? det_b : -det_b, det_a) << "pivot (" << k << "," << l << ")";

                auto before = std::vector<std::string>();
                auto after = std::vector<std::string>();
                for (const auto& x : a.entries()) before.push_back(to_text(x));
                for (const auto& x : b.entries()) after.push_back(to_text(x));
                std::sort(before.begin(), before.end());
                std::sort(after.begin(), after.end());
                ASSERT_EQ(before, after);
            }
        }
    }
}

TEST(DetTrivial, BaseCases) {
    EXPECT_EQ(det_trivial(Matrix<Rational>(0, 0)), Rational(1));
    EXPECT_EQ(det_trivial(Matrix<Rational>{{5}}), Rational(5));
    EXPECT_EQ(det_trivial(Matrix<Integer>{{2, 5}, {0, 1}}), Integer(2));
    EXPECT_THROW(det_trivial(Matrix<Integer>::identity(3)), std::invalid_argument);
    EXPECT_THROW(det_trivial(Matrix<Integer>(2, 3)), std::invalid_argument);
}
