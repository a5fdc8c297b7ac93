#pragma once

// Reference determinant routines. None of them shares code with the
// condensation algorithm, so they can serve as ground truth for it.

#include "detcond/error.hpp"
#include "detcond/matrix.hpp"
#include "detcond/op_counts.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace detcond {

enum class OracleKind { cofactor, bareiss, gauss_rational };

/// Largest order det_cofactor accepts.
inline constexpr std::size_t cofactor_max_order = 10;

/// Laplace expansion along the first row, recursively. Minors are keyed by
/// the set of surviving columns and evaluated once each, which keeps n = 10
/// affordable without changing the expansion. Throws for n > 10.
template <Scalar S>
S det_cofactor(const Matrix<S>& m, OpCounts* counts = nullptr) {
    require_square(m, "det_cofactor");
    const std::size_t n = m.rows();
    if (n > cofactor_max_order) {
        throw std::invalid_argument("det_cofactor: order " + std::to_string(n) + " exceeds the cap of " +
                                    std::to_string(cofactor_max_order));
    }
    if (n == 0) return S::one();

    // memo[mask]: determinant of rows (n - popcount(mask) + 1)..n restricted
    // to the columns in mask.
    std::vector<std::optional<S>> memo(std::size_t{1} << n);
    memo[0] = S::one();

    std::function<const S&(std::uint32_t)> minor = [&](std::uint32_t mask) -> const S& {
        auto& slot = memo[mask];
        if (slot) return *slot;
        const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask)) + 1;
        S acc = S::zero();
        bool first = true;
        std::size_t position = 0;
        for (std::size_t j = 1; j <= n; ++j) {
            const std::uint32_t bit = std::uint32_t{1} << (j - 1);
            if ((mask & bit) == 0) continue;
            S term = m(row, j) * minor(mask & ~bit);
            if (counts) ++counts->multiplications;
            if (first) {
                acc = position % 2 == 0 ? term : -term;
                first = false;
            } else {
                acc = position % 2 == 0 ? acc + term : acc - term;
                if (counts) ++counts->subtractions;
            }
            ++position;
        }
        slot = std::move(acc);
        return *slot;
    };
    return minor((std::uint32_t{1} << n) - 1);
}

/// Called after elimination stage `stage` (1-based) with the working matrix.
template <Scalar S>
using BareissObserver = std::function<void(const Matrix<S>& working, std::size_t stage)>;

/// Single-pass fraction-free elimination. Every update is a 2x2 minor against
/// the current pivot divided exactly by the previous pivot. Rows are swapped
/// to bring a nonzero pivot into place (largest magnitude for Float, first
/// nonzero otherwise), flipping the sign. Throws InexactDivision if an integer
/// division leaves a remainder.
template <Scalar S>
S det_bareiss(const Matrix<S>& m, OpCounts* counts = nullptr, const BareissObserver<S>& observe = {}) {
    require_square(m, "det_bareiss");
    const std::size_t n = m.rows();
    if (n == 0) return S::one();

    Matrix<S> a = m;
    bool negate = false;
    S previous = S::one();
    for (std::size_t k = 1; k < n; ++k) {
        std::size_t pivot_row = 0;
        for (std::size_t i = k; i <= n; ++i) {
            if (a(i, k).is_zero()) continue;
            if (pivot_row == 0) {
                pivot_row = i;
                if constexpr (is_exact_v<S>) break;
            } else if (compare_magnitude(a(i, k), a(pivot_row, k)) > 0) {
                pivot_row = i;
            }
        }
        if (pivot_row == 0) return S::zero();
        if (pivot_row != k) {
            for (std::size_t j = 1; j <= n; ++j) std::swap(a(k, j), a(pivot_row, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i <= n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), previous);
            }
            a(i, k) = S::zero();
        }
        if (counts) {
            const std::uint64_t updates = static_cast<std::uint64_t>(n - k) * (n - k);
            counts->multiplications += 2 * updates;
            counts->subtractions += updates;
            counts->divisions += updates;
        }
        previous = a(k, k);
        if (observe) observe(a, k);
    }
    return negate ? -a(n, n) : a(n, n);
}

/// Gaussian elimination over exact rationals: product of the pivots times
/// the sign of the row permutation.
Rational det_gauss_rational(const Matrix<Rational>& m, OpCounts* counts = nullptr);

OracleKind parse_oracle_kind(std::string_view name);
std::string_view to_string(OracleKind kind);

}  // namespace detcond
