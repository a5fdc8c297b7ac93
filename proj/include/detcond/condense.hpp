#pragma once

// Determinant condensation.
//
// One condensation step turns an n x n matrix A into the (n-1) x (n-1) matrix
// of 2x2 minors anchored at a pivot a_{k,l}; for a nonzero pivot
//
//     a_{k,l}^(n-2) * det(A) = det(condensed).
//
// det_condensation() applies the step repeatedly with the pivot taken from
// the first row, and divides each level's determinant by the pivot power on
// the way back up. Condensed entries themselves are never divided.

#include "detcond/error.hpp"
#include "detcond/matrix.hpp"
#include "detcond/op_counts.hpp"
#include "detcond/oracle.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace detcond {

template <Scalar S>
struct TwoByTwoBlock {
    S top_left;
    S top_right;
    S bottom_left;
    S bottom_right;

    S determinant(OpCounts* counts = nullptr) const {
        if (counts) {
            counts->multiplications += 2;
            counts->subtractions += 1;
        }
        return top_left * bottom_right - top_right * bottom_left;
    }

    friend bool operator==(const TwoByTwoBlock&, const TwoByTwoBlock&) = default;
};

/// The 2x2 block whose determinant becomes entry (i, j) of the matrix
/// condensed at pivot p = (k, l). 1 <= i, j <= n-1. Rows at or past k and
/// columns at or past l skip over the pivot row/column:
///
///            j < l                           j >= l
///   i < k    [a(i,j)   a(i,l)  ]             [a(i,l)   a(i,j+1)  ]
///            [a(k,j)   a(k,l)  ]             [a(k,l)   a(k,j+1)  ]
///   i >= k   [a(k,j)   a(k,l)  ]             [a(k,l)   a(k,j+1)  ]
///            [a(i+1,j) a(i+1,l)]             [a(i+1,l) a(i+1,j+1)]
template <Scalar S>
TwoByTwoBlock<S> condensation_block(const Matrix<S>& a, std::size_t i, std::size_t j, PivotSpec p) {
    const auto [k, l] = p;
    if (i < k) {
        if (j < l) return {a(i, j), a(i, l), a(k, j), a(k, l)};
        return {a(i, l), a(i, j + 1), a(k, l), a(k, j + 1)};
    }
    if (j < l) return {a(k, j), a(k, l), a(i + 1, j), a(i + 1, l)};
    return {a(k, l), a(k, j + 1), a(i + 1, l), a(i + 1, j + 1)};
}

template <Scalar S>
struct CondensationStep {
    PivotSpec pivot;
    S pivot_value;
    // (-1)^((k-1)+(l-1)): the sign of the row/column rotation that brings the
    // pivot to (1,1). The block layout already absorbs it, so it never
    // multiplies the condensation identity.
    int sign = 1;
    Matrix<S> condensed;

    std::size_t source_order() const { return condensed.rows() + 1; }
};

/// Trace marker: the first row of the order-n matrix at this level was all
/// zero, so its determinant is zero and the recursion stopped.
struct ZeroFirstRow {
    std::size_t order = 0;

    friend bool operator==(const ZeroFirstRow&, const ZeroFirstRow&) = default;
};

template <Scalar S>
using TraceEntry = std::variant<CondensationStep<S>, ZeroFirstRow>;

template <Scalar S>
struct DetResult {
    S value;
    std::vector<TraceEntry<S>> trace;
    OpCounts op_counts;
};

enum class PivotStrategy {
    first_nonzero,  // smallest column with a nonzero entry in row 1
    max_magnitude,  // largest |a_{1,l}|, smallest l on ties
};

PivotStrategy parse_pivot_strategy(std::string_view name);
std::string_view to_string(PivotStrategy strategy);

struct CondensationOptions {
    PivotStrategy strategy = PivotStrategy::first_nonzero;
    bool record_trace = true;
};

namespace detail {

template <Scalar S>
void require_condensable(const Matrix<S>& m, const char* who) {
    require_square(m, who);
    if (m.rows() < 2) throw std::invalid_argument(std::string(who) + ": order must be at least 2");
}

inline int rotation_sign(PivotSpec p) { return ((p.k - 1) + (p.l - 1)) % 2 == 0 ? 1 : -1; }

}  // namespace detail

/// Condensation at (1,1): entry (i,j) = a11 * a(i+1,j+1) - a(1,j+1) * a(i+1,1).
template <Scalar S>
CondensationStep<S> condense_at_11(const Matrix<S>& m, OpCounts* counts = nullptr) {
    detail::require_condensable(m, "condense_at_11");
    const std::size_t order = m.rows() - 1;
    Matrix<S> d(order, order);
    const S& pivot = m(1, 1);
    for (std::size_t i = 1; i <= order; ++i) {
        for (std::size_t j = 1; j <= order; ++j) {
            d(i, j) = pivot * m(i + 1, j + 1) - m(1, j + 1) * m(i + 1, 1);
        }
    }
    if (counts) {
        counts->multiplications += 2 * order * order;
        counts->subtractions += order * order;
    }
    return {PivotSpec{1, 1}, pivot, 1, std::move(d)};
}

/// Condensation at an arbitrary pivot using condensation_block().
template <Scalar S>
CondensationStep<S> condense_at(const Matrix<S>& m, PivotSpec p, OpCounts* counts = nullptr) {
    detail::require_condensable(m, "condense_at");
    const std::size_t n = m.rows();
    if (p.k < 1 || p.k > n || p.l < 1 || p.l > n) {
        throw std::out_of_range("condense_at: pivot (" + std::to_string(p.k) + "," + std::to_string(p.l) +
                                ") outside order " + std::to_string(n));
    }
    Matrix<S> d(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 1; j < n; ++j) d(i, j) = condensation_block(m, i, j, p).determinant(counts);
    }
    return {p, m(p.k, p.l), detail::rotation_sign(p), std::move(d)};
}

/// det(A) det(A without rows/cols k,l) minus the 2x2 determinant of the four
/// minors obtained by deleting one of {k,l} from the rows and one from the
/// columns. Zero for every matrix; determinants come from det_bareiss().
template <Scalar S>
S dodgson_identity_residual(const Matrix<S>& m, std::size_t k, std::size_t l) {
    detail::require_condensable(m, "dodgson_identity_residual");
    if (k >= l) throw std::invalid_argument("dodgson_identity_residual: requires k < l");
    if (k < 1 || l > m.rows()) throw std::out_of_range("dodgson_identity_residual: index out of range");

    auto minor = [&](std::size_t r, std::size_t c) { return det_bareiss(remove_rows_cols(m, {r}, {c})); };
    const S lhs = det_bareiss(m) * det_bareiss(remove_rows_cols(m, {k, l}, {k, l}));
    const S rhs = minor(l, l) * minor(k, k) - minor(l, k) * minor(k, l);
    return lhs - rhs;
}

/// Column (1-based) of the pivot chosen from `row`, or nullopt when the row
/// is entirely zero.
template <Scalar S>
std::optional<std::size_t> select_pivot(std::span<const S> row, PivotStrategy strategy) {
    std::optional<std::size_t> best;
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j].is_zero()) continue;
        if (!best) {
            best = j;
            if (strategy == PivotStrategy::first_nonzero) break;
        } else if (compare_magnitude(row[j], row[*best]) > 0) {
            best = j;
        }
    }
    if (best) return *best + 1;
    return std::nullopt;
}

/// Divides `value` by pivot^power. Exact kinds build the power by repeated
/// multiplication (power - 1 products) and divide once; Float divides by the
/// pivot `power` times to keep intermediates in range.
template <Scalar S>
S divide_by_pivot_power(const S& value, const S& pivot, std::size_t power, OpCounts& counts) {
    if (power == 0) return value;
    if constexpr (is_exact_v<S>) {
        S divisor = pivot;
        for (std::size_t t = 1; t < power; ++t) divisor = divisor * pivot;
        counts.pivot_power_multiplications += power - 1;
        counts.divisions += 1;
        return exact_div(value, divisor);
    } else {
        S out = value;
        for (std::size_t t = 0; t < power; ++t) out = exact_div(out, pivot);
        counts.divisions += power;
        return out;
    }
}

/// Determinant by repeated first-row condensation.
///
/// Orders 0, 1, 2 are evaluated directly. Otherwise the pivot column l is
/// chosen from row 1 (an all-zero row gives 0 immediately), the matrix is
/// condensed at (1,l), the condensed matrix is processed the same way, and
/// its determinant is divided exactly by a_{1,l}^(n-2).
///
/// Under Integer every such division must be exact; a remainder throws
/// InexactDivision and indicates an internal error.
template <Scalar S>
DetResult<S> det_condensation(const Matrix<S>& m, CondensationOptions options = {}) {
    require_square(m, "det_condensation");
    DetResult<S> result;
    OpCounts& counts = result.op_counts;

    struct Level {
        S pivot;
        std::size_t order;
    };
    std::vector<Level> levels;
    Matrix<S> current = m;
    while (current.rows() > 2) {
        const std::size_t order = current.rows();
        const auto l = select_pivot(current.row(1), options.strategy);
        if (!l) {
            if (options.record_trace) result.trace.emplace_back(ZeroFirstRow{order});
            result.value = S::zero();
            return result;
        }
        auto step = condense_at(current, PivotSpec{1, *l}, &counts);
        levels.push_back({step.pivot_value, order});
        current = step.condensed;
        if (options.record_trace) result.trace.emplace_back(std::move(step));
    }

    S value = det_trivial(current);
    if (current.rows() == 2) {
        counts.multiplications += 2;
        counts.subtractions += 1;
    }
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        try {
            value = divide_by_pivot_power(value, it->pivot, it->order - 2, counts);
        } catch (const InexactDivision& e) {
            throw InexactDivision("condensation level of order " + std::to_string(it->order) + ": " + e.what());
        }
    }
    result.value = std::move(value);
    return result;
}

}  // namespace detcond
