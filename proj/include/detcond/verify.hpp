#pragma once

// Evaluates the condensation identities on a concrete matrix with the oracle
// determinant. Exact kinds must give a zero residual; Float residuals are
// measured relative to max(1, |left-hand side|).

#include "detcond/condense.hpp"
#include "detcond/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace detcond {

struct IdentityReport {
    std::string name;
    std::size_t checked = 0;
    std::size_t skipped = 0;  // zero pivots, where the identity is vacuous
    std::size_t failed = 0;
    std::string worst;  // largest residual seen (relative for Float)
    std::string first_failure;

    bool passed() const { return failed == 0; }
};

namespace detail {

template <Scalar S>
S power(const S& base, std::size_t exponent) {
    S out = S::one();
    for (std::size_t t = 0; t < exponent; ++t) out = out * base;
    return out;
}

template <Scalar S>
class ResidualTally {
public:
    ResidualTally(std::string name, double tolerance) : tolerance_(tolerance) { report_.name = std::move(name); }

    void record(const S& lhs, const S& rhs, const S& scale, const std::string& label) {
        ++report_.checked;
        const S residual = lhs - rhs;
        bool ok = false;
        if constexpr (is_exact_v<S>) {
            ok = residual.is_zero();
            if (!ok && report_.worst.empty()) report_.worst = to_text(residual);
        } else {
            const double rel = std::fabs(residual.value()) / std::max(1.0, std::fabs(scale.value()));
            ok = rel <= tolerance_;
            worst_relative_ = std::max(worst_relative_, rel);
        }
        if (!ok && report_.failed++ == 0) report_.first_failure = label;
    }

    void skip() { ++report_.skipped; }

    IdentityReport finish() {
        if constexpr (is_exact_v<S>) {
            if (report_.worst.empty()) report_.worst = "0";
        } else {
            report_.worst = to_text(Float(worst_relative_));
        }
        return report_;
    }

private:
    IdentityReport report_;
    double tolerance_;
    double worst_relative_ = 0.0;
};

inline std::string pair_label(std::size_t a, std::size_t b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace detail

/// Checks, for an order n >= 3 matrix:
///   - a11^(n-2) det A = det(condense_at_11(A))   (covers a11 = 0 too)
///   - a_kl^(n-2) det A = det(condense_at(A, (k,l))) for every nonzero a_kl
///   - the Dodgson identity for every 1 <= k < l <= n
template <Scalar S>
std::vector<IdentityReport> verify_identities(const Matrix<S>& m, double tolerance = 1e-9) {
    require_square(m, "verify_identities");
    const std::size_t n = m.rows();
    if (n < 3) throw std::invalid_argument("verify_identities: order must be at least 3");

    const S det = det_bareiss(m);
    std::vector<IdentityReport> reports;

    {
        detail::ResidualTally<S> tally("condensation at (1,1)", tolerance);
        const S lhs = detail::power(m(1, 1), n - 2) * det;
        tally.record(lhs, det_bareiss(condense_at_11(m).condensed), lhs, "(1,1)");
        reports.push_back(tally.finish());
    }
    {
        detail::ResidualTally<S> tally("condensation at (k,l)", tolerance);
        for (std::size_t k = 1; k <= n; ++k) {
            for (std::size_t l = 1; l <= n; ++l) {
                if (m(k, l).is_zero()) {
                    tally.skip();
                    continue;
                }
                const S lhs = detail::power(m(k, l), n - 2) * det;
                tally.record(lhs, det_bareiss(condense_at(m, PivotSpec{k, l}).condensed), lhs,
                             detail::pair_label(k, l));
            }
        }
        reports.push_back(tally.finish());
    }
    {
        detail::ResidualTally<S> tally("dodgson", tolerance);
        for (std::size_t k = 1; k <= n; ++k) {
            for (std::size_t l = k + 1; l <= n; ++l) {
                const S interior = det_bareiss(remove_rows_cols(m, {k, l}, {k, l}));
                const S residual = dodgson_identity_residual(m, k, l);
                tally.record(residual, S::zero(), det * interior, detail::pair_label(k, l));
            }
        }
        reports.push_back(tally.finish());
    }
    return reports;
}

}  // namespace detcond
