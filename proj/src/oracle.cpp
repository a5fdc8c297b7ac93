#include "detcond/oracle.hpp"

namespace detcond {

Rational det_gauss_rational(const Matrix<Rational>& m, OpCounts* counts) {
    require_square(m, "det_gauss_rational");
    const std::size_t n = m.rows();
    Matrix<Rational> a = m;
    Rational det = Rational::one();
    for (std::size_t k = 1; k <= n; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row <= n && a(pivot_row, k).is_zero()) ++pivot_row;
        if (pivot_row > n) return Rational::zero();
        if (pivot_row != k) {
            for (std::size_t j = k; j <= n; ++j) std::swap(a(k, j), a(pivot_row, j));
            det = -det;
        }
        const Rational& pivot = a(k, k);
        for (std::size_t i = k + 1; i <= n; ++i) {
            if (a(i, k).is_zero()) continue;
            const Rational factor = exact_div(a(i, k), pivot);
            for (std::size_t j = k + 1; j <= n; ++j) a(i, j) = a(i, j) - factor * a(k, j);
            a(i, k) = Rational::zero();
            if (counts) {
                counts->divisions += 1;
                counts->multiplications += n - k;
                counts->subtractions += n - k;
            }
        }
        det = det * pivot;
        if (counts) ++counts->multiplications;
    }
    return det;
}

OracleKind parse_oracle_kind(std::string_view name) {
    if (name == "cofactor") return OracleKind::cofactor;
    if (name == "bareiss") return OracleKind::bareiss;
    if (name == "gauss" || name == "gauss-rational") return OracleKind::gauss_rational;
    throw std::invalid_argument("unknown oracle '" + std::string(name) + "'");
}

std::string_view to_string(OracleKind kind) {
    switch (kind) {
        case OracleKind::cofactor: return "cofactor";
        case OracleKind::bareiss: return "bareiss";
        case OracleKind::gauss_rational: return "gauss-rational";
    }
    return "unknown";
}

}  // namespace detcond
