#include "concordia/matrix_ops.hpp"

namespace concordia {

LaurentPoly det_bareiss(const Matrix<LaurentPoly>& m, int ring_rank) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    const LaurentPoly one = LaurentPoly::constant(ring_rank, 1);
    if (n == 0) return one;

    Matrix<LaurentPoly> a = m;
    LaurentPoly prev = one;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k).is_zero()) ++p;
            if (p == n) return LaurentPoly(ring_rank);
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                auto q = try_divide(t, prev);
                if (!q) throw std::logic_error("Bareiss division must be exact");
                a.at(i, j) = std::move(*q);
            }
            a.at(i, k) = LaurentPoly(ring_rank);
        }
        prev = a.at(k, k);
    }
    LaurentPoly det = a.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

namespace {

// Division-free elimination counting pivots; works over any integral domain.
template <typename T, typename IsZero>
std::size_t rank_generic(Matrix<T> a, IsZero is_zero) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t p = r;
        while (p < a.rows() && is_zero(a.at(p, col))) ++p;
        if (p == a.rows()) continue;
        if (p != r) a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (is_zero(a.at(i, col))) continue;
            T f = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(i, j) = a.at(i, j) * a.at(r, col) - a.at(r, j) * f;
        }
        ++r;
    }
    return r;
}

}  // namespace

std::size_t rank_of(const Matrix<LaurentPoly>& m) {
    return rank_generic(m, [](const LaurentPoly& x) { return x.is_zero(); });
}

std::size_t rank_of(const Matrix<RationalFunction>& m) {
    return rank_generic(m, [](const RationalFunction& x) { return x.is_zero(); });
}

Matrix<LaurentPoly> to_poly_matrix(const Matrix<RationalFunction>& m, int ring_rank,
                                   LaurentPoly* row_factor_product) {
    Matrix<LaurentPoly> out(m.rows(), m.cols(), LaurentPoly(ring_rank));
    LaurentPoly product = LaurentPoly::constant(ring_rank, 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        LaurentPoly factor = LaurentPoly::constant(ring_rank, 1);
        for (std::size_t j = 0; j < m.cols(); ++j) factor = factor * m.at(i, j).den();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            auto scaled = try_divide(factor * m.at(i, j).num(), m.at(i, j).den());
            out.at(i, j) = std::move(*scaled);
        }
        product = product * factor;
    }
    if (row_factor_product) *row_factor_product = std::move(product);
    return out;
}

RationalFunction det_ratfun(const Matrix<RationalFunction>& m, int ring_rank) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (m.rows() == 0) return RationalFunction::constant(ring_rank, 1);
    LaurentPoly row_factors(ring_rank);
    Matrix<LaurentPoly> cleared = to_poly_matrix(m, ring_rank, &row_factors);
    return RationalFunction(det_bareiss(cleared, ring_rank), std::move(row_factors));
}

std::vector<std::size_t> greedy_independent_columns(const Matrix<RationalFunction>& m) {
    std::vector<std::size_t> chosen;
    if (m.rows() == 0) return chosen;
    // Incremental cross-multiplied elimination: a column is kept exactly when
    // it adds a pivot to the span of the columns kept so far.
    Matrix<RationalFunction> work = m;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t p = r;
        while (p < work.rows() && work.at(p, col).is_zero()) ++p;
        if (p == work.rows()) continue;
        if (p != r) work.swap_rows(r, p);
        for (std::size_t i = r + 1; i < work.rows(); ++i) {
            if (work.at(i, col).is_zero()) continue;
            RationalFunction f = work.at(i, col);
            for (std::size_t j = col; j < work.cols(); ++j)
                work.at(i, j) = work.at(i, j) * work.at(r, col) - work.at(r, j) * f;
        }
        chosen.push_back(col);
        ++r;
    }
    return chosen;
}

Matrix<RationalFunction> mat_mul(const Matrix<RationalFunction>& a,
                                 const Matrix<RationalFunction>& b, int ring_rank) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix<RationalFunction> out(a.rows(), b.cols(), RationalFunction(ring_rank));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            RationalFunction acc(ring_rank);
            for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + a.at(i, k) * b.at(k, j);
            out.at(i, j) = std::move(acc);
        }
    return out;
}

bool is_zero_matrix(const Matrix<RationalFunction>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) return false;
    return true;
}

}  // namespace concordia
