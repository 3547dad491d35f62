#include "concordia/chain_complex.hpp"

#include <numeric>
#include <string>

namespace concordia {

namespace {

std::vector<std::size_t> boundary_ranks(const BasedChainComplex& c) {
    std::vector<std::size_t> b(c.ranks.size() + 1, 0);  // b[k] = rank of d_k, k = 1..n
    for (std::size_t k = 1; k < c.ranks.size(); ++k) b[k] = rank_of(c.boundaries[k - 1]);
    return b;
}

}  // namespace

bool check_complex(const BasedChainComplex& c) {
    if (c.ranks.empty()) {
        if (!c.boundaries.empty()) throw std::invalid_argument("boundaries without ranks");
        return true;
    }
    if (c.boundaries.size() + 1 != c.ranks.size())
        throw std::invalid_argument("expected one boundary matrix per positive degree");
    for (std::size_t k = 1; k < c.ranks.size(); ++k) {
        const auto& d = c.boundaries[k - 1];
        if (d.rows() != c.ranks[k - 1] || d.cols() != c.ranks[k])
            throw std::invalid_argument("boundary shape mismatch at degree " + std::to_string(k));
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j)
                if (d.at(i, j).rank() != c.ring_rank)
                    throw std::invalid_argument("entry ring rank mismatch at degree " +
                                                std::to_string(k));
    }
    for (std::size_t k = 1; k + 1 < c.ranks.size(); ++k) {
        Matrix<RationalFunction> composite =
            mat_mul(c.boundaries[k - 1], c.boundaries[k], c.ring_rank);
        if (!is_zero_matrix(composite)) return false;
    }
    return true;
}

bool is_acyclic(const BasedChainComplex& c) {
    if (!check_complex(c)) throw std::invalid_argument("not a chain complex (d o d != 0)");
    if (c.ranks.empty()) return true;
    std::vector<std::size_t> b = boundary_ranks(c);
    for (std::size_t k = 0; k < c.ranks.size(); ++k)
        if (c.ranks[k] != b[k] + b[k + 1]) return false;
    return true;
}

RationalFunction torsion(const BasedChainComplex& c) {
    if (!is_acyclic(c)) throw std::domain_error("torsion requires an acyclic complex");
    RationalFunction tau = RationalFunction::constant(c.ring_rank, 1);
    if (c.ranks.empty()) return tau;

    std::vector<std::size_t> b = boundary_ranks(c);
    // Rows available at degree k-1: everything not consumed as a chosen
    // column of the previous stage.
    std::vector<std::size_t> rows(c.ranks[0]);
    std::iota(rows.begin(), rows.end(), 0);
    for (std::size_t k = 1; k < c.ranks.size(); ++k) {
        const auto& d = c.boundaries[k - 1];
        std::vector<std::size_t> all_cols(c.ranks[k]);
        std::iota(all_cols.begin(), all_cols.end(), 0);
        Matrix<RationalFunction> avail = d.submatrix(rows, all_cols);
        std::vector<std::size_t> chosen = greedy_independent_columns(avail);
        if (chosen.size() != b[k] || rows.size() != b[k])
            throw std::logic_error("singular block in the splitting algorithm");

        RationalFunction det = det_ratfun(d.submatrix(rows, chosen), c.ring_rank);
        if (det.is_zero()) throw std::logic_error("singular block in the splitting algorithm");
        tau = (k % 2 == 1) ? tau * det : tau * det.inverse();

        std::vector<std::size_t> next;
        for (std::size_t j = 0; j < c.ranks[k]; ++j)
            if (std::find(chosen.begin(), chosen.end(), j) == chosen.end()) next.push_back(j);
        rows = std::move(next);
    }
    return tau;
}

bool ses_multiplicativity_check(const BasedChainComplex& sub, const BasedChainComplex& total,
                                const BasedChainComplex& quotient,
                                const std::vector<Matrix<RationalFunction>>& inclusions,
                                const std::vector<Matrix<RationalFunction>>& projections) {
    const int rr = total.ring_rank;
    if (sub.ring_rank != rr || quotient.ring_rank != rr)
        throw std::invalid_argument("ring rank mismatch between complexes");
    const std::size_t degrees = total.ranks.size();
    if (sub.ranks.size() != degrees || quotient.ranks.size() != degrees ||
        inclusions.size() != degrees || projections.size() != degrees)
        throw std::invalid_argument("sequence not exact degreewise: degree count mismatch");

    for (std::size_t k = 0; k < degrees; ++k) {
        const auto& inc = inclusions[k];
        const auto& proj = projections[k];
        if (inc.rows() != total.ranks[k] || inc.cols() != sub.ranks[k] ||
            proj.rows() != quotient.ranks[k] || proj.cols() != total.ranks[k])
            throw std::invalid_argument("sequence not exact degreewise: map shape at degree " +
                                        std::to_string(k));
        if (total.ranks[k] != sub.ranks[k] + quotient.ranks[k])
            throw std::invalid_argument("sequence not exact degreewise: rank count at degree " +
                                        std::to_string(k));
        if (rank_of(inc) != sub.ranks[k] || rank_of(proj) != quotient.ranks[k])
            throw std::invalid_argument("sequence not exact degreewise: map not of full rank");
        if (!is_zero_matrix(mat_mul(proj, inc, rr)))
            throw std::invalid_argument("sequence not exact degreewise: projection o inclusion != 0");
    }
    for (std::size_t k = 1; k < degrees; ++k) {
        Matrix<RationalFunction> lhs = mat_mul(total.boundaries[k - 1], inclusions[k], rr);
        Matrix<RationalFunction> rhs = mat_mul(inclusions[k - 1], sub.boundaries[k - 1], rr);
        for (std::size_t i = 0; i < lhs.rows(); ++i)
            for (std::size_t j = 0; j < lhs.cols(); ++j)
                if (!(lhs.at(i, j) == rhs.at(i, j)))
                    throw std::invalid_argument("inclusion is not a chain map at degree " +
                                                std::to_string(k));
        lhs = mat_mul(projections[k - 1], total.boundaries[k - 1], rr);
        rhs = mat_mul(quotient.boundaries[k - 1], projections[k], rr);
        for (std::size_t i = 0; i < lhs.rows(); ++i)
            for (std::size_t j = 0; j < lhs.cols(); ++j)
                if (!(lhs.at(i, j) == rhs.at(i, j)))
                    throw std::invalid_argument("projection is not a chain map at degree " +
                                                std::to_string(k));
    }

    if (!is_acyclic(sub) || !is_acyclic(total) || !is_acyclic(quotient))
        throw std::domain_error("all three complexes must be acyclic");

    // Compatible bases: [inclusion | section] must be unimodular in each
    // degree; the determinant does not depend on the chosen section.
    for (std::size_t k = 0; k < degrees; ++k) {
        if (total.ranks[k] == 0) continue;
        Matrix<RationalFunction> m(total.ranks[k], total.ranks[k], RationalFunction(rr));
        for (std::size_t i = 0; i < total.ranks[k]; ++i)
            for (std::size_t j = 0; j < sub.ranks[k]; ++j) m.at(i, j) = inclusions[k].at(i, j);
        Matrix<RationalFunction> section = [&] {
            // Solve projections[k] * s = I by elimination over Q(F).
            const auto& p = projections[k];
            std::size_t q = quotient.ranks[k], t = total.ranks[k];
            Matrix<RationalFunction> aug(q, t + q, RationalFunction(rr));
            for (std::size_t i = 0; i < q; ++i) {
                for (std::size_t j = 0; j < t; ++j) aug.at(i, j) = p.at(i, j);
                aug.at(i, t + i) = RationalFunction::constant(rr, 1);
            }
            std::vector<std::size_t> pivots;
            std::size_t r = 0;
            for (std::size_t col = 0; col < t && r < q; ++col) {
                std::size_t pr = r;
                while (pr < q && aug.at(pr, col).is_zero()) ++pr;
                if (pr == q) continue;
                aug.swap_rows(r, pr);
                RationalFunction inv = aug.at(r, col).inverse();
                for (std::size_t j = 0; j < t + q; ++j) aug.at(r, j) = aug.at(r, j) * inv;
                for (std::size_t i = 0; i < q; ++i) {
                    if (i == r || aug.at(i, col).is_zero()) continue;
                    RationalFunction f = aug.at(i, col);
                    for (std::size_t j = 0; j < t + q; ++j)
                        aug.at(i, j) = aug.at(i, j) - aug.at(r, j) * f;
                }
                pivots.push_back(col);
                ++r;
            }
            if (r != q) throw std::invalid_argument("projection is not surjective");
            Matrix<RationalFunction> s(t, q, RationalFunction(rr));
            for (std::size_t i = 0; i < q; ++i)
                for (std::size_t j = 0; j < q; ++j) s.at(pivots[i], j) = aug.at(i, t + j);
            return s;
        }();
        for (std::size_t i = 0; i < total.ranks[k]; ++i)
            for (std::size_t j = 0; j < quotient.ranks[k]; ++j)
                m.at(i, sub.ranks[k] + j) = section.at(i, j);
        RationalFunction d = det_ratfun(m, rr);
        RationalFunction one = RationalFunction::constant(rr, 1);
        if (!(d == one) && !(d == -one))
            throw std::invalid_argument("bases are not compatible with the sequence");
    }

    RationalFunction lhs = torsion(total);
    RationalFunction rhs = torsion(sub) * torsion(quotient);
    return lhs == rhs || lhs == -rhs;
}

BasedChainComplex torus_complex(const MonomialUnit& meridian_image,
                                const MonomialUnit& longitude_image) {
    if (meridian_image.rank() != longitude_image.rank())
        throw std::invalid_argument("images must live in the same ring");
    if (meridian_image.is_one() && longitude_image.is_one())
        throw std::invalid_argument("untwisted torus has non-vanishing homology");
    const int rr = meridian_image.rank();
    RationalFunction one = RationalFunction::constant(rr, 1);
    RationalFunction a{LaurentPoly::from_unit(meridian_image)};
    RationalFunction b{LaurentPoly::from_unit(longitude_image)};

    BasedChainComplex c;
    c.ring_rank = rr;
    c.ranks = {1, 2, 1};
    Matrix<RationalFunction> d1(1, 2, RationalFunction(rr));
    d1.at(0, 0) = a - one;
    d1.at(0, 1) = b - one;
    Matrix<RationalFunction> d2(2, 1, RationalFunction(rr));
    d2.at(0, 0) = one - b;
    d2.at(1, 0) = a - one;
    c.boundaries = {std::move(d1), std::move(d2)};
    return c;
}

}  // namespace concordia
