#include "concordia/alexander.hpp"

namespace concordia {

namespace {

Rational eval_at_ones(const LaurentPoly& f) {
    std::vector<SpecImage> images(f.rank(), SpecImage::constant(1));
    LaurentPoly v = specialize(f, images, 1);
    return *v.as_constant();
}

}  // namespace

CComplexPairing assemble_pairing(const std::map<std::string, Matrix<Rational>>& linking_matrices,
                                 const std::vector<std::string>& variable_names) {
    const int m = static_cast<int>(variable_names.size());
    if (m < 1) throw std::invalid_argument("need at least one component");
    if (linking_matrices.size() != (std::size_t{1} << m))
        throw std::invalid_argument("expected one linking matrix per sign vector");

    std::size_t g = linking_matrices.begin()->second.rows();
    for (const auto& [eps, mat] : linking_matrices) {
        if (static_cast<int>(eps.size()) != m ||
            eps.find_first_not_of("01") != std::string::npos)
            throw std::invalid_argument("bad sign vector key '" + eps + "'");
        if (mat.rows() != g || mat.cols() != g)
            throw std::invalid_argument("linking matrices must share a square shape");
    }

    Matrix<LaurentPoly> beta(g, g, LaurentPoly(m));
    for (const auto& [eps, mat] : linking_matrices) {
        int weight = 0;
        Exponents e(m, 0);
        for (int j = 0; j < m; ++j) {
            e[j] = eps[j] - '0';
            weight += e[j];
        }
        int sign = weight % 2 == 0 ? 1 : -1;
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j)
                beta.at(i, j) = beta.at(i, j) + LaurentPoly::monomial(m, e, mat.at(i, j) * sign);
    }
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            if (!beta.at(i, j).is_integral())
                throw std::domain_error("clasp data inconsistent: non-integral pairing entry at (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");

    return CComplexPairing{m, static_cast<int>(g), std::move(beta), variable_names};
}

PatternPolynomial alexander_from_pairing(const CComplexPairing& pairing, long long linking_number,
                                         std::vector<std::string>* warnings) {
    if (pairing.matrix.rows() != pairing.matrix.cols())
        throw std::invalid_argument("pairing matrix must be square");
    LaurentPoly det = det_bareiss(pairing.matrix, pairing.components);

    if (pairing.components > 2) {
        if (warnings)
            warnings->push_back(
                "more than two components: determinant returned without normalization");
        return PatternPolynomial{det, linking_number};
    }

    if (det.is_zero())
        throw std::domain_error("degenerate pairing: zero determinant cannot be normalized");
    LaurentPoly canonical = normalize_associate(det).canonical;
    Rational at_ones = eval_at_ones(canonical);
    if (boost::multiprecision::abs(at_ones) != boost::multiprecision::abs(Rational(linking_number)))
        throw std::domain_error("Torres check failed: |value at 1| = " +
                                rational_to_string(at_ones) + ", expected linking number " +
                                std::to_string(linking_number));
    return PatternPolynomial{std::move(canonical), linking_number};
}

CComplexPairing mazur_pairing(long long n) {
    if (n < 1) throw std::invalid_argument("Mazur pattern requires n >= 1");
    const std::vector<std::string> vars{"s", "t"};
    LaurentPoly one = LaurentPoly::constant(2, 1);
    LaurentPoly s = LaurentPoly::variable(2, 0);
    LaurentPoly t = LaurentPoly::variable(2, 1);

    Matrix<LaurentPoly> m(2, 2, LaurentPoly(2));
    m.at(0, 0) = (one - t) * (one - s) * Rational(n);
    m.at(0, 1) = -s;
    m.at(1, 0) = -t;
    m.at(1, 1) = -(s + t);
    return CComplexPairing{2, 2, std::move(m), vars};
}

PatternPolynomial mazur_alexander(long long n) {
    if (n < 1) throw std::invalid_argument("Mazur pattern requires n >= 1");
    LaurentPoly s = LaurentPoly::variable(2, 0);
    LaurentPoly t = LaurentPoly::variable(2, 1);
    LaurentPoly inner = s * s * t + s * t * t - s * s - t * t + s + t;
    LaurentPoly poly = inner * Rational(n) - s * t * Rational(2 * n - 1);
    return PatternPolynomial{std::move(poly), 1};
}

PatternPolynomial local_pattern_alexander(const LaurentPoly& delta_j) {
    if (delta_j.rank() != 1)
        throw std::invalid_argument("knot polynomial must be univariate");
    if (delta_j.is_zero()) throw std::invalid_argument("zero is not a knot polynomial");
    Rational at_one = eval_at_ones(delta_j);
    if (boost::multiprecision::abs(at_one) != 1)
        throw std::domain_error("|value at 1| != 1: not a knot Alexander polynomial");
    LaurentPoly embedded(2);
    for (const auto& [e, c] : delta_j.terms())
        embedded = embedded + LaurentPoly::monomial(2, Exponents{e[0], 0}, c);
    return PatternPolynomial{std::move(embedded), 1};
}

}  // namespace concordia
