#include "concordia/json_io.hpp"

namespace concordia {

namespace {

std::vector<std::string> variables_or(const Json& j, std::vector<std::string> fallback) {
    if (!j.contains("variables")) return fallback;
    const Json& v = j.at("variables");
    if (!v.is_array() || v.empty()) throw std::invalid_argument("'variables' must be a non-empty array");
    std::vector<std::string> out;
    for (const auto& name : v) out.push_back(name.get<std::string>());
    return out;
}

}  // namespace

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(Integer(s));
            Integer num(s.substr(0, slash));
            Integer den(s.substr(slash + 1));
            if (den == 0) throw std::invalid_argument("zero denominator");
            return make_rational(num, den);
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("unreadable rational '" + s + "'");
        }
    }
    throw std::invalid_argument("rational entries must be integers or \"p/q\" strings");
}

ClassDocument class_from_json(const Json& j) {
    ClassDocument doc;
    doc.variables = variables_or(j, {"u"});
    doc.trusted = j.value("trusted", false);
    std::vector<std::pair<LaurentPoly, long long>> factors;
    for (const auto& entry : j.value("factors", Json::array())) {
        LaurentPoly poly = parse_poly(entry.at("poly").get<std::string>(), doc.variables);
        factors.emplace_back(std::move(poly), entry.at("mult").get<long long>());
    }
    doc.cls = TorsionClass::make(factors, doc.trusted);
    return doc;
}

Json class_to_json(const TorsionClass& cls, const std::vector<std::string>& variables) {
    Json factors = Json::array();
    for (const auto& [key, mult] : cls.factors())
        factors.push_back({{"poly", to_string(key, variables)}, {"mult", mult}});
    return Json{{"factors", std::move(factors)}, {"trusted", true}, {"variables", variables}};
}

BaseSetDocument base_set_from_json(const Json& j) {
    BaseSetDocument doc;
    doc.variables = variables_or(j, {"u"});
    const Json& classes = j.at("classes");
    if (!classes.is_object() || classes.empty())
        throw std::invalid_argument("'classes' must be a non-empty object");
    for (const auto& [label, body] : classes.items()) {
        Json with_vars = body;
        if (!with_vars.contains("variables")) with_vars["variables"] = doc.variables;
        doc.set.classes.emplace(label, class_from_json(with_vars).cls);
    }
    return doc;
}

Json base_set_to_json(const BaseTorsionSet& set, const std::vector<std::string>& variables) {
    Json classes = Json::object();
    for (const auto& [label, cls] : set.classes) {
        Json c = class_to_json(cls, variables);
        c.erase("variables");
        classes[label] = std::move(c);
    }
    return Json{{"classes", std::move(classes)}, {"variables", variables}};
}

ComplexDocument complex_from_json(const Json& j) {
    ComplexDocument doc;
    doc.variables = variables_or(j, {"t"});
    doc.complex.ring_rank = static_cast<int>(doc.variables.size());
    for (const auto& r : j.at("ranks")) {
        long long v = r.get<long long>();
        if (v < 0) throw std::invalid_argument("ranks must be non-negative");
        doc.complex.ranks.push_back(static_cast<std::size_t>(v));
    }
    const Json& bds = j.at("boundaries");
    if (doc.complex.ranks.empty()) {
        if (!bds.empty()) throw std::invalid_argument("boundaries without ranks");
        return doc;
    }
    if (bds.size() + 1 != doc.complex.ranks.size())
        throw std::invalid_argument("expected one boundary matrix per positive degree");
    for (std::size_t k = 1; k < doc.complex.ranks.size(); ++k) {
        std::size_t rows = doc.complex.ranks[k - 1], cols = doc.complex.ranks[k];
        Matrix<RationalFunction> d(rows, cols, RationalFunction(doc.complex.ring_rank));
        const Json& jm = bds[k - 1];
        if (jm.size() != rows)
            throw std::invalid_argument("boundary row count mismatch at degree " + std::to_string(k));
        for (std::size_t i = 0; i < rows; ++i) {
            if (jm[i].size() != cols)
                throw std::invalid_argument("boundary column count mismatch at degree " +
                                            std::to_string(k));
            for (std::size_t c = 0; c < cols; ++c) {
                const Json& cell = jm[i][c];
                if (cell.is_number_integer())
                    d.at(i, c) = RationalFunction::constant(doc.complex.ring_rank,
                                                            Rational(cell.get<long long>()));
                else
                    d.at(i, c) = parse_ratfun(cell.get<std::string>(), doc.variables);
            }
        }
        doc.complex.boundaries.push_back(std::move(d));
    }
    return doc;
}

CComplexDocument ccomplex_from_json(const Json& j) {
    CComplexDocument doc;
    const int m = j.at("components").get<int>();
    const int g = j.at("generators").get<int>();
    if (m < 1 || g < 1) throw std::invalid_argument("components and generators must be positive");
    std::vector<std::string> defaults;
    if (m == 1)
        defaults = {"t"};
    else if (m == 2)
        defaults = {"s", "t"};
    else
        for (int i = 0; i < m; ++i) defaults.push_back("x" + std::to_string(i + 1));
    doc.variables = variables_or(j, defaults);
    if (static_cast<int>(doc.variables.size()) != m)
        throw std::invalid_argument("variable count must match component count");
    doc.linking_number = j.value("linking_number", 1LL);

    for (const auto& [eps, jm] : j.at("linking").items()) {
        Matrix<Rational> mat(g, g, Rational(0));
        if (jm.size() != static_cast<std::size_t>(g))
            throw std::invalid_argument("linking matrix '" + eps + "' has wrong row count");
        for (int i = 0; i < g; ++i) {
            if (jm[i].size() != static_cast<std::size_t>(g))
                throw std::invalid_argument("linking matrix '" + eps + "' has wrong column count");
            for (int c = 0; c < g; ++c) mat.at(i, c) = rational_from_json(jm[i][c]);
        }
        doc.linking.emplace(eps, std::move(mat));
    }
    return doc;
}

FiniteGroupSpec group_from_json(const Json& j, long long* twist_out) {
    if (twist_out && j.contains("twist")) *twist_out = j.at("twist").get<long long>();
    std::vector<std::vector<int>> table;
    for (const auto& row : j.at("table")) table.push_back(row.get<std::vector<int>>());
    return FiniteGroupSpec::from_table(std::move(table), j.at("g").get<int>());
}

Json multiset_to_json(const LinkingMultiset& s) {
    Json counts = Json::object();
    for (const auto& [value, count] : s.counts) counts[std::to_string(value)] = count;
    return counts;
}

Json certificate_to_json(const DistinguishCertificate& cert,
                         const std::vector<std::string>& variables) {
    Json table = Json::object();
    for (const auto& [label, row] : cert.parity_table)
        table[label] = Json{{"on_I_n", row.on_family_n}, {"on_I_m", row.on_family_m}};
    return Json{{"n", cert.n},
                {"m", cert.m},
                {"distinguished", cert.distinguished},
                {"separating_poly", to_string(cert.separating_poly, variables)},
                {"parity_table", std::move(table)}};
}

}  // namespace concordia
