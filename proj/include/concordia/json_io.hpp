#pragma once

#include <json.hpp>

#include "concordia/chain_complex.hpp"
#include "concordia/covering.hpp"
#include "concordia/satellite.hpp"

// File formats. All emitted documents have sorted keys and canonical
// polynomial strings, so identical inputs render byte-identically.
//
// Torsion class:   {"variables": ["u"], "factors": [{"poly": "...", "mult": 1}],
//                   "trusted": false}
// Base set:        {"variables": ["u"], "classes": {"rho0": {...class...}}}
// Chain complex:   {"variables": ["t"], "ranks": [1, 1],
//                   "boundaries": [[["t"]]]} with entries "poly" or "(num)/(den)"
// C-complex:       {"components": 2, "generators": 2, "linking": {"00": [[...]],
//                   ...}, "linking_number": 1} with rational entries as
//                   numbers or "p/q" strings
// Group:           {"table": [[...]], "g": 1}

namespace concordia {

using Json = nlohmann::json;

Rational rational_from_json(const Json& j);

struct ClassDocument {
    TorsionClass cls;
    std::vector<std::string> variables{"u"};
    bool trusted = false;
};

ClassDocument class_from_json(const Json& j);
Json class_to_json(const TorsionClass& cls, const std::vector<std::string>& variables);

struct BaseSetDocument {
    BaseTorsionSet set;
    std::vector<std::string> variables{"u"};
};

BaseSetDocument base_set_from_json(const Json& j);
Json base_set_to_json(const BaseTorsionSet& set, const std::vector<std::string>& variables);

struct ComplexDocument {
    BasedChainComplex complex;
    std::vector<std::string> variables{"t"};
};

ComplexDocument complex_from_json(const Json& j);

struct CComplexDocument {
    std::map<std::string, Matrix<Rational>> linking;
    std::vector<std::string> variables;
    long long linking_number = 1;
};

CComplexDocument ccomplex_from_json(const Json& j);

FiniteGroupSpec group_from_json(const Json& j, long long* twist_out = nullptr);

Json multiset_to_json(const LinkingMultiset& s);
Json certificate_to_json(const DistinguishCertificate& cert,
                         const std::vector<std::string>& variables);

}  // namespace concordia
