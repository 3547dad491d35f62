#include "concordia/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>

#include "concordia/json_io.hpp"

namespace concordia {

namespace {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

long long prime_bound_from_env() {
    const char* env = std::getenv("CONCORDIA_PRIME_BOUND");
    if (!env || !*env) return 100;
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (*end != '\0' || v < 3)
        throw std::invalid_argument("CONCORDIA_PRIME_BOUND must be an integer >= 3");
    return v;
}

MonomialUnit parse_longitude(const std::string& text, const std::vector<std::string>& variables) {
    LaurentPoly p = parse_poly(text, variables);
    auto unit = p.as_unit();
    if (!unit) throw std::invalid_argument("longitude must be a monomial with coefficient +/-1");
    return *unit;
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

struct CommandContext {
    std::ostream& out;

    int run_mazur(long long n) {
        PatternPolynomial pattern = mazur_alexander(n);
        CComplexPairing pairing = mazur_pairing(n);
        const auto& vars = pairing.variable_names;
        Json rows = Json::array();
        for (int i = 0; i < pairing.generators; ++i) {
            Json row = Json::array();
            for (int j = 0; j < pairing.generators; ++j)
                row.push_back(to_string(pairing.matrix.at(i, j), vars));
            rows.push_back(std::move(row));
        }
        LaurentPoly at_ones =
            specialize(pattern.poly, {SpecImage::constant(1), SpecImage::constant(1)}, 1);
        emit(out, Json{{"n", n},
                       {"alexander", to_string(pattern.poly, vars)},
                       {"pairing", std::move(rows)},
                       {"value_at_1_1", rational_to_string(*at_ones.as_constant())}});
        return 0;
    }

    int run_alex(const std::string& path) {
        CComplexDocument doc = ccomplex_from_json(read_json_file(path));
        CComplexPairing pairing = assemble_pairing(doc.linking, doc.variables);
        std::vector<std::string> warnings;
        PatternPolynomial result = alexander_from_pairing(pairing, doc.linking_number, &warnings);
        emit(out, Json{{"alexander", to_string(result.poly, doc.variables)},
                       {"components", pairing.components},
                       {"generators", pairing.generators},
                       {"linking_number", doc.linking_number},
                       {"warnings", warnings}});
        return 0;
    }

    int run_parity(const std::string& g_text, const std::string& class_path) {
        ClassDocument doc = class_from_json(read_json_file(class_path));
        LaurentPoly g = parse_poly(g_text, doc.variables);
        int value = parity_hom(g, doc.cls);
        emit(out, Json{{"g", to_string(class_key(g), doc.variables)}, {"value", value}});
        return 0;
    }

    int run_satellite(const std::string& base_path, long long pattern_n,
                      const std::string& longitude_text) {
        ClassDocument base = class_from_json(read_json_file(base_path));
        SatelliteSpec spec(parse_longitude(longitude_text, base.variables));
        std::vector<std::string> warnings;
        SpecializedPattern g = specialized_mazur(pattern_n, spec, &warnings);
        TorsionClass updated = base.cls.mul(
            TorsionClass::make({{g.poly, 1}}, !g.irreducibility_verified));
        emit(out, Json{{"pattern_n", pattern_n},
                       {"longitude", to_string(spec.longitude_image, base.variables)},
                       {"specialized", to_string(g.poly, base.variables)},
                       {"irreducibility_verified", g.irreducibility_verified},
                       {"class", class_to_json(updated, base.variables)},
                       {"warnings", warnings}});
        return 0;
    }

    int run_distinguish(const std::vector<long long>& primes, const std::string& base_path,
                        const std::string& longitude_text) {
        BaseSetDocument base;
        if (!base_path.empty()) base = base_set_from_json(read_json_file(base_path));
        else base.set = BaseTorsionSet::trivial();
        const auto& vars = base.variables;

        SatelliteSpec spec(parse_longitude(longitude_text, vars));
        if (primes.size() < 2)
            throw std::invalid_argument("need at least two primes to distinguish");

        long long bound = prime_bound_from_env();
        LaurentPoly G = base_factor_product(base.set, spec.ring_rank());

        Json specialized = Json::object();
        Json admissibility = Json::object();
        std::vector<std::string> warnings;
        std::vector<SpecializedPattern> patterns;
        std::vector<TorsionClass> prime_classes;
        for (long long p : primes) {
            SpecializedPattern g =
                specialized_mazur(p, spec, warnings.empty() ? &warnings : nullptr);
            specialized[std::to_string(p)] = to_string(g.poly, vars);
            admissibility[std::to_string(p)] =
                Json{{"admissible", !divides(g.poly, G).has_value()},
                     {"irreducibility_verified", g.irreducibility_verified},
                     {"candidates_tested", g.candidates_tested}};
            prime_classes.push_back(
                TorsionClass::make({{g.poly, 1}}, !g.irreducibility_verified));
            patterns.push_back(std::move(g));
        }

        // Parity matrix per character: row i = values of Phi_{g_{p_i}} on the
        // satellite families I_{p_j}.
        Json parity_matrix = Json::object();
        for (const auto& [label, cls] : base.set.classes) {
            Json rows = Json::array();
            for (std::size_t i = 0; i < primes.size(); ++i) {
                Json row = Json::array();
                for (std::size_t j = 0; j < primes.size(); ++j)
                    row.push_back(parity_hom(patterns[i].poly, cls.mul(prime_classes[j])));
                rows.push_back(std::move(row));
            }
            parity_matrix[label] = std::move(rows);
        }

        Json pairs = Json::array();
        bool all = true;
        for (std::size_t i = 0; i < primes.size(); ++i)
            for (std::size_t j = 0; j < primes.size(); ++j) {
                if (i == j) continue;
                DistinguishCertificate cert =
                    distinguish_family(base.set, primes[i], primes[j], spec);
                all = all && cert.distinguished;
                pairs.push_back(certificate_to_json(cert, vars));
            }

        emit(out, Json{{"primes", primes},
                       {"longitude", to_string(spec.longitude_image, vars)},
                       {"variables", vars},
                       {"specialized", std::move(specialized)},
                       {"admissibility", std::move(admissibility)},
                       {"admissible_primes_up_to_bound", admissible_primes(G, bound, &spec)},
                       {"prime_bound", bound},
                       {"parity_matrix", std::move(parity_matrix)},
                       {"pairs", std::move(pairs)},
                       {"all_pairs_distinguished", all},
                       {"warnings", warnings}});
        return 0;
    }

    int run_cover_spherical(int order, int g_index, long long twist, const std::string& table_path) {
        FiniteGroupSpec group = table_path.empty()
                                    ? FiniteGroupSpec::cyclic(order, g_index)
                                    : group_from_json(read_json_file(table_path));
        LinkingMultiset s = spherical_cover_linking(group, twist);
        emit(out, Json{{"model", "spherical"},
                       {"order", group.order()},
                       {"g_index", group.distinguished()},
                       {"g_order", group.element_order(group.distinguished())},
                       {"twist", twist},
                       {"components", group.order()},
                       {"pairs", s.total_pairs()},
                       {"multiset", multiset_to_json(s)}});
        return 0;
    }

    int run_cover_handlebody(int k, long long twist, bool two_torsion, long long dist) {
        LinkingMultiset s = handlebody_cover_linking(k, twist, two_torsion, dist);
        emit(out, Json{{"model", "handlebody"},
                       {"k", k},
                       {"twist", twist},
                       {"two_torsion", two_torsion},
                       {"dist_correction", dist},
                       {"pairs", s.total_pairs()},
                       {"multiset", multiset_to_json(s)}});
        return 0;
    }

    int run_torsion(const std::string& path) {
        ComplexDocument doc = complex_from_json(read_json_file(path));
        if (!check_complex(doc.complex))
            throw std::domain_error("boundary composites are non-zero: not a chain complex");
        bool acyclic = is_acyclic(doc.complex);
        Json result{{"acyclic", acyclic},
                    {"ranks", doc.complex.ranks},
                    {"variables", doc.variables},
                    {"torsion", nullptr}};
        if (acyclic) result["torsion"] = to_string(torsion(doc.complex), doc.variables);
        emit(out, result);
        return 0;
    }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"exact almost-concordance invariants of knots in 3-manifolds"};
    app.require_subcommand(1);

    long long mazur_n = 1;
    auto* mazur = app.add_subcommand("mazur", "Alexander polynomial of the n-twist Mazur pattern");
    mazur->add_option("n", mazur_n, "number of full twists")->required();

    std::string alex_file;
    auto* alex = app.add_subcommand("alex", "Alexander polynomial from C-complex linking data");
    alex->add_option("ccomplex", alex_file, "C-complex JSON file")->required();

    std::string parity_g, parity_class;
    auto* parity = app.add_subcommand("parity", "parity homomorphism of a symmetric irreducible");
    parity->add_option("--g", parity_g, "symmetric irreducible polynomial")->required();
    parity->add_option("--class", parity_class, "torsion class JSON file")->required();

    std::string sat_base, sat_longitude = "u^2";
    long long sat_n = 1;
    auto* satellite = app.add_subcommand("satellite", "torsion update under a Mazur satellite");
    satellite->add_option("--base", sat_base, "base torsion class JSON file")->required();
    satellite->add_option("--pattern-n", sat_n, "Mazur twist parameter")->required();
    satellite->add_option("--longitude", sat_longitude, "longitude image monomial");

    std::vector<long long> dist_primes;
    std::string dist_base, dist_longitude = "u^2";
    auto* distinguish =
        app.add_subcommand("distinguish", "pairwise separation certificate for satellite families");
    distinguish->add_option("--primes", dist_primes, "odd primes, comma separated")
        ->required()
        ->delimiter(',');
    distinguish->add_option("--base", dist_base, "base torsion set JSON file");
    distinguish->add_option("--longitude", dist_longitude, "longitude image monomial");

    auto* cover = app.add_subcommand("cover", "covering-link linking multisets");
    cover->require_subcommand(1);
    int sph_order = 2, sph_g = 1;
    long long sph_twist = 0;
    std::string sph_table;
    auto* spherical = cover->add_subcommand("spherical", "universal cover of a spherical form");
    spherical->add_option("--order", sph_order, "cyclic group order");
    spherical->add_option("--g-index", sph_g, "distinguished element index");
    spherical->add_option("--twist", sph_twist, "twist parameter n")->required();
    spherical->add_option("--table", sph_table, "multiplication-table group JSON file");

    int hb_k = 2;
    long long hb_twist = 0, hb_dist = 0;
    bool hb_two_torsion = false;
    auto* handlebody = cover->add_subcommand("handlebody", "induced cyclic handlebody cover");
    handlebody->add_option("--k", hb_k, "cover degree")->required();
    handlebody->add_option("--twist", hb_twist, "twist parameter n")->required();
    handlebody->add_flag("--two-torsion", hb_two_torsion, "deck image has order two");
    handlebody->add_option("--dist", hb_dist, "correction from the distant part");

    std::string torsion_file;
    auto* torsion_cmd = app.add_subcommand("torsion", "torsion of a based acyclic complex");
    torsion_cmd->add_option("complex", torsion_file, "chain complex JSON file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        emit(out, Json{{"error", e.what()}, {"position", nullptr}});
        return 2;
    }

    CommandContext ctx{out};
    try {
        if (mazur->parsed()) return ctx.run_mazur(mazur_n);
        if (alex->parsed()) return ctx.run_alex(alex_file);
        if (parity->parsed()) return ctx.run_parity(parity_g, parity_class);
        if (satellite->parsed()) return ctx.run_satellite(sat_base, sat_n, sat_longitude);
        if (distinguish->parsed())
            return ctx.run_distinguish(dist_primes, dist_base, dist_longitude);
        if (spherical->parsed())
            return ctx.run_cover_spherical(sph_order, sph_g, sph_twist, sph_table);
        if (handlebody->parsed())
            return ctx.run_cover_handlebody(hb_k, hb_twist, hb_two_torsion, hb_dist);
        if (torsion_cmd->parsed()) return ctx.run_torsion(torsion_file);
        emit(out, Json{{"error", "no command"}, {"position", nullptr}});
        return 2;
    } catch (const ParseError& e) {
        emit(out, Json{{"error", e.what()}, {"position", e.position}});
        return 2;
    } catch (const Json::exception& e) {
        emit(out, Json{{"error", e.what()}, {"position", nullptr}});
        return 2;
    } catch (const std::exception& e) {
        emit(out, Json{{"error", e.what()}, {"position", nullptr}});
        return 2;
    }
}

}  // namespace concordia
