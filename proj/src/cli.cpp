#include "qhodge/cli.hpp"

#include "qhodge/io.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <sstream>

namespace qhodge {

namespace {

std::string quad_str(const std::array<int, 4>& q) {
    return "(" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," +
           std::to_string(q[3]) + ")";
}

struct Report {
    std::string command;
    Certificate cert;
    Json payload = Json::object();

    std::string render(const std::string& format) const {
        bool pass = cert.passed();
        if (format == "json") {
            Json j;
            j["schema"] = kReportSchema;
            j["command"] = command;
            j["status"] = pass ? "pass" : "fail";
            j["checks"] = certificate_to_json(cert);
            if (!payload.empty()) j["payload"] = payload;
            return j.dump(2) + "\n";
        }
        std::ostringstream os;
        os << "command: " << command << "\n";
        for (const auto& c : cert.items) {
            os << "check: " << c.name << " ... " << (c.passed ? "pass" : "FAIL");
            if (!c.witness.empty()) os << " [" << c.witness << "]";
            os << "\n";
        }
        if (!payload.empty()) os << "payload: " << payload.dump(2) << "\n";
        os << "status: " << (pass ? "pass" : "fail") << "\n";
        return os.str();
    }
};

bool modules_equal(const FrobeniusModule& a, const FrobeniusModule& b) {
    if (a.k != b.k || a.dims != b.dims || a.deg != b.deg || a.framing != b.framing || a.real != b.real) return false;
    if (!(a.B == b.B)) return false;
    if (a.L.size() != b.L.size()) return false;
    for (size_t p = 0; p < a.L.size(); ++p)
        if (!(a.L[p] == b.L[p])) return false;
    return true;
}

Json tower_to_json(const GammaTower& tower) {
    Json j = Json::object();
    for (size_t l = 1; l <= tower.gamma.size(); ++l)
        j["Gamma_{-" + std::to_string(l) + "}"] = series_matrix_to_json(tower.at(static_cast<int>(l)));
    return j;
}

void append(Certificate& dst, const Certificate& src, const std::string& prefix) {
    for (const auto& c : src.items) dst.items.push_back({prefix + c.name, c.passed, c.witness});
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"exact-arithmetic toolkit for framed Frobenius modules and degenerating Hodge structures"};
    app.require_subcommand(1);

    std::string module_path, potential_path, format = "text", calib_name = "geometric";
    int order = -1, j_index = -1, a_index = -1;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* sub, bool needs_potential) {
        sub->add_option("module", module_path, "module file (JSON)")->required();
        if (needs_potential) sub->add_option("potential", potential_path, "potential file (JSON)")->required();
        sub->add_option("--order", order, "truncation order override");
        sub->add_option("--seed", seed, "seed for randomized checks");
        sub->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--sign-calibration", calib_name, "positivity sign convention")
            ->check(CLI::IsMember({"geometric", "literal"}));
        return sub;
    };

    add_common(app.add_subcommand("validate", "check the Frobenius module axioms"), false);
    add_common(app.add_subcommand("classical-potential", "emit the classical cubic potential"), false);
    add_common(app.add_subcommand("wdvv-check", "check the graded WDVV equations"), true);
    auto* sc_qp = add_common(app.add_subcommand("quantum-product", "deformed product column T_j *_q T_a"), true);
    sc_qp->add_option("--j", j_index, "framing basis index")->required();
    sc_qp->add_option("--a", a_index, "basis index")->required();
    add_common(app.add_subcommand("correspond", "reconstruct the gauge tower Gamma"), true);
    add_common(app.add_subcommand("extract-potential", "recover the potential from the gauge tower"), true);
    add_common(app.add_subcommand("round-trip", "potential -> Gamma -> potential identity"), true);
    add_common(app.add_subcommand("flat-frame", "order-by-order flat frame of the deformed connection"), true);
    add_common(app.add_subcommand("canonical-frame", "single-valued frame of the canonical extension"), true);
    auto* sc_res = add_common(app.add_subcommand("residue", "residue of the connection along q_j = 0"), true);
    sc_res->add_option("--j", j_index, "framing basis index")->required();
    auto* sc_mon = add_common(app.add_subcommand("monodromy", "monodromy around q_j = 0 in a flat frame"), false);
    sc_mon->add_option("--j", j_index, "framing basis index")->required();
    add_common(app.add_subcommand("check-pvhs", "full variation-of-Hodge-structure certificate"), true);
    add_common(app.add_subcommand("check-orbit", "module <-> nilpotent orbit equivalence"), false);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        return {0, app.help()};
    } catch (const CLI::ParseError& e) {
        return {2, std::string("argument error: ") + e.what() + "\n"};
    }

    const std::string name = app.get_subcommands().front()->get_name();
    SignCalibration calib = calib_name == "literal" ? SignCalibration::Literal : SignCalibration::Geometric;
    Report rep;
    rep.command = name;

    try {
        FrobeniusModule m = load_module(module_path);
        if (name == "validate") {
            rep.cert = validate_module(m);
        } else if (name == "classical-potential") {
            Json block = Json::object();
            for (const auto& [t, c] : classical_potential(m).coeff)
                block[std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2])] = c.str();
            rep.payload["phi0"] = block;
        } else if (name == "monodromy") {
            rep.payload["monodromy"] = scalar_matrix_to_json(monodromy(m, j_index));
        } else if (name == "check-orbit") {
            rep.cert = check_framing_cone(m, calib, seed);
            NilpotentOrbit orbit = module_to_orbit(m, calib, seed);
            append(rep.cert, check_max_unipotent(orbit), "");
            FrobeniusModule back = orbit_to_module(orbit);
            rep.cert.add("module round trip", modules_equal(m, back),
                         "orbit_to_module does not reproduce the module");
        } else {
            QuantumPotential phi = load_potential(m, potential_path, order);
            if (name == "wdvv-check") {
                rep.cert = validate_potential(m, phi);
                CommutationVerdict v = wdvv_check(m, phi);
                rep.cert.add("graded WDVV equations", v.passed(),
                             v.passed() ? "" : "first failure at (j,l,a,d) = " + quad_str(v.violations.front()));
                Json viols = Json::array();
                for (const auto& q : v.violations) viols.push_back(quad_str(q));
                if (!viols.empty()) rep.payload["violations"] = viols;
            } else if (name == "quantum-product") {
                std::vector<QSeries> col = quantum_product(m, phi, j_index, a_index);
                Json block = Json::object();
                for (int c = 0; c < m.rank(); ++c)
                    if (!col[c].is_zero()) block[std::to_string(c)] = series_to_json(col[c]);
                rep.payload["product"] = block;
            } else if (name == "correspond" || name == "round-trip" || name == "extract-potential") {
                SeriesMat g1 = gamma1_from_potential(m, phi);
                GammaTower tower = reconstruct_gamma(m, g1, phi.D);
                rep.payload["gamma"] = tower_to_json(tower);
                if (name == "extract-potential") {
                    rep.payload["potential"] = potential_to_json(potential_from_gamma(m, tower));
                } else if (name == "round-trip") {
                    rep.cert.add("round trip identity", round_trip(m, phi),
                                 "extracted potential differs from the input");
                }
            } else if (name == "flat-frame") {
                rep.payload["y"] = series_matrix_to_json(flat_frame(m, phi).y);
            } else if (name == "canonical-frame") {
                rep.payload["canonical"] = series_matrix_to_json(canonical_frame(m, phi).y);
            } else if (name == "residue") {
                ScalarMat res = residue(m, phi, j_index);
                int p = divisor_position(m, j_index);
                rep.cert.add("residue = tau^{-1} L_j", p > 0 && res == m.L[p - 1].scaled(Scalar::tau().inverse()),
                             "residue differs from the classical multiplication operator");
                rep.payload["residue"] = scalar_matrix_to_json(res);
            } else if (name == "check-pvhs") {
                append(rep.cert, validate_module(m), "module: ");
                append(rep.cert, validate_potential(m, phi), "potential: ");
                CommutationVerdict v = wdvv_check(m, phi);
                rep.cert.add("graded WDVV equations", v.passed(),
                             v.passed() ? "" : "first failure at (j,l,a,d) = " + quad_str(v.violations.front()));
                append(rep.cert, pvhs_certificate(m, phi), "");
            }
        }
    } catch (const IOError& e) {
        return {2, std::string("input error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        rep.cert.add("execution", false, e.what());
    }

    return {rep.cert.passed() ? 0 : 1, rep.render(format)};
}

}  // namespace qhodge
