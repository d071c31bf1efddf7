// Acceptance gate: one line per criterion, exit 0 only if all pass.
#include "fixtures.hpp"
#include "qhodge/cli.hpp"
#include "qhodge/io.hpp"

#include <functional>
#include <iostream>

using namespace qhodge;
using namespace qhodge::fixtures;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    std::cout << "criterion " << number << " (" << label << "): " << (ok ? "PASS" : "FAIL");
    if (!ok && !detail.empty()) std::cout << " - " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

bool modules_equal(const FrobeniusModule& a, const FrobeniusModule& b) {
    if (a.k != b.k || a.dims != b.dims || a.deg != b.deg || a.framing != b.framing || a.real != b.real) return false;
    if (!(a.B == b.B) || a.L.size() != b.L.size()) return false;
    for (size_t p = 0; p < a.L.size(); ++p)
        if (!(a.L[p] == b.L[p])) return false;
    return true;
}

std::vector<FrobeniusModule> test_modules() {
    return {e1_module(), random_chain(3, 101), random_chain(4, 102), random_chain(5, 103), tensor_module()};
}

ScalarVec sample_lambda(int r, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ScalarVec v;
    for (int p = 0; p < r; ++p)
        v.push_back(Scalar(Rational(1 + static_cast<long>(rng() % 20), 1 + static_cast<long>(rng() % 10))));
    return v;
}

QuantumPotential e1_q1(const FrobeniusModule& m, int order) {
    return e1_potential(m, QSeries::monomial(1, order, {1}, Scalar(1)), order);
}

}  // namespace

int main() {
    criterion(1, "classical round trip", [](std::string& detail) {
        for (const auto& m : test_modules()) {
            if (!validate_module(m).passed()) {
                detail = "module invalid";
                return false;
            }
            std::vector<ScalarMat> back = structure_constants_from_cubic(m, classical_potential(m));
            for (size_t p = 0; p < m.L.size(); ++p)
                if (!(back[p] == m.L[p])) {
                    detail = "structure constants differ";
                    return false;
                }
        }
        return true;
    });

    criterion(2, "module <-> orbit equivalence", [](std::string& detail) {
        for (const auto& m : test_modules()) {
            FrobeniusModule back = orbit_to_module(module_to_orbit(m));
            if (!modules_equal(m, back)) {
                detail = "orbit round trip differs";
                return false;
            }
        }
        try {
            module_to_orbit(e1_kappa(Scalar(-5)));
            detail = "kappa = -5 was not rejected";
            return false;
        } catch (const HodgeError& e) {
            std::string msg = e.what();
            if (msg.find("positivity") == std::string::npos) {
                detail = "rejection lacks a positivity witness: " + msg;
                return false;
            }
        }
        return true;
    });

    criterion(3, "hard Lefschetz filtration identity", [](std::string& detail) {
        for (const auto& m : test_modules()) {
            Filtration expect = degree_bigrading(m).weight_levels();
            ScalarVec bary(m.r(), Scalar(1));
            if (!(weight_filtration(m.mult_by(bary)).shifted(m.k) == expect)) {
                detail = "barycenter filtration differs from the degree filtration";
                return false;
            }
            for (std::uint64_t s = 1; s <= 5; ++s)
                if (!(weight_filtration(m.mult_by(sample_lambda(m.r(), 1000 + s))).shifted(m.k) == expect)) {
                    detail = "filtration depends on the cone point";
                    return false;
                }
        }
        return true;
    });

    criterion(4, "triple equivalence of integrability", [](std::string& detail) {
        FrobeniusModule t = tensor_module();
        std::vector<QuantumPotential> family;
        for (std::uint64_t seed : {201, 202, 203}) family.push_back(tensor_potential(t, random_series(2, 4, seed, 0), 4));
        family.push_back(tensor_violator(t, Scalar(1), 4));
        family.push_back(tensor_violator(t, Scalar(Rational(2, 7)), 4));
        bool saw_violation = false;
        for (const auto& phi : family) {
            CommutationVerdict w = wdvv_check(t, phi);
            CommutationVerdict i = integrability_check(t, gamma1_from_potential(t, phi));
            CommutationVerdict c = curvature_check(t, phi);
            if (w.passed() != i.passed() || w.passed() != c.passed()) {
                detail = "verdicts disagree";
                return false;
            }
            if (!w.passed()) {
                saw_violation = true;
                if (w.violations.front() != i.violations.front() || w.violations.front() != c.violations.front()) {
                    detail = "first-failure witnesses disagree";
                    return false;
                }
            }
        }
        if (!saw_violation) detail = "family contained no violator";
        return saw_violation;
    });

    criterion(5, "correspondence round trip", [](std::string& detail) {
        FrobeniusModule m = e1_module();
        QSeries a = QSeries::monomial(1, 8, {1}, Scalar(1));
        QSeries b = QSeries::monomial(1, 8, {1}, Scalar(3)) + QSeries::monomial(1, 8, {2}, Scalar(7));
        QSeries c = random_series(1, 8, 205).truncate(6).truncate(8);
        for (const QSeries& f : {a, b, c})
            if (!round_trip(m, e1_potential(m, f, 8))) {
                detail = "E1 round trip failed";
                return false;
            }
        FrobeniusModule chain = random_chain(5, 206);
        if (!round_trip(chain, chain5_potential(chain, random_series(1, 4, 207), random_series(1, 4, 208), 4))) {
            detail = "weight-5 round trip failed";
            return false;
        }
        return true;
    });

    criterion(6, "worked gamma tower", [](std::string& detail) {
        FrobeniusModule m = e1_module();
        QSeries q1 = QSeries::monomial(1, 1, {1}, Scalar(1));
        GammaTower tower = reconstruct_gamma(m, gamma1_from_potential(m, e1_q1(m, 1)), 1);
        bool ok = tower.at(1)(2, 1) == q1 * Scalar::tau(2) && tower.at(2)(2, 0) == q1 * Scalar::tau() &&
                  tower.at(2)(3, 1) == -(q1 * Scalar::tau()) && tower.at(3)(3, 0) == -(q1 * Scalar(2));
        int nonzero = 0;
        for (int l = 1; l <= 3; ++l)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    if (!tower.at(l)(i, j).is_zero()) ++nonzero;
        if (!ok || nonzero != 4) detail = "tower entries differ from the hand derivation";
        return ok && nonzero == 4;
    });

    criterion(7, "A-model frames and frame lemmas", [](std::string& detail) {
        FrobeniusModule m = e1_module();
        QuantumPotential phi = e1_q1(m, 8);
        FrameExpansion fl = flat_frame(m, phi);
        for (int p = 0; p < m.r(); ++p) {
            SeriesMat aop = product_operator(m, phi, m.framing[p]);
            SeriesMat np = to_series(m.L[p], m.r(), phi.D);
            SeriesMat lhs = fl.y.map([p](const QSeries& f) { return f.dz_derive(p + 1); });
            if (!(lhs == fl.y * np - aop * fl.y)) {
                detail = "flat frame does not solve the connection";
                return false;
            }
        }
        GammaTower tower = reconstruct_gamma(m, gamma1_from_potential(m, phi), 8);
        SeriesMat gamma(4, 4);
        for (const auto& g : tower.gamma) gamma = gamma + g;
        SeriesMat expg = to_series(ScalarMat::identity(4), 1, 8);
        SeriesMat term = expg;
        for (int i = 1; i <= 4; ++i) {
            term = term * gamma.scaled(Scalar(Rational(-1, i)));
            expg = expg + term;
        }
        SeriesMat canon = canonical_frame(m, phi).y;
        if (!(canon == expg)) {
            detail = "canonical frame differs from exp(-Gamma)";
            return false;
        }
        SeriesMat c1 = canonical_frame(m, e1_q1(m, 1)).y;
        QSeries q1 = QSeries::monomial(1, 1, {1}, Scalar(1));
        if (!(c1(2, 0) == -(q1 * Scalar::tau()) && c1(3, 0) == q1 * Scalar(2) && c1(2, 1) == -(q1 * Scalar::tau(2)) &&
              c1(3, 1) == q1 * Scalar::tau())) {
            detail = "order-1 canonical frame differs from the worked expansion";
            return false;
        }
        Certificate lem1 = verify_frame_lemmas(m, e1_q1(m, 4));
        FrobeniusModule chain = random_chain(5, 209);
        Certificate lem2 =
            verify_frame_lemmas(chain, chain5_potential(chain, random_series(1, 4, 210), random_series(1, 4, 211), 4));
        if (!lem1.passed() || !lem2.passed()) {
            const Check* f = lem1.passed() ? lem2.first_failure() : lem1.first_failure();
            detail = "frame lemma failed: " + f->name + " [" + f->witness + "]";
            return false;
        }
        return true;
    });

    criterion(8, "monodromy and residue", [](std::string& detail) {
        struct Case {
            FrobeniusModule m;
            QuantumPotential phi;
        };
        std::vector<Case> cases;
        {
            FrobeniusModule m = e1_module();
            cases.push_back({m, e1_q1(m, 8)});
            FrobeniusModule chain = random_chain(5, 212);
            cases.push_back(
                {chain, chain5_potential(chain, random_series(1, 4, 213), random_series(1, 4, 214), 4)});
            FrobeniusModule t = tensor_module();
            cases.push_back({t, tensor_potential(t, random_series(2, 4, 215, 0), 4)});
        }
        for (const auto& c : cases)
            for (int p = 0; p < c.m.r(); ++p) {
                int j = c.m.framing[p];
                if (!(residue(c.m, c.phi, j) == c.m.L[p].scaled(Scalar::tau().inverse()))) {
                    detail = "residue differs from tau^{-1} L_j";
                    return false;
                }
                if (!(monodromy(c.m, j) == exp_nilpotent(-c.m.L[p]))) {
                    detail = "monodromy differs from exp(-L_j)";
                    return false;
                }
                if (!monodromy_frame_identity(c.m, c.phi, j)) {
                    detail = "canonical-frame monodromy identity failed";
                    return false;
                }
            }
        return true;
    });

    criterion(9, "full certificate via the command line", [](std::string& detail) {
        std::vector<std::string> args = {"check-pvhs", data_path("e1.module.json"), data_path("e1q.potential.json"),
                                         "--order", "8", "--format", "json"};
        CliResult first = run_cli(args);
        CliResult second = run_cli(args);
        if (first.code != 0) {
            detail = "exit code " + std::to_string(first.code);
            return false;
        }
        if (first.output != second.output) {
            detail = "report is not byte-stable";
            return false;
        }
        for (const char* needle : {"flat pairing", "transversality", "real structure", "canonical frame"})
            if (first.output.find(needle) == std::string::npos) {
                detail = std::string("report lacks the \"") + needle + "\" item";
                return false;
            }
        return true;
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
