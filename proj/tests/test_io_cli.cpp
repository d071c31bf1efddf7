#include "doctest.h"

#include "fixtures.hpp"
#include "qhodge/cli.hpp"
#include "qhodge/io.hpp"

using namespace qhodge;
using namespace qhodge::fixtures;

namespace {

bool modules_equal(const FrobeniusModule& a, const FrobeniusModule& b) {
    if (a.k != b.k || a.dims != b.dims || a.deg != b.deg || a.framing != b.framing || a.real != b.real) return false;
    if (!(a.B == b.B) || a.L.size() != b.L.size()) return false;
    for (size_t p = 0; p < a.L.size(); ++p)
        if (!(a.L[p] == b.L[p])) return false;
    return true;
}

}  // namespace

TEST_CASE("module files round trip through JSON") {
    for (const auto& m : {e1_module(), random_chain(5, 81), tensor_module()}) {
        Json j = module_to_json(m);
        FrobeniusModule back = module_from_json(j);
        CHECK(modules_equal(m, back));
        CHECK(module_to_json(back) == j);
    }
}

TEST_CASE("potential files round trip through JSON") {
    FrobeniusModule m = tensor_module();
    QuantumPotential phi = tensor_potential(m, random_series(2, 4, 82, 0), 4);
    QuantumPotential back = potential_from_json(m, potential_to_json(phi));
    CHECK(potentials_equal(phi, back));

    FrobeniusModule e1 = e1_module();
    QuantumPotential w3 = e1_potential(e1, random_series(1, 8, 83), 8);
    CHECK(potentials_equal(w3, potential_from_json(e1, potential_to_json(w3))));
}

TEST_CASE("series coefficients survive serialization exactly") {
    QSeries f(2, 5);
    f.set({1, 2}, Scalar::parse("(tau^2 + 1)/(2*tau)"));
    f.set({0, 1}, Scalar(Rational(-3, 4)));
    QSeries back = series_from_json(series_to_json(f), 2, 5, "test");
    CHECK(back == f);
}

TEST_CASE("shipped fixture files match the built-in modules") {
    FrobeniusModule e1 = load_module(data_path("e1.module.json"));
    CHECK(modules_equal(e1, e1_module()));
    CHECK(validate_module(load_module(data_path("chain5.module.json"))).passed());
    QuantumPotential phi = load_potential(e1, data_path("e1q.potential.json"));
    CHECK(phi.weight3 == QSeries::monomial(1, 8, {1}, Scalar(1)));
}

TEST_CASE("malformed files produce input errors") {
    CHECK_THROWS_AS(static_cast<void>(load_module(data_path("missing.module.json"))), IOError);
    FrobeniusModule e1 = e1_module();
    Json bad = potential_to_json(make_potential(e1, 4));
    bad["weight3"] = Json::object({{"9", "1"}});  // exceeds the truncation order
    CHECK_THROWS_AS(static_cast<void>(potential_from_json(e1, bad)), IOError);
}

TEST_CASE("cli: validate") {
    CliResult ok = run_cli({"validate", data_path("e1.module.json")});
    CHECK(ok.code == 0);
    CliResult bad = run_cli({"validate", data_path("broken.module.json")});
    CHECK(bad.code == 1);
    CHECK(bad.output.find("Frobenius") != std::string::npos);
    CHECK(run_cli({"validate", data_path("missing.module.json")}).code == 2);
    CHECK(run_cli({"no-such-command"}).code == 2);
}

TEST_CASE("cli: wdvv-check and quantum-product") {
    CHECK(run_cli({"wdvv-check", data_path("e1.module.json"), data_path("e1q.potential.json")}).code == 0);
    CliResult qp = run_cli({"quantum-product", data_path("e1.module.json"), data_path("e1q.potential.json"), "--j",
                            "1", "--a", "1", "--format", "json"});
    CHECK(qp.code == 0);
    CHECK(qp.output.find("tau^3") != std::string::npos);
}

TEST_CASE("cli: round trip emits the worked gamma tower") {
    CliResult res = run_cli({"round-trip", data_path("e1.module.json"), data_path("e1q.potential.json"), "--order",
                             "8", "--format", "json"});
    CHECK(res.code == 0);
    CHECK(res.output.find("Gamma_{-2}") != std::string::npos);
    CHECK(res.output.find("\"status\": \"pass\"") != std::string::npos);
}

TEST_CASE("cli: residue, monodromy, check-orbit") {
    CHECK(run_cli({"residue", data_path("e1.module.json"), data_path("e1q.potential.json"), "--j", "1"}).code == 0);
    CHECK(run_cli({"monodromy", data_path("e1.module.json"), "--j", "1"}).code == 0);
    CHECK(run_cli({"check-orbit", data_path("e1.module.json")}).code == 0);
    CHECK(run_cli({"check-orbit", data_path("chain5.module.json"), "--seed", "5"}).code == 0);
}

TEST_CASE("cli: reports are byte-stable") {
    std::vector<std::string> args = {"check-pvhs", data_path("e1.module.json"), data_path("e1q.potential.json"),
                                     "--format", "json"};
    CliResult a = run_cli(args);
    CliResult b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.output == b.output);
}
