#include "doctest.h"

#include "fixtures.hpp"

using namespace qhodge;
using namespace qhodge::fixtures;

TEST_CASE("E1 deformed product: T_1 *_q T_1 = (5 + tau^3 q_1) T_2") {
    FrobeniusModule m = e1_module();
    QuantumPotential phi = e1_potential(m, QSeries::monomial(1, 8, {1}, Scalar(1)), 8);
    REQUIRE(validate_potential(m, phi).passed());
    std::vector<QSeries> col = quantum_product(m, phi, 1, 1);
    QSeries expect = QSeries::constant(1, 8, Scalar(5)) + QSeries::monomial(1, 8, {1}, Scalar::tau(3));
    CHECK(col[0].is_zero());
    CHECK(col[1].is_zero());
    CHECK(col[2] == expect);
    CHECK(col[3].is_zero());

    // unit stays the classical unit and the top column gets no correction
    std::vector<QSeries> unit_col = quantum_product(m, phi, 1, 0);
    CHECK(unit_col[1] == QSeries::constant(1, 8, Scalar(1)));
    CHECK(quantum_product(m, phi, 1, 3)[3].is_zero());
}

TEST_CASE("quantum correction vanishes for a classical potential") {
    FrobeniusModule m = tensor_module();
    QuantumPotential phi = make_potential(m, 4);
    for (int j : m.framing) CHECK(quantum_correction(m, phi, j).is_zero());
}

TEST_CASE("potential validation rejects malformed blocks") {
    FrobeniusModule m = tensor_module();
    QuantumPotential phi = make_potential(m, 4);
    phi.phi_a.emplace(3, QSeries::monomial(2, 4, {1, 0}, Scalar(1)));  // degree 4 index, not 2k-4
    Certificate rep = validate_potential(m, phi);
    CHECK_FALSE(rep.passed());
    CHECK(rep.first_failure()->name == "phi^a index range");

    QuantumPotential phi2 = make_potential(m, 4);
    phi2.phi_a.emplace(kTensorGamma, QSeries::constant(2, 4, Scalar(1)));  // constant term
    Certificate rep2 = validate_potential(m, phi2);
    CHECK_FALSE(rep2.passed());
    CHECK_FALSE(wdvv_check(m, tensor_potential(m, QSeries(), 4)).violations.size());
}

TEST_CASE("graded WDVV equations hold on the consistent tensor family") {
    FrobeniusModule m = tensor_module();
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        QSeries f = random_series(2, 4, seed, 0);  // series in q_1 only
        QuantumPotential phi = tensor_potential(m, f, 4);
        REQUIRE(validate_potential(m, phi).passed());
        CHECK(wdvv_check(m, phi).passed());
    }
}

TEST_CASE("the perturbed tensor potential violates WDVV with a stable witness") {
    FrobeniusModule m = tensor_module();
    QuantumPotential phi = tensor_violator(m, Scalar(1), 4);
    REQUIRE(validate_potential(m, phi).passed());
    CommutationVerdict v = wdvv_check(m, phi);
    REQUIRE_FALSE(v.passed());
    std::array<int, 4> first = v.violations.front();
    CHECK(first == std::array<int, 4>{m.framing[0], m.framing[1], 2, kTensorGamma});
}

TEST_CASE("r = 1 potentials are WDVV-vacuous") {
    FrobeniusModule m = random_chain(5, 41);
    QuantumPotential phi = chain5_potential(m, random_series(1, 4, 42), random_series(1, 4, 43), 4);
    REQUIRE(validate_potential(m, phi).passed());
    CHECK(wdvv_check(m, phi).passed());
}
