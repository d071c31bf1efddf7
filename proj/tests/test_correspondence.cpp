#include "doctest.h"

#include "fixtures.hpp"

using namespace qhodge;
using namespace qhodge::fixtures;

TEST_CASE("Gamma_{-1} of E1 with phi_h = q_1") {
    FrobeniusModule m = e1_module();
    QuantumPotential phi = e1_potential(m, QSeries::monomial(1, 8, {1}, Scalar(1)), 8);
    SeriesMat g1 = gamma1_from_potential(m, phi);
    CHECK(g1(2, 1) == QSeries::monomial(1, 8, {1}, Scalar::tau(2)));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!(i == 2 && j == 1)) CHECK(g1(i, j).is_zero());
}

TEST_CASE("worked Gamma tower for E1 with phi_h = q_1 at order 1") {
    FrobeniusModule m = e1_module();
    QSeries q1 = QSeries::monomial(1, 1, {1}, Scalar(1));
    QuantumPotential phi = e1_potential(m, q1, 1);
    GammaTower tower = reconstruct_gamma(m, gamma1_from_potential(m, phi), 1);

    CHECK(tower.at(1)(2, 1) == q1 * Scalar::tau(2));
    CHECK(tower.at(2)(2, 0) == q1 * Scalar::tau());
    CHECK(tower.at(2)(3, 1) == -(q1 * Scalar::tau()));
    CHECK(tower.at(3)(3, 0) == -(q1 * Scalar(2)));

    // nothing else is nonzero
    int nonzero = 0;
    for (int l = 1; l <= 3; ++l)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (!tower.at(l)(i, j).is_zero()) ++nonzero;
    CHECK(nonzero == 4);
    CHECK(canonical_check(m, tower));
}

TEST_CASE("potential extraction inverts the tower construction") {
    FrobeniusModule m = e1_module();
    QuantumPotential phi = e1_potential(m, QSeries::monomial(1, 8, {1}, Scalar(1)), 8);
    GammaTower tower = reconstruct_gamma(m, gamma1_from_potential(m, phi), 8);
    QuantumPotential back = potential_from_gamma(m, tower);
    CHECK(potentials_equal(back, phi));
}

TEST_CASE("round trips: E1 at order 8") {
    FrobeniusModule m = e1_module();
    QSeries a = QSeries::monomial(1, 8, {1}, Scalar(1));
    QSeries b = QSeries::monomial(1, 8, {1}, Scalar(3)) + QSeries::monomial(1, 8, {2}, Scalar(7));
    QSeries c = random_series(1, 8, 55).truncate(6).truncate(8);  // seeded, degree <= 6
    for (const QSeries& f : {a, b, c}) CHECK(round_trip(m, e1_potential(m, f, 8)));
}

TEST_CASE("round trips: rank-6 chain at order 4 and tensor family") {
    FrobeniusModule chain = random_chain(5, 61);
    QuantumPotential phi = chain5_potential(chain, random_series(1, 4, 62), random_series(1, 4, 63), 4);
    CHECK(round_trip(chain, phi));

    FrobeniusModule t = tensor_module();
    CHECK(round_trip(t, tensor_potential(t, random_series(2, 4, 64, 0), 4)));
}

TEST_CASE("non-integrable gamma1 is rejected with the WDVV witness") {
    FrobeniusModule m = tensor_module();
    QuantumPotential phi = tensor_violator(m, Scalar(1), 4);
    SeriesMat g1 = gamma1_from_potential(m, phi);
    CommutationVerdict iv = integrability_check(m, g1);
    CommutationVerdict wv = wdvv_check(m, phi);
    REQUIRE_FALSE(iv.passed());
    CHECK(iv.violations == wv.violations);
    CHECK_THROWS_AS(static_cast<void>(reconstruct_gamma(m, g1, 4)), CorrespondenceError);
}
