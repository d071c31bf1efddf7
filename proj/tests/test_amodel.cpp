#include "doctest.h"

#include "fixtures.hpp"

using namespace qhodge;
using namespace qhodge::fixtures;

namespace {

SeriesMat dz_mat(const SeriesMat& m, int p) {
    return m.map([p](const QSeries& f) { return f.dz_derive(p); });
}

QuantumPotential e1_q1(const FrobeniusModule& m, int order) {
    return e1_potential(m, QSeries::monomial(1, order, {1}, Scalar(1)), order);
}

}  // namespace

TEST_CASE("residue equals tau^{-1} times classical multiplication") {
    FrobeniusModule m = e1_module();
    QuantumPotential phi = e1_q1(m, 8);
    CHECK(residue(m, phi, 1) == m.L[0].scaled(Scalar::tau().inverse()));

    FrobeniusModule t = tensor_module();
    QuantumPotential tphi = tensor_potential(t, random_series(2, 4, 71, 0), 4);
    for (int p = 0; p < t.r(); ++p)
        CHECK(residue(t, tphi, t.framing[p]) == t.L[p].scaled(Scalar::tau().inverse()));
}

TEST_CASE("monodromy of E1 around q_1 = 0") {
    FrobeniusModule m = e1_module();
    ScalarMat mono = monodromy(m, 1);
    // M_1 T_0 = T_0 - T_1 + (5/2) T_2 - (5/6) T_3
    CHECK(mono(0, 0) == Scalar(1));
    CHECK(mono(1, 0) == Scalar(-1));
    CHECK(mono(2, 0) == Scalar(Rational(5, 2)));
    CHECK(mono(3, 0) == Scalar(Rational(-5, 6)));
    CHECK(log_unipotent(mono) == -m.L[0]);
}

TEST_CASE("flat frame solves the connection equations") {
    FrobeniusModule m = e1_module();
    QuantumPotential phi = e1_q1(m, 8);
    FrameExpansion fl = flat_frame(m, phi);
    for (int p = 0; p < m.r(); ++p) {
        SeriesMat a = product_operator(m, phi, m.framing[p]);
        SeriesMat np = to_series(m.L[p], m.r(), phi.D);
        CHECK(dz_mat(fl.y, p + 1) == fl.y * np - a * fl.y);
    }
}

TEST_CASE("flat frame of an r = 2 family solves both directions") {
    FrobeniusModule t = tensor_module();
    QuantumPotential phi = tensor_potential(t, random_series(2, 4, 72, 0), 4);
    FrameExpansion fl = flat_frame(t, phi);
    for (int p = 0; p < t.r(); ++p) {
        SeriesMat a = product_operator(t, phi, t.framing[p]);
        SeriesMat np = to_series(t.L[p], t.r(), phi.D);
        CHECK(dz_mat(fl.y, p + 1) == fl.y * np - a * fl.y);
    }
}

TEST_CASE("canonical frame of E1 at order 1 matches the worked expansion") {
    FrobeniusModule m = e1_module();
    QuantumPotential phi = e1_q1(m, 1);
    SeriesMat c = canonical_frame(m, phi).y;
    QSeries q1 = QSeries::monomial(1, 1, {1}, Scalar(1));
    // T~_0 = T_0 - tau q_1 T_2 + 2 q_1 T_3
    CHECK(c(0, 0) == QSeries::constant(1, 1, Scalar(1)));
    CHECK(c(1, 0).is_zero());
    CHECK(c(2, 0) == -(q1 * Scalar::tau()));
    CHECK(c(3, 0) == q1 * Scalar(2));
    // T~_1 = T_1 - tau^2 q_1 T_2 + tau q_1 T_3
    CHECK(c(2, 1) == -(q1 * Scalar::tau(2)));
    CHECK(c(3, 1) == q1 * Scalar::tau());
}

TEST_CASE("canonical frame equals the gauge exponential exp(-Gamma)") {
    FrobeniusModule m = e1_module();
    QuantumPotential phi = e1_q1(m, 8);
    GammaTower tower = reconstruct_gamma(m, gamma1_from_potential(m, phi), 8);
    SeriesMat gamma(4, 4);
    for (const auto& g : tower.gamma) gamma = gamma + g;
    SeriesMat expected = to_series(ScalarMat::identity(4), 1, 8);
    SeriesMat term = expected;
    for (int i = 1; i <= 4; ++i) {
        term = term * gamma.scaled(Scalar(Rational(-1, i)));
        expected = expected + term;
    }
    CHECK(canonical_frame(m, phi).y == expected);
}

TEST_CASE("monodromy identity on the canonical frame") {
    FrobeniusModule m = e1_module();
    CHECK(monodromy_frame_identity(m, e1_q1(m, 8), 1));

    FrobeniusModule chain = random_chain(5, 73);
    QuantumPotential phi = chain5_potential(chain, random_series(1, 4, 74), random_series(1, 4, 75), 4);
    CHECK(monodromy_frame_identity(chain, phi, 1));

    FrobeniusModule t = tensor_module();
    QuantumPotential tphi = tensor_potential(t, random_series(2, 4, 76, 0), 4);
    for (int j : t.framing) CHECK(monodromy_frame_identity(t, tphi, j));
}

TEST_CASE("frame lemmas hold case by case") {
    FrobeniusModule m = e1_module();
    Certificate e1_cert = verify_frame_lemmas(m, e1_q1(m, 4));
    CHECK(e1_cert.passed());

    FrobeniusModule chain = random_chain(5, 77);
    QuantumPotential phi = chain5_potential(chain, random_series(1, 4, 78), random_series(1, 4, 79), 4);
    Certificate k5_cert = verify_frame_lemmas(chain, phi);
    CHECK(k5_cert.passed());
}

TEST_CASE("curvature check matches the WDVV witness on the violator") {
    FrobeniusModule t = tensor_module();
    QuantumPotential bad = tensor_violator(t, Scalar(1), 4);
    CommutationVerdict cv = curvature_check(t, bad);
    CommutationVerdict wv = wdvv_check(t, bad);
    REQUIRE_FALSE(cv.passed());
    CHECK(cv.violations == wv.violations);
    CHECK_THROWS_AS(static_cast<void>(flat_frame(t, bad)), AModelError);
}

TEST_CASE("full variation certificate on E1") {
    FrobeniusModule m = e1_module();
    Certificate cert = pvhs_certificate(m, e1_q1(m, 8));
    for (const auto& item : cert.items) {
        INFO(item.name, ": ", item.witness);
        CHECK(item.passed);
    }
}
