#include "doctest.h"

#include "fixtures.hpp"

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

TEST_CASE("E1 passes the module axioms") {
    FrobeniusModule m = e1_module();
    ValidationReport rep = validate_module(m);
    CHECK(rep.passed());
    CHECK(m.delta(0) == 3);
    CHECK(m.delta(1) == 2);
}

TEST_CASE("a broken product is rejected with a Frobenius witness") {
    FrobeniusModule m = chain_module(3, {Scalar(1), Scalar(5), Scalar(2)});
    ValidationReport rep = validate_module(m);
    CHECK_FALSE(rep.passed());
    const Check* f = rep.first_failure();
    REQUIRE(f != nullptr);
    CHECK(f->name.find("Frobenius") != std::string::npos);
    CHECK(f->witness.find("(w,v1,v2)") != std::string::npos);
}

TEST_CASE("classical potential of E1") {
    CubicPotential phi0 = classical_potential(e1_module());
    CHECK(phi0.coeff.at({1, 1, 1}) == Scalar(Rational(5, 6)));
    CHECK(phi0.coeff.at({0, 1, 2}) == Scalar(1));
    CHECK(phi0.coeff.size() == 2);
    CHECK(phi0.third_partial(1, 1, 1) == Scalar(5));
    CHECK(phi0.third_partial(0, 1, 2) == Scalar(1));
}

TEST_CASE("structure constants round trip through the cubic") {
    std::vector<FrobeniusModule> mods = {e1_module(), random_chain(3, 11), random_chain(4, 12), random_chain(5, 13),
                                         tensor_module()};
    for (const auto& m : mods) {
        REQUIRE(validate_module(m).passed());
        std::vector<ScalarMat> back = structure_constants_from_cubic(m, classical_potential(m));
        REQUIRE(back.size() == m.L.size());
        for (size_t p = 0; p < back.size(); ++p) CHECK(back[p] == m.L[p]);
    }
}

TEST_CASE("a mis-graded cubic is rejected") {
    FrobeniusModule m = e1_module();
    CubicPotential bad = classical_potential(m);
    bad.add(0, 0, 1, Scalar(1));  // total degree 2, not 2k
    bool threw = false;
    try {
        structure_constants_from_cubic(m, bad);
    } catch (const FrobeniusError& e) {
        threw = std::string(e.what()).find("GradingViolation") != std::string::npos;
    }
    CHECK(threw);
}

TEST_CASE("polarization form carries the degree sign") {
    FrobeniusModule m = e1_module();
    ScalarMat q = q_form(m);
    CHECK(q(0, 3) == Scalar(-1));
    CHECK(q(3, 0) == Scalar(1));
    CHECK(q(1, 2) == Scalar(1));
    CHECK(q(2, 1) == Scalar(-1));
}

TEST_CASE("tensor module basis layout") {
    FrobeniusModule m = tensor_module();
    CHECK(m.rank() == 12);
    CHECK(m.r() == 2);
    CHECK(m.deg[kTensorGamma] == 6);
    CHECK(m.deg[kTensorAlpha] == 6);
    CHECK(m.delta(0) == 11);
    CHECK(validate_module(m).passed());
}

TEST_CASE("module equality helper sanity") {
    CHECK(modules_equal(e1_module(), e1_module()));
    CHECK_FALSE(modules_equal(e1_module(), e1_kappa(Scalar(7))));
}
