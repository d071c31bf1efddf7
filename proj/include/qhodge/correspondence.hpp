#pragma once

#include "qhodge/calculus.hpp"
#include "qhodge/potential.hpp"

namespace qhodge {

struct CorrespondenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Graded pieces of the gauge transformation: gamma[l-1] = Gamma_{-l}
/// raises V-degree by exactly 2l and vanishes at q = 0.
struct GammaTower {
    int k = 0;
    int D = 0;
    std::vector<SeriesMat> gamma;

    const SeriesMat& at(int l) const { return gamma.at(l - 1); }
};

/// Gamma_{-1}(T_a) = sum_c (d^2 phi_h / dz_a dz_{delta(c)}) T_c.
SeriesMat gamma1_from_potential(const FrobeniusModule& m, const QuantumPotential& phi);

/// Pairwise commutation of D_j X_{-1} where X_{-1} = sum z_j N_j + Gamma_{-1};
/// violation quadruples match wdvv_check when Gamma_{-1} comes from a potential.
CommutationVerdict integrability_check(const FrobeniusModule& m, const SeriesMat& gamma1);

/// Solves the graded horizontality recursion
///   D_j G_{-l} = [G_{-l+1}, N_j] + G_{-l+1} D_j Gamma_{-1}
/// for l = 2..k and recovers the Gamma tower as the graded matrix logarithm.
/// Throws NotIntegrable / LogPartNonzero.
GammaTower reconstruct_gamma(const FrobeniusModule& m, const SeriesMat& gamma1, int order);

/// True iff every Gamma_{-l} annihilates V_{2k-2}.
bool canonical_check(const FrobeniusModule& m, const GammaTower& tower);

/// Inverse direction: phi^{ab} = (1/2) B(Gamma_{-1} T_a, T_b),
/// phi^a = B(-Gamma_{-2} T_a, T_0); for k = 3 one formal z-integration per
/// framing direction with a cross-consistency check.
QuantumPotential potential_from_gamma(const FrobeniusModule& m, const GammaTower& tower);

/// Quantum parts agree, treating absent map entries as zero series.
bool potentials_equal(const QuantumPotential& a, const QuantumPotential& b);

/// Exact identity of both compositions at the given truncation order.
bool round_trip(const FrobeniusModule& m, const QuantumPotential& phi);

}  // namespace qhodge
