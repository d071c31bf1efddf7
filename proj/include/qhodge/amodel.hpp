#pragma once

#include "qhodge/correspondence.hpp"

namespace qhodge {

struct AModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Solved frame of the deformed connection.  `y` is a pure q-series matrix
/// with y(0) = Id: for a flat frame the columns of y * exp(-sum z_j N_j)
/// are the flat sections; for a canonical frame y itself expresses the
/// single-valued frame in the constant basis.
struct FrameExpansion {
    SeriesMat y;
    std::vector<ScalarMat> nilp;  // N_j = L_{T_j}, framing order
    bool canonical = false;

    /// Multivalued frame matrix y * exp(-sum z_j N_j) (flat frames only).
    LogPolyMat frame_matrix() const;
};

/// exp(sign * sum z_j L_j) as a log-polynomial matrix.
LogPolyMat nilpotent_twist(const FrobeniusModule& m, int order, int sign);

/// Residue of the deformed connection along q_j = 0; equals tau^{-1} L_{T_j}.
ScalarMat residue(const FrobeniusModule& m, const QuantumPotential& phi, int j);

/// Flatness of nabla_j = D_j + A_j in divisor coordinates; violation
/// quadruples match wdvv_check.
CommutationVerdict curvature_check(const FrobeniusModule& m, const QuantumPotential& phi);

/// Order-by-order solution of D_j Y = Y N_j - A_j Y with Y(0) = Id.
FrameExpansion flat_frame(const FrobeniusModule& m, const QuantumPotential& phi);

/// Canonical-extension frame exp(sum z N) * Y * exp(-sum z N); throws
/// AModelError("LogPartNonzero...") when the twist fails to cancel the logs.
FrameExpansion canonical_frame(const FrobeniusModule& m, const QuantumPotential& phi);

/// Monodromy of the deformed connection around q_j = 0 in a flat frame.
ScalarMat monodromy(const FrobeniusModule& m, int j);

/// Series identity D_j C + A_j C = C L_j for the canonical frame matrix C:
/// the local monodromy logarithm acts on the canonical frame as classical
/// multiplication by T_j acts on the basis.
bool monodromy_frame_identity(const FrobeniusModule& m, const QuantumPotential& phi, int j);

/// Checks the closed-form expansions of the flat and canonical frames
/// (each degree case separately) against the solver output.
Certificate verify_frame_lemmas(const FrobeniusModule& m, const QuantumPotential& phi);

/// Full variation certificate: flat pairing, transversality, real-structure
/// stability under tau -> -tau, and agreement of the canonical frame with
/// exp(-Gamma).
Certificate pvhs_certificate(const FrobeniusModule& m, const QuantumPotential& phi);

}  // namespace qhodge
