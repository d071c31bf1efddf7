#pragma once

#include "qhodge/frobenius.hpp"

#include <array>

namespace qhodge {

struct PotentialError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// phi = phi0 + phi_h: the classical cubic plus series corrections.
/// phi_h(z) = sum_{deg(a)=2k-4} z_a phi_a[a] + sum z_a z_b phi_ab[(a,b)],
/// all series in the divisor variables q_1..q_r and vanishing at q = 0.
/// For k = 3 the single correction series `weight3` is used instead.
struct QuantumPotential {
    int D = 10;  // truncation order of every series
    CubicPotential phi0;
    std::map<int, QSeries> phi_a;
    std::map<std::pair<int, int>, QSeries> phi_ab;  // symmetric; both key orders allowed
    QSeries weight3;

    /// Symmetric lookup in phi_ab; null when the pair is absent.
    const QSeries* pair(int a, int b) const;
};

/// Potential with zero quantum part and phi0 = classical_potential(m).
QuantumPotential make_potential(const FrobeniusModule& m, int order);

ValidationReport validate_potential(const FrobeniusModule& m, const QuantumPotential& phi);

/// Coefficients of T_j .q T_a over the basis (deformed product).
/// j must be a divisor (degree-2) index.
std::vector<QSeries> quantum_product(const FrobeniusModule& m, const QuantumPotential& phi, int j, int a);

/// Matrix of left deformed multiplication by T_j.
SeriesMat product_operator(const FrobeniusModule& m, const QuantumPotential& phi, int j);
/// Quantum part only: product_operator minus the classical L_{T_j}.
SeriesMat quantum_correction(const FrobeniusModule& m, const QuantumPotential& phi, int j);

/// Outcome of a pairwise-commutation style check; violations are
/// (j, l, a, d) basis-index quadruples in lexicographic order.
struct CommutationVerdict {
    std::vector<std::array<int, 4>> violations;
    bool passed() const { return violations.empty(); }
};

/// Graded WDVV equations, checked up to the potential's truncation order.
CommutationVerdict wdvv_check(const FrobeniusModule& m, const QuantumPotential& phi);

/// 1-based divisor position of basis index j in the framing, or -1.
int divisor_position(const FrobeniusModule& m, int j);

}  // namespace qhodge
