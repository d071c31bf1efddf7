#pragma once

#include "qhodge/linalg.hpp"
#include "qhodge/report.hpp"

#include <array>
#include <map>

namespace qhodge {

struct FrobeniusError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Graded V_2-Frobenius module in an adapted basis T_0..T_m.
///
/// dims[p] = dim V_{2p} for p = 0..k; basis indices are sorted by degree,
/// deg[a] is the (even) degree of T_a.  The Sym V_2 action is stored as one
/// endomorphism matrix per framing element (left multiplication by T_j).
struct FrobeniusModule {
    int k = 0;
    std::vector<int> dims;
    std::vector<int> deg;        // degree of each basis vector, weakly increasing
    ScalarMat B;                 // pairing in the adapted basis
    std::vector<int> framing;    // basis indices of the degree-2 block, framing order
    std::vector<ScalarMat> L;    // L[p] = left multiplication by T_{framing[p]}
    bool real = true;

    int rank() const { return static_cast<int>(deg.size()); }
    int r() const { return static_cast<int>(framing.size()); }
    /// delta(a): the index with B(T_{delta(a)}, T_b) = delta_{ab}.
    int delta(int a) const;
    /// Position of index a within its degree block.
    int first_index_of_degree(int degree) const;
    /// Multiplication operator for the framing element at position p (0-based).
    const ScalarMat& mult(int p) const { return L[p]; }
    /// L_w for w = sum coeff[p] * T_{framing[p]}.
    ScalarMat mult_by(const ScalarVec& coeff) const;
};

/// Classical cubic potential, stored as monomial coefficients on sorted
/// index triples: value c on (i<=j<=l) means the summand c * z_i z_j z_l.
struct CubicPotential {
    std::map<std::array<int, 3>, Scalar> coeff;

    void add(int i, int j, int l, const Scalar& c);
    Scalar third_partial(int a, int b, int c) const;
    /// d^2/dz_a dz_b, as a linear form: index -> coefficient of z_x.
    std::map<int, Scalar> second_partial(int a, int b) const;
    bool operator==(const CubicPotential& o) const { return coeff == o.coeff; }
};

ValidationReport validate_module(const FrobeniusModule& m);

/// phi_0 with the weight-dependent combinatorial constants C.
CubicPotential classical_potential(const FrobeniusModule& m);

/// Recovers the multiplication operators from a cubic via triple derivatives.
/// Throws FrobeniusError("GradingViolation...") when a nonzero coefficient
/// connects wrong degrees.
std::vector<ScalarMat> structure_constants_from_cubic(const FrobeniusModule& skeleton, const CubicPotential& phi0);

/// Q(T_a, T_b) = (-1)^{k + deg(a)/2} B(T_a, T_b).
ScalarMat q_form(const FrobeniusModule& m);

}  // namespace qhodge
