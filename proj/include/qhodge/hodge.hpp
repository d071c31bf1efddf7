#pragma once

#include "qhodge/frobenius.hpp"
#include "qhodge/linalg.hpp"
#include "qhodge/report.hpp"

#include <cstdint>

namespace qhodge {

struct HodgeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filtration of Scalar^n indexed by integer levels.  For an increasing
/// filtration, levels below the smallest stored key give the zero subspace
/// and levels above the largest give the top stored subspace; decreasing
/// filtrations mirror this.
struct Filtration {
    bool increasing = true;
    int ambient = 0;
    std::map<int, Subspace> steps;

    Subspace at(int level) const;
    /// Shifted filtration: shifted(s).at(l) == at(l - s).
    Filtration shifted(int s) const;
    bool operator==(const Filtration& o) const;
    bool operator!=(const Filtration& o) const { return !(*this == o); }
    std::string str() const;
};

/// Real split Hodge-Tate bigrading: V = ⊕_p I^{p,p}, each block given by an
/// explicit basis.
struct Bigrading {
    int ambient = 0;
    std::map<int, std::vector<ScalarVec>> blocks;  // p -> basis of I^{p,p}

    int dim(int p) const;
    Subspace block_space(int p) const;
    /// Decreasing Hodge filtration F^a = ⊕_{p >= a} I^{p,p}.
    Filtration hodge_filtration() const;
    /// Increasing filtration W_l = ⊕_{2p <= l} I^{p,p}.
    Filtration weight_levels() const;
    /// tau-free bases forming a direct sum decomposition.
    Certificate validate() const;
};

/// Degenerating-variation germ: commuting nilpotent logs, limiting
/// bigrading (Hodge-Tate, split over R), marked generator and polarization.
struct NilpotentOrbit {
    int k = 0;
    std::vector<ScalarMat> N;
    Bigrading grading;
    ScalarVec e;
    ScalarMat Q;

    int rank() const { return grading.ambient; }
    int r() const { return static_cast<int>(N.size()); }
    /// Limiting decreasing Hodge filtration.
    Filtration F0() const { return grading.hodge_filtration(); }
};

/// Sign convention for the positivity condition of a polarized mixed Hodge
/// structure; Geometric uses (-1)^k Q(u, N^l u), Literal uses +Q(u, N^l u).
enum class SignCalibration { Geometric, Literal };

/// Centered weight filtration W(N) of a nilpotent endomorphism: the unique
/// increasing filtration with N W_l ⊆ W_{l-2} and N^l : gr_l ≅ gr_{-l}
/// (both properties re-verified on every call).
Filtration weight_filtration(const ScalarMat& n);

/// Polarized mixed Hodge structure conditions for (grading, N, Q) at
/// weight k: nilpotency, W = W(N)[-k], Q-orthogonality of the Hodge
/// filtration, and positivity on real primitive subspaces.
Certificate check_polarized_mhs(const Bigrading& grading, const ScalarMat& n, const ScalarMat& q, int k,
                                SignCalibration calib = SignCalibration::Geometric);

/// Maximal unipotency: dim I^{k,k} = 1, dim I^{k-1,k-1} = r, and the N_j
/// images of the marked generator span I^{k-1,k-1}.
Certificate check_max_unipotent(const NilpotentOrbit& orbit);

/// Forward direction of the module <-> orbit equivalence.  Verifies
/// polarization at the barycenter and at seeded positive samples of the
/// framing cone; throws on failure.
NilpotentOrbit module_to_orbit(const FrobeniusModule& m, SignCalibration calib = SignCalibration::Geometric,
                               std::uint64_t seed = 0, int samples = 5);

/// Inverse direction: rebuilds the module in the canonical basis
/// T_j = N_j(e).  Throws NotMaximallyUnipotent / NotHodgeTate.
FrobeniusModule orbit_to_module(const NilpotentOrbit& orbit);

/// Cone consistency: the weight filtration of sum lambda_j N_j is one fixed
/// filtration across the barycenter, vertex directions and seeded samples,
/// and the barycenter polarizes.
Certificate check_framing_cone(const FrobeniusModule& m, SignCalibration calib = SignCalibration::Geometric,
                               std::uint64_t seed = 0, int samples = 5);

/// The degree bigrading I^{p,p} = V_{2(k-p)} of a graded module.
Bigrading degree_bigrading(const FrobeniusModule& m);

}  // namespace qhodge
