#pragma once

#include "qhodge/matrix.hpp"

namespace qhodge {

/// Row-reduce in place; returns pivot column indices.
std::vector<int> rref(ScalarMat& m);
int rank(ScalarMat m);
/// Basis of the right kernel, as columns.
ScalarMat kernel(const ScalarMat& m);
Scalar determinant(ScalarMat m);
ScalarMat inverse(const ScalarMat& m);
bool is_nilpotent(const ScalarMat& m, int* index = nullptr);

/// Matrix power (square matrices).
ScalarMat mat_power(const ScalarMat& m, int p);

/// Subspace of Scalar^n in canonical form (RREF rows).  Equality of
/// subspaces is equality of the canonical bases.
class Subspace {
  public:
    Subspace() = default;
    explicit Subspace(int ambient) : n_(ambient) {}
    /// Span of the columns of m.
    static Subspace span_of_columns(const ScalarMat& m);
    static Subspace span_of_vectors(int ambient, const std::vector<ScalarVec>& vs);
    static Subspace full(int ambient);

    int ambient() const { return n_; }
    int dim() const { return basis_.rows(); }
    /// Canonical basis vectors as rows.
    const ScalarMat& basis_rows() const { return basis_; }
    ScalarVec basis_vector(int i) const;

    bool contains(const ScalarVec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    /// Image of this subspace under m.
    Subspace image_under(const ScalarMat& m) const;

    /// Vectors of this subspace independent modulo `mod` (a complement basis
    /// of (this ∩ mod extended)); used for quotient constructions.
    std::vector<ScalarVec> complement_mod(const Subspace& mod) const;

  private:
    int n_ = 0;
    ScalarMat basis_;  // RREF rows, no zero rows
};

/// Image (column span) of a matrix.
inline Subspace image(const ScalarMat& m) { return Subspace::span_of_columns(m); }
/// Kernel as a subspace.
inline Subspace kernel_space(const ScalarMat& m) { return Subspace::span_of_columns(kernel(m)); }

enum class Definiteness { PositiveDefinite, NegativeDefinite, Indefinite, Degenerate };

std::string to_string(Definiteness d);

/// Exact definiteness of a symmetric, tau-free matrix: Sylvester minors,
/// with congruence diagonalization as the fallback when a leading minor
/// vanishes.  Throws MatrixError("NotSymmetric") / ("TauPresent").
Definiteness definiteness_check(const ScalarMat& s);

}  // namespace qhodge
