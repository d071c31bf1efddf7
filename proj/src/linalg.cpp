#include "qhodge/linalg.hpp"

namespace qhodge {

std::vector<int> rref(ScalarMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        Scalar inv = m(row, col).inverse();
        for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Scalar f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(ScalarMat m) { return static_cast<int>(rref(m).size()); }

ScalarMat kernel(const ScalarMat& m) {
    ScalarMat a(m);
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    int free_count = m.cols() - static_cast<int>(pivots.size());
    ScalarMat ker(m.cols(), free_count);
    int kcol = 0;
    for (int col = 0; col < m.cols(); ++col) {
        if (is_pivot[col]) continue;
        ker(col, kcol) = Scalar(1);
        for (size_t pr = 0; pr < pivots.size(); ++pr) ker(pivots[pr], kcol) = -a(static_cast<int>(pr), col);
        ++kcol;
    }
    return ker;
}

Scalar determinant(ScalarMat m) {
    if (m.rows() != m.cols()) throw MatrixError("determinant of non-square matrix");
    Scalar det(1);
    int n = m.rows();
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (!m(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return Scalar();
        if (p != col) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        Scalar inv = m(col, col).inverse();
        for (int i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            Scalar f = m(i, col) * inv;
            for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

ScalarMat inverse(const ScalarMat& m) {
    if (m.rows() != m.cols()) throw MatrixError("inverse of non-square matrix");
    int n = m.rows();
    ScalarMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar(1);
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n) throw MatrixError("singular matrix");
    ScalarMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

bool is_nilpotent(const ScalarMat& m, int* index) {
    if (m.rows() != m.cols()) throw MatrixError("nilpotency of non-square matrix");
    ScalarMat p = ScalarMat::identity(m.rows());
    for (int i = 0; i <= m.rows(); ++i) {
        if (p.is_zero()) {
            if (index) *index = i;  // smallest i with m^i = 0
            return true;
        }
        p = p * m;
    }
    return false;
}

ScalarMat mat_power(const ScalarMat& m, int p) {
    ScalarMat acc = ScalarMat::identity(m.rows());
    for (int i = 0; i < p; ++i) acc = acc * m;
    return acc;
}

Subspace Subspace::span_of_columns(const ScalarMat& m) {
    Subspace s(m.rows());
    ScalarMat rows = m.transpose();
    std::vector<int> pivots = rref(rows);
    ScalarMat basis(static_cast<int>(pivots.size()), m.rows());
    for (int i = 0; i < basis.rows(); ++i)
        for (int j = 0; j < basis.cols(); ++j) basis(i, j) = rows(i, j);
    s.basis_ = basis;
    return s;
}

Subspace Subspace::span_of_vectors(int ambient, const std::vector<ScalarVec>& vs) {
    ScalarMat m(ambient, static_cast<int>(vs.size()));
    for (size_t j = 0; j < vs.size(); ++j) {
        if (static_cast<int>(vs[j].size()) != ambient) throw MatrixError("vector length mismatch");
        for (int i = 0; i < ambient; ++i) m(i, static_cast<int>(j)) = vs[j][i];
    }
    return span_of_columns(m);
}

Subspace Subspace::full(int ambient) { return span_of_columns(ScalarMat::identity(ambient)); }

ScalarVec Subspace::basis_vector(int i) const {
    ScalarVec v(n_);
    for (int j = 0; j < n_; ++j) v[j] = basis_(i, j);
    return v;
}

bool Subspace::contains(const ScalarVec& v) const {
    // reduce v against the RREF basis
    ScalarVec w(v);
    for (int i = 0; i < basis_.rows(); ++i) {
        int p = 0;
        while (p < n_ && basis_(i, p).is_zero()) ++p;
        if (p == n_) continue;
        if (!w[p].is_zero()) {
            Scalar f = w[p];
            for (int j = 0; j < n_; ++j) w[j] -= f * basis_(i, j);
        }
    }
    for (const auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (n_ != o.n_) throw MatrixError("subspace ambient mismatch");
    std::vector<ScalarVec> vs;
    for (int i = 0; i < dim(); ++i) vs.push_back(basis_vector(i));
    for (int i = 0; i < o.dim(); ++i) vs.push_back(o.basis_vector(i));
    return span_of_vectors(n_, vs);
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (n_ != o.n_) throw MatrixError("subspace ambient mismatch");
    // columns of [A | B] kernel give intersection coordinates
    ScalarMat a = basis_.transpose();   // n x d1
    ScalarMat b = o.basis_.transpose();  // n x d2
    ScalarMat joint(n_, a.cols() + b.cols());
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < a.cols(); ++j) joint(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) joint(i, a.cols() + j) = -b(i, j);
    }
    ScalarMat ker = kernel(joint);
    std::vector<ScalarVec> vs;
    for (int c = 0; c < ker.cols(); ++c) {
        ScalarVec v(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < a.cols(); ++j) v[i] += a(i, j) * ker(j, c);
        vs.push_back(v);
    }
    return span_of_vectors(n_, vs);
}

Subspace Subspace::image_under(const ScalarMat& m) const {
    std::vector<ScalarVec> vs;
    for (int i = 0; i < dim(); ++i) vs.push_back(qhodge::apply(m, basis_vector(i)));
    return span_of_vectors(n_, vs);
}

std::vector<ScalarVec> Subspace::complement_mod(const Subspace& mod) const {
    // greedily extend mod's basis by vectors of this subspace
    std::vector<ScalarVec> picked;
    Subspace acc = mod;
    for (int i = 0; i < dim(); ++i) {
        ScalarVec v = basis_vector(i);
        if (acc.contains(v)) continue;
        picked.push_back(v);
        acc = acc.sum(span_of_vectors(n_, {v}));
    }
    return picked;
}

std::string to_string(Definiteness d) {
    switch (d) {
        case Definiteness::PositiveDefinite: return "PositiveDefinite";
        case Definiteness::NegativeDefinite: return "NegativeDefinite";
        case Definiteness::Indefinite: return "Indefinite";
        case Definiteness::Degenerate: return "Degenerate";
    }
    return "?";
}

namespace {

Definiteness from_diagonal_signs(const std::vector<int>& signs) {
    bool pos = false, neg = false, zero = false;
    for (int s : signs) {
        if (s > 0) pos = true;
        else if (s < 0) neg = true;
        else zero = true;
    }
    if (pos && neg) return Definiteness::Indefinite;
    if (zero) return Definiteness::Degenerate;
    return pos ? Definiteness::PositiveDefinite : Definiteness::NegativeDefinite;
}

// Symmetric congruence diagonalization over Q; returns diagonal entry signs.
std::vector<int> congruence_signs(ScalarMat s) {
    int n = s.rows();
    std::vector<int> signs;
    for (int k = 0; k < n; ++k) {
        if (s(k, k).is_zero()) {
            // find a usable pivot below/right
            int swap_i = -1;
            for (int i = k + 1; i < n; ++i)
                if (!s(i, i).is_zero()) {
                    swap_i = i;
                    break;
                }
            if (swap_i >= 0) {
                for (int j = 0; j < n; ++j) std::swap(s(k, j), s(swap_i, j));
                for (int j = 0; j < n; ++j) std::swap(s(j, k), s(j, swap_i));
            } else {
                // all remaining diagonal entries are 0; look for an
                // off-diagonal entry and symmetrize rows k, i
                int oi = -1;
                for (int i = k + 1; i < n && oi < 0; ++i)
                    if (!s(k, i).is_zero()) oi = i;
                if (oi < 0) {
                    bool all_zero = true;
                    for (int i = k; i < n && all_zero; ++i)
                        for (int j = k; j < n && all_zero; ++j)
                            if (!s(i, j).is_zero()) all_zero = false;
                    if (all_zero) {
                        for (int i = k; i < n; ++i) signs.push_back(0);
                        return signs;
                    }
                    // a nonzero entry exists in a later row; handle it there
                    signs.push_back(0);
                    continue;
                }
                // row_k += row_oi (and symmetric column op) creates 2*s(k,oi) on the diagonal
                for (int j = 0; j < n; ++j) s(k, j) += s(oi, j);
                for (int j = 0; j < n; ++j) s(j, k) += s(j, oi);
            }
        }
        Scalar piv = s(k, k);
        if (piv.is_zero()) {
            signs.push_back(0);
            continue;
        }
        signs.push_back(sgn(piv.to_rational()));
        Scalar inv = piv.inverse();
        for (int i = k + 1; i < n; ++i) {
            if (s(i, k).is_zero()) continue;
            Scalar f = s(i, k) * inv;
            for (int j = 0; j < n; ++j) s(i, j) -= f * s(k, j);
            for (int j = 0; j < n; ++j) s(j, i) -= f * s(j, k);
        }
    }
    return signs;
}

}  // namespace

Definiteness definiteness_check(const ScalarMat& s) {
    if (s.rows() != s.cols()) throw MatrixError("NotSymmetric");
    for (int i = 0; i < s.rows(); ++i)
        for (int j = 0; j < s.cols(); ++j) {
            if (!s(i, j).is_tau_free()) throw MatrixError("TauPresent");
            if (!(s(i, j) == s(j, i))) throw MatrixError("NotSymmetric");
        }
    int n = s.rows();
    if (n == 0) return Definiteness::PositiveDefinite;
    // Sylvester leading principal minors
    std::vector<Rational> minors(n);
    bool singular_minor = false;
    for (int k = 1; k <= n; ++k) {
        ScalarMat lead(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) lead(i, j) = s(i, j);
        minors[k - 1] = determinant(lead).is_zero() ? Rational(0) : determinant(lead).to_rational();
        if (minors[k - 1] == 0) singular_minor = true;
    }
    if (!singular_minor) {
        bool all_pos = true, alternating = true;
        for (int k = 1; k <= n; ++k) {
            if (minors[k - 1] <= 0) all_pos = false;
            if ((k % 2 == 1) != (minors[k - 1] < 0)) alternating = false;
        }
        if (all_pos) return Definiteness::PositiveDefinite;
        if (alternating) return Definiteness::NegativeDefinite;
        return Definiteness::Indefinite;
    }
    return from_diagonal_signs(congruence_signs(s));
}

ScalarMat exp_nilpotent(const ScalarMat& n, int max_power) {
    ScalarMat acc = ScalarMat::identity(n.rows());
    ScalarMat term = ScalarMat::identity(n.rows());
    for (int i = 1; i <= max_power; ++i) {
        term = term * n;
        if (term.is_zero()) return acc;
        term = term.scaled(Scalar(Rational(1, i)));  // keeps term = n^i / i!
        acc = acc + term;
    }
    throw MatrixError("exp_nilpotent: matrix is not nilpotent");
}

ScalarMat log_unipotent(const ScalarMat& u, int max_power) {
    ScalarMat x = u - ScalarMat::identity(u.rows());
    ScalarMat acc(u.rows(), u.cols());
    ScalarMat term = ScalarMat::identity(u.rows());
    for (int i = 1; i <= max_power; ++i) {
        term = term * x;
        if (term.is_zero()) return acc;
        Scalar c = Scalar(Rational((i % 2 == 1) ? 1 : -1, i));
        acc = acc + term.scaled(c);
    }
    throw MatrixError("log_unipotent: matrix is not unipotent");
}

}  // namespace qhodge
