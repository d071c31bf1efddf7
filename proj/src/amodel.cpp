#include "qhodge/amodel.hpp"

namespace qhodge {

namespace {

std::string quad_str(const std::array<int, 4>& q) {
    return "(" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," +
           std::to_string(q[3]) + ")";
}

template <typename T>
Mat<T> exp_finite(const Mat<T>& n, const Mat<T>& id, int max_power = 64) {
    Mat<T> acc = id;
    Mat<T> term = id;
    for (int i = 1; i <= max_power; ++i) {
        term = term * n;
        if (term.is_zero()) return acc;
        term = term.scaled(Scalar(Rational(1, i)));
        acc = acc + term;
    }
    throw AModelError("matrix exponential does not terminate");
}

SeriesMat series_identity(int n, int r, int order) { return to_series(ScalarMat::identity(n), r, order); }

void series_shape(const SeriesMat& m, int fallback_r, int fallback_d, int& r, int& d) {
    r = fallback_r;
    d = fallback_d;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_universal_zero()) {
                r = m(i, j).r();
                d = m(i, j).order();
                return;
            }
}

LogPolyMat twist_matrix(const std::vector<ScalarMat>& nilp, int r, int order, int sign) {
    int n = nilp.empty() ? 0 : nilp[0].rows();
    LogPolyMat z(n, n);
    for (int p = 0; p < static_cast<int>(nilp.size()); ++p) {
        ExponentTuple e(r, 0);
        e[p] = 1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (nilp[p](i, j).is_zero()) continue;
                z(i, j) += LogPolySeries::z_monomial(r, order, e, Scalar(sign) * nilp[p](i, j));
            }
    }
    return exp_finite(z, to_logpoly(series_identity(n, r, order)));
}

void exponents_rec(int r, int pos, int remaining, ExponentTuple& cur, std::vector<ExponentTuple>& out) {
    if (pos == r - 1) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        cur[pos] = v;
        exponents_rec(r, pos + 1, remaining - v, cur, out);
    }
}

std::vector<ExponentTuple> exponents_of_degree(int r, int t) {
    std::vector<ExponentTuple> out;
    ExponentTuple cur(r, 0);
    exponents_rec(r, 0, t, cur, out);
    return out;
}

SeriesMat dz_derive_mat(const SeriesMat& m, int p) {
    return m.map([p](const QSeries& f) { return f.dz_derive(p); });
}

}  // namespace

LogPolyMat FrameExpansion::frame_matrix() const {
    if (canonical) return to_logpoly(y);
    int r, d;
    series_shape(y, static_cast<int>(nilp.size()), 0, r, d);
    return to_logpoly(y) * twist_matrix(nilp, r, d, -1);
}

LogPolyMat nilpotent_twist(const FrobeniusModule& m, int order, int sign) {
    return twist_matrix(m.L, m.r(), order, sign);
}

ScalarMat residue(const FrobeniusModule& m, const QuantumPotential& phi, int j) {
    SeriesMat a = product_operator(m, phi, j);
    ScalarMat at0 = a.map_to<Scalar>([](const QSeries& f) { return f.at_zero(); });
    return at0.scaled(Scalar::tau().inverse());
}

CommutationVerdict curvature_check(const FrobeniusModule& m, const QuantumPotential& phi) {
    CommutationVerdict verdict;
    int n = m.rank();
    std::vector<SeriesMat> ops;
    for (int p = 0; p < m.r(); ++p) ops.push_back(product_operator(m, phi, m.framing[p]));
    for (int p = 0; p < m.r(); ++p)
        for (int q = p + 1; q < m.r(); ++q) {
            SeriesMat f = dz_derive_mat(ops[q], p + 1) - dz_derive_mat(ops[p], q + 1) + ops[p] * ops[q] -
                          ops[q] * ops[p];
            for (int a = 0; a < n; ++a)
                for (int d = 0; d < n; ++d)
                    if (!f(d, a).is_zero()) verdict.violations.push_back({m.framing[p], m.framing[q], a, d});
        }
    return verdict;
}

FrameExpansion flat_frame(const FrobeniusModule& m, const QuantumPotential& phi) {
    CommutationVerdict cv = curvature_check(m, phi);
    if (!cv.passed()) throw AModelError("NotFlat at (j,l,a,d) = " + quad_str(cv.violations.front()));
    int n = m.rank();
    int r = m.r();
    int order = phi.D;

    std::vector<SeriesMat> a_ops, deltas;
    for (int p = 0; p < r; ++p) {
        a_ops.push_back(product_operator(m, phi, m.framing[p]));
        deltas.push_back(a_ops.back() - to_series(m.L[p], r, order));
    }
    ScalarMat nsum(n, n);
    for (const auto& l : m.L) nsum = nsum + l;

    SeriesMat y = series_identity(n, r, order);
    Scalar tau = Scalar::tau();
    for (int t = 1; t <= order; ++t) {
        SeriesMat rhs(n, n);
        for (int p = 0; p < r; ++p) rhs = rhs - deltas[p] * y;
        for (const ExponentTuple& e : exponents_of_degree(r, t)) {
            ScalarMat c(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) c(i, j) = rhs(i, j).at(e);
            if (c.is_zero()) continue;
            // (tau t + ad_N)^{-1} via the finite Neumann series of the
            // nilpotent adjoint
            Scalar base = (tau * Scalar(t)).inverse();
            ScalarMat x(n, n);
            ScalarMat term = c;
            Scalar factor = base;
            int sign = 1;
            while (!term.is_zero()) {
                x = x + term.scaled(factor * Scalar(sign));
                term = nsum * term - term * nsum;
                factor *= base;
                sign = -sign;
            }
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (!x(i, j).is_zero()) y(i, j).set(e, x(i, j));
        }
    }

    for (int p = 0; p < r; ++p) {
        SeriesMat lhs = dz_derive_mat(y, p + 1);
        SeriesMat rhs = y * to_series(m.L[p], r, order) - a_ops[p] * y;
        if (!(lhs == rhs))
            throw AModelError("NotFlat: order-by-order system inconsistent in direction " +
                              std::to_string(m.framing[p]));
    }

    FrameExpansion f;
    f.y = y;
    f.nilp = m.L;
    f.canonical = false;
    return f;
}

FrameExpansion canonical_frame(const FrobeniusModule& m, const QuantumPotential& phi) {
    FrameExpansion fl = flat_frame(m, phi);
    // the monodromy logarithms act on the flat frame with matrix L_j, so the
    // twist multiplies the flat frame matrix on the right and the log parts
    // of y * exp(-sum z L) cancel exactly
    LogPolyMat c = fl.frame_matrix() * nilpotent_twist(m, phi.D, 1);
    int n = m.rank();
    SeriesMat pure(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!c(i, j).is_pure_q())
                throw AModelError("LogPartNonzero at entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
            pure(i, j) = c(i, j).q_part();
        }
    FrameExpansion f;
    f.y = pure;
    f.nilp = m.L;
    f.canonical = true;
    return f;
}

ScalarMat monodromy(const FrobeniusModule& m, int j) {
    int p = divisor_position(m, j);
    if (p < 0) throw PotentialError("NotDivisorIndex: " + std::to_string(j));
    return exp_nilpotent(-m.L[p - 1]);
}

bool monodromy_frame_identity(const FrobeniusModule& m, const QuantumPotential& phi, int j) {
    int p = divisor_position(m, j);
    if (p < 0) throw PotentialError("NotDivisorIndex: " + std::to_string(j));
    SeriesMat c = canonical_frame(m, phi).y;
    SeriesMat a = product_operator(m, phi, j);
    SeriesMat lhs = dz_derive_mat(c, p) + a * c;
    SeriesMat rhs = c * to_series(m.L[p - 1], m.r(), phi.D);
    return lhs == rhs;
}

namespace {

// classical + quantum second partial d^2 phi / dz_a dz_{delta(c)} as a
// log-polynomial series (z-linear classical part plus the pure-q part)
LogPolySeries second_partial_full(const FrobeniusModule& m, const QuantumPotential& phi, const SeriesMat& g1,
                                  int a, int c) {
    LogPolySeries out(m.r(), phi.D);
    for (const auto& [x, coeff] : phi.phi0.second_partial(a, m.delta(c))) {
        int px = divisor_position(m, x);
        if (px < 0) throw PotentialError("classical second partial leaves the divisor variables");
        ExponentTuple e(m.r(), 0);
        e[px - 1] = 1;
        out += LogPolySeries::z_monomial(m.r(), phi.D, e, coeff);
    }
    if (!g1(c, a).is_universal_zero()) out += LogPolySeries(g1(c, a));
    return out;
}

}  // namespace

Certificate verify_frame_lemmas(const FrobeniusModule& m, const QuantumPotential& phi) {
    Certificate cert;
    int n = m.rank();
    int r = m.r();
    int order = phi.D;
    SeriesMat g1 = gamma1_from_potential(m, phi);

    FrameExpansion fl = flat_frame(m, phi);
    LogPolyMat s = fl.frame_matrix();
    LogPolySeries one = LogPolySeries(QSeries::constant(r, order, Scalar(1)));

    for (int a = 0; a < n; ++a) {
        bool norm = true;
        for (int i = 0; i < n && norm; ++i) {
            if (m.deg[i] > m.deg[a]) continue;
            norm = s(i, a) == (i == a ? one : LogPolySeries());
        }
        cert.add("flat normalization (a=" + std::to_string(a) + ")", norm,
                 "leading graded component differs from T_" + std::to_string(a));

        bool second = true;
        std::string w;
        for (int c = 0; c < n && second; ++c) {
            if (m.deg[c] != m.deg[a] + 2) continue;
            LogPolySeries expect = -second_partial_full(m, phi, g1, a, c);
            if (!(s(c, a) == expect)) {
                second = false;
                w = "component T_" + std::to_string(c) + ": got " + s(c, a).str() + ", formula gives " + expect.str();
            }
        }
        cert.add("flat section expansion (a=" + std::to_string(a) + ")", second, w);
    }

    FrameExpansion cf = canonical_frame(m, phi);
    const SeriesMat& c_mat = cf.y;
    QSeries qone = QSeries::constant(r, order, Scalar(1));
    int top = m.first_index_of_degree(2 * m.k);

    for (int a = 0; a < n; ++a) {
        bool norm = true;
        for (int i = 0; i < n && norm; ++i) {
            if (m.deg[i] > m.deg[a]) continue;
            norm = c_mat(i, a) == (i == a ? qone : QSeries());
        }
        cert.add("canonical normalization (a=" + std::to_string(a) + ")", norm,
                 "leading graded component differs from T_" + std::to_string(a));

        int da = m.deg[a];
        std::string label = "canonical expansion (a=" + std::to_string(a) + ")";
        bool ok = true;
        std::string w;
        if (da >= 2 * m.k - 2) {
            for (int i = 0; i < n && ok; ++i)
                if (!(c_mat(i, a) == (i == a ? qone : QSeries()))) {
                    ok = false;
                    w = "expected the constant column T_" + std::to_string(a);
                }
        } else if (da == 2 * m.k - 4 && m.k > 3) {
            auto it = phi.phi_a.find(a);
            QSeries f = it == phi.phi_a.end() ? QSeries(r, order) : it->second;
            for (int i = 0; i < n && ok; ++i) {
                QSeries expect;
                if (i == a)
                    expect = qone;
                else if (m.deg[i] == da + 2)
                    expect = -f.dz_derive(divisor_position(m, m.delta(i)));
                else if (i == top)
                    expect = f;
                if (!(c_mat(i, a) == expect)) {
                    ok = false;
                    w = "component T_" + std::to_string(i) + " differs from the closed formula";
                }
            }
        } else if (da > 2 && da < 2 * m.k - 4) {
            for (int c = 0; c < n && ok; ++c) {
                if (m.deg[c] != da + 2) continue;
                const QSeries* f = phi.pair(a, m.delta(c));
                QSeries expect = f ? -(*f * Scalar(2)) : QSeries();
                if (!(c_mat(c, a) == expect)) {
                    ok = false;
                    w = "component T_" + std::to_string(c) + " differs from -d^2 phi_h";
                }
            }
        } else if (da == 2) {
            for (int c = 0; c < n && ok; ++c) {
                if (m.deg[c] != 4) continue;
                QSeries expect = -g1(c, a);
                if (!(c_mat(c, a) == expect)) {
                    ok = false;
                    w = "component T_" + std::to_string(c) + " differs from the divisor-case formula";
                }
            }
        } else {  // da == 0
            for (int c = 0; c < n && ok; ++c) {
                if (m.deg[c] != 2) continue;
                if (!c_mat(c, a).is_zero()) {
                    ok = false;
                    w = "unit column has a degree-2 component";
                }
            }
        }
        cert.add(label, ok, w);
    }
    return cert;
}

Certificate pvhs_certificate(const FrobeniusModule& m, const QuantumPotential& phi) {
    Certificate cert;
    int n = m.rank();
    int r = m.r();
    int order = phi.D;

    try {
        FrameExpansion fl = flat_frame(m, phi);
        LogPolyMat s = fl.frame_matrix();
        LogPolyMat q_lp = to_logpoly(to_series(q_form(m), r, order));
        cert.add("(a) flat pairing", s.transpose() * q_lp * s == q_lp,
                 "Q of flat sections is not the constant polarization matrix");
    } catch (const std::exception& e) {
        cert.add("(a) flat pairing", false, std::string("flat frame unavailable: ") + e.what());
    }

    {
        bool ok = true;
        std::string w;
        for (int p = 0; p < r && ok; ++p) {
            SeriesMat a = product_operator(m, phi, m.framing[p]);
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j)
                    if (!a(i, j).is_zero() && m.deg[i] != m.deg[j] + 2) {
                        ok = false;
                        w = "nabla_" + std::to_string(m.framing[p]) + " breaks the Hodge flag at (" +
                            std::to_string(i) + "," + std::to_string(j) + ")";
                    }
        }
        cert.add("(b) transversality", ok, w);
    }

    try {
        std::vector<SeriesMat> deltas;
        for (int p = 0; p < r; ++p) deltas.push_back(quantum_correction(m, phi, m.framing[p]));
        SeriesMat ytilde = series_identity(n, r, order);
        Scalar tau = Scalar::tau();
        for (int t = 1; t <= order; ++t) {
            SeriesMat rhs(n, n);
            for (int p = 0; p < r; ++p) rhs = rhs - deltas[p] * ytilde;
            Scalar inv = (tau * Scalar(t)).inverse();
            for (const ExponentTuple& e : exponents_of_degree(r, t))
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        Scalar c = rhs(i, j).at(e);
                        if (!c.is_zero()) ytilde(i, j).set(e, c * inv);
                    }
        }
        bool consistent = true;
        for (int p = 0; p < r && consistent; ++p)
            consistent = dz_derive_mat(ytilde, p + 1) == -(deltas[p] * ytilde);
        if (!consistent) {
            cert.add("(c) real structure", false, "auxiliary connection is not flat");
        } else {
            LogPolyMat real_frame = nilpotent_twist(m, order, -1) * to_logpoly(ytilde);
            LogPolyMat conj = real_frame.map([](const LogPolySeries& f) { return f.conj(); });
            cert.add("(c) real structure", real_frame == conj,
                     "generating frame is not stable under tau -> -tau");
        }
    } catch (const std::exception& e) {
        cert.add("(c) real structure", false, std::string("real frame unavailable: ") + e.what());
    }

    try {
        GammaTower tower = reconstruct_gamma(m, gamma1_from_potential(m, phi), order);
        SeriesMat gamma_total(n, n);
        for (const auto& g : tower.gamma) gamma_total = gamma_total + g;
        SeriesMat expected = exp_finite(-gamma_total, series_identity(n, r, order));
        FrameExpansion cf = canonical_frame(m, phi);
        cert.add("(d) canonical frame = exp(-Gamma)", cf.y == expected,
                 "canonical frame differs from the gauge exponential");
    } catch (const std::exception& e) {
        cert.add("(d) canonical frame = exp(-Gamma)", false, e.what());
    }
    return cert;
}

}  // namespace qhodge
