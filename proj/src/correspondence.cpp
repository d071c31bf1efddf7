#include "qhodge/correspondence.hpp"

namespace qhodge {

namespace {

std::string quad_str(const std::array<int, 4>& q) {
    return "(" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," +
           std::to_string(q[3]) + ")";
}

// truncation order carried by a series matrix; fallback when all entries are
// universal zeros
int order_of(const SeriesMat& m, int fallback) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_universal_zero()) return m(i, j).order();
    return fallback;
}

SeriesMat dz_derive_mat(const SeriesMat& m, int p) {
    return m.map([p](const QSeries& f) { return f.dz_derive(p); });
}

}  // namespace

SeriesMat gamma1_from_potential(const FrobeniusModule& m, const QuantumPotential& phi) {
    ValidationReport rep = validate_potential(m, phi);
    if (!rep.passed()) throw PotentialError("invalid potential: " + rep.first_failure()->name);
    int n = m.rank();
    SeriesMat g(n, n);
    for (int a = 0; a < n; ++a) {
        int da = m.deg[a];
        for (int c = 0; c < n; ++c) {
            if (m.deg[c] != da + 2) continue;
            int d = m.delta(c);
            if (m.k == 3) {
                if (da == 2 && !phi.weight3.is_universal_zero())
                    g(c, a) = phi.weight3.dz_derive(divisor_position(m, a)).dz_derive(divisor_position(m, d));
            } else if (da == 2) {
                auto it = phi.phi_a.find(d);
                if (it != phi.phi_a.end()) g(c, a) = it->second.dz_derive(divisor_position(m, a));
            } else if (da > 2 && da < 2 * m.k - 4) {
                const QSeries* f = phi.pair(a, d);
                if (f) g(c, a) = *f * Scalar(2);
            } else if (da == 2 * m.k - 4) {
                auto it = phi.phi_a.find(a);
                if (it != phi.phi_a.end()) g(c, a) = it->second.dz_derive(divisor_position(m, d));
            }
        }
    }
    return g;
}

CommutationVerdict integrability_check(const FrobeniusModule& m, const SeriesMat& gamma1) {
    CommutationVerdict verdict;
    int n = m.rank();
    int order = order_of(gamma1, 1);
    std::vector<SeriesMat> ops;
    for (int p = 0; p < m.r(); ++p) ops.push_back(to_series(m.L[p], m.r(), order) + dz_derive_mat(gamma1, p + 1));
    for (int p = 0; p < m.r(); ++p)
        for (int q = p + 1; q < m.r(); ++q) {
            SeriesMat comm = ops[p] * ops[q] - ops[q] * ops[p];
            for (int a = 0; a < n; ++a)
                for (int d = 0; d < n; ++d)
                    if (!comm(d, a).is_zero()) verdict.violations.push_back({m.framing[p], m.framing[q], a, d});
        }
    return verdict;
}

GammaTower reconstruct_gamma(const FrobeniusModule& m, const SeriesMat& gamma1, int order) {
    CommutationVerdict iv = integrability_check(m, gamma1);
    if (!iv.passed()) throw CorrespondenceError("NotIntegrable at (j,l,a,d) = " + quad_str(iv.violations.front()));
    int n = m.rank();
    int r = m.r();

    std::vector<SeriesMat> dgamma1;
    for (int p = 0; p < r; ++p) dgamma1.push_back(dz_derive_mat(gamma1, p + 1));

    std::vector<SeriesMat> g_tower;  // G_{-1}, G_{-2}, ...
    g_tower.push_back(gamma1);
    for (int l = 2; l <= m.k; ++l) {
        const SeriesMat& prev = g_tower.back();
        std::vector<LogPolyMat> omega;
        for (int p = 0; p < r; ++p) {
            SeriesMat np = to_series(m.L[p], r, order);
            omega.push_back(to_logpoly(prev * np - np * prev + prev * dgamma1[p]));
        }
        LogPolyMat prim;
        try {
            prim = integrate_closed_one_form(omega);
        } catch (const NotClosedError& e) {
            throw CorrespondenceError(std::string("NotIntegrable at level ") + std::to_string(l) + ": " + e.what());
        } catch (const InconsistentPrimitiveError& e) {
            throw CorrespondenceError(std::string("NotIntegrable at level ") + std::to_string(l) + ": " + e.what());
        }
        SeriesMat g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (!prim(i, j).is_pure_q())
                    throw CorrespondenceError("LogPartNonzero at level " + std::to_string(l) + ", entry (" +
                                              std::to_string(i) + "," + std::to_string(j) + ")");
                g(i, j) = prim(i, j).q_part();
            }
        g_tower.push_back(g);
    }

    // Gamma = log(Id + sum G_{-l}), split into graded pieces
    SeriesMat x(n, n);
    for (const auto& g : g_tower) x = x + g;
    SeriesMat logx(n, n);
    SeriesMat power = x;
    int sign = 1;
    for (int i = 1; i <= m.k; ++i) {
        logx = logx + power.scaled(Scalar(Rational(sign, i)));
        power = power * x;
        sign = -sign;
    }

    GammaTower tower;
    tower.k = m.k;
    tower.D = order;
    for (int l = 1; l <= m.k; ++l) tower.gamma.emplace_back(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (logx(i, j).is_zero()) continue;
            int shift = m.deg[i] - m.deg[j];
            if (shift < 2 || shift % 2 != 0)
                throw CorrespondenceError("gauge logarithm has an ungraded entry at (" + std::to_string(i) + "," +
                                          std::to_string(j) + ")");
            tower.gamma[shift / 2 - 1](i, j) = logx(i, j);
        }

    ScalarMat q = q_form(m);
    SeriesMat qs = to_series(q, r, order);
    for (int l = 1; l <= m.k; ++l) {
        const SeriesMat& g = tower.at(l);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!g(i, j).at_zero().is_zero())
                    throw CorrespondenceError("Gamma_{-" + std::to_string(l) + "} does not vanish at q = 0");
        if (!(g.transpose() * qs + qs * g).is_zero())
            throw CorrespondenceError("Gamma_{-" + std::to_string(l) + "} does not preserve the polarization form");
    }
    return tower;
}

bool canonical_check(const FrobeniusModule& m, const GammaTower& tower) {
    for (const auto& g : tower.gamma)
        for (int a = 0; a < m.rank(); ++a) {
            if (m.deg[a] != 2 * m.k - 2) continue;
            for (int c = 0; c < m.rank(); ++c)
                if (!g(c, a).is_zero()) return false;
        }
    return true;
}

QuantumPotential potential_from_gamma(const FrobeniusModule& m, const GammaTower& tower) {
    if (!canonical_check(m, tower)) throw CorrespondenceError("NotCanonical: Gamma does not annihilate V_{2k-2}");
    QuantumPotential phi = make_potential(m, tower.D);
    int top = m.delta(0);  // index pairing with the unit

    if (m.k == 3) {
        std::vector<LogPolySeries> omega;
        for (int p = 0; p < m.r(); ++p) omega.push_back(LogPolySeries(-tower.at(2)(top, m.framing[p])));
        LogPolySeries f;
        try {
            f = integrate_closed_one_form(omega);
        } catch (const NotClosedError& e) {
            throw CorrespondenceError(std::string("IntegrationInconsistent: ") + e.what());
        } catch (const InconsistentPrimitiveError& e) {
            throw CorrespondenceError(std::string("IntegrationInconsistent: ") + e.what());
        }
        if (!f.is_pure_q()) throw CorrespondenceError("IntegrationInconsistent: primitive has a log part");
        phi.weight3 = f.q_part();
    } else {
        for (int a = 0; a < m.rank(); ++a) {
            if (m.deg[a] != 2 * m.k - 4) continue;
            QSeries s = -tower.at(2)(top, a);
            if (!s.is_zero()) phi.phi_a.emplace(a, s);
        }
        for (int a = 0; a < m.rank(); ++a) {
            if (m.deg[a] <= 2 || m.deg[a] >= 2 * m.k - 4) continue;
            for (int b = a; b < m.rank(); ++b) {
                if (m.deg[a] + m.deg[b] != 2 * m.k - 2) continue;
                QSeries s = tower.at(1)(m.delta(b), a) * Scalar(Rational(1, 2));
                if (!s.is_zero()) phi.phi_ab.emplace(std::make_pair(a, b), s);
            }
        }
    }

    if (!wdvv_check(m, phi).passed()) throw CorrespondenceError("extracted potential violates the graded WDVV equations");
    return phi;
}

namespace {

bool series_maps_equal(const std::map<int, QSeries>& a, const std::map<int, QSeries>& b) {
    for (const auto& [k, f] : a) {
        auto it = b.find(k);
        if (it == b.end() ? !f.is_zero() : !(f == it->second)) return false;
    }
    for (const auto& [k, f] : b)
        if (!a.count(k) && !f.is_zero()) return false;
    return true;
}

const QSeries* pair_lookup(const QuantumPotential& p, int a, int b) { return p.pair(a, b); }

}  // namespace

bool potentials_equal(const QuantumPotential& a, const QuantumPotential& b) {
    if (!(a.phi0 == b.phi0)) return false;
    if (!(a.weight3 == b.weight3)) return false;
    if (!series_maps_equal(a.phi_a, b.phi_a)) return false;
    auto covered = [](const QuantumPotential& x, const QuantumPotential& y) {
        for (const auto& [key, f] : x.phi_ab) {
            const QSeries* g = pair_lookup(y, key.first, key.second);
            if (g == nullptr ? !f.is_zero() : !(f == *g)) return false;
        }
        return true;
    };
    return covered(a, b) && covered(b, a);
}

bool round_trip(const FrobeniusModule& m, const QuantumPotential& phi) {
    SeriesMat g1 = gamma1_from_potential(m, phi);
    GammaTower tower = reconstruct_gamma(m, g1, phi.D);
    QuantumPotential back = potential_from_gamma(m, tower);
    if (!potentials_equal(back, phi)) return false;
    return gamma1_from_potential(m, back) == g1;
}

}  // namespace qhodge
