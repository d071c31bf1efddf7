#include "qhodge/frobenius.hpp"

#include <algorithm>

namespace qhodge {

int FrobeniusModule::delta(int a) const {
    for (int x = 0; x < rank(); ++x)
        if (!B(x, a).is_zero()) return x;
    throw FrobeniusError("degenerate pairing: no dual index for " + std::to_string(a));
}

int FrobeniusModule::first_index_of_degree(int degree) const {
    for (int a = 0; a < rank(); ++a)
        if (deg[a] == degree) return a;
    return -1;
}

ScalarMat FrobeniusModule::mult_by(const ScalarVec& coeff) const {
    if (coeff.size() != framing.size()) throw FrobeniusError("framing coefficient count mismatch");
    ScalarMat acc(rank(), rank());
    for (size_t p = 0; p < coeff.size(); ++p) acc = acc + L[p].scaled(coeff[p]);
    return acc;
}

void CubicPotential::add(int i, int j, int l, const Scalar& c) {
    if (c.is_zero()) return;
    std::array<int, 3> key{i, j, l};
    std::sort(key.begin(), key.end());
    auto it = coeff.find(key);
    if (it == coeff.end()) {
        coeff.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeff.erase(it);
}

namespace {

// number of ordered assignments of the requested derivative indices to the
// slots of a degree-3 monomial given as a sorted triple
long match_count(const std::array<int, 3>& mono, const std::array<int, 3>& want) {
    std::array<int, 3> w(want);
    std::sort(w.begin(), w.end());
    if (w != mono) return 0;
    long n = 1;
    // product of multiplicities' factorials
    int i = 0;
    while (i < 3) {
        int j = i;
        while (j < 3 && mono[j] == mono[i]) ++j;
        int mult = j - i;
        for (int f = 2; f <= mult; ++f) n *= f;
        i = j;
    }
    return n;
}

}  // namespace

Scalar CubicPotential::third_partial(int a, int b, int c) const {
    Scalar acc;
    for (const auto& [mono, v] : coeff) {
        long n = match_count(mono, {a, b, c});
        if (n) acc += v * Scalar(n);
    }
    return acc;
}

std::map<int, Scalar> CubicPotential::second_partial(int a, int b) const {
    std::map<int, Scalar> out;
    for (const auto& [mono, v] : coeff) {
        // count ordered picks of slots for (a, b); leftover slot gives z_x
        for (int s0 = 0; s0 < 3; ++s0) {
            if (mono[s0] != a) continue;
            for (int s1 = 0; s1 < 3; ++s1) {
                if (s1 == s0 || mono[s1] != b) continue;
                int x = mono[3 - s0 - s1];
                auto it = out.find(x);
                if (it == out.end())
                    out.emplace(x, v);
                else
                    it->second += v;
            }
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

ValidationReport validate_module(const FrobeniusModule& m) {
    ValidationReport rep;
    int n = m.rank();

    bool shapes = static_cast<int>(m.dims.size()) == m.k + 1 && m.B.rows() == n && m.B.cols() == n;
    int total = 0;
    for (int d : m.dims) total += d;
    shapes = shapes && total == n;
    for (int a = 0; a + 1 < n && shapes; ++a) shapes = shapes && m.deg[a] <= m.deg[a + 1];
    if (shapes) {
        std::vector<int> count(m.k + 1, 0);
        for (int a = 0; a < n; ++a) {
            if (m.deg[a] < 0 || m.deg[a] % 2 != 0 || m.deg[a] > 2 * m.k) {
                shapes = false;
                break;
            }
            count[m.deg[a] / 2] += 1;
        }
        for (int p = 0; p <= m.k && shapes; ++p) shapes = shapes && count[p] == m.dims[p];
    }
    shapes = shapes && static_cast<int>(m.L.size()) == m.r();
    for (const auto& l : m.L) shapes = shapes && l.rows() == n && l.cols() == n;
    rep.add("shape", shapes, "dims/deg/B/L are not shape-consistent");
    if (!shapes) throw FrobeniusError("ShapeMismatch");

    rep.add("weight >= 3", m.k >= 3,
            "weight " + std::to_string(m.k) + ": no deformations are possible below weight 3");
    rep.add("dim V_0 = 1 with T_0 = e", m.dims[0] == 1 && m.deg[0] == 0, "dim V_0 != 1");

    // framing covers the whole degree-2 block, in some order
    {
        std::vector<int> want, have(m.framing);
        for (int a = 0; a < n; ++a)
            if (m.deg[a] == 2) want.push_back(a);
        std::sort(have.begin(), have.end());
        rep.add("framing is a basis of V_2", have == want, "framing does not enumerate the degree-2 basis");
    }

    // adapted basis: B is a symmetric 0/1 permutation pairing V_{2p} with V_{2(k-p)}
    {
        bool ok = true;
        std::string w;
        for (int a = 0; a < n && ok; ++a) {
            int ones = 0;
            for (int b = 0; b < n && ok; ++b) {
                const Scalar& v = m.B(a, b);
                if (!(v == m.B(b, a))) {
                    ok = false;
                    w = "B not symmetric at (" + std::to_string(a) + "," + std::to_string(b) + ")";
                }
                if (v.is_zero()) continue;
                if (m.deg[a] + m.deg[b] != 2 * m.k) {
                    ok = false;
                    w = "B pairs wrong degrees at (" + std::to_string(a) + "," + std::to_string(b) + ")";
                } else if (!(v == Scalar(1))) {
                    ok = false;
                    w = "self-duality failure: B(T_" + std::to_string(a) + ",T_" + std::to_string(b) +
                        ") = " + v.str();
                } else {
                    ++ones;
                }
            }
            if (ok && ones != 1) {
                ok = false;
                w = "row " + std::to_string(a) + " of B has " + std::to_string(ones) + " unit entries";
            }
        }
        rep.add("B self-dual adapted basis", ok, w);
        if (!ok) return rep;  // delta() below needs a sane B
    }

    // products raise degree by exactly 2 and satisfy T_j * e = T_j
    for (int p = 0; p < m.r(); ++p) {
        bool ok = true;
        std::string w;
        for (int a = 0; a < n && ok; ++a)
            for (int i = 0; i < n && ok; ++i) {
                if (m.L[p](i, a).is_zero()) continue;
                if (m.deg[i] != m.deg[a] + 2) {
                    ok = false;
                    w = "T_" + std::to_string(m.framing[p]) + " * T_" + std::to_string(a) +
                        " has a component of wrong degree (T_" + std::to_string(i) + ")";
                }
            }
        rep.add("product degree +2 (j=" + std::to_string(m.framing[p]) + ")", ok, w);
        bool unit = true;
        for (int i = 0; i < n; ++i)
            unit = unit && (m.L[p](i, 0) == (i == m.framing[p] ? Scalar(1) : Scalar()));
        rep.add("T_j * e = T_j (j=" + std::to_string(m.framing[p]) + ")", unit,
                "axiom (4) fails for T_" + std::to_string(m.framing[p]));
    }

    // Frobenius condition: L^T B = B L
    for (int p = 0; p < m.r(); ++p) {
        ScalarMat lhs = m.L[p].transpose() * m.B;
        ScalarMat rhs = m.B * m.L[p];
        bool ok = true;
        std::string w;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                if (!(lhs(a, b) == rhs(a, b))) {
                    ok = false;
                    w = "witness (w,v1,v2) = (T_" + std::to_string(m.framing[p]) + ",T_" + std::to_string(a) +
                        ",T_" + std::to_string(b) + "): B(w*v1,v2) = " + lhs(a, b).str() +
                        " != B(v1,w*v2) = " + rhs(a, b).str();
                }
        rep.add("Frobenius condition (j=" + std::to_string(m.framing[p]) + ")", ok, w);
    }

    // Sym V_2: commuting action
    {
        bool ok = true;
        std::string w;
        for (int p = 0; p < m.r() && ok; ++p)
            for (int q = p + 1; q < m.r() && ok; ++q)
                if (!(m.L[p] * m.L[q] == m.L[q] * m.L[p])) {
                    ok = false;
                    w = "L_{T_" + std::to_string(m.framing[p]) + "} and L_{T_" + std::to_string(m.framing[q]) +
                        "} do not commute";
                }
        rep.add("commuting V_2 action", ok, w);
    }

    if (m.real) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b) ok = ok && m.B(a, b).is_tau_free();
        for (const auto& l : m.L)
            for (int a = 0; a < n && ok; ++a)
                for (int b = 0; b < n && ok; ++b) ok = ok && l(a, b).is_tau_free();
        rep.add("real structure (tau-free data)", ok, "module flagged real but data involves tau");
    }
    return rep;
}

namespace {

Scalar weight_constant(int k, int deg_a) {
    if (k == 3 && deg_a == 2) return Scalar(Rational(1, 6));
    if (k != 3 && (deg_a == 2 || deg_a == 2 * k - 4)) return Scalar(Rational(1, 4));
    return Scalar(Rational(1, 2));
}

}  // namespace

CubicPotential classical_potential(const FrobeniusModule& m) {
    CubicPotential phi;
    int n = m.rank();
    for (int p = 0; p < m.r(); ++p) {
        int j = m.framing[p];
        for (int a = 0; a < n; ++a) {
            Scalar c = weight_constant(m.k, m.deg[a]);
            for (int b = 0; b < n; ++b) {
                // B(T_j * T_a, T_b)
                Scalar v;
                for (int x = 0; x < n; ++x) {
                    if (m.L[p](x, a).is_zero()) continue;
                    v += m.L[p](x, a) * m.B(x, b);
                }
                phi.add(j, a, b, c * v);
            }
        }
    }
    return phi;
}

std::vector<ScalarMat> structure_constants_from_cubic(const FrobeniusModule& skeleton, const CubicPotential& phi0) {
    int n = skeleton.rank();
    for (const auto& [mono, v] : phi0.coeff) {
        int total = skeleton.deg[mono[0]] + skeleton.deg[mono[1]] + skeleton.deg[mono[2]];
        bool has_divisor = skeleton.deg[mono[0]] == 2 || skeleton.deg[mono[1]] == 2 || skeleton.deg[mono[2]] == 2;
        if (total != 2 * skeleton.k || !has_divisor)
            throw FrobeniusError("GradingViolation: monomial z_" + std::to_string(mono[0]) + " z_" +
                                 std::to_string(mono[1]) + " z_" + std::to_string(mono[2]) +
                                 " connects wrong degrees");
    }
    std::vector<ScalarMat> out;
    for (int p = 0; p < skeleton.r(); ++p) {
        int j = skeleton.framing[p];
        ScalarMat l(n, n);
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c) {
                if (skeleton.deg[c] != skeleton.deg[a] + 2) continue;
                l(c, a) = phi0.third_partial(j, a, skeleton.delta(c));
            }
        out.push_back(l);
    }
    return out;
}

ScalarMat q_form(const FrobeniusModule& m) {
    int n = m.rank();
    ScalarMat q(n, n);
    for (int a = 0; a < n; ++a) {
        Scalar sign((m.k + m.deg[a] / 2) % 2 == 0 ? 1 : -1);
        for (int b = 0; b < n; ++b) q(a, b) = sign * m.B(a, b);
    }
    return q;
}

}  // namespace qhodge
