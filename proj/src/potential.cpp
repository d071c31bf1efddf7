#include "qhodge/potential.hpp"

namespace qhodge {

const QSeries* QuantumPotential::pair(int a, int b) const {
    auto it = phi_ab.find({a, b});
    if (it != phi_ab.end()) return &it->second;
    it = phi_ab.find({b, a});
    return it != phi_ab.end() ? &it->second : nullptr;
}

QuantumPotential make_potential(const FrobeniusModule& m, int order) {
    QuantumPotential phi;
    phi.D = order;
    phi.phi0 = classical_potential(m);
    return phi;
}

int divisor_position(const FrobeniusModule& m, int j) {
    for (int p = 0; p < m.r(); ++p)
        if (m.framing[p] == j) return p + 1;
    return -1;
}

namespace {

bool series_shape_ok(const QSeries& f, const FrobeniusModule& m, int order) {
    return f.is_universal_zero() || (f.r() == m.r() && f.order() == order);
}

}  // namespace

ValidationReport validate_potential(const FrobeniusModule& m, const QuantumPotential& phi) {
    ValidationReport rep;
    rep.add("truncation order >= 1", phi.D >= 1, "order " + std::to_string(phi.D));
    rep.add("classical part matches the module", phi.phi0 == classical_potential(m),
            "phi0 differs from the cubic determined by the structure constants");

    {
        bool range_ok = true, shape_ok = true, vanish_ok = true;
        std::string w;
        for (const auto& [a, f] : phi.phi_a) {
            if (m.k <= 3 || a < 0 || a >= m.rank() || m.deg[a] != 2 * m.k - 4) {
                range_ok = false;
                w = "ShapeMismatch at index " + std::to_string(a);
            }
            if (!series_shape_ok(f, m, phi.D)) {
                shape_ok = false;
                w = "series shape at index " + std::to_string(a);
            }
            if (!f.vanishes_at_origin()) {
                vanish_ok = false;
                w = "phi^" + std::to_string(a) + " does not vanish at q = 0";
            }
        }
        rep.add("phi^a index range", range_ok, w);
        rep.add("phi^a series shape", shape_ok, w);
        rep.add("phi^a vanishing at q = 0", vanish_ok, w);
    }

    {
        bool range_ok = true, shape_ok = true, vanish_ok = true, sym_ok = true;
        std::string w;
        for (const auto& [key, f] : phi.phi_ab) {
            auto [a, b] = key;
            bool in_range = a >= 0 && a < m.rank() && b >= 0 && b < m.rank() && m.deg[a] > 2 &&
                            m.deg[a] < 2 * m.k - 4 && m.deg[a] + m.deg[b] == 2 * m.k - 2;
            if (!in_range) {
                range_ok = false;
                w = "ShapeMismatch at pair (" + std::to_string(a) + "," + std::to_string(b) + ")";
            }
            if (!series_shape_ok(f, m, phi.D)) {
                shape_ok = false;
                w = "series shape at pair (" + std::to_string(a) + "," + std::to_string(b) + ")";
            }
            if (!f.vanishes_at_origin()) {
                vanish_ok = false;
                w = "phi^{" + std::to_string(a) + "," + std::to_string(b) + "} does not vanish at q = 0";
            }
            if (a != b) {
                auto other = phi.phi_ab.find({b, a});
                if (other != phi.phi_ab.end() && !(other->second == f)) {
                    sym_ok = false;
                    w = "phi^{" + std::to_string(a) + "," + std::to_string(b) + "} != phi^{" + std::to_string(b) +
                        "," + std::to_string(a) + "}";
                }
            }
        }
        rep.add("phi^{ab} index range", range_ok, w);
        rep.add("phi^{ab} series shape", shape_ok, w);
        rep.add("phi^{ab} vanishing at q = 0", vanish_ok, w);
        rep.add("phi^{ab} symmetry", sym_ok, w);
    }

    if (m.k == 3) {
        rep.add("weight-3 form", phi.phi_a.empty() && phi.phi_ab.empty(), "k = 3 admits only the single series");
        rep.add("weight-3 series shape", series_shape_ok(phi.weight3, m, phi.D), "series shape");
        rep.add("weight-3 vanishing at q = 0", phi.weight3.vanishes_at_origin(), "constant term nonzero");
    } else {
        rep.add("weight-3 series unused", phi.weight3.is_zero() || phi.weight3.is_universal_zero(),
                "weight-3 series set although k != 3");
    }
    return rep;
}

std::vector<QSeries> quantum_product(const FrobeniusModule& m, const QuantumPotential& phi, int j, int a) {
    int pj = divisor_position(m, j);
    if (pj < 0) throw PotentialError("NotDivisorIndex: " + std::to_string(j));
    int n = m.rank();
    int lp = pj - 1;  // framing position of j

    std::vector<QSeries> out(n);
    for (int c = 0; c < n; ++c) out[c] = QSeries::constant(m.r(), phi.D, m.L[lp](c, a));

    int da = m.deg[a];
    if (m.k == 3) {
        if (da == 2 && !phi.weight3.is_universal_zero()) {
            int pa = divisor_position(m, a);
            for (int c = 0; c < n; ++c) {
                if (m.deg[c] != 4) continue;
                int pd = divisor_position(m, m.delta(c));
                out[c] += phi.weight3.dz_derive(pj).dz_derive(pa).dz_derive(pd);
            }
        }
        return out;
    }

    if (da == 2) {
        int pa = divisor_position(m, a);
        for (int c = 0; c < n; ++c) {
            if (m.deg[c] != 4) continue;
            auto it = phi.phi_a.find(m.delta(c));
            if (it == phi.phi_a.end()) continue;
            out[c] += it->second.dz_derive(pj).dz_derive(pa);
        }
    } else if (da > 2 && da < 2 * m.k - 4) {
        for (int c = 0; c < n; ++c) {
            if (m.deg[c] != da + 2) continue;
            const QSeries* f = phi.pair(a, m.delta(c));
            if (!f) continue;
            out[c] += f->dz_derive(pj) * Scalar(2);
        }
    } else if (da == 2 * m.k - 4) {
        auto it = phi.phi_a.find(a);
        if (it != phi.phi_a.end()) {
            for (int c = 0; c < n; ++c) {
                if (m.deg[c] != 2 * m.k - 2) continue;
                int pd = divisor_position(m, m.delta(c));
                out[c] += it->second.dz_derive(pj).dz_derive(pd);
            }
        }
    }
    return out;
}

SeriesMat product_operator(const FrobeniusModule& m, const QuantumPotential& phi, int j) {
    int n = m.rank();
    SeriesMat op(n, n);
    for (int a = 0; a < n; ++a) {
        std::vector<QSeries> col = quantum_product(m, phi, j, a);
        for (int c = 0; c < n; ++c) op(c, a) = col[c];
    }
    return op;
}

SeriesMat quantum_correction(const FrobeniusModule& m, const QuantumPotential& phi, int j) {
    int pj = divisor_position(m, j);
    if (pj < 0) throw PotentialError("NotDivisorIndex: " + std::to_string(j));
    return product_operator(m, phi, j) - to_series(m.L[pj - 1], m.r(), phi.D);
}

CommutationVerdict wdvv_check(const FrobeniusModule& m, const QuantumPotential& phi) {
    CommutationVerdict verdict;
    int n = m.rank();
    std::vector<SeriesMat> ops;
    for (int p = 0; p < m.r(); ++p) ops.push_back(product_operator(m, phi, m.framing[p]));
    for (int p = 0; p < m.r(); ++p)
        for (int q = p + 1; q < m.r(); ++q) {
            SeriesMat comm = ops[p] * ops[q] - ops[q] * ops[p];
            for (int a = 0; a < n; ++a)
                for (int d = 0; d < n; ++d) {
                    if (comm(d, a).is_zero()) continue;
                    if (m.deg[d] != m.deg[a] + 4)
                        throw PotentialError("deformed product does not raise degree by 2");
                    verdict.violations.push_back({m.framing[p], m.framing[q], a, d});
                }
        }
    return verdict;
}

}  // namespace qhodge
