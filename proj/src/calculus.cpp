#include "qhodge/calculus.hpp"

namespace qhodge {

namespace {

using ZPoly = std::map<ExponentTuple, Scalar>;  // z-exponent -> coefficient

void zpoly_add(ZPoly& p, const ExponentTuple& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = p.find(e);
    if (it == p.end()) {
        p.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
}

ZPoly zpoly_dz(const ZPoly& p, int j) {
    ZPoly d;
    for (const auto& [e, c] : p) {
        if (e[j - 1] == 0) continue;
        ExponentTuple f(e);
        f[j - 1] -= 1;
        zpoly_add(d, f, c * Scalar(e[j - 1]));
    }
    return d;
}

std::string diff_witness(const LogPolySeries& a, const LogPolySeries& b) {
    LogPolySeries d = a - b;
    for (const auto& [zexp, g] : d.terms())
        for (const auto& [m, c] : g.coeffs())
            return "q^(" + exponents_str(m) + ") z^(" + exponents_str(zexp) + ")";
    return "?";
}

}  // namespace

LogPolySeries integrate_closed_one_form(const std::vector<LogPolySeries>& omega) {
    int r = static_cast<int>(omega.size());
    if (r == 0) throw SeriesError("integrate_closed_one_form: empty form");
    int D = -1;
    for (const auto& w : omega)
        if (!w.is_universal_zero()) {
            if (w.r() != r) throw SeriesError("integrate_closed_one_form: component count != r");
            D = w.order();
        }
    if (D < 0) return LogPolySeries();  // zero form

    // closedness: D_l omega_j = D_j omega_l
    for (int j = 1; j <= r; ++j)
        for (int l = j + 1; l <= r; ++l) {
            LogPolySeries a = omega[j - 1].dz_derive(l);
            LogPolySeries b = omega[l - 1].dz_derive(j);
            if (!(a == b)) throw NotClosedError(j, l, diff_witness(a, b));
        }

    // regroup by q-monomial: per monomial, a z-polynomial for each component
    std::map<ExponentTuple, std::vector<ZPoly>> buckets;
    for (int j = 0; j < r; ++j) {
        if (omega[j].is_universal_zero()) continue;
        for (const auto& [zexp, g] : omega[j].terms())
            for (const auto& [m, c] : g.coeffs()) {
                auto& b = buckets[m];
                if (b.empty()) b.resize(r);
                zpoly_add(b[j], zexp, c);
            }
    }

    Scalar tau = Scalar::tau();
    LogPolySeries result(r, D);
    std::map<ExponentTuple, ZPoly> primitive;  // q-monomial -> z-poly

    for (const auto& [m, comps] : buckets) {
        ZPoly f;
        if (total_degree(m) == 0) {
            // polynomial potential via the radial path formula
            for (int j = 0; j < r; ++j)
                for (const auto& [e, c] : comps[j]) {
                    ExponentTuple e2(e);
                    e2[j] += 1;
                    zpoly_add(f, e2, c / Scalar(total_degree(e) + 1));
                }
            for (int j = 1; j <= r; ++j)
                if (zpoly_dz(f, j) != comps[j - 1]) throw InconsistentPrimitiveError("q^(" + exponents_str(m) + ")");
        } else {
            int js = 0;
            while (m[js] == 0) ++js;
            // invert tau*m_js + d/dz_js on z-polynomials (finite Neumann series)
            Scalar base = (tau * Scalar(m[js])).inverse();
            ZPoly deriv = comps[js];
            Scalar factor = base;
            int sign = 1;
            while (!deriv.empty()) {
                for (const auto& [e, c] : deriv) zpoly_add(f, e, c * factor * Scalar(sign));
                deriv = zpoly_dz(deriv, js + 1);
                factor *= base;
                sign = -sign;
            }
            for (int j = 1; j <= r; ++j) {
                if (j == js + 1) continue;
                ZPoly lhs = zpoly_dz(f, j);
                for (const auto& [e, c] : f) zpoly_add(lhs, e, c * tau * Scalar(m[j - 1]));
                if (lhs != comps[j - 1]) throw InconsistentPrimitiveError("q^(" + exponents_str(m) + ")");
            }
        }
        if (!f.empty()) primitive[m] = f;
    }

    // repackage as z-exponent -> q-series
    std::map<ExponentTuple, QSeries> by_z;
    for (const auto& [m, f] : primitive)
        for (const auto& [e, c] : f) {
            auto it = by_z.find(e);
            if (it == by_z.end()) it = by_z.emplace(e, QSeries(r, D)).first;
            it->second.set(m, it->second.at(m) + c);
        }
    for (const auto& [e, g] : by_z) result.set(e, g);
    return result;
}

LogPolyMat integrate_closed_one_form(const std::vector<LogPolyMat>& omega) {
    if (omega.empty()) throw SeriesError("integrate_closed_one_form: empty form");
    int rows = omega[0].rows(), cols = omega[0].cols();
    LogPolyMat result(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            std::vector<LogPolySeries> comps;
            comps.reserve(omega.size());
            for (const auto& w : omega) comps.push_back(w(i, j));
            result(i, j) = integrate_closed_one_form(comps);
        }
    return result;
}

}  // namespace qhodge
