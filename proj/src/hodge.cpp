#include "qhodge/hodge.hpp"

#include <random>
#include <set>

namespace qhodge {

namespace {

std::string vec_str(const ScalarVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

ScalarVec unit_vector(int n, int i) {
    ScalarVec v(n);
    v[i] = Scalar(1);
    return v;
}

}  // namespace

Subspace Filtration::at(int level) const {
    if (increasing) {
        const Subspace* best = nullptr;
        for (const auto& [l, s] : steps)
            if (l <= level) best = &s;
        return best ? *best : Subspace(ambient);
    }
    for (const auto& [l, s] : steps)
        if (l >= level) return s;
    return Subspace(ambient);
}

Filtration Filtration::shifted(int s) const {
    Filtration f;
    f.increasing = increasing;
    f.ambient = ambient;
    for (const auto& [l, sp] : steps) f.steps.emplace(l + s, sp);
    return f;
}

bool Filtration::operator==(const Filtration& o) const {
    if (increasing != o.increasing || ambient != o.ambient) return false;
    std::set<int> levels;
    for (const auto& [l, s] : steps) levels.insert(l);
    for (const auto& [l, s] : o.steps) levels.insert(l);
    if (levels.empty()) return true;
    levels.insert(*levels.begin() - 1);
    levels.insert(*levels.rbegin() + 1);
    for (int l : levels)
        if (at(l) != o.at(l)) return false;
    return true;
}

std::string Filtration::str() const {
    std::string s;
    for (const auto& [l, sp] : steps) {
        if (!s.empty()) s += ", ";
        s += (increasing ? "W_" : "F^") + std::to_string(l) + " dim " + std::to_string(sp.dim());
    }
    return s;
}

int Bigrading::dim(int p) const {
    auto it = blocks.find(p);
    return it == blocks.end() ? 0 : static_cast<int>(it->second.size());
}

Subspace Bigrading::block_space(int p) const {
    auto it = blocks.find(p);
    if (it == blocks.end()) return Subspace(ambient);
    return Subspace::span_of_vectors(ambient, it->second);
}

Filtration Bigrading::hodge_filtration() const {
    Filtration f;
    f.increasing = false;
    f.ambient = ambient;
    std::vector<ScalarVec> acc;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        for (const auto& v : it->second) acc.push_back(v);
        f.steps.emplace(it->first, Subspace::span_of_vectors(ambient, acc));
    }
    return f;
}

Filtration Bigrading::weight_levels() const {
    Filtration f;
    f.increasing = true;
    f.ambient = ambient;
    std::vector<ScalarVec> acc;
    for (const auto& [p, basis] : blocks) {
        for (const auto& v : basis) acc.push_back(v);
        f.steps.emplace(2 * p, Subspace::span_of_vectors(ambient, acc));
    }
    return f;
}

Certificate Bigrading::validate() const {
    Certificate cert;
    bool tau_free = true;
    int total = 0;
    for (const auto& [p, basis] : blocks) {
        total += static_cast<int>(basis.size());
        for (const auto& v : basis) {
            if (static_cast<int>(v.size()) != ambient) {
                cert.add("block shapes", false, "basis vector of I^{" + std::to_string(p) + "} has wrong length");
                return cert;
            }
            for (const auto& x : v) tau_free = tau_free && x.is_tau_free();
        }
    }
    cert.add("block shapes", true);
    cert.add("real (tau-free) bases", tau_free, "a block basis vector involves tau");
    std::vector<ScalarVec> all;
    for (const auto& [p, basis] : blocks)
        for (const auto& v : basis) all.push_back(v);
    bool direct = static_cast<int>(all.size()) == ambient &&
                  Subspace::span_of_vectors(ambient, all).dim() == ambient;
    cert.add("direct sum decomposition", direct, "blocks do not decompose the ambient space");
    return cert;
}

Filtration weight_filtration(const ScalarMat& n) {
    int index = 0;
    if (!is_nilpotent(n, &index)) throw HodgeError("NotNilpotent");
    int m = index > 0 ? index - 1 : 0;  // smallest m with N^{m+1} = 0
    int dimv = n.rows();

    std::vector<ScalarMat> powers;
    powers.push_back(ScalarMat::identity(dimv));
    for (int i = 1; i <= m + 1; ++i) powers.push_back(powers.back() * n);

    auto ker_of = [&](int i) {
        if (i <= 0) return Subspace(dimv);
        if (i > m) return Subspace::full(dimv);
        return kernel_space(powers[i]);
    };
    std::vector<Subspace> images;  // im N^j, j = 0..m
    for (int j = 0; j <= m; ++j) images.push_back(image(powers[j]));

    Filtration w;
    w.increasing = true;
    w.ambient = dimv;
    for (int l = -m; l <= m; ++l) {
        Subspace s(dimv);
        for (int j = std::max(0, -l); j <= m; ++j) s = s.sum(ker_of(l + j + 1).intersect(images[j]));
        w.steps.emplace(l, s);
    }

    // both characterizing properties, re-checked on the result
    for (int l = -m; l <= m; ++l)
        if (!w.at(l - 2).contains(w.at(l).image_under(n)))
            throw HodgeError("weight filtration postcondition N W_l <= W_{l-2} failed at l = " + std::to_string(l));
    for (int l = 1; l <= m; ++l) {
        int gr_hi = w.at(l).dim() - w.at(l - 1).dim();
        int gr_lo = w.at(-l).dim() - w.at(-l - 1).dim();
        if (gr_hi != gr_lo)
            throw HodgeError("weight filtration postcondition gr_l ~ gr_{-l} failed at l = " + std::to_string(l));
        Subspace mapped = w.at(l);
        for (int i = 0; i < l; ++i) mapped = mapped.image_under(n);
        if (mapped.sum(w.at(-l - 1)) != w.at(-l))
            throw HodgeError("weight filtration postcondition N^l surjectivity failed at l = " + std::to_string(l));
    }
    return w;
}

Certificate check_polarized_mhs(const Bigrading& grading, const ScalarMat& n, const ScalarMat& q, int k,
                                SignCalibration calib) {
    int dimv = grading.ambient;
    if (n.rows() != dimv || n.cols() != dimv || q.rows() != dimv || q.cols() != dimv)
        throw HodgeError("ShapeMismatch");
    Certificate gcert = grading.validate();
    if (!gcert.passed()) throw HodgeError("NotHodgeTate: " + gcert.first_failure()->name);

    Certificate cert;
    bool nilpotent = mat_power(n, k + 1).is_zero();
    cert.add("(1) N^{k+1} = 0", nilpotent, "N^" + std::to_string(k + 1) + " is nonzero");

    if (nilpotent) {
        Filtration w = weight_filtration(n).shifted(k);
        Filtration expect = grading.weight_levels();
        cert.add("(2) W = W(N)[-k]", w == expect, "W(N)[-k]: " + w.str() + " vs grading: " + expect.str());
    } else {
        cert.add("(2) W = W(N)[-k]", false, "skipped: N not nilpotent");
    }

    {
        bool ok = true;
        std::string witness;
        for (const auto& [p, pb] : grading.blocks)
            for (const auto& [pp, ppb] : grading.blocks) {
                if (p + pp <= k) continue;
                for (const auto& u : pb)
                    for (const auto& v : ppb) {
                        Scalar val;
                        for (int i = 0; i < dimv; ++i)
                            for (int j = 0; j < dimv; ++j) val += u[i] * q(i, j) * v[j];
                        if (!val.is_zero() && ok) {
                            ok = false;
                            witness = "Q nonzero between I^{" + std::to_string(p) + "} and I^{" + std::to_string(pp) +
                                      "}: " + val.str();
                        }
                    }
            }
        cert.add("(3) Q(F^a, F^{k-a+1}) = 0", ok, witness);
    }

    for (int l = 0; l <= k; ++l) {
        if ((k + l) % 2 != 0) continue;
        int p = (k + l) / 2;
        if (grading.dim(p) == 0) continue;
        std::string label = "(4) positivity at l = " + std::to_string(l) + ", p = " + std::to_string(p);
        if (!nilpotent) {
            cert.add(label, false, "skipped: N not nilpotent");
            continue;
        }
        Subspace prim = kernel_space(mat_power(n, l + 1)).intersect(grading.block_space(p));
        if (prim.dim() == 0) {
            cert.add(label, true);
            continue;
        }
        Scalar sign(calib == SignCalibration::Geometric && k % 2 != 0 ? -1 : 1);
        ScalarMat nl = mat_power(n, l);
        ScalarMat gram(prim.dim(), prim.dim());
        for (int a = 0; a < prim.dim(); ++a) {
            ScalarVec u = prim.basis_vector(a);
            for (int b = 0; b < prim.dim(); ++b) {
                ScalarVec v = qhodge::apply(nl, prim.basis_vector(b));
                Scalar val;
                for (int i = 0; i < dimv; ++i)
                    for (int j = 0; j < dimv; ++j) val += u[i] * q(i, j) * v[j];
                gram(a, b) = sign * val;
            }
        }
        try {
            Definiteness d = definiteness_check(gram);
            cert.add(label, d == Definiteness::PositiveDefinite,
                     to_string(d) + " on primitive space with basis vector " + vec_str(prim.basis_vector(0)));
        } catch (const MatrixError& e) {
            cert.add(label, false, std::string("form not symmetric real: ") + e.what());
        }
    }
    return cert;
}

Certificate check_max_unipotent(const NilpotentOrbit& orbit) {
    Certificate cert;
    int k = orbit.k;
    cert.add("dim I^{k,k} = 1", orbit.grading.dim(k) == 1,
             "dim I^{" + std::to_string(k) + "," + std::to_string(k) + "} = " + std::to_string(orbit.grading.dim(k)));
    cert.add("dim I^{k-1,k-1} = r", orbit.grading.dim(k - 1) == orbit.r(),
             "dim = " + std::to_string(orbit.grading.dim(k - 1)) + ", r = " + std::to_string(orbit.r()));
    bool e_ok = false;
    for (const auto& x : orbit.e) e_ok = e_ok || !x.is_zero();
    e_ok = e_ok && orbit.grading.block_space(k).contains(orbit.e);
    cert.add("marked generator spans I^{k,k}", e_ok, "e = " + vec_str(orbit.e));
    std::vector<ScalarVec> imgs;
    for (const auto& n : orbit.N) imgs.push_back(qhodge::apply(n, orbit.e));
    bool span_ok = Subspace::span_of_vectors(orbit.rank(), imgs) == orbit.grading.block_space(k - 1);
    cert.add("N_j(e) span I^{k-1,k-1}", span_ok, "span of N_j(e) is a proper subspace");
    return cert;
}

Bigrading degree_bigrading(const FrobeniusModule& m) {
    Bigrading g;
    g.ambient = m.rank();
    for (int a = 0; a < m.rank(); ++a) g.blocks[m.k - m.deg[a] / 2].push_back(unit_vector(m.rank(), a));
    return g;
}

namespace {

ScalarVec sample_positive(std::mt19937_64& rng, int r) {
    ScalarVec lambda(r);
    for (int j = 0; j < r; ++j)
        lambda[j] = Scalar(Rational(1 + static_cast<long>(rng() % 20), 1 + static_cast<long>(rng() % 10)));
    return lambda;
}

std::string lambda_str(const ScalarVec& lambda) { return vec_str(lambda); }

}  // namespace

NilpotentOrbit module_to_orbit(const FrobeniusModule& m, SignCalibration calib, std::uint64_t seed, int samples) {
    ValidationReport rep = validate_module(m);
    if (!rep.passed()) throw FrobeniusError("invalid module: " + rep.first_failure()->name);
    if (!m.real) throw HodgeError("module must be real");

    NilpotentOrbit orbit;
    orbit.k = m.k;
    orbit.N = m.L;
    orbit.grading = degree_bigrading(m);
    orbit.e = unit_vector(m.rank(), 0);
    orbit.Q = q_form(m);

    for (int p = 0; p < m.r(); ++p) {
        if (!mat_power(m.L[p], m.k + 1).is_zero())
            throw HodgeError("N_" + std::to_string(p + 1) + " is not nilpotent of index <= k+1");
        if (!(m.L[p].transpose() * orbit.Q + orbit.Q * m.L[p]).is_zero())
            throw HodgeError("N_" + std::to_string(p + 1) + " is not an infinitesimal automorphism of Q");
    }

    ScalarMat bary(m.rank(), m.rank());
    for (const auto& l : m.L) bary = bary + l;
    Certificate cert = check_polarized_mhs(orbit.grading, bary, orbit.Q, m.k, calib);
    if (!cert.passed()) {
        const Check* f = cert.first_failure();
        throw HodgeError("NotPolarizable: " + f->name + " [" + f->witness + "]");
    }
    Filtration wref = weight_filtration(bary);

    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        ScalarVec lambda = sample_positive(rng, m.r());
        ScalarMat nl = m.mult_by(lambda);
        if (weight_filtration(nl) != wref)
            throw HodgeError("ConeDegenerate: weight filtration varies at lambda = " + lambda_str(lambda));
        Certificate c = check_polarized_mhs(orbit.grading, nl, orbit.Q, m.k, calib);
        if (!c.passed()) {
            const Check* f = c.first_failure();
            throw HodgeError("NotPolarizable at lambda = " + lambda_str(lambda) + ": " + f->name + " [" + f->witness +
                             "]");
        }
    }
    return orbit;
}

FrobeniusModule orbit_to_module(const NilpotentOrbit& orbit) {
    Certificate gcert = orbit.grading.validate();
    if (!gcert.passed()) throw HodgeError("NotHodgeTate: " + gcert.first_failure()->name);
    Certificate mcert = check_max_unipotent(orbit);
    if (!mcert.passed()) {
        const Check* f = mcert.first_failure();
        throw HodgeError("NotMaximallyUnipotent: " + f->name + " [" + f->witness + "]");
    }
    int k = orbit.k;
    int n = orbit.rank();
    int r = orbit.r();

    // canonical basis, in increasing degree: e, then N_j(e), then the stored
    // block bases
    std::vector<ScalarVec> basis;
    std::vector<int> deg;
    basis.push_back(orbit.e);
    deg.push_back(0);
    for (int j = 0; j < r; ++j) {
        ScalarVec t = qhodge::apply(orbit.N[j], orbit.e);
        if (!orbit.grading.block_space(k - 1).contains(t))
            throw HodgeError("NotHodgeTate: N_" + std::to_string(j + 1) + "(e) leaves I^{k-1,k-1}");
        basis.push_back(t);
        deg.push_back(2);
    }
    for (int p = k - 2; p >= 0; --p)
        for (const auto& v : orbit.grading.blocks.count(p) ? orbit.grading.blocks.at(p) : std::vector<ScalarVec>{}) {
            basis.push_back(v);
            deg.push_back(2 * (k - p));
        }
    if (static_cast<int>(basis.size()) != n) throw HodgeError("NotHodgeTate: blocks do not exhaust the space");

    ScalarMat p_mat(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) p_mat(i, j) = basis[j][i];
    ScalarMat p_inv;
    try {
        p_inv = inverse(p_mat);
    } catch (const MatrixError&) {
        throw HodgeError("NotHodgeTate: canonical basis is degenerate");
    }

    FrobeniusModule m;
    m.k = k;
    m.deg = deg;
    m.dims.assign(k + 1, 0);
    for (int d : deg) m.dims[d / 2] += 1;
    for (int j = 0; j < r; ++j) m.framing.push_back(1 + j);
    ScalarMat qb = p_mat.transpose() * orbit.Q * p_mat;
    m.B = ScalarMat(n, n);
    for (int a = 0; a < n; ++a) {
        Scalar sign((k + deg[a] / 2) % 2 == 0 ? 1 : -1);
        for (int b = 0; b < n; ++b) m.B(a, b) = sign * qb(a, b);
    }
    for (int j = 0; j < r; ++j) m.L.push_back(p_inv * orbit.N[j] * p_mat);
    m.real = true;

    ValidationReport rep = validate_module(m);
    if (!rep.passed())
        throw FrobeniusError("reconstructed module invalid: " + rep.first_failure()->name + " [" +
                             rep.first_failure()->witness + "]");
    return m;
}

Certificate check_framing_cone(const FrobeniusModule& m, SignCalibration calib, std::uint64_t seed, int samples) {
    Certificate cert;
    ScalarMat bary(m.rank(), m.rank());
    for (const auto& l : m.L) bary = bary + l;

    Certificate pol = check_polarized_mhs(degree_bigrading(m), bary, q_form(m), m.k, calib);
    if (pol.passed()) {
        cert.add("barycenter polarizes", true);
    } else {
        const Check* f = pol.first_failure();
        cert.add("barycenter polarizes", false, f->name + " [" + f->witness + "]");
    }

    Filtration wref = weight_filtration(bary);
    for (int j = 0; j < m.r(); ++j) {
        bool same = weight_filtration(m.L[j]) == wref;
        cert.add("vertex " + std::to_string(j + 1) + " weight filtration", same,
                 "W(N_" + std::to_string(j + 1) + ") differs from the barycenter filtration");
    }
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        ScalarVec lambda = sample_positive(rng, m.r());
        bool same = weight_filtration(m.mult_by(lambda)) == wref;
        cert.add("sample " + std::to_string(s + 1) + " weight filtration", same,
                 "W varies at lambda = " + lambda_str(lambda));
    }
    return cert;
}

}  // namespace qhodge
