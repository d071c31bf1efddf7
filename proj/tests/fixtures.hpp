#pragma once

#include "qhodge/amodel.hpp"
#include "qhodge/hodge.hpp"

#include <random>
#include <string>

namespace qhodge::fixtures {

/// Chain module of weight k and rank k + 1: one basis vector per even
/// degree, T_1 * T_a = c[a] * T_{a+1}.  Valid when c[0] = 1 and
/// c[a] = c[k-1-a].
inline FrobeniusModule chain_module(int k, const std::vector<Scalar>& c) {
    FrobeniusModule m;
    m.k = k;
    m.dims.assign(k + 1, 1);
    for (int p = 0; p <= k; ++p) m.deg.push_back(2 * p);
    int n = k + 1;
    m.B = ScalarMat(n, n);
    for (int a = 0; a < n; ++a) m.B(a, n - 1 - a) = Scalar(1);
    m.framing = {1};
    ScalarMat l(n, n);
    for (int a = 0; a < k; ++a) l(a + 1, a) = c[a];
    m.L = {l};
    return m;
}

/// E1: k = 3, T_1 * T_1 = 5 T_2, T_1 * T_2 = T_3.
inline FrobeniusModule e1_module() { return chain_module(3, {Scalar(1), Scalar(5), Scalar(1)}); }

/// E1 with the middle constant kappa replaced.
inline FrobeniusModule e1_kappa(const Scalar& kappa) { return chain_module(3, {Scalar(1), kappa, Scalar(1)}); }

/// Seeded chain with positive symmetric constants (polarizable for
/// k in {3, 4, 5}).
inline FrobeniusModule random_chain(int k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Scalar> c(k, Scalar(1));
    for (int a = 1; a <= (k - 1) / 2; ++a) {
        Scalar v(Rational(1 + static_cast<long>(rng() % 20), 1 + static_cast<long>(rng() % 10)));
        c[a] = v;
        c[k - 1 - a] = v;
    }
    return chain_module(k, c);
}

/// Tensor of the weight-2 and weight-3 unit chains: weight 5, rank 12,
/// two framing directions.  Basis s_i t_j ordered by degree, then by i.
/// Framing order matches the basis order: q_1 <-> s_0 t_1, q_2 <-> s_1 t_0.
inline FrobeniusModule tensor_module() {
    FrobeniusModule m;
    m.k = 5;
    m.dims = {1, 2, 3, 3, 2, 1};
    std::vector<std::pair<int, int>> basis;  // (i, j) with 0<=i<=2, 0<=j<=3
    for (int d = 0; d <= 5; ++d)
        for (int i = 0; i <= 2; ++i) {
            int j = d - i;
            if (j >= 0 && j <= 3) basis.push_back({i, j});
        }
    int n = static_cast<int>(basis.size());
    auto index_of = [&](int i, int j) {
        for (int x = 0; x < n; ++x)
            if (basis[x] == std::make_pair(i, j)) return x;
        return -1;
    };
    for (auto [i, j] : basis) m.deg.push_back(2 * (i + j));
    m.B = ScalarMat(n, n);
    for (int x = 0; x < n; ++x) m.B(x, index_of(2 - basis[x].first, 3 - basis[x].second)) = Scalar(1);
    int s10 = index_of(1, 0), s01 = index_of(0, 1);
    m.framing = {s01, s10};
    ScalarMat l1(n, n), l2(n, n);
    for (int x = 0; x < n; ++x) {
        auto [i, j] = basis[x];
        if (i + 1 <= 2) l1(index_of(i + 1, j), x) = Scalar(1);
        if (j + 1 <= 3) l2(index_of(i, j + 1), x) = Scalar(1);
    }
    m.L = {l2, l1};
    return m;
}

// tensor_module basis indices used by the potentials below
inline constexpr int kTensorGamma = 6;  // s_0 t_3, degree 6
inline constexpr int kTensorBeta = 7;   // s_1 t_2, degree 6
inline constexpr int kTensorAlpha = 8;  // s_2 t_1, degree 6

/// WDVV-consistent family on the tensor module: phi^{s_0 t_3} = f(q_1)
/// (a series in the s_0 t_1 direction), all other quantum blocks zero.
inline QuantumPotential tensor_potential(const FrobeniusModule& m, const QSeries& f, int order) {
    QuantumPotential phi = make_potential(m, order);
    if (!f.is_zero()) phi.phi_a.emplace(kTensorGamma, f);
    return phi;
}

/// WDVV-violating perturbation phi^{s_2 t_1} = eps * q_2.
inline QuantumPotential tensor_violator(const FrobeniusModule& m, const Scalar& eps, int order) {
    QuantumPotential phi = make_potential(m, order);
    phi.phi_a.emplace(kTensorAlpha, QSeries::monomial(2, order, {0, 1}, eps));
    return phi;
}

/// E1 potential with the given weight-3 series phi_h.
inline QuantumPotential e1_potential(const FrobeniusModule& m, const QSeries& w3, int order) {
    QuantumPotential phi = make_potential(m, order);
    phi.weight3 = w3;
    return phi;
}

/// Rank-6 chain potential (k = 5, r = 1): phi^3 and phi^{22} blocks.
inline QuantumPotential chain5_potential(const FrobeniusModule& m, const QSeries& phi3, const QSeries& phi22,
                                         int order) {
    QuantumPotential phi = make_potential(m, order);
    if (!phi3.is_zero()) phi.phi_a.emplace(3, phi3);
    if (!phi22.is_zero()) phi.phi_ab.emplace(std::make_pair(2, 2), phi22);
    return phi;
}

/// Seeded one-variable series vanishing at the origin.
inline QSeries random_series(int r, int order, std::uint64_t seed, int var = 0) {
    std::mt19937_64 rng(seed);
    QSeries f(r, order);
    for (int t = 1; t <= order; ++t) {
        ExponentTuple e(r, 0);
        e[var] = t;
        f.set(e, Scalar(Rational(1 + static_cast<long>(rng() % 20), 1 + static_cast<long>(rng() % 10))));
    }
    return f;
}

inline std::string data_path(const std::string& name) { return std::string(QHODGE_DATA_DIR) + "/" + name; }

}  // namespace qhodge::fixtures
