#pragma once

#include "qhodge/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace qhodge {

struct SeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exponent of a monomial q_1^{m_1}...q_r^{m_r}.
using ExponentTuple = std::vector<int>;

int total_degree(const ExponentTuple& m);
std::string exponents_str(const ExponentTuple& m);
ExponentTuple parse_exponents(const std::string& text, int r);

/// Multivariate power series in q_1..q_r over Scalar, truncated at total
/// degree D.  Zero coefficients are never stored.  A default-constructed
/// QSeries (r = -1) is the zero series of any context and is compatible
/// with every operand.
class QSeries {
  public:
    QSeries() = default;
    QSeries(int r, int D) : r_(r), D_(D) {}

    static QSeries monomial(int r, int D, const ExponentTuple& m, const Scalar& c);
    static QSeries constant(int r, int D, const Scalar& c);

    int r() const { return r_; }
    int order() const { return D_; }
    bool is_universal_zero() const { return r_ < 0; }
    bool is_zero() const { return coeff_.empty(); }
    const std::map<ExponentTuple, Scalar>& coeffs() const { return coeff_; }

    Scalar at(const ExponentTuple& m) const;
    Scalar at_zero() const;  // constant term
    bool vanishes_at_origin() const { return at_zero().is_zero(); }
    bool is_tau_free() const;

    void set(const ExponentTuple& m, const Scalar& c);

    QSeries operator-() const;
    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries operator*(const Scalar& c) const;
    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
    bool operator==(const QSeries& o) const;
    bool operator!=(const QSeries& o) const { return !(*this == o); }

    /// D_j = d/dz_j: multiplies the coefficient of q^m by tau*m_j.
    QSeries dz_derive(int j) const;  // j is 1-based
    QSeries truncate(int new_order) const;
    QSeries conj() const;

    std::string str() const;

  private:
    friend class LogPolySeries;
    static void require_compatible(const QSeries& a, const QSeries& b);
    int r_ = -1;
    int D_ = 0;
    std::map<ExponentTuple, Scalar> coeff_;
};

inline QSeries operator*(const Scalar& c, const QSeries& f) { return f * c; }

/// QSeries tensored with polynomials in z_1..z_r, where z_j stands for
/// (2*pi*i)^{-1} log q_j.  Keys are z-monomial exponents.
class LogPolySeries {
  public:
    LogPolySeries() = default;
    LogPolySeries(int r, int D) : r_(r), D_(D) {}
    LogPolySeries(const QSeries& f);  // pure-q embedding

    static LogPolySeries z_monomial(int r, int D, const ExponentTuple& zexp, const Scalar& c);

    int r() const { return r_; }
    int order() const { return D_; }
    bool is_universal_zero() const { return r_ < 0; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExponentTuple, QSeries>& terms() const { return terms_; }

    bool is_pure_q() const;
    /// Requires is_pure_q(); returns the z-free part.
    QSeries q_part() const;
    int z_degree() const;
    Scalar at_origin() const;  // coefficient of q^0 z^0

    void set(const ExponentTuple& zexp, const QSeries& f);

    LogPolySeries operator-() const;
    LogPolySeries operator+(const LogPolySeries& o) const;
    LogPolySeries operator-(const LogPolySeries& o) const;
    LogPolySeries operator*(const LogPolySeries& o) const;
    LogPolySeries operator*(const Scalar& c) const;
    LogPolySeries& operator+=(const LogPolySeries& o) { return *this = *this + o; }
    LogPolySeries& operator-=(const LogPolySeries& o) { return *this = *this - o; }
    bool operator==(const LogPolySeries& o) const;
    bool operator!=(const LogPolySeries& o) const { return !(*this == o); }

    /// Leibniz rule across the two tensor factors.
    LogPolySeries dz_derive(int j) const;
    LogPolySeries conj() const;

    std::string str() const;

  private:
    static void require_compatible(const LogPolySeries& a, const LogPolySeries& b);
    int r_ = -1;
    int D_ = 0;
    std::map<ExponentTuple, QSeries> terms_;
};

inline LogPolySeries operator*(const Scalar& c, const LogPolySeries& f) { return f * c; }

}  // namespace qhodge
