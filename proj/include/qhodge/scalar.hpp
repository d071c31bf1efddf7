#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace qhodge {

using Rational = mpq_class;

struct ScalarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Polynomial in the formal symbol tau (which stands for 2*pi*i) with
/// rational coefficients.  coeff[i] is the coefficient of tau^i; trailing
/// zeros are never stored.
class TauPoly {
  public:
    TauPoly() = default;
    TauPoly(long v) : TauPoly(Rational(v)) {}
    explicit TauPoly(const Rational& c);
    explicit TauPoly(std::vector<Rational> coeffs);

    static TauPoly tau(int power = 1);

    bool is_zero() const { return coeff_.empty(); }
    int degree() const { return static_cast<int>(coeff_.size()) - 1; }
    const Rational& leading() const;
    Rational at(int i) const;
    const std::vector<Rational>& coeffs() const { return coeff_; }

    TauPoly operator-() const;
    TauPoly operator+(const TauPoly& o) const;
    TauPoly operator-(const TauPoly& o) const;
    TauPoly operator*(const TauPoly& o) const;
    bool operator==(const TauPoly& o) const { return coeff_ == o.coeff_; }

    /// tau -> -tau
    TauPoly conj() const;

    /// Euclidean division; requires d != 0.
    static void divmod(const TauPoly& n, const TauPoly& d, TauPoly& q, TauPoly& r);
    static TauPoly gcd(TauPoly a, TauPoly b);  // monic gcd, 0 if both zero

    std::string str() const;

  private:
    void trim();
    std::vector<Rational> coeff_;
};

/// Element of the field Q(tau), stored as a reduced fraction of TauPolys
/// with monic denominator.
class Scalar {
  public:
    Scalar() : num_(), den_(1) {}
    Scalar(long v) : num_(v), den_(1) {}
    Scalar(const Rational& v) : num_(v), den_(1) {}
    Scalar(TauPoly num, TauPoly den);

    static Scalar tau(int power = 1) { return Scalar(TauPoly::tau(power), TauPoly(1)); }
    static Scalar of_rational(long p, long q) { return Scalar(Rational(p, q)); }

    const TauPoly& num() const { return num_; }
    const TauPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_tau_free() const { return num_.degree() <= 0 && den_.degree() <= 0; }
    /// Requires is_tau_free().
    Rational to_rational() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;
    /// Field automorphism tau -> -tau.
    Scalar conj() const;

    std::string str() const;
    /// Parses strings such as "5", "-3/4", "tau", "2*tau^3 - 1/2",
    /// "(tau^2+1)/(2*tau)".
    static Scalar parse(const std::string& text);

  private:
    void reduce();
    TauPoly num_, den_;
};

inline Scalar operator*(long a, const Scalar& s) { return Scalar(a) * s; }

}  // namespace qhodge
