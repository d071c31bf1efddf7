#include "qhodge/series.hpp"

#include <numeric>
#include <sstream>

namespace qhodge {

int total_degree(const ExponentTuple& m) { return std::accumulate(m.begin(), m.end(), 0); }

std::string exponents_str(const ExponentTuple& m) {
    std::ostringstream os;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) os << ",";
        os << m[i];
    }
    return os.str();
}

ExponentTuple parse_exponents(const std::string& text, int r) {
    ExponentTuple m;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ',')) m.push_back(std::stoi(part));
    if (static_cast<int>(m.size()) != r)
        throw SeriesError("exponent tuple '" + text + "' has wrong length, expected " + std::to_string(r));
    for (int e : m)
        if (e < 0) throw SeriesError("negative exponent in '" + text + "'");
    return m;
}

QSeries QSeries::monomial(int r, int D, const ExponentTuple& m, const Scalar& c) {
    QSeries f(r, D);
    f.set(m, c);
    return f;
}

QSeries QSeries::constant(int r, int D, const Scalar& c) { return monomial(r, D, ExponentTuple(r, 0), c); }

Scalar QSeries::at(const ExponentTuple& m) const {
    auto it = coeff_.find(m);
    return it == coeff_.end() ? Scalar() : it->second;
}

Scalar QSeries::at_zero() const {
    if (r_ < 0) return Scalar();
    return at(ExponentTuple(r_, 0));
}

bool QSeries::is_tau_free() const {
    for (const auto& [m, c] : coeff_)
        if (!c.is_tau_free()) return false;
    return true;
}

void QSeries::set(const ExponentTuple& m, const Scalar& c) {
    if (static_cast<int>(m.size()) != r_) throw SeriesError("exponent tuple length mismatch");
    if (total_degree(m) > D_) return;
    if (c.is_zero())
        coeff_.erase(m);
    else
        coeff_[m] = c;
}

void QSeries::require_compatible(const QSeries& a, const QSeries& b) {
    if (a.is_universal_zero() || b.is_universal_zero()) return;
    if (a.r_ != b.r_ || a.D_ != b.D_)
        throw SeriesError("incompatible series: (r=" + std::to_string(a.r_) + ",D=" + std::to_string(a.D_) +
                          ") vs (r=" + std::to_string(b.r_) + ",D=" + std::to_string(b.D_) + ")");
}

QSeries QSeries::operator-() const {
    QSeries f(*this);
    for (auto& [m, c] : f.coeff_) c = -c;
    return f;
}

QSeries QSeries::operator+(const QSeries& o) const {
    require_compatible(*this, o);
    if (is_universal_zero()) return o;
    if (o.is_universal_zero()) return *this;
    QSeries f(*this);
    for (const auto& [m, c] : o.coeff_) f.set(m, f.at(m) + c);
    return f;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + (-o); }

QSeries QSeries::operator*(const QSeries& o) const {
    require_compatible(*this, o);
    if (is_universal_zero() || o.is_universal_zero()) return QSeries();
    QSeries f(r_, D_);
    for (const auto& [m1, c1] : coeff_) {
        for (const auto& [m2, c2] : o.coeff_) {
            if (total_degree(m1) + total_degree(m2) > D_) continue;
            ExponentTuple m(m1);
            for (int i = 0; i < r_; ++i) m[i] += m2[i];
            f.set(m, f.at(m) + c1 * c2);
        }
    }
    return f;
}

QSeries QSeries::operator*(const Scalar& c) const {
    if (c.is_zero()) return is_universal_zero() ? QSeries() : QSeries(r_, D_);
    QSeries f(*this);
    for (auto& [m, v] : f.coeff_) v = v * c;
    return f;
}

bool QSeries::operator==(const QSeries& o) const {
    if (is_universal_zero()) return o.is_zero();
    if (o.is_universal_zero()) return is_zero();
    require_compatible(*this, o);
    return coeff_ == o.coeff_;
}

QSeries QSeries::dz_derive(int j) const {
    if (is_universal_zero()) return *this;
    if (j < 1 || j > r_) throw SeriesError("dz_derive: variable index " + std::to_string(j) + " out of range");
    QSeries f(r_, D_);
    Scalar tau = Scalar::tau();
    for (const auto& [m, c] : coeff_) {
        if (m[j - 1] == 0) continue;
        f.set(m, c * tau * Scalar(m[j - 1]));
    }
    return f;
}

QSeries QSeries::truncate(int new_order) const {
    if (is_universal_zero()) return *this;
    QSeries f(r_, new_order);
    for (const auto& [m, c] : coeff_)
        if (total_degree(m) <= new_order) f.set(m, c);
    return f;
}

QSeries QSeries::conj() const {
    QSeries f(*this);
    for (auto& [m, c] : f.coeff_) c = c.conj();
    return f;
}

std::string QSeries::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : coeff_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int i = 0; i < r_; ++i) {
            if (m[i] == 0) continue;
            os << "*q" << (i + 1);
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

LogPolySeries::LogPolySeries(const QSeries& f) {
    if (f.is_universal_zero()) return;
    r_ = f.r();
    D_ = f.order();
    if (!f.is_zero()) terms_[ExponentTuple(r_, 0)] = f;
}

LogPolySeries LogPolySeries::z_monomial(int r, int D, const ExponentTuple& zexp, const Scalar& c) {
    LogPolySeries f(r, D);
    f.set(zexp, QSeries::constant(r, D, c));
    return f;
}

bool LogPolySeries::is_pure_q() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == ExponentTuple(r_, 0);
}

QSeries LogPolySeries::q_part() const {
    if (is_universal_zero()) return QSeries();
    auto it = terms_.find(ExponentTuple(r_, 0));
    if (static_cast<int>(terms_.size()) > (it != terms_.end() ? 1 : 0))
        throw SeriesError("series has a nonzero log/z part: " + str());
    return it == terms_.end() ? QSeries(r_, D_) : it->second;
}

int LogPolySeries::z_degree() const {
    int d = 0;
    for (const auto& [p, f] : terms_) d = std::max(d, total_degree(p));
    return d;
}

Scalar LogPolySeries::at_origin() const {
    if (is_universal_zero()) return Scalar();
    auto it = terms_.find(ExponentTuple(r_, 0));
    return it == terms_.end() ? Scalar() : it->second.at_zero();
}

void LogPolySeries::set(const ExponentTuple& zexp, const QSeries& f) {
    if (static_cast<int>(zexp.size()) != r_) throw SeriesError("z-exponent tuple length mismatch");
    if (f.is_zero() || f.is_universal_zero())
        terms_.erase(zexp);
    else {
        QSeries::require_compatible(f, QSeries(r_, D_));
        terms_[zexp] = f;
    }
}

void LogPolySeries::require_compatible(const LogPolySeries& a, const LogPolySeries& b) {
    if (a.is_universal_zero() || b.is_universal_zero()) return;
    if (a.r_ != b.r_ || a.D_ != b.D_) throw SeriesError("incompatible log-poly series");
}

LogPolySeries LogPolySeries::operator-() const {
    LogPolySeries f(*this);
    for (auto& [p, g] : f.terms_) g = -g;
    return f;
}

LogPolySeries LogPolySeries::operator+(const LogPolySeries& o) const {
    require_compatible(*this, o);
    if (is_universal_zero()) return o;
    if (o.is_universal_zero()) return *this;
    LogPolySeries f(*this);
    for (const auto& [p, g] : o.terms_) {
        auto it = f.terms_.find(p);
        QSeries sum = (it == f.terms_.end()) ? g : it->second + g;
        f.set(p, sum);
    }
    return f;
}

LogPolySeries LogPolySeries::operator-(const LogPolySeries& o) const { return *this + (-o); }

LogPolySeries LogPolySeries::operator*(const LogPolySeries& o) const {
    require_compatible(*this, o);
    if (is_universal_zero() || o.is_universal_zero()) return LogPolySeries();
    LogPolySeries f(r_, D_);
    for (const auto& [p1, g1] : terms_) {
        for (const auto& [p2, g2] : o.terms_) {
            ExponentTuple p(p1);
            for (int i = 0; i < r_; ++i) p[i] += p2[i];
            auto it = f.terms_.find(p);
            QSeries prod = g1 * g2;
            f.set(p, it == f.terms_.end() ? prod : it->second + prod);
        }
    }
    return f;
}

LogPolySeries LogPolySeries::operator*(const Scalar& c) const {
    LogPolySeries f(*this);
    for (auto& [p, g] : f.terms_) g = g * c;
    if (c.is_zero()) f.terms_.clear();
    return f;
}

bool LogPolySeries::operator==(const LogPolySeries& o) const {
    if (is_universal_zero()) return o.is_zero();
    if (o.is_universal_zero()) return is_zero();
    require_compatible(*this, o);
    return terms_ == o.terms_;
}

LogPolySeries LogPolySeries::dz_derive(int j) const {
    if (is_universal_zero()) return *this;
    if (j < 1 || j > r_) throw SeriesError("dz_derive: variable index out of range");
    LogPolySeries f(r_, D_);
    for (const auto& [p, g] : terms_) {
        // d/dz_j of the q-series factor
        QSeries dg = g.dz_derive(j);
        if (!dg.is_zero()) {
            auto it = f.terms_.find(p);
            f.set(p, it == f.terms_.end() ? dg : it->second + dg);
        }
        // polynomial factor
        if (p[j - 1] > 0) {
            ExponentTuple q(p);
            q[j - 1] -= 1;
            QSeries h = g * Scalar(p[j - 1]);
            auto it = f.terms_.find(q);
            f.set(q, it == f.terms_.end() ? h : it->second + h);
        }
    }
    return f;
}

LogPolySeries LogPolySeries::conj() const {
    LogPolySeries f(*this);
    for (auto& [p, g] : f.terms_) g = g.conj();
    return f;
}

std::string LogPolySeries::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, g] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << g.str() << ")";
        for (int i = 0; i < r_; ++i) {
            if (p[i] == 0) continue;
            os << "*z" << (i + 1);
            if (p[i] > 1) os << "^" << p[i];
        }
    }
    return os.str();
}

}  // namespace qhodge
