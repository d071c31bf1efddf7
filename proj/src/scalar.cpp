#include "qhodge/scalar.hpp"

#include <cctype>
#include <sstream>

namespace qhodge {

TauPoly::TauPoly(const Rational& c) {
    if (c != 0) {
        Rational v = c;
        v.canonicalize();
        coeff_.push_back(v);
    }
}

TauPoly::TauPoly(std::vector<Rational> coeffs) : coeff_(std::move(coeffs)) {
    for (auto& x : coeff_) x.canonicalize();
    trim();
}

TauPoly TauPoly::tau(int power) {
    std::vector<Rational> c(power + 1, Rational(0));
    c[power] = 1;
    return TauPoly(std::move(c));
}

const Rational& TauPoly::leading() const {
    if (is_zero()) throw ScalarError("leading coefficient of zero polynomial");
    return coeff_.back();
}

Rational TauPoly::at(int i) const {
    if (i < 0 || i >= static_cast<int>(coeff_.size())) return Rational(0);
    return coeff_[i];
}

void TauPoly::trim() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

TauPoly TauPoly::operator-() const {
    std::vector<Rational> c(coeff_);
    for (auto& x : c) x = -x;
    return TauPoly(std::move(c));
}

TauPoly TauPoly::operator+(const TauPoly& o) const {
    std::vector<Rational> c(std::max(coeff_.size(), o.coeff_.size()), Rational(0));
    for (size_t i = 0; i < coeff_.size(); ++i) c[i] += coeff_[i];
    for (size_t i = 0; i < o.coeff_.size(); ++i) c[i] += o.coeff_[i];
    return TauPoly(std::move(c));
}

TauPoly TauPoly::operator-(const TauPoly& o) const { return *this + (-o); }

TauPoly TauPoly::operator*(const TauPoly& o) const {
    if (is_zero() || o.is_zero()) return TauPoly();
    std::vector<Rational> c(coeff_.size() + o.coeff_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeff_.size(); ++i)
        for (size_t j = 0; j < o.coeff_.size(); ++j) c[i + j] += coeff_[i] * o.coeff_[j];
    return TauPoly(std::move(c));
}

TauPoly TauPoly::conj() const {
    std::vector<Rational> c(coeff_);
    for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return TauPoly(std::move(c));
}

void TauPoly::divmod(const TauPoly& n, const TauPoly& d, TauPoly& q, TauPoly& r) {
    if (d.is_zero()) throw ScalarError("polynomial division by zero");
    std::vector<Rational> rem = n.coeff_;
    std::vector<Rational> quo;
    int dd = d.degree();
    if (n.degree() >= dd) quo.assign(n.degree() - dd + 1, Rational(0));
    while (static_cast<int>(rem.size()) - 1 >= dd && !rem.empty()) {
        if (rem.back() == 0) {
            rem.pop_back();
            continue;
        }
        int shift = static_cast<int>(rem.size()) - 1 - dd;
        Rational f = rem.back() / d.leading();
        quo[shift] = f;
        for (int i = 0; i <= dd; ++i) rem[shift + i] -= f * d.coeff_[i];
        rem.pop_back();
    }
    q = TauPoly(std::move(quo));
    r = TauPoly(std::move(rem));
}

TauPoly TauPoly::gcd(TauPoly a, TauPoly b) {
    while (!b.is_zero()) {
        TauPoly q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    if (!a.is_zero()) {
        Rational inv_lead = 1 / a.leading();
        for (auto& c : a.coeff_) c *= inv_lead;
    }
    return a;
}

std::string TauPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeff_[i];
        if (c == 0) continue;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0) {
            os << "-";
            c = -c;
        }
        first = false;
        if (i == 0) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << "tau";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Scalar::Scalar(TauPoly num, TauPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ScalarError("zero denominator");
    reduce();
}

void Scalar::reduce() {
    if (num_.is_zero()) {
        den_ = TauPoly(1);
        return;
    }
    TauPoly g = TauPoly::gcd(num_, den_);
    if (g.degree() > 0 || g.at(0) != 1) {
        TauPoly q, r;
        TauPoly::divmod(num_, g, q, r);
        num_ = q;
        TauPoly::divmod(den_, g, q, r);
        den_ = q;
    }
    // monic denominator
    Rational lead = den_.leading();
    if (lead != 1) {
        Scalar dummy;
        TauPoly inv{Rational(1) / lead};
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Rational Scalar::to_rational() const {
    if (!is_tau_free()) throw ScalarError("scalar is not tau-free: " + str());
    if (is_zero()) return Rational(0);
    return num_.at(0) / den_.at(0);
}

Scalar Scalar::operator-() const {
    Scalar s;
    s.num_ = -num_;
    s.den_ = den_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const { return Scalar(num_ * o.num_, den_ * o.den_); }

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw ScalarError("division by zero scalar");
    return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ScalarError("inverse of zero scalar");
    return Scalar(den_, num_);
}

Scalar Scalar::conj() const { return Scalar(num_.conj(), den_.conj()); }

std::string Scalar::str() const {
    if (den_.degree() <= 0) {
        // rational denominator was absorbed by monic normalization
        if (num_.degree() <= 0) {
            return num_.is_zero() ? "0" : num_.at(0).get_str();
        }
        return num_.str();
    }
    std::string n = num_.str();
    if (num_.degree() > 0) n = "(" + n + ")";
    std::string d = den_.str();
    if (den_.degree() > 0) d = "(" + d + ")";
    return n + "/" + d;
}

namespace {

// Minimal recursive parser for scalar strings.
struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw ScalarError("parse error at position " + std::to_string(i) + ": " + why + " in '" + s + "'");
    }

    Rational integer() {
        skip();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        return Rational(s.substr(start, i - start));
    }

    // number := int [ '/' int ]  (the '/' binds to a bare rational only when
    // followed by digits, so "(..)/(..)" stays a polynomial quotient)
    Rational number() {
        Rational n = integer();
        size_t save = i;
        skip();
        if (i < s.size() && s[i] == '/') {
            ++i;
            skip();
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                Rational d = integer();
                if (d == 0) fail("zero denominator");
                n /= d;
                n.canonicalize();
                return n;
            }
            i = save;
        } else {
            i = save;
        }
        n.canonicalize();
        return n;
    }

    bool peek_word(const char* w) {
        skip();
        size_t n = std::string(w).size();
        return s.compare(i, n, w) == 0;
    }

    // term := [number ['*']] ['tau' ['^' int]]
    TauPoly term() {
        skip();
        Rational c(1);
        bool have_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            c = number();
            have_coeff = true;
            eat('*');
        }
        if (peek_word("tau")) {
            i += 3;
            int p = 1;
            if (eat('^')) p = static_cast<int>(integer().get_num().get_si());
            return TauPoly(c) * TauPoly::tau(p);
        }
        if (!have_coeff) fail("expected term");
        return TauPoly(c);
    }

    TauPoly poly() {
        TauPoly acc;
        bool neg = false;
        skip();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        while (true) {
            TauPoly t = term();
            acc = neg ? acc - t : acc + t;
            skip();
            if (eat('+'))
                neg = false;
            else if (eat('-'))
                neg = true;
            else
                break;
        }
        return acc;
    }

    // factor := '(' poly ')' | poly
    TauPoly factor() {
        skip();
        if (eat('(')) {
            TauPoly p = poly();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        return poly();
    }

    Scalar scalar() {
        skip();
        if (i < s.size() && s[i] == '0' && i + 1 == s.size()) {
            ++i;
            return Scalar();
        }
        TauPoly n = factor();
        skip();
        if (eat('/')) {
            TauPoly d = factor();
            skip();
            if (i != s.size()) fail("trailing input");
            return Scalar(n, d);
        }
        if (i != s.size()) fail("trailing input");
        return Scalar(n, TauPoly(1));
    }
};

}  // namespace

Scalar Scalar::parse(const std::string& text) {
    Parser p(text);
    return p.scalar();
}

}  // namespace qhodge
