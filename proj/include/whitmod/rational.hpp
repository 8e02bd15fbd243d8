#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace whitmod {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Canonicalized fraction (mpq_class(num, den) alone does not reduce).
inline Rational frac(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}
inline Rational frac(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parse "p", "-p" or "p/q" (used for half-integer CLI input like "5/2").
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational pow_rational(const Rational& base, unsigned long e) {
    Rational r = 1;
    for (unsigned long i = 0; i < e; ++i) r *= base;
    return r;
}

/// Element of Q(i).  The imaginary unit enters through the eta-character
/// and the restricted-root basis, so it threads the whole coefficient stack.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(const Rational& r) : re(r), im(0) {}
    GaussianRational(long r) : re(r), im(0) {}
    GaussianRational(int r) : re(r), im(0) {}
    GaussianRational(const Rational& r, const Rational& i) : re(r), im(i) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational operator-() const { return {Rational(-re), Rational(-im)}; }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
    }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
        return {Rational((a.re * b.re + a.im * b.im) / n), Rational((a.im * b.re - a.re * b.im) / n)};
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        if (sgn(re) != 0) s += re.get_str();
        if (sgn(im) != 0) {
            if (!s.empty() && sgn(im) > 0) s += "+";
            if (im == -1) s += "-";
            else if (im != 1) s += im.get_str() + "*";
            s += "i";
        }
        return s;
    }
};

inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }

/// Dense univariate polynomial over a commutative coefficient ring T.
/// Used with T = GaussianRational for the formal Capelli parameter u.
template <class T>
class Polynomial {
    std::vector<T> c_;  // c_[k] multiplies u^k; normalized: no trailing zeros

    void trim() {
        while (!c_.empty() && whitmod::is_zero(c_.back())) c_.pop_back();
    }

  public:
    Polynomial() = default;
    Polynomial(const T& constant) : c_{constant} { trim(); }
    Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial variable() { return Polynomial(std::vector<T>{T(0), T(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

    Polynomial& operator+=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& x : r.c_) x = T(0) - x;
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    template <class S>
    S eval(const S& x) const {
        S acc = S(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + S(c_[k]);
        return acc;
    }

    /// Substitution u -> u + shift.
    Polynomial shifted(const T& shift) const {
        Polynomial r;
        Polynomial lin(std::vector<T>{shift, T(1)});
        Polynomial p(T(1));
        for (std::size_t k = 0; k < c_.size(); ++k) {
            r += p * Polynomial(c_[k]);
            p = p * lin;
        }
        return r;
    }

    std::string str(const std::string& var = "u") const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (whitmod::is_zero(c_[k])) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c_[k].str() + ")";
            if (k >= 1) s += "*" + var;
            if (k >= 2) s += "^" + std::to_string(k);
        }
        return s.empty() ? "0" : s;
    }
};

template <class T>
inline bool is_zero(const Polynomial<T>& p) {
    return p.is_zero();
}

using UPoly = Polynomial<GaussianRational>;

inline std::string str_of(const GaussianRational& z) { return z.str(); }
inline std::string str_of(const UPoly& p) { return p.str(); }

}  // namespace whitmod
