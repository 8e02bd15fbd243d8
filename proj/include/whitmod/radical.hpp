#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "whitmod/rational.hpp"

namespace whitmod {

/// Exact scalar of the form  sum_r c_r * sqrt(r)  with c_r in Q(i) and the
/// radicands r squarefree positive integers (r = 1 is the rational part).
/// Closed under + and *:  sqrt(r1)*sqrt(r2) = g*sqrt(r1*r2/g^2), g = gcd.
class RadicalSum {
    std::map<Integer, GaussianRational> terms_;  // radicand -> coefficient, no zero coefficients

    void add_term(const Integer& rad, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(rad);
        if (it == terms_.end()) {
            terms_.emplace(rad, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // n > 0 squarefree part: n = s^2 * m with m squarefree; returns (s, m).
    static std::pair<Integer, Integer> square_split(Integer n) {
        Integer s = 1, m = 1;
        for (Integer d = 2; d * d <= n; ++d) {
            if (n % d != 0) continue;
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            for (int k = 0; k < e / 2; ++k) s *= d;
            if (e % 2) m *= d;
        }
        m *= n;  // leftover prime
        return {s, m};
    }

  public:
    RadicalSum() = default;
    RadicalSum(const GaussianRational& c) { add_term(1, c); }
    RadicalSum(const Rational& q) { add_term(1, GaussianRational(q)); }
    RadicalSum(long v) { add_term(1, GaussianRational(v)); }
    RadicalSum(int v) { add_term(1, GaussianRational(v)); }

    /// Principal square root of a rational: sqrt(q) >= 0 for q >= 0,
    /// i*sqrt(|q|) for q < 0.  This is the branch every coefficient uses.
    static RadicalSum sqrt_of(const Rational& q) {
        RadicalSum r;
        if (sgn(q) == 0) return r;
        Rational a = abs(q);
        // sqrt(p/d) = sqrt(p*d)/d
        Integer pd = a.get_num() * a.get_den();
        auto [s, m] = square_split(pd);
        GaussianRational coeff(frac(s, Integer(a.get_den())));
        if (sgn(q) < 0) coeff *= GaussianRational::i();
        r.add_term(m, coeff);
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1 && terms_.begin()->second.is_real());
    }
    Rational rational_part() const {
        auto it = terms_.find(Integer(1));
        if (it == terms_.end()) return 0;
        if (!it->second.is_real()) throw std::domain_error("rational_part of non-real scalar");
        return it->second.re;
    }
    const std::map<Integer, GaussianRational>& terms() const { return terms_; }

    RadicalSum& operator+=(const RadicalSum& o) {
        for (const auto& [r, c] : o.terms_) add_term(r, c);
        return *this;
    }
    RadicalSum& operator-=(const RadicalSum& o) {
        for (const auto& [r, c] : o.terms_) add_term(r, -c);
        return *this;
    }
    friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
    friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }
    RadicalSum operator-() const {
        RadicalSum r;
        for (const auto& [rad, c] : terms_) r.add_term(rad, -c);
        return r;
    }

    friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) {
        RadicalSum out;
        for (const auto& [r1, c1] : a.terms_)
            for (const auto& [r2, c2] : b.terms_) {
                Integer g = gcd(r1, r2);
                Integer rad = (r1 / g) * (r2 / g);
                out.add_term(rad, c1 * c2 * GaussianRational(Rational(g)));
            }
        return out;
    }
    RadicalSum& operator*=(const RadicalSum& o) { return *this = *this * o; }

    RadicalSum& operator/=(const Rational& q) {
        if (sgn(q) == 0) throw std::domain_error("division by zero rational");
        for (auto& [rad, c] : terms_) c = c * GaussianRational(Rational(1) / q);
        return *this;
    }
    friend RadicalSum operator/(RadicalSum a, const Rational& q) { return a /= q; }

    friend bool operator==(const RadicalSum& a, const RadicalSum& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const RadicalSum& a, const RadicalSum& b) { return !(a == b); }
    friend bool operator<(const RadicalSum& a, const RadicalSum& b) {
        auto key = [](const std::map<Integer, GaussianRational>& t) {
            std::vector<std::pair<Integer, std::pair<Rational, Rational>>> v;
            for (const auto& [r, c] : t) v.push_back({r, {c.re, c.im}});
            return v;
        };
        return key(a.terms_) < key(b.terms_);
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [rad, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")";
            if (rad != 1) s += "*sqrt(" + rad.get_str() + ")";
        }
        return s;
    }
};

inline bool is_zero(const RadicalSum& r) { return r.is_zero(); }

}  // namespace whitmod
