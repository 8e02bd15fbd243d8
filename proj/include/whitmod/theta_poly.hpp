#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "whitmod/radical.hpp"

namespace whitmod {

/// Element of the twisted polynomial algebra C[t]<theta> with RadicalSum
/// coefficients, in normal form t^m theta^k (all t powers left of theta).
/// Multiplication uses theta*t = t*(theta+1) exactly.
class ThetaPoly {
    // (m, k) -> coefficient; no zero coefficients stored
    std::map<std::pair<int, int>, RadicalSum> terms_;

    void add_term(int m, int k, const RadicalSum& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(m, k);
        auto it = terms_.find(key);
        if (it == terms_.end())
            terms_.emplace(key, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

  public:
    ThetaPoly() = default;
    ThetaPoly(const RadicalSum& c) { add_term(0, 0, c); }
    ThetaPoly(const Rational& q) { add_term(0, 0, RadicalSum(q)); }
    ThetaPoly(long v) { add_term(0, 0, RadicalSum(v)); }

    static ThetaPoly monomial(int m, int k, const RadicalSum& c = RadicalSum(1)) {
        ThetaPoly p;
        if (m < 0 || k < 0) throw std::invalid_argument("ThetaPoly: negative exponent");
        p.add_term(m, k, c);
        return p;
    }
    static ThetaPoly t() { return monomial(1, 0); }
    static ThetaPoly theta() { return monomial(0, 1); }
    /// theta + c
    static ThetaPoly theta_plus(const RadicalSum& c) {
        ThetaPoly p = theta();
        p.add_term(0, 0, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, RadicalSum>& terms() const { return terms_; }
    int t_degree() const {
        int d = -1;
        for (const auto& [mk, c] : terms_) d = std::max(d, mk.first);
        return d;
    }
    int theta_degree() const {
        int d = -1;
        for (const auto& [mk, c] : terms_) d = std::max(d, mk.second);
        return d;
    }

    ThetaPoly& operator+=(const ThetaPoly& o) {
        for (const auto& [mk, c] : o.terms_) add_term(mk.first, mk.second, c);
        return *this;
    }
    ThetaPoly& operator-=(const ThetaPoly& o) {
        for (const auto& [mk, c] : o.terms_) add_term(mk.first, mk.second, -c);
        return *this;
    }
    friend ThetaPoly operator+(ThetaPoly a, const ThetaPoly& b) { return a += b; }
    friend ThetaPoly operator-(ThetaPoly a, const ThetaPoly& b) { return a -= b; }
    ThetaPoly operator-() const {
        ThetaPoly p;
        for (const auto& [mk, c] : terms_) p.add_term(mk.first, mk.second, -c);
        return p;
    }

    friend ThetaPoly operator*(const ThetaPoly& a, const ThetaPoly& b) {
        // (t^m1 th^k1)(t^m2 th^k2) = t^{m1+m2} (th+m2)^{k1} th^{k2}
        ThetaPoly out;
        for (const auto& [mk1, c1] : a.terms_)
            for (const auto& [mk2, c2] : b.terms_) {
                RadicalSum c = c1 * c2;
                int m = mk1.first + mk2.first;
                long shift = mk2.first;
                // binomial expansion of (theta + shift)^{k1}
                std::vector<Rational> binom(mk1.second + 1), pw(mk1.second + 1);
                binom[0] = 1;
                for (int r = 1; r <= mk1.second; ++r)
                    binom[r] = binom[r - 1] * Rational(mk1.second - r + 1) / Rational(r);
                pw[mk1.second] = 1;
                for (int r = mk1.second - 1; r >= 0; --r) pw[r] = pw[r + 1] * Rational(shift);
                for (int r = 0; r <= mk1.second; ++r)
                    out.add_term(m, r + mk2.second, c * RadicalSum(binom[r] * pw[r]));
            }
        return out;
    }
    ThetaPoly& operator*=(const ThetaPoly& o) { return *this = *this * o; }

    friend bool operator==(const ThetaPoly& a, const ThetaPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ThetaPoly& a, const ThetaPoly& b) { return !(a == b); }

    /// Action on the single power t^s: returns offsets m with scalars
    /// sum_k c_{m,k} s^k, i.e. p(t,theta) t^s = sum_m scalar_m t^{s+m}.
    std::map<int, RadicalSum> apply_to_power(const Rational& s) const {
        std::map<int, RadicalSum> out;
        for (const auto& [mk, c] : terms_) {
            RadicalSum v = c * RadicalSum(pow_rational(s, mk.second));
            if (v.is_zero()) continue;
            auto it = out.find(mk.first);
            if (it == out.end())
                out.emplace(mk.first, v);
            else {
                it->second += v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
        return out;
    }

    /// Coefficient of t^m as a polynomial in theta (index = theta power).
    std::vector<RadicalSum> theta_part(int m) const {
        std::vector<RadicalSum> out;
        for (const auto& [mk, c] : terms_)
            if (mk.first == m) {
                if (static_cast<int>(out.size()) <= mk.second) out.resize(mk.second + 1);
                out[mk.second] = c;
            }
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [mk, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")";
            if (mk.first) s += "*t^" + std::to_string(mk.first);
            if (mk.second) s += "*th^" + std::to_string(mk.second);
        }
        return s;
    }
};

inline bool is_zero(const ThetaPoly& p) { return p.is_zero(); }

}  // namespace whitmod
