#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "whitmod/pbw.hpp"

namespace whitmod {

/// Element of Ext(C^{2N}) tensor U(gl_N): anticommuting generators
/// e_1, e'_1, ..., e_N, e'_N with U(gl_N)[u] coefficients.  Bit 2(p-1) of a
/// mask is e_p, bit 2(p-1)+1 is e'_p; the canonical monomial has ascending
/// bits with sign +1, so the full mask is e_1 e'_1 ... e_N e'_N.
class ExtElement {
    const GLAlgebra* gl_ = nullptr;
    std::map<std::uint32_t, PBWElement> terms_;

    static int mul_sign(std::uint32_t a, std::uint32_t b) {
        // (-1)^{#{(x in a, y in b) : x > y}}
        int swaps = 0;
        for (std::uint32_t y = b; y;) {
            int bit = std::countr_zero(y);
            y &= y - 1;
            swaps += std::popcount(a >> (bit + 1));
        }
        return swaps % 2 ? -1 : 1;
    }

  public:
    ExtElement() = default;
    explicit ExtElement(const GLAlgebra& gl) : gl_(&gl) {}
    ExtElement(const GLAlgebra& gl, const PBWElement& scalar) : gl_(&gl) { add_term(0, scalar); }

    static std::uint32_t e_bit(int p) { return 1u << (2 * (p - 1)); }
    static std::uint32_t eprime_bit(int p) { return 1u << (2 * (p - 1) + 1); }
    static ExtElement e(const GLAlgebra& gl, int p) {
        ExtElement x(gl);
        x.add_term(e_bit(p), PBWElement(gl.alg, UPoly(GaussianRational(1))));
        return x;
    }
    static ExtElement eprime(const GLAlgebra& gl, int p) {
        ExtElement x(gl);
        x.add_term(eprime_bit(p), PBWElement(gl.alg, UPoly(GaussianRational(1))));
        return x;
    }
    std::uint32_t top_mask() const { return (1u << (2 * gl_->N)) - 1; }

    const GLAlgebra& gl() const { return *gl_; }
    const std::map<std::uint32_t, PBWElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(std::uint32_t mask, const PBWElement& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(mask);
        if (it == terms_.end())
            terms_.emplace(mask, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    ExtElement& operator+=(const ExtElement& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    ExtElement& operator-=(const ExtElement& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
    friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }

    friend ExtElement operator*(const ExtElement& a, const ExtElement& b) {
        ExtElement out(*a.gl_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                if (ma & mb) continue;
                PBWElement c = ca * cb;
                if (mul_sign(ma, mb) < 0) c = -c;
                out.add_term(ma | mb, c);
            }
        return out;
    }
    ExtElement& operator*=(const ExtElement& o) { return *this = *this * o; }

    friend bool operator==(const ExtElement& a, const ExtElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ExtElement& a, const ExtElement& b) { return !(a == b); }
};

/// eta_j(u + c) = sum_p e_p E_{pj}(u + c)
inline ExtElement ext_eta(const GLAlgebra& gl, int j, long c) {
    ExtElement out(gl);
    for (int p = 1; p <= gl.N; ++p) out.add_term(ExtElement::e_bit(p), pbw_generator_u(gl, p, j, c));
    return out;
}

/// eta'_i(u + c) = sum_q e'_q E_{iq}(u + c)
inline ExtElement ext_eta_prime(const GLAlgebra& gl, int i, long c) {
    ExtElement out(gl);
    for (int q = 1; q <= gl.N; ++q) out.add_term(ExtElement::eprime_bit(q), pbw_generator_u(gl, i, q, c));
    return out;
}

/// Xi(u + c) = sum_{p,q} e_p e'_q E_{pq}(u + c)
inline ExtElement ext_xi(const GLAlgebra& gl, long c) {
    ExtElement out(gl);
    for (int p = 1; p <= gl.N; ++p)
        for (int q = 1; q <= gl.N; ++q) {
            std::uint32_t mask = ExtElement::e_bit(p) | ExtElement::eprime_bit(q);
            PBWElement coeff = pbw_generator_u(gl, p, q, c);
            // canonical sign of e_p e'_q
            int sign = (q < p) ? -1 : 1;  // e'_q passes e_p when bit(e'_q) < bit(e_p)
            out.add_term(mask, sign < 0 ? -coeff : coeff);
        }
    return out;
}

/// Xi at a fixed rational argument (for the two-parameter commutation check).
inline ExtElement ext_xi_at(const GLAlgebra& gl, const Rational& v) {
    ExtElement out(gl);
    for (int p = 1; p <= gl.N; ++p)
        for (int q = 1; q <= gl.N; ++q) {
            PBWElement coeff = pbw_generator(gl, p, q);
            if (p == q) coeff += PBWElement(gl.alg, UPoly(GaussianRational(v)));
            int sign = (q < p) ? -1 : 1;
            out.add_term(ExtElement::e_bit(p) | ExtElement::eprime_bit(q), sign < 0 ? -coeff : coeff);
        }
    return out;
}

/// Xi^{(k)}(u + c) = Xi(u+c) Xi(u+c-1) ... Xi(u+c-k+1)
inline ExtElement ext_xi_power(const GLAlgebra& gl, int k, long c) {
    ExtElement out(gl, PBWElement(gl.alg, UPoly(GaussianRational(1))));
    for (int m = 0; m < k; ++m) out = out * ext_xi(gl, c - m);
    return out;
}

struct ExteriorCheck {
    std::string name;
    bool zero;
};

struct ExteriorReport {
    std::vector<ExteriorCheck> checks;
    bool all_zero() const {
        for (const auto& c : checks)
            if (!c.zero) return false;
        return true;
    }
};

/// Verify the exterior-calculus identities behind the determinant central
/// element, all with symbolic u (the two-parameter commutation uses v in
/// {0,1}, enough for its degree-1 dependence on v).
inline ExteriorReport exterior_suite(int N) {
    GLAlgebra gl = make_gl_algebra(N);
    const int n = N - 1;
    ExteriorReport rep;
    auto record = [&](const std::string& name, const ExtElement& x) { rep.checks.push_back({name, x.is_zero()}); };
    auto pbw1 = [&](int i, int j) { return ExtElement(gl, pbw_generator(gl, i, j)); };

    // eta-eta anticommutation
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            record("eta_eta(" + std::to_string(i) + "," + std::to_string(j) + ")",
                   ext_eta(gl, i, 1) * ext_eta(gl, j, 0) + ext_eta(gl, j, 1) * ext_eta(gl, i, 0));
            record("etaP_etaP(" + std::to_string(i) + "," + std::to_string(j) + ")",
                   ext_eta_prime(gl, i, 0) * ext_eta_prime(gl, j, 1) + ext_eta_prime(gl, j, 0) * ext_eta_prime(gl, i, 1));
        }

    // [E_ij, Xi(u)] = e_j eta'_i(u) - eta_j(u) e'_i
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            ExtElement lhs = pbw1(i, j) * ext_xi(gl, 0) - ext_xi(gl, 0) * pbw1(i, j);
            ExtElement rhs = ExtElement::e(gl, j) * ext_eta_prime(gl, i, 0) - ext_eta(gl, j, 0) * ExtElement::eprime(gl, i);
            record("commutator(" + std::to_string(i) + "," + std::to_string(j) + ")", lhs - rhs);
        }

    // Xi(u) Xi(v) = Xi(v) Xi(u); degree in v is 1, so v in {0,1} decides it
    for (long v = 0; v <= 1; ++v)
        record("xi_commute(v=" + std::to_string(v) + ")",
               ext_xi(gl, 0) * ext_xi_at(gl, Rational(v)) - ext_xi_at(gl, Rational(v)) * ext_xi(gl, 0));

    // the two cofactor expansions of Xi^{(k)}
    for (int k = 1; k <= N; ++k)
        for (int j = 1; j <= N; ++j) {
            ExtElement ee = ExtElement::e(gl, j), ep = ExtElement::eprime(gl, j);
            ExtElement lead = ext_eta(gl, j, 0) * ep * ext_xi_power(gl, k - 1, -1);
            ExtElement prod(gl, PBWElement(gl.alg, UPoly(GaussianRational(k))));
            ExtElement rhs = prod * lead;
            ExtElement tail(gl, PBWElement(gl.alg, UPoly(GaussianRational(1))));
            for (int m = 0; m < k; ++m) tail = tail * (ext_xi(gl, -m) - ext_eta(gl, j, -m) * ep);
            record("expansion1(k=" + std::to_string(k) + ",j=" + std::to_string(j) + ")",
                   ext_xi_power(gl, k, 0) - rhs - tail);

            ExtElement lead2 = ee * ext_eta_prime(gl, j, -(k - 1)) * ext_xi_power(gl, k - 1, 0);
            ExtElement rhs2 = prod * lead2;
            ExtElement tail2(gl, PBWElement(gl.alg, UPoly(GaussianRational(1))));
            for (int m = k - 1; m >= 0; --m) tail2 = tail2 * (ext_xi(gl, -m) - ee * ext_eta_prime(gl, j, -m));
            record("expansion2(k=" + std::to_string(k) + ",i=" + std::to_string(j) + ")",
                   ext_xi_power(gl, k, 0) - rhs2 - tail2);
        }

    // eta_i(u+n) e'_j Xi^{(n)}(u+n-1) = 0 for i != j
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            if (i == j) continue;
            record("expansion3(" + std::to_string(i) + "," + std::to_string(j) + ")",
                   ext_eta(gl, i, n) * ExtElement::eprime(gl, j) * ext_xi_power(gl, n, n - 1));
        }

    // e_i eta'_j(u) e_k e'_N Xi^{(n-1)}(u+n-1) = 0 for j not in {i,k}
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            for (int k = 1; k <= N; ++k) {
                if (j == i || j == k) continue;
                record("expansion4(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")",
                       ExtElement::e(gl, i) * ext_eta_prime(gl, j, 0) * ExtElement::e(gl, k) *
                           ExtElement::eprime(gl, N) * ext_xi_power(gl, n - 1, n - 1));
            }

    // e_j e'_N Xi^{(n)}(u+n-1) = n e_j e_i eta'_i(u) e'_N Xi^{(n-1)}(u+n-1), i != j
    for (int j = 1; j <= N; ++j)
        for (int i = 1; i <= N; ++i) {
            if (i == j) continue;
            ExtElement lhs = ExtElement::e(gl, j) * ExtElement::eprime(gl, N) * ext_xi_power(gl, n, n - 1);
            ExtElement rhs = ExtElement(gl, PBWElement(gl.alg, UPoly(GaussianRational(n)))) * ExtElement::e(gl, j) *
                             ExtElement::e(gl, i) * ext_eta_prime(gl, i, 0) * ExtElement::eprime(gl, N) *
                             ext_xi_power(gl, n - 1, n - 1);
            record("second_expansion(j=" + std::to_string(j) + ",i=" + std::to_string(i) + ")", lhs - rhs);
        }

    // Xi^{(N)}(u+n) = N! C_N(u) wedge_top
    {
        ExtElement lhs = ext_xi_power(gl, N, n);
        PBWElement c = capelli(gl);
        long fact = 1;
        for (int m = 2; m <= N; ++m) fact *= m;
        c.scale(UPoly(GaussianRational(fact)));
        ExtElement rhs(gl);
        rhs.add_term(lhs.top_mask(), c);
        record("determinant", lhs - rhs);
    }
    return rep;
}

}  // namespace whitmod
