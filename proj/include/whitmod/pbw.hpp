#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "whitmod/rational.hpp"

namespace whitmod {

/// Finite-dimensional Lie algebra presented by an ordered basis and
/// structure constants over Q(i).  The basis order is the PBW normal order.
class LieAlgebra {
  public:
    struct Term {
        int gen;
        GaussianRational coeff;
    };

    explicit LieAlgebra(int dim) : dim_(dim), table_(dim * dim) {}

    int dim() const { return dim_; }

    void set_bracket(int i, int j, std::vector<Term> t) {
        table_[i * dim_ + j] = t;
        for (auto& x : t) x.coeff = -x.coeff;
        table_[j * dim_ + i] = std::move(t);
    }
    const std::vector<Term>& bracket(int i, int j) const { return table_[i * dim_ + j]; }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return &a == &b; }

  private:
    int dim_;
    std::vector<std::vector<Term>> table_;
};

/// Element of U(g) in PBW normal form: exponent vectors over the algebra's
/// ordered basis, coefficients in R (Q(i) or polynomials in u over Q(i)).
template <class R>
class UEElement {
  public:
    using Monomial = std::vector<int>;

    UEElement() = default;
    explicit UEElement(const LieAlgebra& alg) : alg_(&alg) {}
    UEElement(const LieAlgebra& alg, const R& scalar) : alg_(&alg) {
        add_monomial(Monomial(alg.dim(), 0), scalar);
    }

    static UEElement generator(const LieAlgebra& alg, int gen, const R& c = R(1)) {
        UEElement e(alg);
        Monomial m(alg.dim(), 0);
        m[gen] = 1;
        e.add_monomial(m, c);
        return e;
    }

    const LieAlgebra& algebra() const { return *alg_; }
    const std::map<Monomial, R>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
        return d;
    }

    void add_monomial(const Monomial& m, const R& c) {
        if (whitmod::is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end())
            terms_.emplace(m, c);
        else {
            it->second += c;
            if (whitmod::is_zero(it->second)) terms_.erase(it);
        }
    }

    UEElement& operator+=(const UEElement& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_monomial(m, c);
        return *this;
    }
    UEElement& operator-=(const UEElement& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_monomial(m, R(0) - c);
        return *this;
    }
    friend UEElement operator+(UEElement a, const UEElement& b) { return a += b; }
    friend UEElement operator-(UEElement a, const UEElement& b) { return a -= b; }
    UEElement operator-() const {
        UEElement r(*alg_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, R(0) - c);
        return r;
    }
    UEElement& scale(const R& c) {
        if (whitmod::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        std::erase_if(terms_, [](const auto& kv) { return whitmod::is_zero(kv.second); });
        return *this;
    }

    friend UEElement operator*(const UEElement& a, const UEElement& b) {
        a.check_same(b);
        UEElement out(*a.alg_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                std::vector<int> word;
                append_word(word, ma);
                append_word(word, mb);
                reduce_word(*a.alg_, std::move(word), ca * cb, out);
            }
        return out;
    }
    UEElement& operator*=(const UEElement& o) { return *this = *this * o; }

    friend UEElement commutator(const UEElement& a, const UEElement& b) { return a * b - b * a; }

    friend bool operator==(const UEElement& a, const UEElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const UEElement& a, const UEElement& b) { return !(a == b); }

    /// Keep only monomials supported on generators with keep[g] true.
    UEElement filtered(const std::vector<bool>& keep) const {
        UEElement out(*alg_);
        for (const auto& [m, c] : terms_) {
            bool ok = true;
            for (int g = 0; g < alg_->dim() && ok; ++g)
                if (m[g] > 0 && !keep[g]) ok = false;
            if (ok) out.add_monomial(m, c);
        }
        return out;
    }

    /// Re-express in another algebra: images[g] is the expansion of this
    /// algebra's generator g in the target basis.
    UEElement mapped(const LieAlgebra& target, const std::vector<std::vector<LieAlgebra::Term>>& images) const {
        UEElement out(target);
        for (const auto& [m, c] : terms_) {
            UEElement prod(target, R(1));
            for (int g = 0; g < alg_->dim(); ++g)
                for (int e = 0; e < m[g]; ++e) {
                    UEElement lin(target);
                    for (const auto& t : images[g]) lin += generator(target, t.gen, R(t.coeff));
                    prod = prod * lin;
                }
            prod.scale(c);
            out += prod;
        }
        return out;
    }

    /// Substitute commuting generators by scalars (monomials must be
    /// supported on gens that appear in `values`).
    template <class S>
    S eval(const std::map<int, S>& values) const {
        S acc = S(0);
        for (const auto& [m, c] : terms_) {
            S term = S(c);
            for (int g = 0; g < alg_->dim(); ++g) {
                if (m[g] == 0) continue;
                auto it = values.find(g);
                if (it == values.end()) throw std::invalid_argument("eval: monomial contains an unexpected generator");
                for (int e = 0; e < m[g]; ++e) term = term * it->second;
            }
            acc = acc + term;
        }
        return acc;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + str_of(c) + ")";
            for (int g = 0; g < alg_->dim(); ++g)
                for (int e = 0; e < m[g]; ++e) s += "*" + names[g];
        }
        return s;
    }

  private:
    const LieAlgebra* alg_ = nullptr;
    std::map<Monomial, R> terms_;

    void check_same(const UEElement& o) const {
        if (alg_ != o.alg_) throw std::invalid_argument("UEElement: mixing algebras");
    }
    static void append_word(std::vector<int>& w, const Monomial& m) {
        for (int g = 0; g < static_cast<int>(m.size()); ++g)
            for (int e = 0; e < m[g]; ++e) w.push_back(g);
    }
    static void reduce_word(const LieAlgebra& alg, std::vector<int> word, R coeff, UEElement& out) {
        std::vector<std::pair<std::vector<int>, R>> work;
        work.emplace_back(std::move(word), std::move(coeff));
        while (!work.empty()) {
            auto [w, c] = std::move(work.back());
            work.pop_back();
            std::size_t p = 0;
            bool sorted = true;
            for (; p + 1 < w.size(); ++p)
                if (w[p] > w[p + 1]) {
                    sorted = false;
                    break;
                }
            if (sorted) {
                Monomial m(alg.dim(), 0);
                for (int g : w) ++m[g];
                out.add_monomial(m, c);
                continue;
            }
            auto swapped = w;
            std::swap(swapped[p], swapped[p + 1]);
            for (const auto& t : alg.bracket(w[p], w[p + 1])) {
                std::vector<int> shorter;
                shorter.reserve(w.size() - 1);
                shorter.insert(shorter.end(), w.begin(), w.begin() + p);
                shorter.push_back(t.gen);
                shorter.insert(shorter.end(), w.begin() + p + 2, w.end());
                work.emplace_back(std::move(shorter), c * R(t.coeff));
            }
            work.emplace_back(std::move(swapped), std::move(c));
        }
    }
};

/// gl_N with the basis order raising < Cartan < lowering (refined lex);
/// with that order the Harish-Chandra projection is a monomial filter.
struct GLAlgebra {
    int N = 0;
    LieAlgebra alg{0};
    std::vector<std::pair<int, int>> pairs;         // generator id -> (i, j), 1-based
    std::map<std::pair<int, int>, int> index;       // (i, j) -> generator id
    int cartan_begin = 0, cartan_end = 0;           // [begin, end) in the order
    std::vector<std::string> names;

    int id(int i, int j) const { return index.at({i, j}); }
};

inline GLAlgebra make_gl_algebra(int N) {
    GLAlgebra g;
    g.N = N;
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) g.pairs.push_back({i, j});
    g.cartan_begin = static_cast<int>(g.pairs.size());
    for (int i = 1; i <= N; ++i) g.pairs.push_back({i, i});
    g.cartan_end = static_cast<int>(g.pairs.size());
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j < i; ++j) g.pairs.push_back({i, j});
    g.alg = LieAlgebra(N * N);
    for (int k = 0; k < N * N; ++k) {
        g.index[g.pairs[k]] = k;
        g.names.push_back("E" + std::to_string(g.pairs[k].first) + std::to_string(g.pairs[k].second));
    }
    // [E_ab, E_cd] = d_bc E_ad - d_da E_cb
    for (int x = 0; x < N * N; ++x)
        for (int y = x + 1; y < N * N; ++y) {
            auto [a, b] = g.pairs[x];
            auto [c, d] = g.pairs[y];
            std::vector<LieAlgebra::Term> t;
            if (b == c) t.push_back({g.index.at({a, d}), GaussianRational(1)});
            if (d == a) t.push_back({g.index.at({c, b}), GaussianRational(-1)});
            // merge if same generator
            if (t.size() == 2 && t[0].gen == t[1].gen) {
                t[0].coeff += t[1].coeff;
                t.pop_back();
                if (t[0].coeff.is_zero()) t.clear();
            }
            g.alg.set_bracket(x, y, std::move(t));
        }
    return g;
}

using PBWElement = UEElement<UPoly>;

inline PBWElement pbw_generator(const GLAlgebra& g, int i, int j) {
    return PBWElement::generator(g.alg, g.id(i, j), UPoly(GaussianRational(1)));
}

/// E_{ij}(u + c) = E_{ij} + (u + c) delta_{ij}
inline PBWElement pbw_generator_u(const GLAlgebra& g, int i, int j, long c) {
    PBWElement e = pbw_generator(g, i, j);
    if (i == j)
        e += PBWElement(g.alg, UPoly(std::vector<GaussianRational>{GaussianRational(c), GaussianRational(1)}));
    return e;
}

/// Column-determinant central element
/// C_N(u) = sum_sigma sgn(sigma) E_{sigma(N),N}(u+N-1) ... E_{sigma(1),1}(u).
inline PBWElement capelli(const GLAlgebra& g) {
    const int N = g.N;
    std::vector<int> perm(N);
    for (int i = 0; i < N; ++i) perm[i] = i + 1;
    PBWElement out(g.alg);
    do {
        int inv = 0;
        for (int a = 0; a < N; ++a)
            for (int b = a + 1; b < N; ++b)
                if (perm[a] > perm[b]) ++inv;
        PBWElement prod(g.alg, UPoly(GaussianRational(inv % 2 ? -1 : 1)));
        for (int col = N; col >= 1; --col) prod = prod * pbw_generator_u(g, perm[col - 1], col, col - 1);
        out += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline bool is_central(const GLAlgebra& g, const PBWElement& z) {
    for (int k = 0; k < g.N * g.N; ++k)
        if (!commutator(z, PBWElement::generator(g.alg, k, UPoly(GaussianRational(1)))).is_zero()) return false;
    return true;
}

/// Pure-Cartan part of the normal form (projection along
/// E_{raising} U(g) + U(g) E_{lowering} for this basis order).
inline PBWElement hc_gamma_prime(const GLAlgebra& g, const PBWElement& z) {
    std::vector<bool> keep(g.N * g.N, false);
    for (int k = g.cartan_begin; k < g.cartan_end; ++k) keep[k] = true;
    return z.filtered(keep);
}

/// chi_Lambda(z) as a polynomial in u: gamma'(z) evaluated at
/// E_pp -> Lambda_p + (N + 1 - 2p)/2.  Rejects non-central input.
inline UPoly inf_char_eval(const GLAlgebra& g, const PBWElement& z, const std::vector<Rational>& Lambda) {
    if (static_cast<int>(Lambda.size()) != g.N) throw std::invalid_argument("inf_char_eval: Lambda has wrong length");
    if (!is_central(g, z)) throw std::invalid_argument("inf_char_eval: element is not central");
    PBWElement diag = hc_gamma_prime(g, z);
    std::map<int, UPoly> values;
    for (int p = 1; p <= g.N; ++p)
        values[g.id(p, p)] = UPoly(GaussianRational(Lambda[p - 1] + frac(g.N + 1 - 2 * p, 2)));
    return diag.eval(values);
}

}  // namespace whitmod
