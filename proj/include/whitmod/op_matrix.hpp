#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "whitmod/gt_pattern.hpp"
#include "whitmod/theta_poly.hpp"

namespace whitmod {

/// Matrix of ThetaPoly entries between two partial-pattern bases.
/// entries are keyed (codomain index, domain index); within one basis all
/// patterns share the frozen rows, so lookup goes by the middle row.
class OpMatrix {
    std::vector<PartialGTPattern> domain_;
    std::vector<PartialGTPattern> codomain_;
    std::map<std::pair<std::size_t, std::size_t>, ThetaPoly> entries_;
    std::map<std::vector<long>, std::size_t> row_of_mid_;
    std::map<std::vector<long>, std::size_t> col_of_mid_;

  public:
    OpMatrix() = default;
    OpMatrix(std::vector<PartialGTPattern> domain, std::vector<PartialGTPattern> codomain)
        : domain_(std::move(domain)), codomain_(std::move(codomain)) {
        for (std::size_t c = 0; c < domain_.size(); ++c) col_of_mid_[domain_[c].mid] = c;
        for (std::size_t r = 0; r < codomain_.size(); ++r) row_of_mid_[codomain_[r].mid] = r;
    }

    static OpMatrix identity(const std::vector<PartialGTPattern>& basis) {
        OpMatrix m(basis, basis);
        for (std::size_t i = 0; i < basis.size(); ++i) m.add(i, i, ThetaPoly(RadicalSum(1)));
        return m;
    }

    const std::vector<PartialGTPattern>& domain() const { return domain_; }
    const std::vector<PartialGTPattern>& codomain() const { return codomain_; }
    const std::map<std::pair<std::size_t, std::size_t>, ThetaPoly>& entries() const { return entries_; }

    bool row_lookup(const std::vector<long>& mid, std::size_t& r) const {
        auto it = row_of_mid_.find(mid);
        if (it == row_of_mid_.end()) return false;
        r = it->second;
        return true;
    }

    void add(std::size_t row, std::size_t col, const ThetaPoly& tp) {
        if (tp.is_zero()) return;
        auto key = std::make_pair(row, col);
        auto it = entries_.find(key);
        if (it == entries_.end())
            entries_.emplace(key, tp);
        else {
            it->second += tp;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }

    ThetaPoly entry(std::size_t row, std::size_t col) const {
        auto it = entries_.find({row, col});
        return it == entries_.end() ? ThetaPoly() : it->second;
    }

    bool is_zero() const { return entries_.empty(); }

    int max_t_degree() const {
        int d = 0;
        for (const auto& [rc, tp] : entries_) d = std::max(d, tp.t_degree());
        return d;
    }
    int max_theta_degree() const {
        int d = 0;
        for (const auto& [rc, tp] : entries_) d = std::max(d, tp.theta_degree());
        return d;
    }

    friend OpMatrix operator-(const OpMatrix& a, const OpMatrix& b) {
        if (a.domain_ != b.domain_ || a.codomain_ != b.codomain_)
            throw std::invalid_argument("OpMatrix subtraction: basis mismatch");
        OpMatrix out(a.domain_, a.codomain_);
        for (const auto& [rc, tp] : a.entries_) out.add(rc.first, rc.second, tp);
        for (const auto& [rc, tp] : b.entries_) out.add(rc.first, rc.second, -tp);
        return out;
    }

    friend bool operator==(const OpMatrix& a, const OpMatrix& b) {
        return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.entries_ == b.entries_;
    }
};

/// Matrix product B*A; the intermediate bases must agree exactly.
inline OpMatrix compose(const OpMatrix& b, const OpMatrix& a) {
    if (a.codomain() != b.domain()) throw std::invalid_argument("compose: intermediate basis mismatch");
    OpMatrix out(a.domain(), b.codomain());
    // group a's entries by row for the sparse product
    std::map<std::size_t, std::vector<std::pair<std::size_t, const ThetaPoly*>>> a_by_row;
    for (const auto& [rc, tp] : a.entries()) a_by_row[rc.first].push_back({rc.second, &tp});
    for (const auto& [rc, tp] : b.entries()) {
        auto it = a_by_row.find(rc.second);
        if (it == a_by_row.end()) continue;
        for (const auto& [col, atp] : it->second) out.add(rc.first, col, tp * (*atp));
    }
    return out;
}

namespace detail {

inline std::vector<long> shifted_entries(const Weight& w, std::size_t k, long delta) {
    std::vector<long> v = w.entries();
    v.at(k - 1) += delta;
    return v;
}

}  // namespace detail

/// K-type shift operator P_k^+ on C^inf(A -> V_{(lambda/gamma)*}); the domain
/// basis carries lambda*, the codomain lambda* - e_k.  If the shifted weight
/// is not dominant the codomain is empty and the operator is zero.
inline OpMatrix shift_plus(const Weight& lambda_star, const Weight& gamma_star, std::size_t k,
                           const Rational& abs_Lambda, const CoeffTweak* tweak = nullptr) {
    const std::size_t n = lambda_star.rank();
    if (k < 1 || k > n) throw std::invalid_argument("shift_plus: k out of range");
    auto domain = enumerate_partial_gt(lambda_star, gamma_star);
    auto down = detail::shifted_entries(lambda_star, k, -1);
    if (!Weight::is_dominant(down)) return OpMatrix(domain, {});
    OpMatrix out(domain, enumerate_partial_gt(Weight(down), gamma_star));

    const Rational two_n(2 * static_cast<long>(n));
    for (std::size_t ci = 0; ci < domain.size(); ++ci) {
        const PartialGTPattern& in = domain[ci];
        const Rational lk = in.l_top(k);
        const Rational x = abs_Lambda + Rational(in.mid_sum());
        std::size_t row;
        // t^0 part: output sigma_{k,n}^- I
        {
            RadicalSum b = partial_coeff_b_top(in, k, tweak);
            PartialGTPattern o = in.shift_top(k, -1);
            if (!b.is_zero() && o.valid() && out.row_lookup(o.mid, row))
                out.add(row, ci, ThetaPoly::theta_plus(RadicalSum(-x - 2 * lk - two_n)) * ThetaPoly(b));
        }
        // t^1 part: outputs sigma_{k,n}^- sigma_{i,n-1}^- I
        for (std::size_t i = 1; i < n; ++i) {
            PartialGTPattern o = in.shift_top(k, -1).shift_mid(i, -1);
            if (!o.valid() || !out.row_lookup(o.mid, row)) continue;
            RadicalSum coef;
            if (i + 1 == k) {
                // boundary-safe form of the 0/0 term in the displayed sum
                RadicalSum num = partial_coeff_b_top(in, k, tweak) * partial_coeff_a(o, i, tweak);
                if (num.is_zero()) continue;
                Rational den = lk - in.l_mid(i);
                if (sgn(den) == 0) throw std::domain_error("shift_plus: unexpected zero denominator");
                coef = num / den;
            } else {
                RadicalSum num = partial_coeff_b_top(in.shift_mid(i, -1), k, tweak) * partial_coeff_b(in, i, tweak);
                if (num.is_zero()) continue;
                Rational den = lk - in.l_mid(i) + 1;
                if (sgn(den) == 0) throw std::domain_error("shift_plus: unexpected zero denominator");
                coef = num / den;
            }
            out.add(row, ci, ThetaPoly::monomial(1, 0, -coef));
        }
    }
    return out;
}

/// K-type shift operator P_k^-; codomain carries lambda* + e_k.
inline OpMatrix shift_minus(const Weight& lambda_star, const Weight& gamma_star, std::size_t k,
                            const Rational& abs_Lambda, const CoeffTweak* tweak = nullptr) {
    const std::size_t n = lambda_star.rank();
    if (k < 1 || k > n) throw std::invalid_argument("shift_minus: k out of range");
    auto domain = enumerate_partial_gt(lambda_star, gamma_star);
    auto up = detail::shifted_entries(lambda_star, k, +1);
    if (!Weight::is_dominant(up)) return OpMatrix(domain, {});
    OpMatrix out(domain, enumerate_partial_gt(Weight(up), gamma_star));

    for (std::size_t ci = 0; ci < domain.size(); ++ci) {
        const PartialGTPattern& in = domain[ci];
        const Rational lk = in.l_top(k);
        const Rational x = abs_Lambda + Rational(in.mid_sum());
        std::size_t row;
        {
            RadicalSum a = partial_coeff_a_top(in, k, tweak);
            PartialGTPattern o = in.shift_top(k, +1);
            if (!a.is_zero() && o.valid() && out.row_lookup(o.mid, row))
                out.add(row, ci, ThetaPoly::theta_plus(RadicalSum(x + 2 * lk + 2)) * ThetaPoly(a));
        }
        for (std::size_t i = 1; i < n; ++i) {
            PartialGTPattern o = in.shift_top(k, +1).shift_mid(i, +1);
            if (!o.valid() || !out.row_lookup(o.mid, row)) continue;
            RadicalSum coef;
            if (i == k) {
                RadicalSum num = partial_coeff_a_top(in, k, tweak) * partial_coeff_b(o, k, tweak);
                if (num.is_zero()) continue;
                Rational den = lk - in.l_mid(k) + 1;
                if (sgn(den) == 0) throw std::domain_error("shift_minus: unexpected zero denominator");
                coef = num / den;
            } else {
                RadicalSum num = partial_coeff_a_top(in.shift_mid(i, +1), k, tweak) * partial_coeff_a(in, i, tweak);
                if (num.is_zero()) continue;
                Rational den = lk - in.l_mid(i);
                if (sgn(den) == 0) throw std::domain_error("shift_minus: unexpected zero denominator");
                coef = num / den;
            }
            out.add(row, ci, ThetaPoly::monomial(1, 0, coef));
        }
    }
    return out;
}

/// D_{lambda,gamma}(C_{n+1}(u)) at a rational u.  The S(Q) prefactor is
/// distributed through the bracket, which cancels every 1/(u - l_{p,n-1})
/// exactly, so all entries are polynomial in u.  Terms are dropped when
/// their a/b numerator vanishes (equivalently, the shifted input pattern
/// leaves the basis).
inline OpMatrix central_action(const Weight& lambda_star, const Weight& gamma_star, const Rational& u,
                               const Rational& abs_Lambda, const CoeffTweak* tweak = nullptr) {
    const std::size_t n = lambda_star.rank();
    auto basis = enumerate_partial_gt(lambda_star, gamma_star);
    OpMatrix out(basis, basis);
    const Rational quarter(1, 4);
    const Rational nn(static_cast<long>(n));

    for (std::size_t r = 0; r < basis.size(); ++r) {
        const PartialGTPattern& q = basis[r];
        const Rational x = abs_Lambda + Rational(q.mid_sum());
        std::vector<Rational> lm(n);  // 1-based
        for (std::size_t p = 1; p < n; ++p) lm[p] = q.l_mid(p);
        Rational s_all = 1;
        for (std::size_t p = 1; p < n; ++p) s_all *= u - lm[p];
        auto prod_except = [&](std::size_t skip1, std::size_t skip2) {
            Rational pr = 1;
            for (std::size_t p = 1; p < n; ++p)
                if (p != skip1 && p != skip2) pr *= u - lm[p];
            return pr;
        };

        // diagonal: -1/4 S [(th-n)^2 - (X+2u+n)^2] + 1/4 (S*A) t^2
        {
            ThetaPoly th2 = ThetaPoly::theta_plus(RadicalSum(-nn)) * ThetaPoly::theta_plus(RadicalSum(-nn));
            Rational w = x + 2 * u + nn;
            ThetaPoly diag = (th2 - ThetaPoly(RadicalSum(w * w))) * ThetaPoly(RadicalSum(-quarter * s_all));
            RadicalSum sa(s_all);
            for (std::size_t p = 1; p < n; ++p) {
                RadicalSum a = partial_coeff_a(q, p, tweak);
                RadicalSum b = partial_coeff_b(q, p, tweak);
                sa -= (a * a - b * b) * RadicalSum(prod_except(p, 0));
            }
            diag += ThetaPoly::monomial(2, 0, sa * RadicalSum(quarter));
            out.add(r, r, diag);
        }
        // single shifts
        for (std::size_t p = 1; p < n; ++p) {
            std::size_t col;
            {
                PartialGTPattern up = q.shift_mid(p, +1);
                RadicalSum a = partial_coeff_a(q, p, tweak);
                if (!a.is_zero() && up.valid() && out.row_lookup(up.mid, col)) {
                    ThetaPoly tp = ThetaPoly::monomial(1, 0, a * RadicalSum(quarter * prod_except(p, 0))) *
                                   ThetaPoly::theta_plus(RadicalSum(x + 1 + 2 * u));
                    out.add(r, col, tp);
                }
            }
            {
                PartialGTPattern dn = q.shift_mid(p, -1);
                RadicalSum b = partial_coeff_b(q, p, tweak);
                if (!b.is_zero() && dn.valid() && out.row_lookup(dn.mid, col)) {
                    ThetaPoly tp = ThetaPoly::monomial(1, 0, -b * RadicalSum(quarter * prod_except(p, 0))) *
                                   ThetaPoly::theta_plus(RadicalSum(-x + 1 - 2 * nn - 2 * u));
                    out.add(r, col, tp);
                }
            }
        }
        // double shifts
        for (std::size_t p = 1; p < n; ++p) {
            RadicalSum b = partial_coeff_b(q, p, tweak);
            if (b.is_zero()) continue;
            PartialGTPattern qdn = q.shift_mid(p, -1);
            for (std::size_t rr = 1; rr < n; ++rr) {
                if (rr == p) continue;
                PartialGTPattern in = qdn.shift_mid(rr, +1);
                std::size_t col;
                if (!in.valid() || !out.row_lookup(in.mid, col)) continue;
                RadicalSum a2 = partial_coeff_a(qdn, rr, tweak);
                if (a2.is_zero()) continue;
                out.add(r, col, ThetaPoly::monomial(2, 0, b * a2 * RadicalSum(quarter * prod_except(p, rr))));
            }
        }
    }
    return out;
}

struct ShiftCentralResidual {
    OpMatrix minus_after_plus;  // P_k^- P_k^+ - D(C_{n+1}(l_{k,n}))
    OpMatrix plus_after_minus;  // P_k^+ P_k^- - D(C_{n+1}(l_{k,n}+1))
    bool zero() const { return minus_after_plus.is_zero() && plus_after_minus.is_zero(); }
};

/// Residuals of the two central identities for the shift operators.
inline ShiftCentralResidual check_shift_central(const Weight& lambda_star, const Weight& gamma_star, std::size_t k,
                                                const Rational& abs_Lambda, const CoeffTweak* tweak = nullptr) {
    const Rational lk = Rational(lambda_star[k - 1]) - Rational(static_cast<long>(k));
    auto domain = enumerate_partial_gt(lambda_star, gamma_star);

    auto composite = [&](int first_dir) -> OpMatrix {
        // first_dir = +1: P- after P+; first_dir = -1: P+ after P-.
        auto mids = detail::shifted_entries(lambda_star, k, -first_dir);
        if (!Weight::is_dominant(mids)) return OpMatrix(domain, domain);  // both factors vanish
        Weight wmid(mids);
        if (first_dir > 0)
            return compose(shift_minus(wmid, gamma_star, k, abs_Lambda, tweak),
                           shift_plus(lambda_star, gamma_star, k, abs_Lambda, tweak));
        return compose(shift_plus(wmid, gamma_star, k, abs_Lambda, tweak),
                       shift_minus(lambda_star, gamma_star, k, abs_Lambda, tweak));
    };

    ShiftCentralResidual res{
        composite(+1) - central_action(lambda_star, gamma_star, lk, abs_Lambda, tweak),
        composite(-1) - central_action(lambda_star, gamma_star, lk + 1, abs_Lambda, tweak),
    };
    return res;
}

struct QuadraticIdentityResult {
    RadicalSum residual;  // 1 - sum_p a_p^2/(l_kn - l_p) + sum_p b_p^2/(l_kn - l_p + 1)
    bool degenerate;      // a displayed denominator vanishes; the comparison collapses there
};

/// Coefficient identity behind the central property of P_k^- P_k^+.  When
/// some l_{p,n-1} hits l_{k,n} or l_{k,n}+1 the corresponding numerator
/// vanishes too and the displayed comparison degenerates (the composition
/// identity then goes through its boundary form instead); such pattern/k
/// pairs are flagged degenerate and reported, not asserted.
inline QuadraticIdentityResult quadratic_identity_residual(const PartialGTPattern& q, std::size_t k,
                                                           const CoeffTweak* tweak = nullptr) {
    if (!q.valid()) throw std::invalid_argument("quadratic_identity_residual: invalid pattern");
    const std::size_t n = q.lambda_star.size();
    if (k < 1 || k > n) throw std::invalid_argument("quadratic_identity_residual: k out of range");
    const Rational lk = q.l_top(k);
    RadicalSum residual(1);
    bool degenerate = false;
    for (std::size_t p = 1; p < n; ++p) {
        Rational den_a = lk - q.l_mid(p);
        Rational den_b = den_a + 1;
        if (sgn(den_a) == 0 || sgn(den_b) == 0) degenerate = true;
        RadicalSum a = partial_coeff_a(q, p, tweak);
        if (!a.is_zero()) {
            if (sgn(den_a) == 0) throw std::domain_error("quadratic identity: zero denominator with nonzero numerator");
            residual -= a * a / den_a;
        }
        RadicalSum b = partial_coeff_b(q, p, tweak);
        if (!b.is_zero()) {
            if (sgn(den_b) == 0) throw std::domain_error("quadratic identity: zero denominator with nonzero numerator");
            residual += b * b / den_b;
        }
    }
    return {residual, degenerate};
}

struct InjectivityReport {
    bool hypothesis = false;  // strict inequality of the vanishing condition
    bool vacuous = false;     // empty domain basis
    bool certified = false;   // pivot elimination emptied the domain
    // (eliminated input pattern, pivot entry) in elimination order
    std::vector<std::pair<PartialGTPattern, ThetaPoly>> pivots;
};

/// Vanishing-lemma hypothesis for P_k^{direction} plus a mechanical run of
/// the proof's pivot chain: repeatedly find an output row whose only
/// uneliminated input carries a nonzero entry (such an entry annihilates no
/// nonzero truncated series with generic exponent), and eliminate it.
inline InjectivityReport injectivity_hypothesis(const Weight& lambda_star, const Weight& gamma_star, std::size_t k,
                                                int direction) {
    const std::size_t n = lambda_star.rank();
    if (direction > 0 && !(2 <= k && k <= n)) throw std::invalid_argument("injectivity_hypothesis: k out of range for +");
    if (direction < 0 && !(1 <= k && k <= n - 1)) throw std::invalid_argument("injectivity_hypothesis: k out of range for -");

    InjectivityReport rep;
    // conventions: gamma*_0 = +infinity, gamma*_{n-1} = -infinity
    bool lo_sentinel = (k == 1), hi_sentinel = (k - 1 > gamma_star.rank());
    if (direction > 0)
        rep.hypothesis = hi_sentinel || (!lo_sentinel && gamma_star[k - 2] < lambda_star[k - 1]);
    else
        rep.hypothesis = lo_sentinel || (!hi_sentinel && gamma_star[k - 2] > lambda_star[k - 1]);
    if (!rep.hypothesis) return rep;

    OpMatrix p = direction > 0 ? shift_plus(lambda_star, gamma_star, k, Rational(0))
                               : shift_minus(lambda_star, gamma_star, k, Rational(0));
    // |Lambda| only shifts the theta-constant; it does not affect which
    // entries vanish, so 0 is as good as any for the chain.
    if (p.domain().empty()) {
        rep.vacuous = rep.certified = true;
        return rep;
    }
    std::set<std::size_t> eliminated;
    bool progress = true;
    while (progress && eliminated.size() < p.domain().size()) {
        progress = false;
        for (std::size_t r = 0; r < p.codomain().size() && !progress; ++r) {
            std::size_t live_col = 0;
            int live = 0;
            for (const auto& [rc, tp] : p.entries()) {
                if (rc.first != r || eliminated.count(rc.second)) continue;
                ++live;
                live_col = rc.second;
                if (live > 1) break;
            }
            if (live == 1) {
                rep.pivots.push_back({p.domain()[live_col], p.entry(r, live_col)});
                eliminated.insert(live_col);
                progress = true;
            }
        }
    }
    rep.certified = eliminated.size() == p.domain().size();
    return rep;
}

}  // namespace whitmod
