#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "whitmod/radical.hpp"
#include "whitmod/weight.hpp"

namespace whitmod {

namespace detail {

// Shifted entries of one row: l(kappa) = row[kappa-1] - kappa, 1-based kappa.
inline Rational row_l(const std::vector<long>& row, std::size_t kappa) {
    return Rational(row[kappa - 1] - static_cast<long>(kappa));
}

}  // namespace detail

/// Coefficient of the raising shift at position i of `row`, computed from the
/// two neighbour rows.  Nonnegative square root; returns 0 exactly when the
/// raised array violates interlacing.  row_below may be empty (bottom row).
inline RadicalSum gt_coeff_a(const std::vector<long>& row_below, const std::vector<long>& row,
                             const std::vector<long>& row_above, std::size_t i) {
    if (i < 1 || i > row.size()) throw std::invalid_argument("gt_coeff_a: index out of range");
    Rational li = detail::row_l(row, i);
    Rational num = 1;
    for (std::size_t k = 1; k <= row_above.size(); ++k) num *= detail::row_l(row_above, k) - li;
    for (std::size_t k = 1; k <= row_below.size(); ++k) num *= detail::row_l(row_below, k) - li - 1;
    if (sgn(num) == 0) return RadicalSum();
    Rational den = 1;
    for (std::size_t k = 1; k <= row.size(); ++k) {
        if (k == i) continue;
        den *= (detail::row_l(row, k) - li) * (detail::row_l(row, k) - li - 1);
    }
    if (sgn(den) == 0) throw std::domain_error("gt_coeff_a: zero denominator with nonzero numerator");
    return RadicalSum::sqrt_of(abs(num / den));
}

inline RadicalSum gt_coeff_b(const std::vector<long>& row_below, std::vector<long> row,
                             const std::vector<long>& row_above, std::size_t i) {
    row.at(i - 1) -= 1;  // b_i(Q) = a_i(sigma_i^- Q)
    return gt_coeff_a(row_below, row, row_above, i);
}

/// Gelfand-Tsetlin pattern for U(m): rows_[j] has j+1 entries (0-based),
/// consecutive rows interlace, top row rows_[m-1] is the highest weight.
class GTPattern {
    std::vector<std::vector<long>> rows_;

  public:
    GTPattern() = default;
    explicit GTPattern(std::vector<std::vector<long>> rows) : rows_(std::move(rows)) {
        for (std::size_t j = 0; j < rows_.size(); ++j)
            if (rows_[j].size() != j + 1) throw std::invalid_argument("GTPattern: row " + std::to_string(j + 1) + " has wrong length");
    }

    std::size_t size() const { return rows_.size(); }
    const std::vector<long>& row(std::size_t j) const { return rows_.at(j - 1); }  // 1-based
    const std::vector<std::vector<long>>& rows() const { return rows_; }
    long entry(std::size_t i, std::size_t j) const { return rows_.at(j - 1).at(i - 1); }  // q_{i,j}
    Weight top() const { return Weight(rows_.back()); }

    long row_sum(std::size_t j) const {  // |q_j|, with |q_0| = 0
        if (j == 0) return 0;
        long s = 0;
        for (long x : row(j)) s += x;
        return s;
    }

    bool valid() const {
        for (std::size_t j = 0; j + 1 < rows_.size(); ++j)
            for (std::size_t i = 0; i <= j; ++i)
                if (!(rows_[j + 1][i] >= rows_[j][i] && rows_[j][i] >= rows_[j + 1][i + 1])) return false;
        return true;
    }

    GTPattern shifted(std::size_t i, std::size_t j, long delta) const {  // sigma_{i,j}^{+-}
        GTPattern q = *this;
        q.rows_.at(j - 1).at(i - 1) += delta;
        return q;
    }

    /// Dual pattern: every row reversed and negated; involutive.
    GTPattern dual() const {
        GTPattern q = *this;
        for (auto& r : q.rows_) {
            std::reverse(r.begin(), r.end());
            for (long& x : r) x = -x;
        }
        return q;
    }

    friend bool operator==(const GTPattern& a, const GTPattern& b) { return a.rows_ == b.rows_; }
    friend bool operator!=(const GTPattern& a, const GTPattern& b) { return !(a == b); }
    friend bool operator<(const GTPattern& a, const GTPattern& b) { return a.rows_ < b.rows_; }

    std::string str() const {
        std::string s;
        for (std::size_t j = rows_.size(); j-- > 0;) {
            s += "[";
            for (std::size_t i = 0; i < rows_[j].size(); ++i) {
                if (i) s += ",";
                s += std::to_string(rows_[j][i]);
            }
            s += "]";
        }
        return s;
    }
};

/// All patterns with the given top row, in lexicographic row order.
inline std::vector<GTPattern> enumerate_gt(const Weight& lambda) {
    if (!Weight::is_dominant(lambda.entries())) throw std::invalid_argument("enumerate_gt: weight not dominant");
    std::size_t m = lambda.rank();
    std::vector<GTPattern> out;
    if (m == 0) {
        out.push_back(GTPattern());
        return out;
    }
    std::vector<std::vector<long>> rows(m);
    rows[m - 1] = lambda.entries();
    auto rec = [&](auto&& self, std::size_t j) -> void {  // fill row j (0-based), below row j+1
        if (j == static_cast<std::size_t>(-1)) {
            out.push_back(GTPattern(rows));
            return;
        }
        const auto& above = rows[j + 1];
        std::vector<long> cur(j + 1);
        auto fill = [&](auto&& f, std::size_t i) -> void {
            if (i == j + 1) {
                rows[j] = cur;
                self(self, j - 1);
                return;
            }
            long hi = above[i];
            long lo = above[i + 1];
            for (long v = lo; v <= hi; ++v) {  // ascending => lexicographic output
                cur[i] = v;
                f(f, i + 1);
            }
        };
        fill(fill, 0);
    };
    rec(rec, m - 2);
    std::sort(out.begin(), out.end());
    return out;
}

/// (a_{i,j}(Q), b_{i,j}(Q)) for a full pattern, 1 <= i <= j < m.
inline std::pair<RadicalSum, RadicalSum> gt_coeffs(const GTPattern& q, std::size_t i, std::size_t j) {
    if (!(1 <= i && i <= j && j < q.size())) throw std::invalid_argument("gt_coeffs: indices out of range");
    static const std::vector<long> kEmpty;
    const auto& below = (j >= 2) ? q.row(j - 1) : kEmpty;
    return {gt_coeff_a(below, q.row(j), q.row(j + 1), i), gt_coeff_b(below, q.row(j), q.row(j + 1), i)};
}

/// Formal combination of patterns sharing one top row.
using GTVector = std::map<GTPattern, RadicalSum>;

inline void gtv_add(GTVector& v, const GTPattern& q, const RadicalSum& c) {
    if (c.is_zero()) return;
    auto it = v.find(q);
    if (it == v.end())
        v.emplace(q, c);
    else {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

namespace detail {

inline void check_single_weight(const GTVector& v) {
    for (const auto& [q, c] : v)
        if (q.rows().back() != v.begin()->first.rows().back())
            throw std::invalid_argument("GT action: mixed-weight input");
}

}  // namespace detail

/// E_{j,j+1}: raises row j entrywise with the a-coefficients.
inline GTVector act_raise(std::size_t j, const GTVector& v) {
    detail::check_single_weight(v);
    GTVector out;
    static const std::vector<long> kEmpty;
    for (const auto& [q, c] : v) {
        if (!(j >= 1 && j + 1 <= q.size())) throw std::invalid_argument("act_raise: row out of range");
        const auto& below = (j >= 2) ? q.row(j - 1) : kEmpty;
        for (std::size_t i = 1; i <= j; ++i) {
            RadicalSum a = gt_coeff_a(below, q.row(j), q.row(j + 1), i);
            if (!a.is_zero()) gtv_add(out, q.shifted(i, j, +1), a * c);
        }
    }
    return out;
}

/// E_{j+1,j}: lowers row j entrywise with the b-coefficients.
inline GTVector act_lower(std::size_t j, const GTVector& v) {
    detail::check_single_weight(v);
    GTVector out;
    static const std::vector<long> kEmpty;
    for (const auto& [q, c] : v) {
        if (!(j >= 1 && j + 1 <= q.size())) throw std::invalid_argument("act_lower: row out of range");
        const auto& below = (j >= 2) ? q.row(j - 1) : kEmpty;
        for (std::size_t i = 1; i <= j; ++i) {
            RadicalSum b = gt_coeff_b(below, q.row(j), q.row(j + 1), i);
            if (!b.is_zero()) gtv_add(out, q.shifted(i, j, -1), b * c);
        }
    }
    return out;
}

/// E_{jj}: multiplies by |q_j| - |q_{j-1}|.
inline GTVector act_diag(std::size_t j, const GTVector& v) {
    detail::check_single_weight(v);
    GTVector out;
    for (const auto& [q, c] : v) {
        if (!(j >= 1 && j <= q.size())) throw std::invalid_argument("act_diag: row out of range");
        gtv_add(out, q, RadicalSum(Rational(q.row_sum(j) - q.row_sum(j - 1))) * c);
    }
    return out;
}

/// General E_{ij} via nested commutators of adjacent generators
/// (E_{i,j} = [E_{i,i+1}, E_{i+1,j}] going up, [E_{i,i-1}, E_{i-1,j}] going down).
inline GTVector act_eij(std::size_t i, std::size_t j, const GTVector& v) {
    if (v.empty()) return {};
    if (i == j) return act_diag(i, v);
    if (j == i + 1) return act_raise(i, v);
    if (i == j + 1) return act_lower(j, v);
    GTVector out;
    auto sub = [](GTVector a, const GTVector& b) {
        for (const auto& [q, c] : b) gtv_add(a, q, -c);
        return a;
    };
    if (i < j) return sub(act_eij(i, i + 1, act_eij(i + 1, j, v)), act_eij(i + 1, j, act_eij(i, i + 1, v)));
    return sub(act_eij(i, i - 1, act_eij(i - 1, j, v)), act_eij(i - 1, j, act_eij(i, i - 1, v)));
}

// ---------------------------------------------------------------------------
// Partial patterns: rows n-2, n-1, n with the outer rows frozen at gamma*
// and lambda*.  These index bases of Hom_{M^eta}(V_lambda, V_gamma).
// ---------------------------------------------------------------------------

struct PartialGTPattern {
    int n = 0;                      // group is U(n,1); rows live at levels n-2, n-1, n
    std::vector<long> gamma_star;   // n-2 entries
    std::vector<long> mid;          // n-1 entries
    std::vector<long> lambda_star;  // n entries

    bool well_formed() const {
        return n >= 2 && gamma_star.size() == static_cast<std::size_t>(n - 2) &&
               mid.size() == static_cast<std::size_t>(n - 1) && lambda_star.size() == static_cast<std::size_t>(n);
    }

    bool valid() const {
        if (!well_formed()) return false;
        for (int i = 0; i + 1 < n; ++i)
            if (!(lambda_star[i] >= mid[i] && mid[i] >= lambda_star[i + 1])) return false;
        for (int i = 0; i + 2 < n; ++i)
            if (!(mid[i] >= gamma_star[i] && gamma_star[i] >= mid[i + 1])) return false;
        return true;
    }

    long mid_sum() const {
        long s = 0;
        for (long x : mid) s += x;
        return s;
    }
    Rational l_mid(std::size_t p) const { return detail::row_l(mid, p); }        // 1-based
    Rational l_top(std::size_t k) const { return detail::row_l(lambda_star, k); }  // 1-based

    PartialGTPattern shift_mid(std::size_t i, long delta) const {
        PartialGTPattern p = *this;
        p.mid.at(i - 1) += delta;
        return p;
    }
    PartialGTPattern shift_top(std::size_t k, long delta) const {
        PartialGTPattern p = *this;
        p.lambda_star.at(k - 1) += delta;
        return p;
    }

    friend bool operator==(const PartialGTPattern& a, const PartialGTPattern& b) {
        return a.n == b.n && a.gamma_star == b.gamma_star && a.mid == b.mid && a.lambda_star == b.lambda_star;
    }
    friend bool operator<(const PartialGTPattern& a, const PartialGTPattern& b) {
        if (a.lambda_star != b.lambda_star) return a.lambda_star < b.lambda_star;
        if (a.mid != b.mid) return a.mid < b.mid;
        return a.gamma_star < b.gamma_star;
    }

    std::string str() const {
        auto row = [](const std::vector<long>& r) {
            std::string s = "[";
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(r[i]);
            }
            return s + "]";
        };
        return row(lambda_star) + row(mid) + row(gamma_star);
    }
};

/// Basis of Hom_{M^eta}(V_lambda, V_gamma): all middle rows interlacing both
/// frozen rows, lexicographic in mid.  The U(1) part of sigma rides along as
/// bookkeeping (|lambda| = |Lambda|) and imposes no constraint here.
inline std::vector<PartialGTPattern> enumerate_partial_gt(const Weight& lambda_star, const Weight& gamma_star) {
    int n = static_cast<int>(lambda_star.rank());
    if (n < 2) throw std::invalid_argument("enumerate_partial_gt: need rank >= 2");
    if (gamma_star.rank() + 2 != lambda_star.rank())
        throw std::invalid_argument("enumerate_partial_gt: gamma* rank must be n-2");
    std::vector<PartialGTPattern> out;
    std::vector<long> cur(n - 1);
    auto rec = [&](auto&& self, int i) -> void {  // 0-based position in mid
        if (i == n - 1) {
            PartialGTPattern p{n, gamma_star.entries(), cur, lambda_star.entries()};
            if (p.valid()) out.push_back(p);
            return;
        }
        long hi = lambda_star[i];
        long lo = lambda_star[i + 1];
        if (i >= 1 && i - 1 < n - 2) hi = std::min(hi, gamma_star[i - 1]);
        if (i < n - 2) lo = std::max(lo, gamma_star[i]);
        for (long v = lo; v <= hi; ++v) {
            cur[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Test hook: additively perturb one named coefficient evaluation.
struct CoeffTweak {
    enum class Kind { InnerA, InnerB, TopA, TopB };
    Kind kind;
    std::size_t index;  // 1-based i (inner) or k (top)
    std::vector<long> mid;
    std::vector<long> lambda_star;
    RadicalSum delta;
};

namespace detail {

inline RadicalSum apply_tweak(RadicalSum value, CoeffTweak::Kind kind, std::size_t index,
                              const PartialGTPattern& p, const CoeffTweak* tweak) {
    if (tweak && tweak->kind == kind && tweak->index == index && tweak->mid == p.mid &&
        tweak->lambda_star == p.lambda_star)
        value += tweak->delta;
    return value;
}

}  // namespace detail

/// a_{i,n-1}, b_{i,n-1} on partial patterns (may be evaluated on shifted,
/// not-necessarily-valid arrays; callers guarantee well-definedness).
inline RadicalSum partial_coeff_a(const PartialGTPattern& p, std::size_t i, const CoeffTweak* tweak = nullptr) {
    return detail::apply_tweak(gt_coeff_a(p.gamma_star, p.mid, p.lambda_star, i), CoeffTweak::Kind::InnerA, i, p, tweak);
}

inline RadicalSum partial_coeff_b(const PartialGTPattern& p, std::size_t i, const CoeffTweak* tweak = nullptr) {
    return detail::apply_tweak(gt_coeff_b(p.gamma_star, p.mid, p.lambda_star, i), CoeffTweak::Kind::InnerB, i, p, tweak);
}

/// Top-row shift coefficients a_{k,n}, b_{k,n}.  The defining squares
///   a_{k,n}^2 = -1/4 prod_p (l_{k,n} + 1 - l_{p,n-1}),
///   b_{k,n}^2 = -1/4 prod_p (l_{k,n} - l_{p,n-1}),
/// with the principal branch (values in R>=0 or i*R>=0), are forced by the
/// composition identities P_k^- P_k^+ = D(C_{n+1}(l_{k,n})) and its mirror;
/// they satisfy b_{k,n}(Q) = a_{k,n}(sigma_{k,n}^- Q).
inline RadicalSum partial_coeff_a_top(const PartialGTPattern& p, std::size_t k, const CoeffTweak* tweak = nullptr) {
    Rational prod(-1, 4);
    for (std::size_t q = 1; q < p.lambda_star.size(); ++q) prod *= p.l_top(k) + 1 - p.l_mid(q);
    return detail::apply_tweak(RadicalSum::sqrt_of(prod), CoeffTweak::Kind::TopA, k, p, tweak);
}

inline RadicalSum partial_coeff_b_top(const PartialGTPattern& p, std::size_t k, const CoeffTweak* tweak = nullptr) {
    Rational prod(-1, 4);
    for (std::size_t q = 1; q < p.lambda_star.size(); ++q) prod *= p.l_top(k) - p.l_mid(q);
    return detail::apply_tweak(RadicalSum::sqrt_of(prod), CoeffTweak::Kind::TopB, k, p, tweak);
}

}  // namespace whitmod
