#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "whitmod/rational.hpp"

namespace whitmod {

/// Dominant integral weight of U(m): weakly decreasing integer entries.
class Weight {
    std::vector<long> e_;

  public:
    Weight() = default;
    explicit Weight(std::vector<long> entries) : e_(std::move(entries)) {
        for (std::size_t p = 0; p + 1 < e_.size(); ++p)
            if (e_[p] < e_[p + 1]) throw std::invalid_argument("weight is not weakly decreasing");
    }

    static bool is_dominant(const std::vector<long>& v) {
        for (std::size_t p = 0; p + 1 < v.size(); ++p)
            if (v[p] < v[p + 1]) return false;
        return true;
    }

    std::size_t rank() const { return e_.size(); }
    long operator[](std::size_t p) const { return e_.at(p); }  // 0-based
    const std::vector<long>& entries() const { return e_; }
    long sum() const {
        long s = 0;
        for (long x : e_) s += x;
        return s;
    }

    /// Highest weight of the contragredient representation.
    Weight dual() const {
        std::vector<long> d(e_.rbegin(), e_.rend());
        for (long& x : d) x = -x;
        return Weight(std::move(d));
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b) { return a.e_ < b.e_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t p = 0; p < e_.size(); ++p) {
            if (p) s += ",";
            s += std::to_string(e_[p]);
        }
        return s + ")";
    }
};

/// dim V_lambda for U(m) by the Weyl dimension formula,
/// prod_{p<q} (l_p - l_q + q - p) / (q - p).
inline Integer weyl_dim(const Weight& lambda) {
    const auto& l = lambda.entries();
    Rational d = 1;
    for (std::size_t p = 0; p < l.size(); ++p)
        for (std::size_t q = p + 1; q < l.size(); ++q)
            d *= frac(l[p] - l[q] + static_cast<long>(q - p), static_cast<long>(q - p));
    if (!is_integer(d)) throw std::domain_error("Weyl dimension did not come out integral");
    return d.get_num();
}

/// U(m) -> U(m-1) branching: 1 iff lambda_p >= mu_p >= lambda_{p+1} for all p.
inline int branch_multiplicity(const Weight& lambda, const Weight& mu) {
    if (mu.rank() + 1 != lambda.rank()) throw std::invalid_argument("branch_multiplicity: ranks must differ by one");
    for (std::size_t p = 0; p < mu.rank(); ++p)
        if (!(lambda[p] >= mu[p] && mu[p] >= lambda[p + 1])) return 0;
    return 1;
}

/// All mu of rank m-1 interlacing lambda.
inline std::vector<Weight> branch_weights(const Weight& lambda) {
    std::vector<Weight> out;
    std::vector<long> cur(lambda.rank() - 1);
    auto rec = [&](auto&& self, std::size_t p) -> void {
        if (p == cur.size()) {
            out.emplace_back(cur);
            return;
        }
        long hi = lambda[p];
        long lo = lambda[p + 1];
        if (p > 0) hi = std::min(hi, cur[p - 1]);
        for (long v = hi; v >= lo; --v) {
            cur[p] = v;
            self(self, p + 1);
        }
    };
    if (lambda.rank() == 0) return out;
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace whitmod
