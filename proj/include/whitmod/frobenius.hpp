#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "whitmod/op_matrix.hpp"

namespace whitmod {

/// Truncated Frobenius series  t^s * sum_{m<=order} coeffs[m]  over a
/// partial-pattern basis.
struct SeriesSolution {
    Rational exponent;
    std::size_t seed = 0;  // basis index carrying the leading coefficient
    std::vector<std::vector<RadicalSum>> coeffs;  // coeffs[m][basis index]
    int order = 0;
    bool resonant = false;        // some higher order hit a vanishing indicial value
    bool log_obstructed = false;  // ... with nonzero right-hand side; series stops there
};

namespace detail {

// rational polynomial in theta from the t^0 diagonal entry, minus chi
inline std::vector<Rational> indicial_poly(const OpMatrix& op, std::size_t q, const Rational& chi) {
    std::vector<RadicalSum> tp = op.entry(q, q).theta_part(0);
    std::vector<Rational> out(std::max<std::size_t>(tp.size(), 1), Rational(0));
    for (std::size_t k = 0; k < tp.size(); ++k) {
        if (!tp[k].is_rational()) throw std::invalid_argument("frobenius: indicial data is not rational");
        out[k] = tp[k].rational_part();
    }
    out[0] -= chi;
    while (out.size() > 1 && sgn(out.back()) == 0) out.pop_back();
    return out;
}

inline Rational poly_eval(const std::vector<Rational>& p, const Rational& x) {
    Rational acc = 0;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

// exact rational roots; nullopt marks "identically zero" (every s is a root)
inline std::optional<std::vector<Rational>> rational_roots(const std::vector<Rational>& p) {
    if (p.size() == 1 && sgn(p[0]) == 0) return std::nullopt;
    std::vector<Rational> roots;
    if (p.size() == 1) return roots;
    if (p.size() == 2) {
        roots.push_back(-p[0] / p[1]);
        return roots;
    }
    if (p.size() == 3) {
        Rational disc = p[1] * p[1] - 4 * p[2] * p[0];
        if (sgn(disc) < 0) return roots;
        Integer num = disc.get_num(), den = disc.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return roots;
        Integer sn, sd;
        mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
        Rational sq(sn, sd);
        sq.canonicalize();
        roots.push_back((-p[1] + sq) / (2 * p[2]));
        if (sgn(disc) != 0) roots.push_back((-p[1] - sq) / (2 * p[2]));
        return roots;
    }
    throw std::invalid_argument("frobenius: indicial polynomial degree > 2 unsupported");
}

}  // namespace detail

/// Exact indicial roots of the joint system { op_r phi = chi_r phi }:
/// one (root, seed pattern) per basis index whose diagonal indicial
/// polynomials vanish simultaneously.  Requires each operator's t^0 part
/// to be diagonal (theta-form regular singularity at t = 0).
inline std::vector<std::pair<Rational, std::size_t>> indicial_roots(
    const std::vector<std::pair<OpMatrix, Rational>>& ops) {
    if (ops.empty()) throw std::invalid_argument("frobenius: no operators");
    const auto& basis = ops[0].first.domain();
    for (const auto& [op, chi] : ops) {
        if (op.domain() != basis || op.codomain() != basis) throw std::invalid_argument("frobenius: operators must share one square basis");
        for (const auto& [rc, tp] : op.entries())
            if (rc.first != rc.second && !tp.theta_part(0).empty())
                throw std::invalid_argument("frobenius: t^0 part not diagonal; not in regular-singular theta form");
    }
    std::vector<std::pair<Rational, std::size_t>> out;
    for (std::size_t q = 0; q < basis.size(); ++q) {
        std::optional<std::vector<Rational>> candidates;
        for (const auto& [op, chi] : ops) {
            auto roots = detail::rational_roots(detail::indicial_poly(op, q, chi));
            if (!roots) continue;  // identically zero: no constraint from this operator
            candidates = std::move(roots);
            break;
        }
        if (!candidates) throw std::invalid_argument("frobenius: joint indicial system under-determined");
        for (const Rational& s : *candidates) {
            bool ok = true;
            for (const auto& [op, chi] : ops)
                if (sgn(detail::poly_eval(detail::indicial_poly(op, q, chi), s)) != 0) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back({s, q});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Frobenius solutions of the joint system up to the truncation order.
/// Resonant orders with vanishing right-hand side continue with zero
/// coefficient; a nonzero right-hand side marks the solution log-obstructed
/// and stops it (logarithmic solutions are reported, not constructed).
inline std::vector<SeriesSolution> frobenius(const std::vector<std::pair<OpMatrix, Rational>>& ops, int order) {
    auto roots = indicial_roots(ops);
    const auto& basis = ops[0].first.domain();
    const std::size_t dim = basis.size();

    std::vector<SeriesSolution> sols;
    for (const auto& [s, seed] : roots) {
        SeriesSolution sol;
        sol.exponent = s;
        sol.seed = seed;
        sol.order = order;
        sol.coeffs.assign(1, std::vector<RadicalSum>(dim));
        sol.coeffs[0][seed] = RadicalSum(1);

        for (int m = 1; m <= order && !sol.log_obstructed; ++m) {
            // rhs_r[q] = - sum_{a>=1} (t^a theta-part of op_r, evaluated at s+m-a) phi_{m-a}
            std::vector<std::vector<RadicalSum>> rhs(ops.size(), std::vector<RadicalSum>(dim));
            for (std::size_t r = 0; r < ops.size(); ++r)
                for (const auto& [rc, tp] : ops[r].first.entries())
                    for (const auto& [mk, c] : tp.terms()) {
                        int a = mk.first;
                        if (a < 1 || a > m) continue;
                        const RadicalSum& prev = sol.coeffs[m - a][rc.second];
                        if (prev.is_zero()) continue;
                        rhs[r][rc.first] -= c * RadicalSum(pow_rational(s + (m - a), mk.second)) * prev;
                    }
            std::vector<RadicalSum> phi(dim);
            for (std::size_t q = 0; q < dim; ++q) {
                bool solved = false;
                for (std::size_t r = 0; r < ops.size() && !solved; ++r) {
                    Rational d = detail::poly_eval(detail::indicial_poly(ops[r].first, q, ops[r].second), s + m);
                    if (sgn(d) != 0) {
                        phi[q] = rhs[r][q] / d;
                        solved = true;
                    }
                }
                if (!solved) {
                    bool all_zero = true;
                    for (std::size_t r = 0; r < ops.size(); ++r)
                        if (!rhs[r][q].is_zero()) all_zero = false;
                    sol.resonant = true;
                    if (!all_zero) {
                        sol.log_obstructed = true;
                        sol.order = m - 1;
                        break;
                    }
                    phi[q] = RadicalSum();
                } else {
                    // consistency across the joint system
                    for (std::size_t r = 0; r < ops.size(); ++r) {
                        Rational d = detail::poly_eval(detail::indicial_poly(ops[r].first, q, ops[r].second), s + m);
                        if ((RadicalSum(d) * phi[q]) != rhs[r][q])
                            throw std::domain_error("frobenius: joint system inconsistent at order " + std::to_string(m));
                    }
                }
            }
            if (!sol.log_obstructed) sol.coeffs.push_back(std::move(phi));
        }
        sols.push_back(std::move(sol));
    }
    return sols;
}

/// Exact residual check: (op - chi) applied to the truncated series vanishes
/// through t^{s+order}.  Log-obstructed solutions are checked to their
/// shortened order.
inline bool frobenius_residual_ok(const std::vector<std::pair<OpMatrix, Rational>>& ops, const SeriesSolution& sol) {
    const std::size_t dim = ops[0].first.domain().size();
    for (const auto& [op, chi] : ops) {
        for (int m = 0; m <= sol.order; ++m) {
            std::vector<RadicalSum> res(dim);
            for (const auto& [rc, tp] : op.entries())
                for (const auto& [mk, c] : tp.terms()) {
                    int a = mk.first;
                    if (a > m) continue;
                    const RadicalSum& prev = sol.coeffs[m - a][rc.second];
                    if (prev.is_zero()) continue;
                    res[rc.first] += c * RadicalSum(pow_rational(sol.exponent + (m - a), mk.second)) * prev;
                }
            for (std::size_t q = 0; q < dim; ++q) {
                res[q] -= RadicalSum(chi) * sol.coeffs[m][q];
                if (!res[q].is_zero()) return false;
            }
        }
    }
    return true;
}

}  // namespace whitmod
