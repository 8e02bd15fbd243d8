#pragma once

#include <string>
#include <vector>

#include "whitmod/exterior.hpp"
#include "whitmod/frobenius.hpp"
#include "whitmod/iwasawa.hpp"
#include "whitmod/op_matrix.hpp"
#include "whitmod/unitary_dual.hpp"

namespace whitmod {

struct SweepOutcome {
    long cases = 0;
    long failures = 0;
    long degenerate = 0;  // reported-only boundary cases (quadratic identity)
    std::string detail;
    bool ok() const { return failures == 0 && cases > 0; }
};

/// Canonical regular integral characters with Lambda_{n+1} - n/2 in `bases`
/// and spread at most `spread`.  The verified identities are invariant under
/// Lambda -> Lambda + c(1,...,1), so two base points witness the whole
/// translation class.
inline std::vector<InfChar> sweep_characters(int n, long spread, const std::vector<long>& bases = {0, 1}) {
    std::vector<InfChar> out;
    std::vector<long> c(n);  // c_1 > ... > c_n > 0, c_1 <= spread
    auto rec = [&](auto&& self, int p, long hi) -> void {
        if (p == n) {
            for (long base : bases) {
                std::vector<Rational> es;
                for (int q = 0; q < n; ++q) es.push_back(frac(n, 2) + base + c[q]);
                es.push_back(frac(n, 2) + base);
                out.emplace_back(n, es);
            }
            return;
        }
        for (long v = hi; v >= n - p; --v) {
            c[p] = v;
            self(self, p + 1, v - 1);
        }
    };
    rec(rec, 0, spread);
    return out;
}

namespace detail {

/// Dual weights of the sweep: for each character, each submodule label,
/// each sigma in its block, each nonzero neighbour label, each K-type in
/// that label's box (capped), yields (lambda*, gamma*, |Lambda|).
template <class F>
void for_each_sweep_point(int n, long spread, long box_cap, F&& f) {
    for (const InfChar& L : sweep_characters(n, spread)) {
        for (int i = 1; i <= n - 1; ++i)
            for (int j = 2; j <= n + 1 - i; ++j)
                for (const SigmaWeight& g : sigma_block(L, i, j)) {
                    std::vector<long> gs_entries(g.u_part.rbegin(), g.u_part.rend());
                    for (long& x : gs_entries) x = -x;
                    Weight gamma_star(gs_entries);
                    for (int a = -1; a <= 1; ++a)
                        for (int b = -1; b <= 1; ++b) {
                            ModuleLabel lab{i + a, j + b};
                            if (!lab.in_range(n)) continue;
                            for (const Weight& lam : k_spectrum(L, lab).enumerate(box_cap)) {
                                f(L, g, lam.dual(), gamma_star);
                            }
                        }
                }
    }
}

}  // namespace detail

/// Exact residuals of P_k^- P_k^+ = D(C_{n+1}(l_{k,n})) and its mirror over
/// the whole sweep.
inline SweepOutcome verify_shift_central_sweep(int n, long spread, long box_cap, const CoeffTweak* tweak = nullptr) {
    SweepOutcome out;
    detail::for_each_sweep_point(n, spread, box_cap,
                                 [&](const InfChar& L, const SigmaWeight&, const Weight& ls, const Weight& gs) {
                                     for (std::size_t k = 1; k <= static_cast<std::size_t>(n); ++k) {
                                         ++out.cases;
                                         if (!check_shift_central(ls, gs, k, L.sum(), tweak).zero()) ++out.failures;
                                     }
                                 });
    return out;
}

/// The coefficient identity over the same sweep; boundary pattern/k pairs
/// (vanishing displayed denominator) are counted, not asserted.
inline SweepOutcome verify_quadratic_sweep(int n, long spread, long box_cap, const CoeffTweak* tweak = nullptr) {
    SweepOutcome out;
    detail::for_each_sweep_point(n, spread, box_cap,
                                 [&](const InfChar&, const SigmaWeight&, const Weight& ls, const Weight& gs) {
                                     for (const auto& q : enumerate_partial_gt(ls, gs))
                                         for (std::size_t k = 1; k <= static_cast<std::size_t>(n); ++k) {
                                             auto r = quadratic_identity_residual(q, k, tweak);
                                             if (r.degenerate) {
                                                 ++out.degenerate;
                                                 continue;
                                             }
                                             ++out.cases;
                                             if (!r.residual.is_zero()) ++out.failures;
                                         }
                                 });
    return out;
}

/// Wherever the vanishing-condition hypothesis holds across the sweep, the
/// pivot chain must certify injectivity on truncated series.
inline SweepOutcome verify_injectivity_sweep(int n, long spread, long box_cap) {
    SweepOutcome out;
    detail::for_each_sweep_point(n, spread, box_cap,
                                 [&](const InfChar&, const SigmaWeight&, const Weight& ls, const Weight& gs) {
                                     for (int dir : {+1, -1}) {
                                         std::size_t k_lo = dir > 0 ? 2 : 1;
                                         std::size_t k_hi = dir > 0 ? n : n - 1;
                                         for (std::size_t k = k_lo; k <= k_hi; ++k) {
                                             auto rep = injectivity_hypothesis(ls, gs, k, dir);
                                             if (!rep.hypothesis) continue;
                                             ++out.cases;
                                             if (!rep.certified) ++out.failures;
                                         }
                                     }
                                 });
    return out;
}

/// Whittaker dimension partition over all interior principal-series labels.
inline SweepOutcome verify_whittaker_sweep(int n, long spread) {
    SweepOutcome out;
    for (const InfChar& L : sweep_characters(n, spread))
        for (int i = 0; i <= n - 1; ++i)
            for (int j = 1; j <= n - i; ++j) {
                auto rep = whittaker_dim_check(L, i, j);
                if (!rep.interior) continue;
                ++out.cases;
                if (!rep.equal) ++out.failures;
            }
    return out;
}

/// Block disjointness and K-box disjointness over the sweep.
inline SweepOutcome verify_disjointness(int n, long spread, long box_cap) {
    SweepOutcome out;
    for (const InfChar& L : sweep_characters(n, spread)) {
        ++out.cases;
        std::set<SigmaWeight> sigmas;
        bool ok = true;
        for (int i = 1; i <= n - 1 && ok; ++i)
            for (int j = 2; j <= n + 1 - i && ok; ++j)
                for (const auto& g : sigma_block(L, i, j))
                    if (!sigmas.insert(g).second) ok = false;
        std::set<std::vector<long>> ktypes;
        for (int i = 0; i <= n && ok; ++i)
            for (int j = 1; j <= n + 1 - i && ok; ++j)
                for (const auto& w : k_spectrum(L, {i, j}).enumerate(box_cap))
                    if (!ktypes.insert(w.entries()).second) ok = false;
        if (!ok) ++out.failures;
    }
    return out;
}

/// Capelli centrality with symbolic u.
inline SweepOutcome verify_capelli(int N) {
    SweepOutcome out;
    GLAlgebra g = make_gl_algebra(N);
    PBWElement c = capelli(g);
    for (int k = 0; k < N * N; ++k) {
        ++out.cases;
        if (!commutator(c, PBWElement::generator(g.alg, k, UPoly(GaussianRational(1)))).is_zero()) ++out.failures;
    }
    return out;
}

/// chi_Lambda(C_{n+1}(u)) = prod_p (u + Lambda_p + n/2) over sampled Lambda.
inline SweepOutcome verify_inf_char(int n, const std::vector<std::vector<Rational>>& samples) {
    SweepOutcome out;
    GLAlgebra g = make_gl_algebra(n + 1);
    PBWElement c = capelli(g);
    for (const auto& L : samples) {
        ++out.cases;
        UPoly expect(GaussianRational(1));
        for (const Rational& x : L)
            expect *= UPoly::variable() + UPoly(GaussianRational(x + frac(n, 2)));
        if (inf_char_eval(g, c, L) != expect) ++out.failures;
    }
    return out;
}

inline SweepOutcome verify_exterior(int N) {
    SweepOutcome out;
    for (const auto& c : exterior_suite(N).checks) {
        ++out.cases;
        if (!c.zero) {
            ++out.failures;
            out.detail += c.name + " ";
        }
    }
    return out;
}

/// Iwasawa normal form round trips plus the degree-one action conventions
/// (h -> theta, Y_{n-1} -> i t, other restricted-root vectors -> 0,
/// W in k -> -transposed GT action) recovered by the derivation route.
inline SweepOutcome verify_iwasawa(int n) {
    SweepOutcome out;
    UnlStructure s = make_unl_structure(n);
    const int d = (n + 1) * (n + 1);
    for (int x = 0; x < d; ++x) {
        ++out.cases;
        PBWElement e = PBWElement::generator(s.gl.alg, x, UPoly(GaussianRational(1)));
        if (iwasawa_to_pbw(s, iwasawa_normal_form(s, e)) != e) ++out.failures;
    }
    for (int x = 0; x < d; ++x)
        for (int y = x; y < d; ++y) {
            ++out.cases;
            PBWElement e = PBWElement::generator(s.gl.alg, x, UPoly(GaussianRational(1))) *
                           PBWElement::generator(s.gl.alg, y, UPoly(GaussianRational(1)));
            if (iwasawa_to_pbw(s, iwasawa_normal_form(s, e)) != e) ++out.failures;
        }
    if (n == 2) {
        // degree-one conventions on the pattern space
        const Weight ls({1, 0});
        const Weight gs{std::vector<long>{}};
        auto basis = enumerate_partial_gt(ls, gs);
        // h acts by theta
        OpMatrix h = derive_central_action(s, pbw_generator(s.gl, 2, 3) + pbw_generator(s.gl, 3, 2), Rational(0), ls,
                                           gs, Rational(0));
        OpMatrix expect_h(basis, basis);
        for (std::size_t i = 0; i < basis.size(); ++i) expect_h.add(i, i, ThetaPoly::theta());
        ++out.cases;
        if (!(h == expect_h)) ++out.failures;
        // Y_1 acts by i t
        GaussianRational I = GaussianRational::i();
        PBWElement y1(s.gl.alg);
        y1 += PBWElement::generator(s.gl.alg, s.gl.id(1, 2), UPoly(I));
        y1 += PBWElement::generator(s.gl.alg, s.gl.id(2, 1), UPoly(I));
        y1 += PBWElement::generator(s.gl.alg, s.gl.id(1, 3), UPoly(GaussianRational(0) - I));
        y1 += PBWElement::generator(s.gl.alg, s.gl.id(3, 1), UPoly(I));
        OpMatrix y = derive_central_action(s, y1, Rational(0), ls, gs, Rational(0));
        OpMatrix expect_y(basis, basis);
        for (std::size_t i = 0; i < basis.size(); ++i)
            expect_y.add(i, i, ThetaPoly::monomial(1, 0, RadicalSum(GaussianRational::i())));
        ++out.cases;
        if (!(y == expect_y)) ++out.failures;
        // a k-generator acts by minus the transposed GT action: E_22
        OpMatrix e22 = derive_central_action(s, pbw_generator(s.gl, 2, 2), Rational(0), ls, gs, Rational(0));
        OpMatrix expect_e(basis, basis);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            long top = basis[i].lambda_star[0] + basis[i].lambda_star[1];
            expect_e.add(i, i, ThetaPoly(RadicalSum(Rational(-(top - basis[i].mid[0])))));
        }
        ++out.cases;
        if (!(e22 == expect_e)) ++out.failures;
    }
    return out;
}

/// The independent routes to the central action agree entrywise with the
/// closed formula: the dual-pattern and covariant-functional derivations at
/// n = 2, and the functional derivation at n = 3.
inline SweepOutcome verify_derive_matches_closed(const CoeffTweak* tweak = nullptr) {
    SweepOutcome out;
    UnlStructure s = make_unl_structure(2);
    PBWElement c3 = capelli(s.gl);
    struct Pair {
        Weight ls;
        Rational absL;
    };
    const std::vector<Pair> pairs{{Weight({1, -1}), Rational(3)},
                                  {Weight({2, 0}), Rational(1)},
                                  {Weight({0, 0}), Rational(0)},
                                  {Weight({2, -1}), Rational(2)},
                                  {Weight({3, 1}), Rational(5)}};
    const Weight gs{std::vector<long>{}};
    for (const auto& [ls, absL] : pairs)
        for (const Rational& u : {Rational(0), Rational(1), Rational(-3)}) {
            ++out.cases;
            OpMatrix closed = central_action(ls, gs, u, absL, tweak);
            if (!(derive_central_action(s, c3, u, ls, gs, absL) == closed)) ++out.failures;
            if (!(derive_central_action_hom(s, c3, u, ls, gs, absL) == closed)) ++out.failures;
        }
    UnlStructure s3 = make_unl_structure(3);
    PBWElement c4 = capelli(s3.gl);
    for (const auto& [ls3, gs3] : std::vector<std::pair<Weight, Weight>>{
             {Weight({1, 0, -1}), Weight({0})}, {Weight({2, 1, -1}), Weight({-1})}}) {
        for (const Rational& u : {Rational(0), Rational(2)}) {
            ++out.cases;
            if (!(derive_central_action(s3, c4, u, ls3, gs3, Rational(1)) ==
                  central_action(ls3, gs3, u, Rational(1), tweak)))
                ++out.failures;
        }
    }
    return out;
}

/// Central-action system for the Frobenius analysis (n = 2).
inline std::vector<std::pair<OpMatrix, Rational>> central_system(const std::vector<Rational>& Lambda,
                                                                 const Weight& lambda_star, const Weight& gamma_star,
                                                                 const std::vector<Rational>& us) {
    Rational absL = 0;
    for (const Rational& x : Lambda) absL += x;
    std::vector<std::pair<OpMatrix, Rational>> ops;
    for (const Rational& u : us) {
        Rational chi = 1;
        for (const Rational& x : Lambda) chi *= u + x + frac(static_cast<long>(Lambda.size()) - 1, 2);
        ops.push_back({central_action(lambda_star, gamma_star, u, absL), chi});
    }
    return ops;
}

/// Indicial multiset equals the exponent multiset nu + rho_A predicted by
/// the parameter enumeration, and the series solve to the requested order.
inline SweepOutcome verify_frobenius_generic(const std::vector<Rational>& Lambda, const Weight& lam_u2,
                                             const SigmaWeight& g, int order) {
    SweepOutcome out;
    Rational absL = 0;
    for (const Rational& x : Lambda) absL += x;
    auto ops = central_system(Lambda, lam_u2.dual(), Weight{std::vector<long>{}},
                              {Rational(0), Rational(1), Rational(-1), Rational(2)});
    std::vector<Rational> got;
    for (const auto& [s, seed] : indicial_roots(ops)) got.push_back(s);
    std::sort(got.begin(), got.end());
    std::vector<Rational> expect;
    for (const auto& e : generic_exponents(Lambda, g, true)) {
        if (!e.delta_exists || e.multiplicity == 0) continue;
        if (tau_contains_delta(lam_u2, absL, e.param) == 0) continue;
        expect.push_back(e.param.nu + 2);
        expect.push_back(-e.param.nu + 2);
    }
    std::sort(expect.begin(), expect.end());
    ++out.cases;
    if (got != expect) ++out.failures;
    for (const auto& sol : frobenius(ops, order)) {
        ++out.cases;
        if (sol.log_obstructed || sol.order != order || !frobenius_residual_ok(ops, sol)) ++out.failures;
    }
    return out;
}

/// Every nonzero coefficient slot of the canonical U(2,1) case, perturbed by
/// +1, must break at least one of the exact identities.
inline SweepOutcome verify_mutation_sanity() {
    SweepOutcome out;
    const Weight ls({1, -1});
    const Weight gs{std::vector<long>{}};
    const Rational absL(3);
    UnlStructure s = make_unl_structure(2);
    PBWElement c3 = capelli(s.gl);
    auto basis = enumerate_partial_gt(ls, gs);
    for (const auto& q : basis) {
        std::vector<std::pair<CoeffTweak::Kind, std::size_t>> slots;
        if (!partial_coeff_a(q, 1).is_zero()) slots.push_back({CoeffTweak::Kind::InnerA, 1});
        if (!partial_coeff_b(q, 1).is_zero()) slots.push_back({CoeffTweak::Kind::InnerB, 1});
        for (std::size_t k = 1; k <= 2; ++k) {
            if (!partial_coeff_a_top(q, k).is_zero()) slots.push_back({CoeffTweak::Kind::TopA, k});
            if (!partial_coeff_b_top(q, k).is_zero()) slots.push_back({CoeffTweak::Kind::TopB, k});
        }
        for (const auto& [kind, idx] : slots) {
            ++out.cases;
            CoeffTweak tweak{kind, idx, q.mid, q.lambda_star, RadicalSum(1)};
            bool detected = false;
            for (std::size_t k = 1; k <= 2 && !detected; ++k)
                if (!check_shift_central(ls, gs, k, absL, &tweak).zero()) detected = true;
            for (const auto& p : basis)
                for (std::size_t k = 1; k <= 2 && !detected; ++k) {
                    auto r = quadratic_identity_residual(p, k, &tweak);
                    if (!r.degenerate && !r.residual.is_zero()) detected = true;
                }
            if (!detected) {
                OpMatrix derived = derive_central_action(s, c3, Rational(1), ls, gs, absL);
                if (!(derived == central_action(ls, gs, Rational(1), absL, &tweak))) detected = true;
            }
            if (!detected) ++out.failures;
        }
    }
    return out;
}

}  // namespace whitmod
