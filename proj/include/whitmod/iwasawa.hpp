#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "whitmod/op_matrix.hpp"
#include "whitmod/pbw.hpp"

namespace whitmod {

namespace detail {

/// Invert a square matrix over Q(i) by Gauss-Jordan elimination.
inline std::vector<std::vector<GaussianRational>> invert(std::vector<std::vector<GaussianRational>> m) {
    const std::size_t d = m.size();
    std::vector<std::vector<GaussianRational>> inv(d, std::vector<GaussianRational>(d));
    for (std::size_t i = 0; i < d; ++i) inv[i][i] = GaussianRational(1);
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        while (piv < d && m[piv][col].is_zero()) ++piv;
        if (piv == d) throw std::domain_error("basis change is singular");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        GaussianRational p = m[col][col];
        for (std::size_t j = 0; j < d; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            GaussianRational f = m[r][col];
            for (std::size_t j = 0; j < d; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace detail

/// An alternative ordered basis of gl_{n+1} given by a linear change from the
/// E-basis, with its induced structure constants and a three-segment layout
/// (used for the Iwasawa order n|a|k and the Bruhat-style order n|m+a|nbar).
struct OrderedBasis {
    LieAlgebra alg{0};
    std::vector<std::string> names;
    std::vector<std::vector<LieAlgebra::Term>> to_gl;    // generator -> expansion in E-basis
    std::vector<std::vector<LieAlgebra::Term>> from_gl;  // E-basis generator -> expansion here
    int seg1 = 0, seg2 = 0;                              // segments [0,seg1), [seg1,seg2), [seg2,dim)
    int diag_begin = 0, diag_end = 0;                    // Cartan block inside the middle segment
};

inline OrderedBasis make_ordered_basis(const GLAlgebra& gl, const std::vector<std::string>& names,
                                       const std::vector<std::vector<GaussianRational>>& rows, int seg1, int seg2,
                                       int diag_begin = 0, int diag_end = 0) {
    const int d = gl.N * gl.N;
    if (static_cast<int>(rows.size()) != d) throw std::invalid_argument("ordered basis must have full dimension");
    OrderedBasis b;
    b.names = names;
    b.seg1 = seg1;
    b.seg2 = seg2;
    b.diag_begin = diag_begin;
    b.diag_end = diag_end;
    auto inv = detail::invert(rows);  // columns of rows^{-1} express E-generators here
    b.to_gl.resize(d);
    b.from_gl.resize(d);
    for (int g = 0; g < d; ++g)
        for (int e = 0; e < d; ++e) {
            if (!rows[g][e].is_zero()) b.to_gl[g].push_back({e, rows[g][e]});
            if (!inv[e][g].is_zero()) b.from_gl[e].push_back({g, inv[e][g]});
        }
    // structure constants through the E-basis
    b.alg = LieAlgebra(d);
    for (int x = 0; x < d; ++x)
        for (int y = x + 1; y < d; ++y) {
            std::vector<GaussianRational> comm(d);  // E-coordinates of [g_x, g_y]
            for (const auto& tx : b.to_gl[x])
                for (const auto& ty : b.to_gl[y])
                    for (const auto& tz : gl.alg.bracket(tx.gen, ty.gen)) comm[tz.gen] += tx.coeff * ty.coeff * tz.coeff;
            std::map<int, GaussianRational> here;
            for (int e = 0; e < d; ++e) {
                if (comm[e].is_zero()) continue;
                for (const auto& t : b.from_gl[e]) here[t.gen] += comm[e] * t.coeff;
            }
            std::vector<LieAlgebra::Term> terms;
            for (const auto& [g, c] : here)
                if (!c.is_zero()) terms.push_back({g, c});
            b.alg.set_bracket(x, y, std::move(terms));
        }
    return b;
}

/// The U(n,1) bases: gl_{n+1} plus the Iwasawa order (n-part, h, k-part) and
/// the order (n-part, m+a, opposite n-part) whose middle-segment filter is
/// the first Harish-Chandra projection.
struct UnlStructure {
    int n = 0;
    GLAlgebra gl;
    OrderedBasis iwasawa;
    OrderedBasis bruhat;
    // generator ids in the Iwasawa order
    int iw_h = 0, iw_z = 0;
    std::vector<int> iw_x, iw_y;   // X_1..X_{n-1}, Y_1..Y_{n-1}
    std::vector<int> iw_k;         // k-part ids, with parallel (i,j) labels
    std::vector<std::pair<int, int>> iw_k_pairs;
    // generator ids in the Bruhat-style order
    int br_c = 0, br_h = 0;
    std::vector<int> br_mdiag;     // E_11..E_{n-1,n-1}
};

inline UnlStructure make_unl_structure(int n) {
    if (n < 1) throw std::invalid_argument("make_unl_structure: need n >= 1");
    UnlStructure s;
    s.n = n;
    const int N = n + 1;
    s.gl = make_gl_algebra(N);
    const int d = N * N;
    auto E = [&](int i, int j) { return s.gl.id(i, j); };
    const GaussianRational I = GaussianRational::i(), one(1), neg(-1);

    auto row_zero = [&] { return std::vector<GaussianRational>(d); };

    // ---- Iwasawa order: X_i, Y_i, Z | h | k (raising, diagonal, lowering) ----
    std::vector<std::vector<GaussianRational>> rows;
    std::vector<std::string> names;
    for (int i = 1; i <= n - 1; ++i) {  // X_i = E_in - E_ni - E_iN - E_Ni
        auto r = row_zero();
        r[E(i, n)] = one;
        r[E(n, i)] = neg;
        r[E(i, N)] = neg;
        r[E(N, i)] = neg;
        s.iw_x.push_back(static_cast<int>(rows.size()));
        rows.push_back(r);
        names.push_back("X" + std::to_string(i));
    }
    for (int i = 1; i <= n - 1; ++i) {  // Y_i = i(E_in + E_ni - E_iN + E_Ni)
        auto r = row_zero();
        r[E(i, n)] = I;
        r[E(n, i)] = I;
        r[E(i, N)] = GaussianRational(0) - I;
        r[E(N, i)] = I;
        s.iw_y.push_back(static_cast<int>(rows.size()));
        rows.push_back(r);
        names.push_back("Y" + std::to_string(i));
    }
    {  // Z = i(E_nn - E_NN - E_nN + E_Nn)
        auto r = row_zero();
        r[E(n, n)] = I;
        r[E(N, N)] = GaussianRational(0) - I;
        r[E(n, N)] = GaussianRational(0) - I;
        r[E(N, n)] = I;
        s.iw_z = static_cast<int>(rows.size());
        rows.push_back(r);
        names.push_back("Z");
    }
    int seg1 = static_cast<int>(rows.size());
    {  // h = E_nN + E_Nn
        auto r = row_zero();
        r[E(n, N)] = one;
        r[E(N, n)] = one;
        s.iw_h = static_cast<int>(rows.size());
        rows.push_back(r);
        names.push_back("h");
    }
    int seg2 = static_cast<int>(rows.size());
    auto push_k = [&](int i, int j) {
        auto r = row_zero();
        r[E(i, j)] = one;
        s.iw_k.push_back(static_cast<int>(rows.size()));
        s.iw_k_pairs.push_back({i, j});
        rows.push_back(r);
        names.push_back("E" + std::to_string(i) + std::to_string(j));
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) push_k(i, j);
    for (int i = 1; i <= n; ++i) push_k(i, i);
    push_k(N, N);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j) push_k(i, j);
    s.iwasawa = make_ordered_basis(s.gl, names, rows, seg1, seg2);

    // ---- Bruhat-style order: n | m+a | nbar ----
    rows.clear();
    names.clear();
    auto copy_iwasawa_n = [&](int src) {
        rows.push_back(std::vector<GaussianRational>());
        rows.back() = row_zero();
        for (const auto& t : s.iwasawa.to_gl[src]) rows.back()[t.gen] = t.coeff;
        names.push_back("n:" + std::to_string(src));
    };
    for (int i = 0; i < n - 1; ++i) copy_iwasawa_n(s.iw_x[i]);
    for (int i = 0; i < n - 1; ++i) copy_iwasawa_n(s.iw_y[i]);
    copy_iwasawa_n(s.iw_z);
    seg1 = static_cast<int>(rows.size());
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 1; j <= n - 1; ++j) {
            auto r = row_zero();
            r[E(i, j)] = one;
            rows.push_back(r);
            names.push_back("E" + std::to_string(i) + std::to_string(j));
        }
    int diag_begin = static_cast<int>(rows.size());
    for (int i = 1; i <= n - 1; ++i) {
        auto r = row_zero();
        r[E(i, i)] = one;
        s.br_mdiag.push_back(static_cast<int>(rows.size()));
        rows.push_back(r);
        names.push_back("E" + std::to_string(i) + std::to_string(i));
    }
    {  // c = E_nn + E_NN
        auto r = row_zero();
        r[E(n, n)] = one;
        r[E(N, N)] = one;
        s.br_c = static_cast<int>(rows.size());
        rows.push_back(r);
        names.push_back("c");
    }
    {
        auto r = row_zero();
        r[E(n, N)] = one;
        r[E(N, n)] = one;
        s.br_h = static_cast<int>(rows.size());
        rows.push_back(r);
        names.push_back("h");
    }
    int diag_end = static_cast<int>(rows.size());
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j < i; ++j) {
            auto r = row_zero();
            r[E(i, j)] = one;
            rows.push_back(r);
            names.push_back("E" + std::to_string(i) + std::to_string(j));
        }
    seg2 = static_cast<int>(rows.size());
    for (int i = 1; i <= n - 1; ++i) {  // Xbar_i = E_in - E_ni + E_iN + E_Ni
        auto r = row_zero();
        r[E(i, n)] = one;
        r[E(n, i)] = neg;
        r[E(i, N)] = one;
        r[E(N, i)] = one;
        rows.push_back(r);
        names.push_back("Xb" + std::to_string(i));
    }
    for (int i = 1; i <= n - 1; ++i) {  // Ybar_i = i(E_in + E_ni + E_iN - E_Ni)
        auto r = row_zero();
        r[E(i, n)] = I;
        r[E(n, i)] = I;
        r[E(i, N)] = I;
        r[E(N, i)] = GaussianRational(0) - I;
        rows.push_back(r);
        names.push_back("Yb" + std::to_string(i));
    }
    {  // Zbar = i(E_nn - E_NN + E_nN - E_Nn)
        auto r = row_zero();
        r[E(n, n)] = I;
        r[E(N, N)] = GaussianRational(0) - I;
        r[E(n, N)] = I;
        r[E(N, n)] = GaussianRational(0) - I;
        rows.push_back(r);
        names.push_back("Zb");
    }
    s.bruhat = make_ordered_basis(s.gl, names, rows, seg1, seg2, diag_begin, diag_end);
    return s;
}

template <class R>
UEElement<R> iwasawa_normal_form(const UnlStructure& s, const UEElement<R>& z_gl) {
    return z_gl.mapped(s.iwasawa.alg, s.iwasawa.from_gl);
}

template <class R>
UEElement<R> iwasawa_to_pbw(const UnlStructure& s, const UEElement<R>& z_iw) {
    return z_iw.mapped(s.gl.alg, s.iwasawa.to_gl);
}

/// The non-shifted and shifted Harish-Chandra images relative to the
/// decompositions g = n + (m+a) + nbar and m+a = u_m + h + ubar_m.
struct HCMapsResult {
    PBWElement gamma1;   // in the Bruhat-style basis, middle-segment support
    PBWElement gamma21;  // Cartan-block support
    PBWElement gamma;    // with the rho-shifts h -> h + n, E_pp -> E_pp - (n-2p)/2
};

inline HCMapsResult hc_maps(const UnlStructure& s, const PBWElement& z_gl) {
    const int d = s.gl.N * s.gl.N;
    PBWElement zb = z_gl.mapped(s.bruhat.alg, s.bruhat.from_gl);
    std::vector<bool> mid(d, false), diag(d, false);
    for (int g = s.bruhat.seg1; g < s.bruhat.seg2; ++g) mid[g] = true;
    for (int g = s.bruhat.diag_begin; g < s.bruhat.diag_end; ++g) diag[g] = true;
    HCMapsResult r;
    r.gamma1 = zb.filtered(mid);
    r.gamma21 = r.gamma1.filtered(diag);
    // shifts: tau_1(h) = h + rho_A(h) = h + n;  tau_2(E_pp) = E_pp - (n-2p)/2, tau_2(c) = c
    PBWElement shifted(s.bruhat.alg);
    for (const auto& [m, c] : r.gamma21.terms()) {
        PBWElement prod(s.bruhat.alg, UPoly(GaussianRational(1)));
        for (int g = 0; g < d; ++g)
            for (int e = 0; e < m[g]; ++e) {
                PBWElement lin = PBWElement::generator(s.bruhat.alg, g, UPoly(GaussianRational(1)));
                GaussianRational shift(0);
                if (g == s.br_h) shift = GaussianRational(s.n);
                for (int p = 1; p <= s.n - 1; ++p)
                    if (g == s.br_mdiag[p - 1]) shift = GaussianRational(frac(-(s.n - 2 * p), 2));
                lin += PBWElement(s.bruhat.alg, UPoly(shift));
                prod = prod * lin;
            }
        prod.scale(c);
        shifted += prod;
    }
    r.gamma = shifted;
    return r;
}

/// Evaluate a Cartan-block element at the parameter (mu; mu_tilde; nu):
/// E_pp -> mu_p, c -> mu_tilde, h -> nu.
inline UPoly hc_eval(const UnlStructure& s, const PBWElement& gamma, const std::vector<Rational>& mu,
                     const Rational& mu_tilde, const Rational& nu) {
    if (static_cast<int>(mu.size()) != s.n - 1) throw std::invalid_argument("hc_eval: mu must have n-1 entries");
    std::map<int, UPoly> values;
    for (int p = 1; p <= s.n - 1; ++p) values[s.br_mdiag[p - 1]] = UPoly(GaussianRational(mu[p - 1]));
    values[s.br_c] = UPoly(GaussianRational(mu_tilde));
    values[s.br_h] = UPoly(GaussianRational(nu));
    return gamma.eval(values);
}

// ---------------------------------------------------------------------------
// First-principles action of a central element on C^inf(A -> V_{(lambda/gamma)*})
// at n = 2: Iwasawa normal form, then eta_t on the n-part (Y_{n-1} -> i t,
// X_i, Z -> 0 with xi = 1), theta on h, and the transposed GT action of the
// k-part.
// ---------------------------------------------------------------------------

namespace detail {

/// Matrix of tau_{lambda*}(E_ij) on the n=2 partial-pattern basis.
inline std::vector<std::vector<RadicalSum>> k_generator_matrix(const std::vector<PartialGTPattern>& basis,
                                                               const std::map<std::vector<long>, std::size_t>& index,
                                                               int i, int j, const Rational& abs_Lambda) {
    const std::size_t dim = basis.size();
    std::vector<std::vector<RadicalSum>> m(dim, std::vector<RadicalSum>(dim));
    for (std::size_t c = 0; c < dim; ++c) {
        const PartialGTPattern& q = basis[c];
        if (i == 1 && j == 1) {
            m[c][c] = RadicalSum(Rational(q.mid_sum()));
        } else if (i == 2 && j == 2) {
            long sum_top = 0;
            for (long x : q.lambda_star) sum_top += x;
            m[c][c] = RadicalSum(Rational(sum_top - q.mid_sum()));
        } else if (i == 3 && j == 3) {
            // dual U(1) weight: -lambda_{n+1} with |lambda| = |Lambda|
            long sum_top = 0;
            for (long x : q.lambda_star) sum_top += x;
            m[c][c] = RadicalSum(-abs_Lambda - Rational(sum_top));
        } else if (i == 1 && j == 2) {
            RadicalSum a = partial_coeff_a(q, 1);
            if (!a.is_zero()) m[index.at(q.shift_mid(1, +1).mid)][c] = a;
        } else if (i == 2 && j == 1) {
            RadicalSum b = partial_coeff_b(q, 1);
            if (!b.is_zero()) m[index.at(q.shift_mid(1, -1).mid)][c] = b;
        } else {
            throw std::invalid_argument("k_generator_matrix: generator not in k");
        }
    }
    return m;
}

}  // namespace detail

/// Independent derivation of the central action on the dual-pattern model
/// at n = 2 (desk scale).
inline OpMatrix derive_central_action_dual(const UnlStructure& s, const PBWElement& z_gl, const Rational& u,
                                           const Weight& lambda_star, const Weight& gamma_star,
                                           const Rational& abs_Lambda) {
    if (s.n != 2) throw std::invalid_argument("derive_central_action_dual: only n = 2 is supported");
    if (lambda_star.rank() != 2 || gamma_star.rank() != 0)
        throw std::invalid_argument("derive_central_action_dual: expected U(2,1) data");

    // substitute the rational u into the polynomial coefficients
    UEElement<GaussianRational> z(s.gl.alg);
    for (const auto& [m, c] : z_gl.terms()) z.add_monomial(m, c.eval(GaussianRational(u)));
    UEElement<GaussianRational> ziw = iwasawa_normal_form(s, z);

    auto basis = enumerate_partial_gt(lambda_star, gamma_star);
    std::map<std::vector<long>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i].mid] = i;
    const std::size_t dim = basis.size();

    // matrices for the k-generators in the Iwasawa order
    std::vector<std::vector<std::vector<RadicalSum>>> kmat;
    for (auto [i, j] : s.iw_k_pairs) kmat.push_back(detail::k_generator_matrix(basis, index, i, j, abs_Lambda));

    OpMatrix out(basis, basis);
    const GaussianRational I = GaussianRational::i();
    for (const auto& [mono, coeff] : ziw.terms()) {
        // eta_t kills X_i, Z and Y_i for i < n-1; Y_{n-1} contributes (i t)^e
        bool killed = false;
        for (int x : s.iw_x)
            if (mono[x] > 0) killed = true;
        for (std::size_t i = 0; i + 1 < s.iw_y.size(); ++i)
            if (mono[s.iw_y[i]] > 0) killed = true;
        if (mono[s.iw_z] > 0) killed = true;
        if (killed) continue;
        int t_pow = s.iw_y.empty() ? 0 : mono[s.iw_y.back()];
        int th_pow = mono[s.iw_h];
        GaussianRational scal = coeff;
        for (int e = 0; e < t_pow; ++e) scal *= I;  // eta_t(Y_{n-1}) = i t with xi = 1
        // k-part W_1...W_r acts by (-1)^r tau(W_r)...tau(W_1): multiply the
        // generator matrices in descending normal-order position
        std::vector<std::vector<RadicalSum>> mat(dim, std::vector<RadicalSum>(dim));
        for (std::size_t a = 0; a < dim; ++a) mat[a][a] = RadicalSum(1);
        int r_count = 0;
        for (std::size_t g = s.iw_k.size(); g-- > 0;)
            for (int e = 0; e < mono[s.iw_k[g]]; ++e) {
                std::vector<std::vector<RadicalSum>> nm(dim, std::vector<RadicalSum>(dim));
                for (std::size_t a = 0; a < dim; ++a)
                    for (std::size_t b = 0; b < dim; ++b) {
                        if (mat[a][b].is_zero()) continue;
                        for (std::size_t c2 = 0; c2 < dim; ++c2) {
                            if (kmat[g][b][c2].is_zero()) continue;
                            nm[a][c2] += mat[a][b] * kmat[g][b][c2];
                        }
                    }
                mat = std::move(nm);
                ++r_count;
            }
        if (r_count % 2) scal = GaussianRational(0) - scal;
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b) {
                if (mat[a][b].is_zero()) continue;
                out.add(a, b, ThetaPoly::monomial(t_pow, th_pow, mat[a][b] * RadicalSum(GaussianRational(scal))));
            }
    }
    return out;
}

// ---------------------------------------------------------------------------
// General route through the covariant functionals: realize
// Hom_{M^eta}(V_lambda, V_gamma) inside Hom(V_lambda, V_gamma) on full
// pattern bases, act there by right composition with tau_lambda, and read
// the result back in the covariant basis.  Individual monomials leave the
// covariant span; the central sum must return to it, which is asserted.
// ---------------------------------------------------------------------------

namespace detail {

using RSMatrix = std::vector<std::vector<RadicalSum>>;  // row-major

inline std::vector<long> dual_row(const std::vector<long>& row) {
    std::vector<long> out(row.rbegin(), row.rend());
    for (long& x : out) x = -x;
    return out;
}

}  // namespace detail

inline OpMatrix derive_central_action_hom(const UnlStructure& s, const PBWElement& z_gl, const Rational& u,
                                          const Weight& lambda_star, const Weight& gamma_star,
                                          const Rational& abs_Lambda) {
    const int n = s.n;
    if (n < 2 || n > 3) throw std::invalid_argument("derive_central_action_hom: supported for n = 2 and 3");
    if (static_cast<int>(lambda_star.rank()) != n || gamma_star.rank() + 2 != lambda_star.rank())
        throw std::invalid_argument("derive_central_action_hom: rank mismatch");

    const Weight lam = lambda_star.dual();
    const Weight gam = gamma_star.dual();
    auto partials = enumerate_partial_gt(lambda_star, gamma_star);
    auto full = enumerate_gt(lam);
    auto low_basis = enumerate_gt(gam);
    const std::size_t df = full.size(), dg = low_basis.size(), dp = partials.size();
    std::map<GTPattern, std::size_t> full_index, low_index;
    for (std::size_t i = 0; i < df; ++i) full_index[full[i]] = i;
    for (std::size_t i = 0; i < dg; ++i) low_index[low_basis[i]] = i;

    // covariant functionals: phi_Q hits exactly the full patterns whose rows
    // n-1 and n-2 are the dual middle row and the gamma highest weight
    std::vector<detail::RSMatrix> phi(dp, detail::RSMatrix(dg, std::vector<RadicalSum>(df)));
    std::vector<std::vector<std::size_t>> klass(dp);  // supporting full-pattern columns
    for (std::size_t p = 0; p < dp; ++p) {
        std::vector<long> mid_dual = detail::dual_row(partials[p].mid);
        for (std::size_t c = 0; c < df; ++c) {
            if (full[c].row(n - 1) != mid_dual) continue;
            if (n >= 3 && full[c].row(n - 2) != gam.entries()) continue;
            std::vector<std::vector<long>> lower(full[c].rows().begin(), full[c].rows().begin() + (n - 2));
            std::size_t lo = low_index.at(GTPattern(lower));
            phi[p][lo][c] = RadicalSum(1);
            klass[p].push_back(c);
        }
        if (klass[p].empty()) throw std::logic_error("derive_central_action_hom: empty covariant class");
    }

    // matrices of the k-generators on the full basis, in the Iwasawa order
    const Rational lam_last = abs_Lambda - Rational(lam.sum());  // U(1) part fixed by |lambda| = |Lambda|
    std::vector<detail::RSMatrix> gen(s.iw_k.size(), detail::RSMatrix(df, std::vector<RadicalSum>(df)));
    for (std::size_t g = 0; g < s.iw_k.size(); ++g) {
        auto [i, j] = s.iw_k_pairs[g];
        for (std::size_t c = 0; c < df; ++c) {
            if (i == s.gl.N && j == s.gl.N) {
                gen[g][c][c] = RadicalSum(lam_last);
                continue;
            }
            for (const auto& [q, coef] : act_eij(i, j, GTVector{{full[c], RadicalSum(1)}}))
                gen[g][full_index.at(q)][c] += coef;
        }
    }

    // substitute the rational u and move to the Iwasawa normal form
    UEElement<GaussianRational> z(s.gl.alg);
    for (const auto& [m, c] : z_gl.terms()) z.add_monomial(m, c.eval(GaussianRational(u)));
    UEElement<GaussianRational> ziw = iwasawa_normal_form(s, z);

    // accumulate, per (t,theta) grade, the image functionals phi_Q . A
    std::map<std::pair<int, int>, std::vector<detail::RSMatrix>> grade;
    const GaussianRational I = GaussianRational::i();
    for (const auto& [mono, coeff] : ziw.terms()) {
        bool killed = false;
        for (int x : s.iw_x)
            if (mono[x] > 0) killed = true;
        for (std::size_t i = 0; i + 1 < s.iw_y.size(); ++i)
            if (mono[s.iw_y[i]] > 0) killed = true;
        if (mono[s.iw_z] > 0) killed = true;
        if (killed) continue;
        int t_pow = s.iw_y.empty() ? 0 : mono[s.iw_y.back()];
        int th_pow = mono[s.iw_h];
        GaussianRational scal = coeff;
        for (int e = 0; e < t_pow; ++e) scal *= I;
        auto& acc = grade[{t_pow, th_pow}];
        if (acc.empty()) acc.assign(dp, detail::RSMatrix(dg, std::vector<RadicalSum>(df)));
        for (std::size_t p = 0; p < dp; ++p) {
            detail::RSMatrix f = phi[p];
            // right composition: F -> F * M(W_1) ... M(W_r), ascending order
            for (std::size_t g = 0; g < s.iw_k.size(); ++g)
                for (int e = 0; e < mono[s.iw_k[g]]; ++e) {
                    detail::RSMatrix nf(dg, std::vector<RadicalSum>(df));
                    for (std::size_t r = 0; r < dg; ++r)
                        for (std::size_t m2 = 0; m2 < df; ++m2) {
                            if (f[r][m2].is_zero()) continue;
                            for (std::size_t c = 0; c < df; ++c) {
                                if (gen[g][m2][c].is_zero()) continue;
                                nf[r][c] += f[r][m2] * gen[g][m2][c];
                            }
                        }
                    f = std::move(nf);
                }
            for (std::size_t r = 0; r < dg; ++r)
                for (std::size_t c = 0; c < df; ++c) {
                    if (f[r][c].is_zero()) continue;
                    acc[p][r][c] += f[r][c] * RadicalSum(scal);
                }
        }
    }

    // read each graded image back in the covariant basis, exactly; the
    // (-1)^{|mid|} conjugation is the classical alternating dual-basis
    // normalization relating the raw functional pairing to the pattern basis
    // the displayed formulas use
    OpMatrix out(partials, partials);
    auto parity = [&](std::size_t p) { return partials[p].mid_sum() & 1L; };
    for (const auto& [tk, images] : grade) {
        for (std::size_t p = 0; p < dp; ++p) {
            detail::RSMatrix residue = images[p];
            for (std::size_t p2 = 0; p2 < dp; ++p2) {
                std::size_t rep = klass[p2].front();
                std::vector<std::vector<long>> lower(full[rep].rows().begin(), full[rep].rows().begin() + (n - 2));
                std::size_t lo = low_index.at(GTPattern(lower));
                RadicalSum c = residue[lo][rep];
                if (c.is_zero()) continue;
                for (std::size_t col : klass[p2]) {
                    std::vector<std::vector<long>> lw(full[col].rows().begin(), full[col].rows().begin() + (n - 2));
                    residue[low_index.at(GTPattern(lw))][col] -= c;
                }
                if ((parity(p) + parity(p2)) & 1L) c = -c;
                out.add(p2, p, ThetaPoly::monomial(tk.first, tk.second, c));
            }
            for (std::size_t r = 0; r < dg; ++r)
                for (std::size_t c = 0; c < df; ++c)
                    if (!residue[r][c].is_zero())
                        throw std::logic_error("derive_central_action_hom: image left the covariant span");
        }
    }
    return out;
}

/// Independent derivation of the central action: the dual-pattern model at
/// n = 2, the covariant-functional model at n = 3.
inline OpMatrix derive_central_action(const UnlStructure& s, const PBWElement& z_gl, const Rational& u,
                                      const Weight& lambda_star, const Weight& gamma_star,
                                      const Rational& abs_Lambda) {
    if (s.n == 2) return derive_central_action_dual(s, z_gl, u, lambda_star, gamma_star, abs_Lambda);
    if (s.n == 3) return derive_central_action_hom(s, z_gl, u, lambda_star, gamma_star, abs_Lambda);
    throw std::invalid_argument("derive_central_action: unsupported n");
}

}  // namespace whitmod
