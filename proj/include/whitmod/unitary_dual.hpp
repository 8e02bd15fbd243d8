#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "whitmod/weight.hpp"

namespace whitmod {

/// Regular integral infinitesimal character of U(n,1): n+1 strictly
/// decreasing entries in Z + n/2.  Generic (non-integral) characters are
/// passed around as plain rational vectors instead.
struct InfChar {
    int n = 0;
    std::vector<Rational> entries;  // Lambda_1 > ... > Lambda_{n+1}

    InfChar() = default;
    InfChar(int n_, std::vector<Rational> es) : n(n_), entries(std::move(es)) {
        if (static_cast<int>(entries.size()) != n + 1) throw std::invalid_argument("InfChar: need n+1 entries");
        for (std::size_t p = 0; p + 1 < entries.size(); ++p)
            if (!(entries[p] > entries[p + 1])) throw std::invalid_argument("InfChar: entries must strictly decrease");
        for (const Rational& x : entries)
            if (!is_integer(x - frac(n, 2))) throw std::invalid_argument("InfChar: entries must lie in Z + n/2");
    }
    Rational sum() const {
        Rational s = 0;
        for (const Rational& x : entries) s += x;
        return s;
    }
    Rational at(int p) const { return entries.at(p - 1); }  // 1-based
};

/// Label (i,j) of an irreducible Harish-Chandra module; labels with
/// i+j > n+1 denote the zero module.
struct ModuleLabel {
    int i = 0, j = 0;

    bool in_range(int n) const { return 0 <= i && i <= n && 1 <= j && j <= n + 1 - i; }
    friend bool operator==(const ModuleLabel& a, const ModuleLabel& b) { return a.i == b.i && a.j == b.j; }
    friend bool operator<(const ModuleLabel& a, const ModuleLabel& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    }
    std::string str() const { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }
};

/// Gelfand-Kirillov dimension of the irreducible module with this label.
inline long gk_dimension(int n, const ModuleLabel& l) {
    if (!l.in_range(n)) throw std::invalid_argument("gk_dimension: label out of range");
    if (l.i == 0 && l.j == 1) return 0;
    if (l.j == 1 || l.i == 0) return n;
    return 2 * n - 1;
}

/// The K-spectrum box of the label: three bands of inequalities on the U(n)
/// part of lambda plus |lambda| = |Lambda|.  p = 1 may be unbounded above
/// (i >= 1) and p = n unbounded below (j >= 2).
struct KTypeBox {
    int n = 0;
    Rational abs_Lambda;
    std::vector<long> lo, hi;          // 1-based stored 0-based; valid when bounded
    std::vector<bool> lo_unb, hi_unb;

    bool contains(const Weight& lambda) const {
        if (static_cast<int>(lambda.rank()) != n) return false;
        for (int p = 0; p < n; ++p) {
            if (!hi_unb[p] && lambda[p] > hi[p]) return false;
            if (!lo_unb[p] && lambda[p] < lo[p]) return false;
        }
        return true;
    }

    /// All members with lambda_1 - lambda_n <= spread_cap.  Only p = 1 can be
    /// unbounded above and only p = n below (never both when n = 1), so the
    /// cap makes this finite.
    std::vector<Weight> enumerate(long spread_cap) const {
        std::vector<Weight> out;
        if (n == 0) return out;
        std::vector<long> cur(n);
        auto rec = [&](auto&& self, int p) -> void {
            if (p == n) {
                if (cur[0] - cur[n - 1] <= spread_cap) out.emplace_back(cur);
                return;
            }
            long h, l;
            if (p == 0) {
                h = hi_unb[0] ? (n > 1 ? hi[n - 1] : lo[0]) + spread_cap : hi[0];
                l = lo_unb[0] ? hi[0] - spread_cap : lo[0];
            } else {
                h = cur[p - 1];
                if (!hi_unb[p]) h = std::min(h, hi[p]);
                l = lo_unb[p] ? cur[0] - spread_cap : lo[p];
            }
            for (long v = l; v <= h; ++v) {
                cur[p] = v;
                self(self, p + 1);
            }
        };
        rec(rec, 0);
        std::sort(out.begin(), out.end());
        return out;
    }
};

inline KTypeBox k_spectrum(const InfChar& L, const ModuleLabel& lab) {
    if (!lab.in_range(L.n)) throw std::invalid_argument("k_spectrum: label out of range");
    const int n = L.n;
    KTypeBox box;
    box.n = n;
    box.abs_Lambda = L.sum();
    box.lo.assign(n, 0);
    box.hi.assign(n, 0);
    box.lo_unb.assign(n, false);
    box.hi_unb.assign(n, false);
    auto bound = [&](int idx, int add) -> std::pair<bool, long> {  // Lambda_idx - n/2 + add; idx 0 => +inf, n+2 => -inf
        if (idx <= 0 || idx >= n + 2) return {true, 0};
        Rational v = L.at(idx) - frac(n, 2) + add;
        if (!is_integer(v)) throw std::domain_error("k_spectrum: non-integral bound");
        return {false, static_cast<long>(v.get_num().get_si())};
    };
    for (int p = 1; p <= n; ++p) {
        int hi_idx, lo_idx, hi_add, lo_add;
        if (p <= lab.i) {
            hi_idx = p - 1;
            hi_add = p - 1;
            lo_idx = p;
            lo_add = p;
        } else if (p <= n - lab.j + 1) {
            hi_idx = p;
            hi_add = p - 1;
            lo_idx = p + 1;
            lo_add = p;
        } else {
            hi_idx = p + 1;
            hi_add = p - 1;
            lo_idx = p + 2;
            lo_add = p;
        }
        auto [hu, hv] = bound(hi_idx, hi_add);
        auto [lu, lv] = bound(lo_idx, lo_add);
        box.hi_unb[p - 1] = hu;
        box.hi[p - 1] = hv;
        box.lo_unb[p - 1] = lu;
        box.lo[p - 1] = lv;
    }
    return box;
}

/// Highest weight of sigma in M^eta = U(n-2) x U(1).
struct SigmaWeight {
    std::vector<long> u_part;  // gamma_1 >= ... >= gamma_{n-2}
    long u1 = 0;               // gamma_{n-1}

    friend bool operator==(const SigmaWeight& a, const SigmaWeight& b) {
        return a.u_part == b.u_part && a.u1 == b.u1;
    }
    friend bool operator<(const SigmaWeight& a, const SigmaWeight& b) {
        return a.u_part != b.u_part ? a.u_part < b.u_part : a.u1 < b.u1;
    }
    std::string str() const {
        std::string s = "(";
        for (long x : u_part) s += std::to_string(x) + ",";
        return s + ";" + std::to_string(u1) + ")";
    }
};

namespace detail {

// the (i,j)-block band bounds for gamma_p, p = 1..n-2; legit labels only
inline bool sigma_band(const InfChar& L, int i, int j, int p, long& lo, long& hi) {
    const int n = L.n;
    int hi_idx, lo_idx;
    if (p <= i - 1) {
        hi_idx = p;
        lo_idx = p + 1;
    } else if (p <= n - j) {
        hi_idx = p + 1;
        lo_idx = p + 2;
    } else {
        hi_idx = p + 2;
        lo_idx = p + 3;
    }
    Rational h = L.at(hi_idx) - frac(n, 2) + p;
    Rational l = L.at(lo_idx) - frac(n, 2) + p + 1;
    if (!is_integer(h) || !is_integer(l)) throw std::domain_error("sigma_band: non-integral bound");
    hi = static_cast<long>(h.get_num().get_si());
    lo = static_cast<long>(l.get_num().get_si());
    return lo <= hi;
}

}  // namespace detail

inline bool label_in_sigma_range(int n, int i, int j) { return 1 <= i && i <= n - 1 && 2 <= j && j <= n + 1 - i; }

/// All sigma whose highest weight satisfies the (i,j) submodule condition.
/// Labels outside the admissible range have no Whittaker-relevant block and
/// yield the empty set.
inline std::vector<SigmaWeight> sigma_block(const InfChar& L, int i, int j) {
    std::vector<SigmaWeight> out;
    const int n = L.n;
    if (!label_in_sigma_range(n, i, j)) return out;
    Rational absL = L.sum();
    if (!is_integer(absL)) throw std::domain_error("sigma_block: |Lambda| not integral");
    std::vector<long> cur(n - 2);
    auto rec = [&](auto&& self, int p) -> void {  // p: 0-based position
        if (p == n - 2) {
            long s = 0;
            for (long x : cur) s += x;
            if (Weight::is_dominant(cur)) out.push_back({cur, static_cast<long>(absL.get_num().get_si()) - s});
            return;
        }
        long lo, hi;
        if (!detail::sigma_band(L, i, j, p + 1, lo, hi)) return;
        for (long v = lo; v <= hi; ++v) {
            cur[p] = v;
            self(self, p + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool sigma_in_block(const InfChar& L, const SigmaWeight& g, int i, int j) {
    const int n = L.n;
    if (!label_in_sigma_range(n, i, j)) return false;
    if (static_cast<int>(g.u_part.size()) != n - 2) return false;
    for (int p = 1; p <= n - 2; ++p) {
        long lo, hi;
        if (!detail::sigma_band(L, i, j, p, lo, hi)) return false;
        if (g.u_part[p - 1] < lo || g.u_part[p - 1] > hi) return false;
    }
    long s = 0;
    for (long x : g.u_part) s += x;
    return Rational(g.u1 + s) == L.sum();
}

/// The unique submodule label whose block contains sigma, if any.
inline std::optional<ModuleLabel> sigma_condition(const InfChar& L, const SigmaWeight& g) {
    std::optional<ModuleLabel> found;
    for (int i = 1; i <= L.n - 1; ++i)
        for (int j = 2; j <= L.n + 1 - i; ++j)
            if (sigma_in_block(L, g, i, j)) {
                if (found) throw std::logic_error("sigma_condition: blocks are not disjoint");
                found = ModuleLabel{i, j};
            }
    return found;
}

/// Principal-series parameter (delta, nu) of pi_{i,j}.
struct PSParam {
    std::vector<Rational> mu;  // U(n-1) highest weight (rho_m already subtracted)
    Rational mu_tilde;         // coefficient of the compact torus direction in M's center
    Rational nu;               // coefficient of f

    friend bool operator==(const PSParam& a, const PSParam& b) {
        return a.mu == b.mu && a.mu_tilde == b.mu_tilde && a.nu == b.nu;
    }
};

inline PSParam ps_param(const InfChar& L, int i, int j) {
    const int n = L.n;
    if (!(0 <= i && i <= n - 1 && 1 <= j && j <= n - i)) throw std::invalid_argument("ps_param: label out of range");
    PSParam p;
    for (int q = 1; q <= n - 1; ++q) {
        int idx = q <= i ? q : (q <= n - j ? q + 1 : q + 2);
        p.mu.push_back(L.at(idx) - frac(n - 2 * q, 2));
    }
    p.mu_tilde = L.at(i + 1) + L.at(n - j + 2);
    p.nu = L.at(i + 1) - L.at(n - j + 2);
    return p;
}

/// dim delta_{i,j}, by the Weyl dimension formula on the U(n-1) part.
inline Integer ps_delta_dim(const InfChar& L, int i, int j) {
    PSParam p = ps_param(L, i, j);
    std::vector<long> mu;
    for (const Rational& x : p.mu) {
        if (!is_integer(x)) throw std::domain_error("ps_delta_dim: mu not integral");
        mu.push_back(static_cast<long>(x.get_num().get_si()));
    }
    return weyl_dim(Weight(mu));
}

struct WhittakerDimReport {
    Integer lhs = 0;  // dim delta_{i,j}
    Integer rhs = 0;  // sum over the four blocks of dim sigma
    bool interior = false;
    bool equal = false;
    std::vector<std::pair<ModuleLabel, Integer>> blocks;
};

/// Partition identity dim delta_{i,j} = sum_{a,b in {0,1}} sum_{sigma in
/// block(i+a,j+b)} dim sigma.  Asserted by callers for interior labels
/// (i+j <= n-1); reported otherwise.
inline WhittakerDimReport whittaker_dim_check(const InfChar& L, int i, int j) {
    WhittakerDimReport rep;
    rep.lhs = ps_delta_dim(L, i, j);
    // n = 2 has no U(n-2) band structure; those cases are reported only
    rep.interior = L.n >= 3 && (i + j <= L.n - 1);
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b) {
            Integer d = 0;
            for (const SigmaWeight& g : sigma_block(L, i + a, j + b)) d += weyl_dim(Weight(g.u_part));
            rep.blocks.push_back({ModuleLabel{i + a, j + b}, d});
            rep.rhs += d;
        }
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

// ---------------------------------------------------------------------------
// Composition diagrams
// ---------------------------------------------------------------------------

struct DiagramNode {
    int i = 0, j = 0, floor = 0;  // floor 0 = socle
    friend bool operator==(const DiagramNode& a, const DiagramNode& b) {
        return a.i == b.i && a.j == b.j && a.floor == b.floor;
    }
    friend bool operator<(const DiagramNode& a, const DiagramNode& b) {
        if (a.floor != b.floor) return a.floor < b.floor;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

struct CompositionDiagram {
    std::vector<DiagramNode> nodes;               // sorted by (floor, i, j)
    std::vector<std::pair<int, int>> arrows;      // node indices, from -> to

    friend bool operator==(const CompositionDiagram& a, const CompositionDiagram& b) {
        return a.nodes == b.nodes && a.arrows == b.arrows;
    }
};

namespace detail {

inline CompositionDiagram finish_diagram(int n, std::vector<std::pair<ModuleLabel, int>> labelled,
                                         const std::vector<std::pair<ModuleLabel, ModuleLabel>>& raw_arrows) {
    CompositionDiagram d;
    std::map<ModuleLabel, int> index;
    std::erase_if(labelled, [n](const auto& lf) { return lf.first.i + lf.first.j > n + 1; });
    std::sort(labelled.begin(), labelled.end(), [](const auto& a, const auto& b) {
        DiagramNode x{a.first.i, a.first.j, a.second}, y{b.first.i, b.first.j, b.second};
        return x < y;
    });
    for (const auto& [lab, floor] : labelled) {
        index[lab] = static_cast<int>(d.nodes.size());
        d.nodes.push_back({lab.i, lab.j, floor});
    }
    for (const auto& [from, to] : raw_arrows) {
        auto a = index.find(from), b = index.find(to);
        if (a == index.end() || b == index.end()) continue;  // pruned with its node
        d.arrows.push_back({a->second, b->second});
    }
    std::sort(d.arrows.begin(), d.arrows.end());
    return d;
}

}  // namespace detail

/// Composition series of the principal series pi_{i,j}: the diamond with the
/// bottom factor absent when i+j = n.  Floors count from the socle.
inline CompositionDiagram ps_composition_series(int n, int i, int j) {
    if (!(0 <= i && i <= n - 1 && 1 <= j && j <= n - i))
        throw std::invalid_argument("ps_composition_series: label out of range");
    bool truncated = (i + j == n);
    int base = truncated ? 0 : 1;
    std::vector<std::pair<ModuleLabel, int>> nodes{
        {{i, j}, base + 1}, {{i, j + 1}, base}, {{i + 1, j}, base}};
    if (!truncated) nodes.push_back({{i + 1, j + 1}, 0});
    std::vector<std::pair<ModuleLabel, ModuleLabel>> arrows{
        {{i, j}, {i, j + 1}}, {{i, j}, {i + 1, j}}, {{i, j + 1}, {i + 1, j + 1}}, {{i + 1, j}, {i + 1, j + 1}}};
    return detail::finish_diagram(n, nodes, arrows);
}

/// Composition series of the standard Whittaker module attached to sigma:
/// three floors over the socle (i,j), with labels beyond i+j = n+1 removed
/// together with their arrows.
inline CompositionDiagram standard_module_diagram(const InfChar& L, const SigmaWeight& g) {
    auto lab = sigma_condition(L, g);
    if (!lab) throw std::invalid_argument("standard_module_diagram: sigma matches no submodule label");
    const int i = lab->i, j = lab->j;
    std::vector<std::pair<ModuleLabel, int>> nodes{
        {{i, j}, 0},
        {{i - 1, j}, 1}, {{i, j + 1}, 1}, {{i, j - 1}, 1}, {{i + 1, j}, 1},
        {{i - 1, j + 1}, 2}, {{i - 1, j - 1}, 2}, {{i + 1, j + 1}, 2}, {{i + 1, j - 1}, 2}};
    std::vector<std::pair<ModuleLabel, ModuleLabel>> arrows{
        {{i - 1, j + 1}, {i - 1, j}}, {{i - 1, j + 1}, {i, j + 1}},
        {{i - 1, j - 1}, {i - 1, j}}, {{i - 1, j - 1}, {i, j - 1}},
        {{i + 1, j + 1}, {i, j + 1}}, {{i + 1, j + 1}, {i + 1, j}},
        {{i + 1, j - 1}, {i, j - 1}}, {{i + 1, j - 1}, {i + 1, j}},
        {{i - 1, j}, {i, j}}, {{i, j + 1}, {i, j}}, {{i, j - 1}, {i, j}}, {{i + 1, j}, {i, j}}};
    return detail::finish_diagram(L.n, nodes, arrows);
}

/// Whether the K-spectra of two distinct labels are adjacent (differ by a
/// weight of s); for these boxes that reduces to |di| + |dj| = 1.  Labels
/// past i+j = n+1 are the zero module and are adjacent to nothing.
inline bool adjacency(int n, const ModuleLabel& a, const ModuleLabel& b) {
    for (const ModuleLabel& l : {a, b}) {
        if (l.i < 0 || l.j < 1 || l.i > n) throw std::invalid_argument("adjacency: label out of range");
        if (l.i + l.j > n + 1) return false;
    }
    if (a == b) return false;
    return std::abs(a.i - b.i) + std::abs(a.j - b.j) == 1;
}

/// Box-level adjacency probe used to validate the reduction above.
inline bool adjacency_by_boxes(const InfChar& L, const ModuleLabel& a, const ModuleLabel& b, long spread_cap) {
    auto ea = k_spectrum(L, a).enumerate(spread_cap);
    auto eb = k_spectrum(L, b).enumerate(spread_cap);
    std::set<std::vector<long>> in_b;
    for (const auto& w : eb) in_b.insert(w.entries());
    for (const auto& w : ea)
        for (std::size_t k = 0; k < w.rank(); ++k)
            for (long d : {-1L, 1L}) {
                auto v = w.entries();
                v[k] += d;
                if (in_b.count(v)) return true;
            }
    return false;
}

// ---------------------------------------------------------------------------
// Generic infinitesimal character: characteristic exponents
// ---------------------------------------------------------------------------

struct GenericExponent {
    PSParam param;               // representative with nu > 0; the orbit is {+nu, -nu}
    int pair_p = 0, pair_q = 0;  // the (p < q) entries of Lambda carried by (mu_tilde, nu)
    bool delta_exists = false;   // the mu-part is an integral M-type
    int multiplicity = 0;        // dim Hom_{M^eta}(delta|_{M^eta}, sigma) when delta exists
};

/// Enumerate the W(G,A)-orbits of principal-series parameters with the given
/// generic infinitesimal character, and their sigma-multiplicities.
/// Genericity is caller-asserted; entries must be strictly decreasing.
inline std::vector<GenericExponent> generic_exponents(const std::vector<Rational>& Lambda, const SigmaWeight& g,
                                                      bool caller_asserts_generic) {
    if (!caller_asserts_generic) throw std::invalid_argument("generic_exponents: caller must assert genericity");
    const int n = static_cast<int>(Lambda.size()) - 1;
    for (std::size_t p = 0; p + 1 < Lambda.size(); ++p)
        if (!(Lambda[p] > Lambda[p + 1])) throw std::invalid_argument("generic_exponents: Lambda must strictly decrease");
    Rational absL = 0;
    for (const Rational& x : Lambda) absL += x;

    std::vector<GenericExponent> out;
    for (int p = 1; p <= n + 1; ++p)
        for (int q = p + 1; q <= n + 1; ++q) {
            GenericExponent ge;
            ge.pair_p = p;
            ge.pair_q = q;
            ge.param.mu_tilde = Lambda[p - 1] + Lambda[q - 1];
            ge.param.nu = Lambda[p - 1] - Lambda[q - 1];
            bool integral = is_integer(ge.param.mu_tilde);
            std::vector<long> mu_int;
            int r = 1;
            for (int idx = 1; idx <= n + 1; ++idx) {
                if (idx == p || idx == q) continue;
                Rational m = Lambda[idx - 1] - frac(n - 2 * r, 2);
                ge.param.mu.push_back(m);
                if (!is_integer(m))
                    integral = false;
                else
                    mu_int.push_back(static_cast<long>(m.get_num().get_si()));
                ++r;
            }
            ge.delta_exists = integral;
            // m_delta(sigma): U(n-1) -> U(n-2) interlacing plus the U(1) line
            ge.multiplicity = 0;
            if (integral && static_cast<int>(g.u_part.size()) == n - 2) {
                bool ok = branch_multiplicity(Weight(mu_int), Weight(g.u_part)) == 1;
                long s = 0;
                for (long x : g.u_part) s += x;
                ok = ok && Rational(g.u1 + s) == absL;
                ge.multiplicity = ok ? 1 : 0;
            }
            out.push_back(std::move(ge));
        }
    return out;
}

/// dim Hom_M(tau_lambda|_M, delta) for delta given by a PSParam.
inline int tau_contains_delta(const Weight& lambda, const Rational& abs_Lambda, const PSParam& d) {
    std::vector<long> mu;
    for (const Rational& x : d.mu) {
        if (!is_integer(x)) return 0;
        mu.push_back(static_cast<long>(x.get_num().get_si()));
    }
    if (mu.size() + 1 != lambda.rank()) return 0;
    if (branch_multiplicity(lambda, Weight(mu)) == 0) return 0;
    Rational mu_sum = 0;
    for (const Rational& x : d.mu) mu_sum += x;
    return d.mu_tilde == abs_Lambda - mu_sum ? 1 : 0;
}

}  // namespace whitmod
