#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "whitmod/frobenius.hpp"
#include "whitmod/unitary_dual.hpp"

using namespace whitmod;

namespace {

const Weight kEmptyGamma{std::vector<long>{}};

Rational chi_capelli(const std::vector<Rational>& Lambda, int n, const Rational& u) {
    Rational out = 1;
    for (const Rational& x : Lambda) out *= u + x + frac(n, 2);
    return out;
}

std::vector<std::pair<OpMatrix, Rational>> central_system(const std::vector<Rational>& Lambda, const Weight& ls,
                                                          const std::vector<Rational>& us) {
    Rational absL = 0;
    for (const Rational& x : Lambda) absL += x;
    std::vector<std::pair<OpMatrix, Rational>> ops;
    for (const Rational& u : us)
        ops.push_back({central_action(ls, kEmptyGamma, u, absL), chi_capelli(Lambda, 2, u)});
    return ops;
}

}  // namespace

TEST_CASE("trivial one-dimensional system") {
    auto basis = enumerate_partial_gt(Weight({0, 0}), kEmptyGamma);
    OpMatrix op(basis, basis);
    op.add(0, 0, ThetaPoly::theta_plus(RadicalSum(Rational(-7, 3))));
    std::vector<std::pair<OpMatrix, Rational>> ops{{op, Rational(0)}};
    auto roots = indicial_roots(ops);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].first == Rational(7, 3));
    auto sols = frobenius(ops, 4);
    REQUIRE(sols.size() == 1);
    CHECK(!sols[0].resonant);
    CHECK(frobenius_residual_ok(ops, sols[0]));
}

TEST_CASE("non-theta-form input is rejected") {
    auto basis = enumerate_partial_gt(Weight({1, 0}), kEmptyGamma);
    REQUIRE(basis.size() == 2);
    OpMatrix op(basis, basis);
    op.add(0, 1, ThetaPoly::theta());  // off-diagonal t^0 part
    op.add(0, 0, ThetaPoly::theta());
    op.add(1, 1, ThetaPoly::theta());
    std::vector<std::pair<OpMatrix, Rational>> ops{{op, Rational(0)}};
    CHECK_THROWS_AS(indicial_roots(ops), std::invalid_argument);
}

TEST_CASE("characteristic exponents of the central-action system") {
    // generic Lambda with integral sum; exponents nu + rho_A = +-(L_p - L_q) + n
    std::vector<Rational> Lambda{Rational(1, 3), Rational(0), Rational(-1, 3)};
    const Weight ls({1, -1});
    auto ops = central_system(Lambda, ls, {Rational(0), Rational(1), Rational(-1), Rational(2)});

    auto roots = indicial_roots(ops);
    std::vector<Rational> got;
    for (const auto& [s, seed] : roots) got.push_back(s);
    std::sort(got.begin(), got.end());

    // expected multiset from the principal-series parameter enumeration
    SigmaWeight g{{}, 0};
    auto exps = generic_exponents(Lambda, g, true);
    std::vector<Rational> expect;
    Weight lam({1, -1});  // the U(2)-part of the K-type carried by ls
    for (const auto& e : exps) {
        if (!e.delta_exists || e.multiplicity == 0) continue;
        if (tau_contains_delta(lam, Rational(0), e.param) == 0) continue;
        expect.push_back(e.param.nu + 2);
        expect.push_back(-e.param.nu + 2);
    }
    std::sort(expect.begin(), expect.end());
    CHECK(got == expect);
    REQUIRE(got.size() == 2);
    CHECK(got[0] == Rational(4, 3));
    CHECK(got[1] == Rational(8, 3));

    auto sols = frobenius(ops, 12);
    REQUIRE(sols.size() == 2);
    for (const auto& s : sols) {
        CHECK(!s.resonant);
        CHECK(!s.log_obstructed);
        CHECK(s.order == 12);
        CHECK(frobenius_residual_ok(ops, s));
    }
}

TEST_CASE("resonant exponents are flagged") {
    // Lambda = (1/4, 0, -1/4): exponents 2 +- 1/2 differ by the integer 1
    std::vector<Rational> Lambda{Rational(1, 4), Rational(0), Rational(-1, 4)};
    auto ops = central_system(Lambda, Weight({1, -1}), {Rational(0), Rational(1), Rational(-1), Rational(2)});
    auto sols = frobenius(ops, 8);
    REQUIRE(sols.size() == 2);
    bool any_resonant = false;
    for (const auto& s : sols) {
        if (s.resonant) any_resonant = true;
        CHECK(frobenius_residual_ok(ops, s));  // checked to each solution's own order
    }
    CHECK(any_resonant);
}
