#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "whitmod/gt_pattern.hpp"

using namespace whitmod;

namespace {

GTVector single(const GTPattern& q) { return GTVector{{q, RadicalSum(1)}}; }

// matrix identity check by acting on every basis pattern
bool same_action(const std::vector<GTPattern>& basis, auto&& f, auto&& g) {
    for (const auto& q : basis) {
        if (f(single(q)) != g(single(q))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("enumeration matches the Weyl dimension formula") {
    CHECK(enumerate_gt(Weight({0, 0})).size() == 1);
    CHECK(enumerate_gt(Weight({0, 0}))[0].rows() == std::vector<std::vector<long>>{{0}, {0, 0}});

    auto p20 = enumerate_gt(Weight({2, 0}));
    REQUIRE(p20.size() == 3);
    for (long v = 0; v <= 2; ++v) CHECK(p20[v].entry(1, 1) == v);

    CHECK(enumerate_gt(Weight({1, 1, 0})).size() == 3);

    // sweep: counts equal the independent dimension formula
    std::vector<Weight> sweep{Weight({3, 1}), Weight({2, 2, 0}), Weight({3, 1, 0}), Weight({2, 1, 0, -1}),
                              Weight({1, 0, 0, -1})};
    for (const auto& w : sweep) CHECK(Integer(enumerate_gt(w).size()) == weyl_dim(w));

    CHECK_THROWS_AS(enumerate_gt(Weight({0, 2})), std::invalid_argument);
}

TEST_CASE("raising and lowering coefficients on the 3-dimensional representation") {
    auto p20 = enumerate_gt(Weight({2, 0}));
    auto [a_top, b_top] = gt_coeffs(p20[2], 1, 1);  // q_11 = 2: raising kills the highest vector
    CHECK(a_top.is_zero());
    auto [a_mid, b_mid] = gt_coeffs(p20[1], 1, 1);  // q_11 = 1: sl2 ladder gives sqrt(2)
    CHECK(a_mid == RadicalSum::sqrt_of(Rational(2)));
    CHECK(b_mid == RadicalSum::sqrt_of(Rational(2)));
    CHECK_THROWS_AS(gt_coeffs(p20[0], 1, 2), std::invalid_argument);
}

TEST_CASE("coefficient vanishing characterizes invalid shifts") {
    for (const auto& w : {Weight({2, 1, 0}), Weight({3, 0}), Weight({2, 0, -1})}) {
        for (const auto& q : enumerate_gt(w)) {
            for (std::size_t j = 1; j < q.size(); ++j)
                for (std::size_t i = 1; i <= j; ++i) {
                    auto [a, b] = gt_coeffs(q, i, j);
                    CHECK(a.is_zero() == !q.shifted(i, j, +1).valid());
                    CHECK(b.is_zero() == !q.shifted(i, j, -1).valid());
                }
        }
    }
}

TEST_CASE("diagonal action and commutators") {
    auto p10 = enumerate_gt(Weight({1, 0}));
    REQUIRE(p10.size() == 2);
    const GTPattern& hi = p10[1];  // q_11 = 1
    GTVector v = act_diag(1, single(hi));
    CHECK(v == GTVector{{hi, RadicalSum(1)}});

    const GTPattern& lo = p10[0];  // q_11 = 0
    // [E_12, E_21] = E_11 - E_22 has eigenvalue 0 - 1 = -1 on q_11 = 0
    GTVector comm;
    for (const auto& [q, c] : act_raise(1, act_lower(1, single(lo)))) gtv_add(comm, q, c);
    for (const auto& [q, c] : act_lower(1, act_raise(1, single(lo)))) gtv_add(comm, q, -c);
    CHECK(comm == GTVector{{lo, RadicalSum(-1)}});

    CHECK_THROWS_AS(act_raise(1, GTVector{{p10[0], RadicalSum(1)}, {enumerate_gt(Weight({2, 0}))[0], RadicalSum(1)}}),
                    std::invalid_argument);
}

TEST_CASE("adjacent commutation relations hold as exact matrix identities") {
    for (const auto& w : {Weight({1, 0}), Weight({2, 0}), Weight({2, 1, 0}), Weight({1, 0, -1})}) {
        auto basis = enumerate_gt(w);
        std::size_t m = w.rank();
        for (std::size_t j = 1; j + 1 <= m; ++j) {
            bool ok = same_action(
                basis,
                [&](GTVector v) {
                    GTVector out = act_raise(j, act_lower(j, v));
                    for (const auto& [q, c] : act_lower(j, act_raise(j, v))) gtv_add(out, q, -c);
                    return out;
                },
                [&](GTVector v) {
                    GTVector out = act_diag(j, v);
                    for (const auto& [q, c] : act_diag(j + 1, v)) gtv_add(out, q, -c);
                    return out;
                });
            CHECK(ok);
        }
    }
}

TEST_CASE("general commutation relations for all generator pairs") {
    // [E_ij, E_kl] = d_jk E_il - d_li E_kj as exact matrix identities,
    // including the iterated-commutator generators
    for (const auto& w : {Weight({2, 1, 0}), Weight({1, 0, -1}), Weight({1, 0, 0, -1})}) {
        auto basis = enumerate_gt(w);
        std::size_t m = w.rank();
        for (std::size_t i = 1; i <= m; ++i)
            for (std::size_t j = 1; j <= m; ++j)
                for (std::size_t k = 1; k <= m; ++k)
                    for (std::size_t l = 1; l <= m; ++l) {
                        bool ok = same_action(
                            basis,
                            [&](GTVector v) {
                                GTVector out = act_eij(i, j, act_eij(k, l, v));
                                for (const auto& [q, c] : act_eij(k, l, act_eij(i, j, v))) gtv_add(out, q, -c);
                                return out;
                            },
                            [&](GTVector v) {
                                GTVector out;
                                if (j == k)
                                    for (const auto& [q, c] : act_eij(i, l, v)) gtv_add(out, q, c);
                                if (l == i)
                                    for (const auto& [q, c] : act_eij(k, j, v)) gtv_add(out, q, -c);
                                return out;
                            });
                        CHECK(ok);
                    }
    }
}

TEST_CASE("the quadratic Casimir acts by its known scalar") {
    // sum_{i,j} E_ij E_ji on the standard representation of gl_3:
    // scalar sum_p l_p (l_p + 3 + 1 - 2p) = 3 for lambda = (1,0,0)
    Weight w({1, 0, 0});
    for (const auto& q : enumerate_gt(w)) {
        GTVector total;
        for (std::size_t i = 1; i <= 3; ++i)
            for (std::size_t j = 1; j <= 3; ++j)
                for (const auto& [p, c] : act_eij(i, j, act_eij(j, i, single(q)))) gtv_add(total, p, c);
        CHECK(total == GTVector{{q, RadicalSum(Rational(3))}});
    }
}

TEST_CASE("dual patterns") {
    GTPattern zero({{0}, {0, 0}});
    CHECK(zero.dual() == zero);

    auto p10 = enumerate_gt(Weight({1, 0}));
    GTPattern q = p10[1];  // rows [1],[1,0]
    GTPattern qd = q.dual();
    CHECK(qd.top() == Weight({0, -1}));
    CHECK(qd.entry(1, 1) == -1);

    for (const auto& p : enumerate_gt(Weight({2, 1, 0}))) CHECK(p.dual().dual() == p);

    // duality exchanges raising coefficients with transposed lowering ones:
    // a_{i,j}(Q*) = b_{j+1-i,j}(Q)
    for (const auto& p : enumerate_gt(Weight({2, 1, 0}))) {
        GTPattern pd = p.dual();
        for (std::size_t j = 1; j < p.size(); ++j)
            for (std::size_t i = 1; i <= j; ++i) {
                auto [a_dual, b_dual] = gt_coeffs(pd, i, j);
                auto [a, b] = gt_coeffs(p, j + 1 - i, j);
                CHECK(a_dual == b);
                CHECK(b_dual == a);
            }
    }
}

TEST_CASE("branching multiplicities") {
    CHECK(branch_multiplicity(Weight({2, 0}), Weight({1})) == 1);
    CHECK(branch_multiplicity(Weight({2, 0}), Weight({3})) == 0);
    CHECK_THROWS_AS(branch_multiplicity(Weight({2, 0}), Weight({1, 0})), std::invalid_argument);

    // dimension bookkeeping: sum over branch weights of dim(mu) = dim(lambda)
    for (const auto& w : {Weight({1, 1, 0}), Weight({3, 1}), Weight({2, 1, 0, 0})}) {
        Integer total = 0;
        for (const auto& mu : branch_weights(w)) {
            CHECK(branch_multiplicity(w, mu) == 1);
            total += weyl_dim(mu);
        }
        CHECK(total == weyl_dim(w));
    }
    CHECK(weyl_dim(Weight({1, 1, 0})) == 3);
}

TEST_CASE("partial pattern enumeration") {
    auto b2 = enumerate_partial_gt(Weight({1, -1}), Weight(std::vector<long>{}));
    REQUIRE(b2.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) CHECK(b2[k].mid == std::vector<long>{static_cast<long>(k) - 1});

    auto b3 = enumerate_partial_gt(Weight({1, 0, -1}), Weight({0}));
    CHECK(b3.size() == 4);

    CHECK(enumerate_partial_gt(Weight({1, 0, -1}), Weight({5})).empty());
    CHECK_THROWS_AS(enumerate_partial_gt(Weight({1, 0, -1}), Weight({0, 0})), std::invalid_argument);
}

TEST_CASE("top-row shift coefficients square to the forced products") {
    auto basis = enumerate_partial_gt(Weight({1, -1}), Weight(std::vector<long>{}));
    for (const auto& q : basis) {
        for (std::size_t k = 1; k <= 2; ++k) {
            RadicalSum b = partial_coeff_b_top(q, k);
            Rational expect(-1, 4);
            expect *= q.l_top(k) - q.l_mid(1);
            CHECK(b * b == RadicalSum(expect));
            // b_{k,n}(Q) = a_{k,n}(sigma_{k,n}^- Q)
            CHECK(b == partial_coeff_a_top(q.shift_top(k, -1), k));
        }
    }
    // q_1 = 0, k = 1: the forced square -1/4 is negative, so the value is imaginary
    RadicalSum b = partial_coeff_b_top(basis[1], 1);
    CHECK(!b.is_rational());
    CHECK(b * b == RadicalSum(Rational(-1, 4)));
}
