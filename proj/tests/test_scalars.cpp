#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "whitmod/radical.hpp"
#include "whitmod/rational.hpp"
#include "whitmod/theta_poly.hpp"

#include <random>

using namespace whitmod;

TEST_CASE("rational parsing and halves") {
    CHECK(parse_rational("5/2") == Rational(5, 2));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK_THROWS(parse_rational(""));
}

TEST_CASE("gaussian rational field ops") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    GaussianRational z(Rational(1, 2), Rational(-3));
    CHECK(z / z == GaussianRational(1));
    CHECK((z * i) / i == z);
}

TEST_CASE("radical sums normalize radicands to squarefree") {
    RadicalSum r = RadicalSum::sqrt_of(Rational(8));  // 2 sqrt(2)
    RadicalSum expect = RadicalSum(Rational(2)) * RadicalSum::sqrt_of(Rational(2));
    CHECK(r == expect);
    // sqrt(12) * sqrt(3) = 6
    CHECK(RadicalSum::sqrt_of(Rational(12)) * RadicalSum::sqrt_of(Rational(3)) == RadicalSum(Rational(6)));
    // sqrt of a negative rational is i sqrt(|.|)
    RadicalSum neg = RadicalSum::sqrt_of(Rational(-9, 4));
    CHECK(neg * neg == RadicalSum(Rational(-9, 4)));
    CHECK(!neg.is_rational());
}

TEST_CASE("radical arithmetic is ring-like on random values") {
    std::mt19937 rng(7);
    auto rnd = [&] {
        std::uniform_int_distribution<int> num(-5, 5), rad(1, 12);
        RadicalSum s;
        for (int k = 0; k < 3; ++k)
            s += RadicalSum(Rational(num(rng))) * RadicalSum::sqrt_of(Rational(rad(rng)));
        return s;
    };
    for (int trial = 0; trial < 50; ++trial) {
        RadicalSum a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("polynomials over Q(i)") {
    UPoly u = UPoly::variable();
    UPoly p = (u + UPoly(GaussianRational(1))) * (u - UPoly(GaussianRational(1)));
    CHECK(p.degree() == 2);
    CHECK(p.eval(GaussianRational(Rational(3))) == GaussianRational(8));
    CHECK(p.shifted(GaussianRational(1)).eval(GaussianRational(0)) == GaussianRational(0));
}

TEST_CASE("theta polynomial defining relation") {
    ThetaPoly t = ThetaPoly::t(), th = ThetaPoly::theta();
    // theta t = t (theta + 1)
    CHECK(th * t == t * th + t);
    // theta^2 t = t (theta + 1)^2
    ThetaPoly lhs = th * th * t;
    ThetaPoly thp1 = ThetaPoly::theta_plus(RadicalSum(1));
    CHECK(lhs == t * thp1 * thp1);
}

TEST_CASE("theta polynomial associativity, exhaustive monomials to degree 6") {
    std::vector<ThetaPoly> monos;
    for (int m = 0; m <= 3; ++m)
        for (int k = 0; m + k <= 6; ++k) monos.push_back(ThetaPoly::monomial(m, k, RadicalSum(Rational(m + k + 1))));
    for (const auto& a : monos)
        for (const auto& b : monos)
            for (const auto& c : monos) CHECK((a * b) * c == a * (b * c));
    // and theta t - t theta = t on every monomial pair
    ThetaPoly t = ThetaPoly::t(), th = ThetaPoly::theta();
    for (const auto& a : monos) CHECK((th * t - t * th) * a == t * a);
}

TEST_CASE("theta polynomial action on powers") {
    // (t theta + 2) applied to t^s = s t^{s+1} + 2 t^s
    ThetaPoly p = ThetaPoly::monomial(1, 1) + ThetaPoly(Rational(2));
    auto img = p.apply_to_power(Rational(5, 3));
    CHECK(img.at(0) == RadicalSum(Rational(2)));
    CHECK(img.at(1) == RadicalSum(Rational(5, 3)));
}
