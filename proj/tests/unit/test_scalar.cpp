#include "diagdef/scalar/linalg.hpp"
#include "diagdef/scalar/series.hpp"
#include "unit/random_gen.hpp"

#include <doctest.h>

using namespace diagdef;
using diagdef::testing::small_rational;
using diagdef::testing::small_ratfunc;

namespace {
const RatHbar h = RatHbar::var();
const RatLambda lam = RatLambda::var();
}  // namespace

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).denominator() == 2);
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(-1, 2).to_string() == "-1/2");
    CHECK(Rational(3).to_string() == "3/1");
    CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK(binomial(5, 2) == 10);
    CHECK(factorial(5) == 120);
}

TEST_CASE("field axioms hold on random triples") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const Rational a = small_rational(rng), b = small_rational(rng), c = small_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == 1);
    }
    for (int t = 0; t < 60; ++t) {
        const RatLambda a = small_ratfunc<LambdaVar>(rng), b = small_ratfunc<LambdaVar>(rng),
                        c = small_ratfunc<LambdaVar>(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RatLambda());
        if (!a.is_zero()) CHECK(a * a.inverse() == RatLambda(1));
        CHECK(a.denominator().leading() == 1);
        CHECK(gcd(a.numerator(), a.denominator()).is_one());
    }
}

TEST_CASE("rational function canonical form") {
    const RatLambda f = (lam * lam - RatLambda(1)) / (lam - RatLambda(1));
    CHECK(f == lam + RatLambda(1));
    CHECK(f.is_polynomial());
    const RatLambda g(UniPoly<LambdaVar>({0, 2}), UniPoly<LambdaVar>({4, 2}));
    CHECK(g.denominator() == UniPoly<LambdaVar>({2, 1}));
    CHECK(g.numerator() == UniPoly<LambdaVar>({0, 1}));
}

TEST_CASE("specialize") {
    CHECK(specialize(lam * lam, Rational(3)) == 9);
    CHECK_THROWS_AS(specialize(RatLambda(1) / (lam - RatLambda(1)), Rational(1)), PoleAtPoint);
    CHECK(specialize(lam / (lam - RatLambda(1)), Rational(2)) == 2);

    std::mt19937_64 rng(5);
    int checked = 0;
    for (int t = 0; t < 100; ++t) {
        const RatLambda f = small_ratfunc<LambdaVar>(rng), g = small_ratfunc<LambdaVar>(rng);
        const Rational at = small_rational(rng);
        try {
            const Rational fv = specialize(f, at), gv = specialize(g, at);
            CHECK(specialize(f * g, at) == fv * gv);
            CHECK(specialize(f + g, at) == fv + gv);
            ++checked;
        } catch (const PoleAtPoint&) {
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("series_expand") {
    const auto one = series_expand(RatHbar(1), 3);
    CHECK(one == HbarSeries(3, {1, 0, 0, 0}));

    // hbar/(2+hbar) = sum_k (-1)^k hbar^(k+1) / 2^(k+1)
    const auto s = series_expand(h / (RatHbar(2) + h), 3);
    CHECK(s == HbarSeries(3, {0, Rational(1, 2), Rational(-1, 4), Rational(1, 8)}));

    CHECK_THROWS_AS(series_expand(RatHbar(1) / h, 2), PoleAtZero);
    // Common valuation cancels: hbar^2 / (hbar*(1 - hbar)) = hbar + hbar^2 + ...
    const auto t = series_expand(RatHbar(UniPoly<HbarVar>({0, 0, 1})) / RatHbar(UniPoly<HbarVar>({0, 1, -1})), 2);
    CHECK(t == HbarSeries(2, {0, 1, 1}));
}

TEST_CASE("series_expand times denominator reproduces numerator") {
    std::mt19937_64 rng(21);
    int checked = 0;
    for (int t = 0; t < 80; ++t) {
        const RatHbar f = small_ratfunc<HbarVar>(rng, 3);
        const int order = 6;
        HbarSeries s;
        try {
            s = series_expand(f, order);
        } catch (const PoleAtZero&) {
            continue;
        }
        const HbarSeries den(order, f.denominator().coefficients());
        const HbarSeries num(order, f.numerator().coefficients());
        CHECK((s * den).agrees_with(num));
        ++checked;
    }
    CHECK(checked > 30);
}

TEST_CASE("series orders take the minimum") {
    const HbarSeries a(2, {1, 1, 1});
    const HbarSeries b(4, {1, 2, 3, 4, 5});
    CHECK((a + b).order() == 2);
    CHECK((a * b).order() == 2);
    CHECK((a * HbarSeries::hbar()).order() == 2);
    CHECK((a * HbarSeries::hbar()) == HbarSeries(2, {0, 1, 1}));
    CHECK((HbarSeries(1) + HbarSeries::hbar()).is_exact());
    CHECK_THROWS_AS(a.coeff(3), InvalidParameter);
}

TEST_CASE("series_div_valuation") {
    const HbarSeries num(3, {0, 1, 1, 0});
    const HbarSeries den(3, {0, 1, 0, 0});
    const auto q = series_div_valuation(num, den);
    CHECK(q.order() == 2);
    CHECK(q == HbarSeries(2, {1, 1, 0}));
    CHECK_THROWS_AS(series_div_valuation(HbarSeries(4, {0, 0, 1}), HbarSeries(4, {0, 0, 0, 1})), ValuationMismatch);

    // (e^hbar - 1)/hbar re-multiplied.
    const auto e = exp_hbar(6) - HbarSeries(1);
    const auto r = series_div_valuation(e, HbarSeries(6, {0, 1}));
    CHECK((r * HbarSeries(5, {0, 1})).agrees_with(e.truncate(5)));
    CHECK(r.coeff(2) == Rational(1, 6));
}

TEST_CASE("named substitution q := 1 + hbar") {
    const RatQ q = RatQ::var();
    const RatQ qint3 = RatQ(1) + q + q * q;
    const RatHbar sub = substitute_affine<HbarVar>(qint3, Rational(1), Rational(1));
    CHECK(sub == RatHbar(UniPoly<HbarVar>({3, 3, 1})));
}

TEST_CASE("rational roots") {
    const UniPoly<LambdaVar> p = UniPoly<LambdaVar>({0, -1, 1}) * UniPoly<LambdaVar>({1, 0, 1});
    CHECK(rational_roots(p) == std::vector<Rational>{0, 1});
    CHECK(rational_roots(UniPoly<LambdaVar>({-1, 0, 4})) == std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
}

TEST_CASE("exact linear algebra") {
    Matrix a(2, 3);
    a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 3;
    a(1, 0) = 2; a(1, 1) = 4; a(1, 2) = 6;
    CHECK(rank(a) == 1);
    CHECK(null_space(a).size() == 2);
    CHECK(solve(a, {1, 2}).has_value());
    CHECK_FALSE(solve(a, {1, 3}).has_value());
    const auto w = infeasibility_certificate(a, {1, 3});
    REQUIRE(w.has_value());
    CHECK((a.transpose() * *w) == std::vector<Rational>{0, 0, 0});
    CHECK_FALSE(dot(*w, {1, 3}).is_zero());
}
