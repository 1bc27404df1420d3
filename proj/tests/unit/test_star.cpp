#include "diagdef/star/star.hpp"

#include <doctest.h>

#include <random>

using namespace diagdef;
using namespace diagdef::stars;

namespace {

const CommPoly2 x = CommPoly2::x(), y = CommPoly2::y();

CommPoly2 mono(int i, int j, const Rational& c = Rational(1)) { return CommPoly2::monomial(i, j, c); }

// Oracle for the normal-ordered product: sum_k hbar^k/k! d_x^k a d_y^k b,
// written directly with iterated partial derivatives.
PolySeries normal_oracle(const CommPoly2& a, const CommPoly2& b, int order) {
    std::vector<CommPoly2> out;
    CommPoly2 da = a, db = b;
    Rational fact(1);
    for (int k = 0; k <= order; ++k) {
        if (k > 0) {
            da = da.dx();
            db = db.dy();
            fact *= k;
        }
        out.push_back(fact.inverse() * (da * db));
    }
    return PolySeries(order, out);
}

CommPoly2 random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> e(0, 3), c(-3, 3);
    CommPoly2 p;
    for (int t = 0; t < 3; ++t) p.add_term(e(rng), e(rng), Rational(c(rng)));
    return p;
}

}  // namespace

TEST_CASE("star examples") {
    const auto n1 = star(x, y, StarSpec::normal(), 1);
    CHECK(n1.product == PolySeries(1, {x * y, CommPoly2(1)}));
    const auto n2 = star(mono(2, 0), mono(0, 2), StarSpec::normal(), 2);
    CHECK(n2.product == PolySeries(2, {mono(2, 2), mono(1, 1, 4), CommPoly2(2)}));
    CHECK(n2.exact);
    const auto q3 = star(x, y, StarSpec::qplane(), 3);
    CHECK(q3.product == PolySeries(3, {x * y, x * y, mono(1, 1, Rational(1, 2)), mono(1, 1, Rational(1, 6))}));
    CHECK_FALSE(q3.exact);
}

TEST_CASE("normal product against the derivative oracle") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 30; ++t) {
        const CommPoly2 a = random_poly(rng), b = random_poly(rng);
        CHECK(star(a, b, StarSpec::normal(), 4).product == normal_oracle(a, b, 4));
        CHECK(star(a, b, StarSpec::normal(), 4).exact);
        CHECK(star(a, b, StarSpec::moyal(), 6).exact);
    }
}

TEST_CASE("commutators") {
    CHECK(star_commutator(x, y, StarSpec::moyal(), 2) == PolySeries(2, {CommPoly2(), CommPoly2(1)}));
    CHECK(star_commutator(x, y, StarSpec::normal(), 2) == PolySeries(2, {CommPoly2(), CommPoly2(1)}));
    CHECK(star_commutator(x, x, StarSpec::moyal(), 4).is_zero());
}

TEST_CASE("associativity") {
    CHECK(associativity_check(StarSpec::normal(), 6, 50, 1).pass);
    CHECK(associativity_check(StarSpec::moyal(), 6, 50, 2).pass);
    const auto q = associativity_check(StarSpec::qplane(), 5, 25, 3);
    CHECK(q.pass);
    CHECK(q.max_residual_terms == 0);
}

TEST_CASE("a non-commuting pair breaks associativity") {
    // x d/dy and d/dx do not commute, so the custom spec is rejected.
    const Derivation x_dy{CommPoly2(), x};
    CHECK_FALSE(derivations_commute(x_dy, Derivation::d_x()));
    CHECK_THROWS_AS(StarSpec::custom({{Rational(1), x_dy, Derivation::d_x()}}), NonCommutingDerivations);
    // Bypassing the check shows the failure the check guards against.
    const StarSpec bad{StarKind::Custom, {{Rational(1), x_dy, Derivation::d_x()}}};
    CHECK_FALSE(associativity_check(bad, 4, 20, 9).pass);
    // A commuting custom pair is accepted and associative.
    const auto ok = StarSpec::custom({{Rational(2), Derivation::d_y(), Derivation::d_x()}});
    CHECK(associativity_check(ok, 4, 10, 4).pass);
}

TEST_CASE("grading") {
    const auto m = star(mono(2, 0), y, StarSpec::moyal(), 3).product;
    for (const auto& c : m.coefficients()) CHECK(is_homogeneous(c, 1));
    const auto n = star(mono(1, 1), mono(1, 1), StarSpec::normal(), 3).product;
    for (const auto& c : n.coefficients()) CHECK(is_homogeneous(c, 0));
    const CommPoly2 any = mono(3, 1) + mono(0, 2, 5);
    CHECK(star(CommPoly2(1), any, StarSpec::qplane(), 3).product == PolySeries::constant(any, 3));
    for (auto spec : {StarSpec::normal(), StarSpec::moyal(), StarSpec::qplane()}) CHECK(grading_check(spec, 30, 11).pass);
}

TEST_CASE("invariants") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        const CommPoly2 a = random_poly(rng), b = random_poly(rng);
        for (auto spec : {StarSpec::normal(), StarSpec::moyal(), StarSpec::qplane()}) {
            const auto p = star(a, b, spec, 3).product;
            CHECK(p.coeff(0) == a * b);
            CHECK(star(CommPoly2(1), a, spec, 3).product == PolySeries::constant(a, 3));
            CHECK(star(a, CommPoly2(1), spec, 3).product == PolySeries::constant(a, 3));
        }
        const auto bracket = star_commutator(a, b, StarSpec::moyal(), 2).coeff(1);
        CHECK(bracket == a.dx() * b.dy() - a.dy() * b.dx());
    }
    for (int n = 0; n <= 6; ++n) {
        const auto xy = star(x, y, StarSpec::qplane(), n).product;
        const auto yx = star(y, x, StarSpec::qplane(), n).product;
        const PolySeries e = exp_hbar(n).map([](const Rational& c) { return CommPoly2(c); });
        CHECK((xy - e * yx).is_zero());
    }
}
