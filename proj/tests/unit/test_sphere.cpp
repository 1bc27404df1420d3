#include "diagdef/sphere/cohomology.hpp"
#include "unit/sphere_gen.hpp"

#include <doctest.h>

using namespace diagdef;
using namespace diagdef::sphere;
using diagdef::testing::small_sphere;

namespace {

const Scalar lam = Scalar::var();

// Dense polynomial in x over Q(lambda), independent of the principal-parts code.
using XPoly = std::vector<Scalar>;

XPoly trim(XPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

XPoly mul(const XPoly& a, const XPoly& b) {
    if (a.empty() || b.empty()) return {};
    XPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(r);
}

XPoly add(XPoly a, const XPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return trim(a);
}

XPoly linear_pow(const Scalar& root, int n) {
    XPoly r{Scalar(1)};
    for (int i = 0; i < n; ++i) r = mul(r, {-root, Scalar(1)});
    return r;
}

Scalar location(Pole p) {
    return p == Pole::Zero ? Scalar(0) : p == Pole::One ? Scalar(1) : lam;
}

// Numerator of e over x^K (x-1)^K (x-lambda)^K.
XPoly numerator_over(const SphereElement& e, int k) {
    XPoly r;
    for (const auto& [t, c] : e.terms()) {
        XPoly term{c};
        if (!t.is_pole()) {
            XPoly mono(static_cast<std::size_t>(t.power) + 1);
            mono.back() = Scalar(1);
            term = mul(term, mono);
        }
        for (Pole p : kAllPoles) {
            int e_p = k;
            if (t.is_pole() && t.pole() == p) e_p -= t.power;
            REQUIRE(e_p >= 0);
            term = mul(term, linear_pow(location(p), e_p));
        }
        r = add(r, term);
    }
    return r;
}

int max_order(const SphereElement& e) {
    int m = 0;
    for (Pole p : kAllPoles) m = std::max(m, e.pole_order(p));
    return m;
}

}  // namespace

TEST_CASE("multiply examples") {
    const auto x = SphereElement::x();
    const auto inv_x = SphereElement::pole_power(Pole::Zero, 1);
    const auto inv_x1 = SphereElement::pole_power(Pole::One, 1);
    const auto inv_xl = SphereElement::pole_power(Pole::Lambda, 1);
    CHECK(x * inv_x == SphereElement(1));
    CHECK(inv_x * inv_x1 == inv_x1 - inv_x);
    const Scalar d = (lam - Scalar(1)).inverse();
    CHECK(inv_x1 * inv_xl == d * inv_xl - d * inv_x1);
    CHECK(SphereElement::x_minus(Pole::Lambda) * inv_xl == SphereElement(1));
}

TEST_CASE("common-denominator oracle agrees with multiply") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 40; ++t) {
        const auto a = small_sphere(rng), b = small_sphere(rng);
        const int ka = max_order(a), kb = max_order(b);
        const auto prod = a * b;
        CHECK(numerator_over(prod, ka + kb) == mul(numerator_over(a, ka), numerator_over(b, kb)));
    }
}

TEST_CASE("commutativity and associativity") {
    std::mt19937_64 rng(202);
    for (int t = 0; t < 20; ++t) {
        const auto a = small_sphere(rng, 3), b = small_sphere(rng, 3), c = small_sphere(rng, 3);
        CHECK(a * b - b * a == SphereElement());
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("substitute_scale") {
    CHECK(substitute_scale(BElement(SphereElement::x())) == SphereElement::x_power(1, lam.inverse()));
    CHECK(substitute_scale(BElement(SphereElement::pole_power(Pole::One, 1))) ==
          SphereElement::pole_power(Pole::Lambda, 1, lam));
    CHECK(substitute_scale(BElement(SphereElement(1))) == SphereElement(1));
    CHECK_THROWS_AS(BElement(SphereElement::pole_power(Pole::Lambda, 2)), NotInB);

    std::mt19937_64 rng(303);
    for (int t = 0; t < 30; ++t) {
        const BElement a(small_sphere(rng, 3, false)), b(small_sphere(rng, 3, false));
        const BElement ab(a.value() * b.value());
        CHECK(substitute_scale(ab) == substitute_scale(a) * substitute_scale(b));
        const auto img = substitute_scale(a);
        CHECK_FALSE(img.has_pole_at(Pole::One));
    }
}

TEST_CASE("derivation_apply") {
    const auto x = SphereElement::x();
    CHECK(derivation_apply(x, x) == x);
    CHECK(derivation_apply(SphereElement(1), SphereElement::pole_power(Pole::One, 1)) ==
          SphereElement::pole_power(Pole::One, 2, Scalar(-1)));
    CHECK(derivation_apply(x, SphereElement::pole_power(Pole::Zero, 1)) ==
          SphereElement::pole_power(Pole::Zero, 1, Scalar(-1)));

    std::mt19937_64 rng(404);
    for (int t = 0; t < 25; ++t) {
        const auto v = small_sphere(rng, 2), a = small_sphere(rng, 3), b = small_sphere(rng, 3);
        CHECK(derivation_apply(v, a * b) == derivation_apply(v, a) * b + a * derivation_apply(v, b));
    }
}

TEST_CASE("geometric series inverts x - lambda(1+hbar)") {
    for (int n : {0, 1, 3, 12}) {
        const auto rep = geometric_series_check(n);
        CHECK(rep.pass);
        CHECK(rep.residual.is_zero());
    }
}

TEST_CASE("L operator") {
    CHECK(L_operator(BElement(SphereElement::x())).is_zero());
    CHECK(L_operator(BElement(SphereElement::pole_power(Pole::One, 1))) ==
          SphereElement::pole_power(Pole::One, 1) - SphereElement::pole_power(Pole::Lambda, 1, lam * lam));
    CHECK(L_operator(BElement(SphereElement::x_power(2))) ==
          SphereElement::x_power(2, Scalar(1) - lam.inverse()));
}

TEST_CASE("solve_L examples") {
    const auto s = solve_L(SphereElement::x_power(2));
    CHECK(s.has_witness());
    CHECK(s.preimage.value() == SphereElement::x_power(2, (Scalar(1) - lam.inverse()).inverse()));

    const auto r = solve_L(SphereElement::x());
    CHECK_FALSE(r.has_witness());
    CHECK(r.residual.x_coeff == Scalar(1));
    CHECK(r.residual.pole_one.empty());

    const auto p = solve_L(SphereElement::pole_power(Pole::Lambda, 2));
    CHECK(p.residual.x_coeff.is_zero());
    CHECK(p.residual.pole_one == std::map<int, Scalar>{{2, lam.pow(-3)}});
}

TEST_CASE("solve_L decomposition is exact") {
    std::mt19937_64 rng(505);
    for (int t = 0; t < 40; ++t) {
        const auto c = small_sphere(rng);
        const auto d = solve_L(c);
        CHECK(L_operator(d.preimage) + d.residual.to_element() == c);
    }
}

TEST_CASE("canonical_class") {
    const auto x = SphereElement::x();
    const auto cls = canonical_class({x, SphereElement()}, true);
    CHECK(cls.x_coeff == Scalar(1));
    CHECK(cls.pole_one.empty());
    CHECK(canonical_class({SphereElement(), SphereElement()}, false).is_zero());
    const auto c2 = canonical_class({SphereElement::pole_power(Pole::One, 2), SphereElement()}, false);
    CHECK(c2.pole_one == std::map<int, Scalar>{{2, Scalar(1)}});
    CHECK_THROWS_AS(canonical_class({SphereElement::pole_power(Pole::One, 1), SphereElement()}, true),
                    RegularityViolation);

    // Adding an L-image to the combined value leaves the class unchanged.
    std::mt19937_64 rng(606);
    for (int t = 0; t < 25; ++t) {
        const auto gf = small_sphere(rng, 3), gg = small_sphere(rng, 3);
        const BElement b(small_sphere(rng, 3, false));
        const auto base = canonical_class({gf, gg}, false);
        CHECK(canonical_class({gf + L_operator(b), gg}, false) == base);
        // b contributes b to gamma_f and b(lambda^-1 x) to gamma_g: c changes by L(b).
        CHECK(canonical_class({gf + b.value(), gg + substitute_scale(b)}, false) == base);
    }
}

TEST_CASE("h2 basis") {
    const auto unreg = h2_basis(3, false);
    REQUIRE(unreg.size() == 4);
    CHECK(unreg[0].x_coeff == Scalar(1));
    for (int n = 1; n <= 3; ++n) CHECK(unreg[static_cast<std::size_t>(n)].pole_one == std::map<int, Scalar>{{n, Scalar(1)}});
    CHECK(h2_basis(10, true).size() == 1);
    CHECK(h2_basis(1, false).size() == 2);
    CHECK_THROWS_AS(h2_basis(0, false), CutoffTooSmall);
    for (const auto& e : h2_basis(5, false)) CHECK(canonical_class({e.to_element(), SphereElement()}, false) == e);
}

TEST_CASE("exponential integral of the infinitesimal") {
    const auto x = SphereElement::x();
    const auto r1 = exp_deform_morphism(x, BaseMorphism::F, 1);
    CHECK(r1.pass);
    CHECK(r1.table[0].second == SphereSeries(1, {x, x}));
    CHECK(exp_deform_morphism(SphereElement(), BaseMorphism::G, 4).pass);
    const auto r6 = exp_deform_morphism(x, BaseMorphism::F, 6);
    CHECK(r6.pass);
    CHECK(r6.products_checked >= 20);
    std::vector<SphereElement> expect;
    for (int n = 0; n <= 6; ++n) expect.push_back(x * Scalar(factorial(static_cast<unsigned>(n)).inverse()));
    CHECK(r6.table[0].second == SphereSeries(6, expect));
    CHECK(exp_deform_morphism(SphereElement::pole_power(Pole::One, 1), BaseMorphism::G, 3).pass);
}

TEST_CASE("descended pole set") {
    CHECK(descended_pole_set(1) == std::vector<Scalar>{Scalar(0), Scalar(1), lam});
    CHECK(descended_pole_set(2) == std::vector<Scalar>{Scalar(0), Scalar(Rational(1, 2)), lam});
    CHECK_THROWS_AS(descended_pole_set(0), ZeroMultiplier);
}
