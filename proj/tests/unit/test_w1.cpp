#include "diagdef/w1/w1.hpp"
#include "diagdef/errors.hpp"

#include <doctest.h>

#include <random>

using namespace diagdef;
using namespace diagdef::w1;

namespace {

W1Poly mono(int i, int j, const Rational& c = Rational(1)) { return W1Poly::monomial(i, j, c); }

// Commutators with x and y by the derivation rules on monomials:
// [x^i y^j, x] = -j x^i y^(j-1), [x^i y^j, y] = i x^(i-1) y^j.
W1Poly ad_x_oracle(const W1Poly& p) {
    W1Poly r;
    for (const auto& [k, c] : p.terms())
        if (k.second) r.add_term(k.first, k.second - 1, -c * k.second);
    return r;
}
W1Poly ad_y_oracle(const W1Poly& p) {
    W1Poly r;
    for (const auto& [k, c] : p.terms())
        if (k.first) r.add_term(k.first - 1, k.second, c * k.first);
    return r;
}

W1Poly random_poly(std::mt19937_64& rng, int maxdeg, int terms = 4) {
    std::uniform_int_distribution<int> d(0, maxdeg), c(-5, 5), den(1, 3);
    W1Poly p;
    for (int t = 0; t < terms; ++t) {
        const int total = d(rng);
        const int i = std::uniform_int_distribution<int>(0, total)(rng);
        p.add_term(i, total - i, Rational(c(rng), den(rng)));
    }
    return p;
}

W1Poly random_x_poly(std::mt19937_64& rng, int maxdeg) {
    W1Poly p;
    std::uniform_int_distribution<int> d(0, maxdeg), c(-3, 3);
    for (int t = 0; t < 2; ++t) p.add_term(d(rng), 0, Rational(c(rng)));
    return p;
}

W1Poly random_y_poly(std::mt19937_64& rng, int maxdeg) {
    W1Poly p;
    std::uniform_int_distribution<int> d(0, maxdeg), c(-3, 3);
    for (int t = 0; t < 2; ++t) p.add_term(0, d(rng), Rational(c(rng)));
    return p;
}

}  // namespace

TEST_CASE("commutators agree with the monomial derivation rules") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        const W1Poly p = random_poly(rng, 7);
        CHECK(weyl::commutator(p, W1Poly::x()) == ad_x_oracle(p));
        CHECK(weyl::commutator(p, W1Poly::y()) == ad_y_oracle(p));
    }
}

TEST_CASE("apply_gauge examples") {
    const W1Cocycle g{mono(1, 2), W1Poly()};
    CHECK(apply_gauge(g, GaugeDatum{}) == g);
    // [chi, x] = -xy^2 for chi = xy^3/3, which cancels gamma_f
    CHECK(apply_gauge(g, GaugeDatum{{}, {}, mono(1, 3, Rational(1, 3))}).gamma_f.is_zero());
    // the opposite sign doubles it instead
    CHECK(apply_gauge(g, GaugeDatum{{}, {}, mono(1, 3, Rational(-1, 3))}).gamma_f == mono(1, 2, Rational(2)));
    const W1Cocycle h{W1Poly(), mono(3, 4) + mono(0, 2)};
    const auto shifted = apply_gauge(h, GaugeDatum{{}, {}, mono(2, 0, Rational(1, 2))});
    CHECK(shifted.gamma_f.is_zero());
    CHECK(shifted.gamma_g == h.gamma_g + mono(1, 0));
    CHECK_THROWS_AS(apply_gauge(h, GaugeDatum{mono(1, 1), {}, {}}), InvalidParameter);
    CHECK_THROWS_AS(apply_gauge(h, GaugeDatum{{}, mono(1, 1), {}}), InvalidParameter);
}

TEST_CASE("kill_gamma_f") {
    auto k = kill_gamma_f({mono(1, 2), W1Poly()});
    CHECK(k.cocycle.gamma_f.is_zero());
    CHECK(k.witness.chi == mono(1, 3, Rational(1, 3)));
    CHECK(k.cocycle.gamma_g == mono(0, 3, Rational(1, 3)));
    k = kill_gamma_f({W1Poly(), mono(2, 2)});
    CHECK(k.cocycle.gamma_g == mono(2, 2));
    CHECK(k.witness.chi.is_zero());
    k = kill_gamma_f({mono(5, 0), W1Poly()});
    CHECK(k.cocycle.gamma_f.is_zero());
    CHECK(k.witness.chi == mono(5, 1));
    CHECK(k.cocycle.gamma_g == mono(4, 1, Rational(5)));

    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        const W1Cocycle g{random_poly(rng, 6), random_poly(rng, 6)};
        CHECK(kill_gamma_f(g).cocycle.gamma_f.is_zero());
    }
}

TEST_CASE("membership oracle examples") {
    auto r = membership_oracle(mono(0, 5), 5);
    REQUIRE(r.is_coboundary);
    CHECK(apply_gauge({W1Poly(), mono(0, 5)}, *r.witness) == W1Cocycle{});

    r = membership_oracle(mono(3, 1), 4);
    REQUIRE(r.is_coboundary);
    CHECK(apply_gauge({W1Poly(), mono(3, 1)}, *r.witness) == W1Cocycle{});
    // chi proportional to x^4 y, with alpha compensating on gamma_f
    CHECK(apply_gauge({W1Poly(), mono(3, 1)}, GaugeDatum{mono(4, 0, Rational(1, 4)), {}, mono(4, 1, Rational(-1, 4))}) ==
          W1Cocycle{});

    r = membership_oracle(mono(1, 2), 3);
    CHECK_FALSE(r.is_coboundary);
    CHECK_FALSE(r.witness.has_value());
    CHECK_FALSE(r.certificate.empty());
    CHECK_FALSE(r.pairing.is_zero());

    CHECK_THROWS_AS(membership_oracle(mono(2, 3), 4), CutoffTooSmall);
}

TEST_CASE("certificates annihilate every gauge direction") {
    // pair the dual vector with the image of random gauge data: always zero
    const int cutoff = 5;
    const auto r = membership_oracle(mono(2, 3) + mono(1, 2, Rational(3)), cutoff);
    REQUIRE_FALSE(r.is_coboundary);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        GaugeDatum g{random_x_poly(rng, cutoff), random_y_poly(rng, cutoff), random_poly(rng, cutoff + 1)};
        const W1Cocycle img = apply_gauge(W1Cocycle{}, -g);  // (alpha - [chi,x], beta - [chi,y])
        Rational s;
        for (const auto& [lab, w] : r.certificate)
            s += w * (lab.component == 'F' ? img.gamma_f.coeff(lab.i, lab.j) : img.gamma_g.coeff(lab.i, lab.j));
        CHECK(s.is_zero());
    }
}

TEST_CASE("reduce examples") {
    auto r = reduce({W1Poly(), mono(0, 3) + mono(2, 1)}, 4);
    CHECK(r.is_zero);
    CHECK(r.consistent);
    r = reduce({W1Poly(), mono(1, 2) + mono(0, 1)}, 4);
    CHECK(r.representative == mono(1, 2));
    CHECK(r.consistent);
    // x^2 is gauge-trivial through chi in k[x]
    r = reduce({W1Poly(), mono(2, 0)}, 4);
    CHECK(r.is_zero);
    CHECK(r.oracle_accepts);
    CHECK(apply_gauge({W1Poly(), mono(2, 0)}, GaugeDatum{{}, {}, mono(3, 0, Rational(-1, 3))}) == W1Cocycle{});
    CHECK_THROWS_AS(reduce({mono(5, 0), W1Poly()}, 4), CutoffTooSmall);
}

TEST_CASE("oracle and reduce agree") {
    for (int d = 0; d <= 8; ++d)
        for (int i = 0; i <= d; ++i) {
            const auto r = reduce({W1Poly(), mono(i, d - i)}, 8);
            CHECK(r.consistent);
        }
    std::mt19937_64 rng(21);
    for (int t = 0; t < 30; ++t) {
        const auto r = reduce({random_poly(rng, 7), random_poly(rng, 8)}, 8);
        CHECK(r.consistent);
    }
}

TEST_CASE("witnesses are valid") {
    std::mt19937_64 rng(8);
    int accepted = 0;
    for (int t = 0; t < 30; ++t) {
        // bias towards coboundaries: mix gauge-trivial families with a few others
        W1Poly p = random_y_poly(rng, 6) + ad_y_oracle(random_poly(rng, 6));
        if (t % 3 == 0) p += random_poly(rng, 5, 1);
        const auto r = membership_oracle(p, 7);
        if (!r.is_coboundary) continue;
        ++accepted;
        CHECK(apply_gauge({W1Poly(), p}, *r.witness) == W1Cocycle{});
    }
    CHECK(accepted >= 15);
}

TEST_CASE("gauge soundness") {
    std::mt19937_64 rng(30);
    for (int t = 0; t < 30; ++t) {
        const W1Cocycle g{random_poly(rng, 7), random_poly(rng, 8)};
        const GaugeDatum d{random_x_poly(rng, 8), random_y_poly(rng, 8), random_poly(rng, 9)};
        CHECK(reduce(apply_gauge(g, d), 8).representative == reduce(g, 8).representative);
    }
}

TEST_CASE("centralizer facts") {
    for (int d = 1; d <= 7; ++d) {
        const auto c = centralizer_check(d);
        CHECK(c.kernel_is_kx);
        CHECK(c.preimage_is_kx_plus_kxy);
    }
}

TEST_CASE("basis report") {
    const auto rep = basis_report(4);
    auto row = [&](int i, int j) {
        for (const auto& r : rep.rows)
            if (r.i == i && r.j == j) return r;
        FAIL("missing row");
        return BasisRow{};
    };
    CHECK(row(1, 3).survivor);
    CHECK(row(1, 3).agrees_printed);
    CHECK_FALSE(row(0, 2).survivor);
    CHECK_FALSE(row(2, 0).survivor);
    CHECK_FALSE(row(2, 0).agrees_printed);
    CHECK(row(2, 0).agrees_hand);
    CHECK(rep.x_power_family_conflict);
    CHECK(rep.hand_conflicts.empty());
    CHECK(rep.printed_conflicts == std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {3, 0}, {4, 0}});
    CHECK(rep.minimal_degree_minus_one == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK_THROWS_AS(basis_report(2), InvalidParameter);
}

TEST_CASE("survivors are stable under raising the cutoff") {
    for (int c = 3; c <= 6; ++c) {
        const auto lo = basis_report(c), hi = basis_report(c + 2);
        for (const auto& s : lo.survivors)
            CHECK(std::find(hi.survivors.begin(), hi.survivors.end(), s) != hi.survivors.end());
    }
}
