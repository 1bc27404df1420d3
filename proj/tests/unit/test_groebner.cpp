#include "diagdef/groebner/groebner.hpp"

#include <doctest.h>

#include <algorithm>

using namespace diagdef;
using namespace diagdef::groebner;

namespace {

const Scalar lam = Scalar::var();
const MultiPoly x = MultiPoly::var(0), y = MultiPoly::var(1), z = MultiPoly::var(2), w = MultiPoly::var(3);
const MultiPoly one(1);

MultiPoly c(const Scalar& s) { return MultiPoly(s); }

void check_groebner_property(const std::vector<MultiPoly>& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) CHECK(normal_form(s_polynomial(g[i], g[j]), g).is_zero());
}

}  // namespace

TEST_CASE("monomial order") {
    // xy > xz > yz > xw > yw > zw in degrevlex with x > y > z > w
    const std::vector<MultiPoly> desc{x * y, x * z, y * z, x * w, y * w, z * w};
    for (std::size_t i = 0; i + 1 < desc.size(); ++i)
        CHECK(degrevlex_less(desc[i + 1].leading_monomial(), desc[i].leading_monomial()));
    CHECK(degrevlex_less(Monomial::var(0), Monomial::var(3, 2)));
    CHECK((x * x + y).leading_monomial() == Monomial::var(0, 2));
}

TEST_CASE("normal form examples") {
    const MultiPoly g = x * y - one;
    CHECK(normal_form(x * y, {g}) == one);
    CHECK(normal_form(x * x * y, {g}) == x);
    CHECK(normal_form(x, {}) == x);
}

TEST_CASE("small Buchberger runs") {
    CHECK(buchberger({x}).basis == std::vector<MultiPoly>{x});
    const auto run = buchberger({x * y - one, y * z - one});
    // The reduced basis drops xy - 1, whose leading monomial x*y is divisible by x.
    CHECK(run.basis == std::vector<MultiPoly>{x - z, y * z - one});
    check_groebner_property(run.basis);
    CHECK(normal_form(x * y - one, run.basis).is_zero());
    // x - z lies in the ideal: x - z = z(xy - 1) - x(yz - 1).
    CHECK(z * (x * y - one) - x * (y * z - one) == x - z);
}

TEST_CASE("basis of the punctured sphere ideal") {
    const auto run = buchberger(punctured_sphere_ideal());
    const Scalar inv_l1 = (lam - Scalar(1)).inverse();
    const std::vector<MultiPoly> printed{
        z * w + inv_l1 * (z - w),
        y * w + lam.inverse() * (y - w),
        x * w - c(lam) * w - one,
        y * z + y - z,
        x * z - z - one,
        x * y - one,
    };
    CHECK(run.basis == printed);
    check_groebner_property(run.basis);
    for (const auto& f : punctured_sphere_ideal()) CHECK(normal_form(f, run.basis).is_zero());

    const std::vector<Monomial> leads{z.leading_monomial() * w.leading_monomial(),
                                      y.leading_monomial() * w.leading_monomial(),
                                      x.leading_monomial() * w.leading_monomial(),
                                      y.leading_monomial() * z.leading_monomial(),
                                      x.leading_monomial() * z.leading_monomial(),
                                      x.leading_monomial() * y.leading_monomial()};
    CHECK(leading_monomials(run.basis) == leads);
    // Each element has a single degree-2 monomial, so any variable precedence gives these leads.
    for (const auto& b : run.basis) {
        int quadratic = 0;
        for (const auto& [m, coef] : b.terms()) quadratic += m.degree() == 2;
        CHECK(quadratic == 1);
    }
    // Primitive form of the first element: (lambda - 1) zw + z - w.
    CHECK(run.basis[0].primitive() == c(lam - Scalar(1)) * z * w + z - w);
    CHECK(run.basis[1].primitive() == c(lam) * y * w + y - w);
}

TEST_CASE("generator order does not change the reduced basis") {
    auto gens = punctured_sphere_ideal();
    const auto base = buchberger(gens).basis;
    std::sort(gens.begin(), gens.end(), [](const MultiPoly& a, const MultiPoly& b) { return a.to_string() < b.to_string(); });
    do {
        CHECK(buchberger(gens).basis == base);
    } while (std::next_permutation(gens.begin(), gens.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return a.to_string() < b.to_string();
    }));
    // Redundant generators change nothing either.
    auto extra = punctured_sphere_ideal();
    extra.push_back(y * z + y - z);
    CHECK(buchberger(extra).basis == base);
}

TEST_CASE("standard monomials") {
    const auto g = buchberger(punctured_sphere_ideal()).basis;
    const auto s2 = standard_monomials(g, 2);
    CHECK(s2.size() == 9);
    for (const auto& m : s2) CHECK(std::count_if(m.e.begin(), m.e.end(), [](int e) { return e > 0; }) <= 1);
    CHECK(standard_monomials(g, 3).size() == 13);
    CHECK(standard_monomials({}, 1).size() == 5);
}

TEST_CASE("exceptional values") {
    const auto run = buchberger(punctured_sphere_ideal());
    const auto ex = exceptional_values(run.basis, run.pre_monic_leads);
    CHECK(ex.values == std::vector<Rational>{0, 1});
    CHECK(ex.other_factors.empty());
    const auto r1 = buchberger({x * y - one});
    CHECK(exceptional_values(r1.basis, r1.pre_monic_leads).values.empty());
    const auto r2 = buchberger({c(lam) * x - one});
    CHECK(exceptional_values(r2.basis, r2.pre_monic_leads).values == std::vector<Rational>{0});
    const auto r3 = buchberger({c(lam * lam + Scalar(1)) * x - one});
    const auto e3 = exceptional_values(r3.basis, r3.pre_monic_leads);
    CHECK(e3.values.empty());
    CHECK(e3.other_factors.size() == 1);
}

TEST_CASE("deformation witness") {
    const auto two = deformation_witness(2);
    CHECK(two.verdict == Verdict::FixedBasis);
    CHECK(two.leads_match);
    CHECK(two.specialization_commutes);
    const auto at_one = deformation_witness(1);
    CHECK(at_one.verdict == Verdict::Exceptional);
    CHECK_FALSE(at_one.leads_match);
    const auto at_zero = deformation_witness(0);
    CHECK(at_zero.verdict == Verdict::Exceptional);
    CHECK_FALSE(at_zero.leads_match);
    for (int v : {-3, -1, 3, 5}) CHECK(deformation_witness(v).leads_match);
    CHECK(deformation_witness(Rational(1, 2)).verdict == Verdict::FixedBasis);
}
