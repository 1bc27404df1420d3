#include "diagdef/acceptance/acceptance.hpp"

#include <doctest.h>

using namespace diagdef;
using namespace diagdef::acceptance;
using weyl::HbarQPoly;
using weyl::QPoly;

namespace {

// x -> -x turns yx = q xy - 1 into yx = q xy + 1
template <class P>
P flip_x(const P& p) {
    P r;
    for (const auto& [k, c] : p.terms()) r.add_term(k.first, k.second, k.first % 2 ? -c : c);
    return r;
}

}  // namespace

TEST_CASE("rewriting check passes with the library product") {
    CHECK(rewriting_equivalence(kDefaultSeed).pass);
    CHECK(rewriting_equivalence(7).pass);
}

TEST_CASE("rewriting check catches a mutated rule") {
    const QMultiply bad_q = [](const QPoly& a, const QPoly& b) { return flip_x(flip_x(a) * flip_x(b)); };
    const HbarMultiply bad_h = [](const HbarQPoly& a, const HbarQPoly& b) { return flip_x(flip_x(a) * flip_x(b)); };
    // sanity: the mutated product really satisfies yx = q xy + 1
    CHECK(bad_q(QPoly::y(), QPoly::x()) == QPoly::monomial(1, 1, RatQ::var()) + QPoly(1));
    const auto r = rewriting_equivalence(kDefaultSeed, bad_q, bad_h);
    CHECK_FALSE(r.pass);
    REQUIRE(r.checks.size() == 2);
    CHECK_FALSE(r.checks[0].pass);
    CHECK_FALSE(r.checks[1].pass);
    CHECK_FALSE(rewriting_equivalence(kDefaultSeed, bad_q).pass);
}

TEST_CASE("filter selects by key and tag") {
    CHECK(run("gz", kDefaultSeed).size() == 1);
    std::vector<int> ids;
    for (const auto& c : criteria()) ids.push_back(c.id);
    CHECK(ids == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    CHECK(run("no-such-criterion", kDefaultSeed).empty());
}

TEST_CASE("seeded criteria are reproducible") {
    const auto a = diagram_machinery(99), b = diagram_machinery(99);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) CHECK(a.checks[i].pass == b.checks[i].pass);
}
