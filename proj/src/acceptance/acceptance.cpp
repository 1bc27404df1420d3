#include "diagdef/acceptance/acceptance.hpp"

#include "diagdef/diagram/diagram.hpp"
#include "diagdef/groebner/groebner.hpp"
#include "diagdef/sphere/cohomology.hpp"
#include "diagdef/star/star.hpp"
#include "diagdef/w1/w1.hpp"
#include "diagdef/weyl/isomorphism.hpp"
#include "diagdef/weyl/qweyl.hpp"

#include <chrono>
#include <random>

namespace diagdef::acceptance {

namespace {

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Stream for one criterion, split off the global seed.
std::uint64_t stream(std::uint64_t seed, int criterion) { return mix(seed ^ mix(static_cast<std::uint64_t>(criterion))); }

struct Builder {
    CriterionResult r;
    Builder(int id, std::string key, std::string title) { r = {id, std::move(key), std::move(title), {}, true}; }
    void check(std::string name, bool pass, std::string detail = "") {
        r.pass = r.pass && pass;
        r.checks.push_back({std::move(name), pass, std::move(detail)});
    }
    CriterionResult done() { return std::move(r); }
};

template <class F>
bool under_one_second(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::steady_clock::now() - t0 < std::chrono::seconds(1);
}

std::string join_pairs(const std::vector<std::pair<int, int>>& v) {
    std::string s;
    for (const auto& [i, j] : v) s += (s.empty() ? "" : " ") + std::string("x^") + std::to_string(i) + "y^" + std::to_string(j);
    return s.empty() ? "none" : s;
}

}  // namespace

// 1 -----------------------------------------------------------------------

CriterionResult groebner_reproduction() {
    using namespace groebner;
    Builder b(1, "groebner", "Groebner basis of the punctured-sphere ideal");
    GroebnerRun run;
    const bool fast = under_one_second([&] { run = buchberger(punctured_sphere_ideal()); });

    const Scalar lam = Scalar::var();
    const MultiPoly x = MultiPoly::var(0), y = MultiPoly::var(1), z = MultiPoly::var(2), w = MultiPoly::var(3), one(1);
    // printed basis with "wz" read as zw, before dividing by leading coefficients
    const std::vector<MultiPoly> printed{
        MultiPoly(lam) * z * w + z - z * w - w,
        MultiPoly(lam) * y * w + y - w,
        w * x - MultiPoly(lam) * w - one,
        z * y + y - z,
        z * x - z - one,
        x * y - one,
    };
    std::vector<MultiPoly> expected;
    for (const auto& p : printed) expected.push_back(p.monic());
    b.check("reduced basis equals the monic printed basis", run.basis == expected);

    std::vector<Monomial> leads;
    for (auto [i, j] : {std::pair{2, 3}, {1, 3}, {0, 3}, {1, 2}, {0, 2}, {0, 1}})
        leads.push_back(Monomial::var(i) * Monomial::var(j));
    b.check("initial ideal is (zw, yw, wx, zy, zx, xy)", leading_monomials(run.basis) == leads);

    bool pure = true;
    const auto standard = standard_monomials(run.basis, 6);
    for (const auto& m : standard) {
        int nonzero = 0;
        for (int e : m.e) nonzero += e != 0;
        pure = pure && nonzero <= 1;
    }
    b.check("standard monomials through degree 6 are 1 and pure powers", pure && standard.size() == 1 + 4 * 6,
            std::to_string(standard.size()) + " monomials");

    const auto ex = exceptional_values(run.basis, run.pre_monic_leads);
    b.check("exceptional values are {0, 1}", ex.values == std::vector<Rational>{Rational(0), Rational(1)} && ex.other_factors.empty());
    b.check("runtime under 1 s", fast);
    return b.done();
}

// 2 -----------------------------------------------------------------------

CriterionResult sphere_h2() {
    using namespace sphere;
    Builder b(2, "sphere-h2", "second cohomology of the punctured-sphere diagram");
    std::vector<SphereClassRep> full, reg;
    const bool fast = under_one_second([&] {
        full = h2_basis(10, false);
        reg = h2_basis(10, true);
    });
    std::vector<SphereClassRep> expected{{Scalar(1), {}}};
    for (int n = 1; n <= 10; ++n) expected.push_back({Scalar(), {{n, Scalar(1)}}});
    b.check("h2_basis(10) = {x} + {(x-1)^-N, N <= 10}", full == expected);
    b.check("regular h2_basis(10) = {x}", reg == std::vector<SphereClassRep>{expected.front()});
    bool idem = true;
    for (const auto& e : full) idem = idem && canonical_class({e.to_element(), SphereElement()}, false) == e;
    for (const auto& e : reg) idem = idem && canonical_class({e.to_element(), SphereElement()}, true) == e;
    b.check("canonical_class is idempotent on the basis", idem);
    b.check("runtime under 1 s", fast);
    return b.done();
}

// 3 -----------------------------------------------------------------------

CriterionResult geometric_series() {
    Builder b(3, "geometric-series", "geometric series inverts x - lambda(1+hbar)");
    const auto rep = sphere::geometric_series_check(12);
    b.check("residual is zero through hbar^12", rep.pass && rep.residual.is_zero());
    return b.done();
}

// 4 -----------------------------------------------------------------------

CriterionResult weyl_isomorphism() {
    using namespace weyl;
    Builder b(4, "weyl-isomorphism", "W_1[[hbar]] and W_(1+hbar)[[hbar]] coincide");
    const auto t = solve_z(10);
    const W1Poly eta1 = W1Poly::monomial(1, 2, Rational(1, 2));
    const W1Poly eta2 = W1Poly::monomial(2, 3, Rational(1, 3)) - W1Poly::monomial(1, 2, Rational(1, 4));
    b.check("eta_1 = xy^2/2", t.eta.at(0) == eta1, t.eta.at(0).to_string());
    b.check("eta_2 = x^2y^3/3 - xy^2/4", t.eta.at(1) == eta2, t.eta.at(1).to_string());
    b.check("solver residual vanishes through hbar^10", commutator_residual(t).is_zero());

    const auto cf = verify_closed_form(10);
    b.check("solver equals the closed form through hbar^10", cf.series_match);
    bool rec = cf.recurrence.size() == 10;
    for (bool ok : cf.recurrence) rec = rec && ok;
    b.check("a_s [s+1]_q = a_(s-1) (q^s - 1) for s <= 10", rec);

    const W1Poly printed3 = W1Poly::monomial(3, 4, Rational(1, 4)) - W1Poly::monomial(2, 3, Rational(1, 2)) +
                            W1Poly::monomial(1, 2, Rational(1, 4));
    const auto cmp = compare_eta(3, printed3);
    b.check("printed eta_3 discrepancy report is non-empty", !cmp.differing_monomials.empty() && cmp.solver_agrees_with_closed_form,
            "differs at " + join_pairs(cmp.differing_monomials));
    const auto rows = printed_recursion_compare(4);
    std::string diffs;
    bool any = false;
    for (const auto& row : rows) {
        if (row.hat_matches && row.x_hat_matches) continue;
        any = true;
        diffs += (diffs.empty() ? "" : "; ") + std::string("r=") + std::to_string(row.r) + ": hat " +
                 (row.hat_matches ? "ok" : "differs at " + join_pairs(row.hat_differences)) + ", x*hat " +
                 (row.x_hat_matches ? "ok" : "differs");
    }
    b.check("printed recursion discrepancy report is non-empty", any, diffs);
    return b.done();
}

// 5 -----------------------------------------------------------------------

CriterionResult gz_identity() {
    Builder b(5, "gz", "e^hbar x y_hbar - y_hbar x = 1");
    const auto g = weyl::gz_element(8);
    b.check("zero residual through hbar^8", g.pass && g.residual.is_zero());
    return b.done();
}

// 6 -----------------------------------------------------------------------

CriterionResult star_products(std::uint64_t seed) {
    using namespace stars;
    Builder b(6, "star", "normal, Moyal and q-plane star products");
    const PolySeries hbar(2, {CommPoly2(), CommPoly2(1)});
    const CommPoly2 x = CommPoly2::x(), y = CommPoly2::y();
    b.check("[x,y]_* = hbar for normal", star_commutator(x, y, StarSpec::normal(), 2) == hbar);
    b.check("[x,y]_* = hbar for Moyal", star_commutator(x, y, StarSpec::moyal(), 2) == hbar);
    const std::uint64_t s = stream(seed, 6);
    // degree <= 3 inputs: order 6 holds every nonzero term of a triple product
    const auto n = associativity_check(StarSpec::normal(), 6, 50, s);
    const auto m = associativity_check(StarSpec::moyal(), 6, 50, s + 1);
    const auto q = associativity_check(StarSpec::qplane(), 5, 50, s + 2);
    b.check("normal associative on 50 triples", n.pass && n.trials == 50);
    b.check("Moyal associative on 50 triples", m.pass && m.trials == 50);
    b.check("q-plane associative through hbar^5 on 50 triples", q.pass && q.trials == 50);
    bool graded = true;
    for (const auto& spec : {StarSpec::normal(), StarSpec::moyal(), StarSpec::qplane()})
        graded = graded && grading_check(spec, 25, s + 3).pass;
    b.check("grading preserved on 25 homogeneous pairs", graded);
    return b.done();
}

// 7 -----------------------------------------------------------------------

CriterionResult qweyl_identities() {
    using namespace weyl;
    Builder b(7, "qweyl", "q-Weyl identities");
    bool shifts = true, div = true;
    for (int n = 1; n <= 10; ++n) {
        shifts = shifts && check_y_power_shift(n) && check_x_power_shift(n);
        div = div && commutator_divisibility(n).divisible;
    }
    b.check("y^n x and x^n y shift identities for n <= 10", shifts);
    b.check("[x,y^n] and [x^n,y] divisible by [n]_q for n <= 10", div);
    b.check("Stirling triangles mutually inverse for n <= 8", stirling_inverse_check(8).identity);

    bool formula = true;
    std::string exps;
    for (int n = 1; n <= 8; ++n) {
        const auto p = pochhammer_xy(n);
        // oracle: product of the shifted factors by word rewriting
        QPoly prod = QPoly::monomial(1, 1);
        for (int k = 1; k < n; ++k) prod = multiply_by_words(QPoly::monomial(1, 1) + QPoly(q_integer<SymbolicQ>(k)), prod);
        const bool ok = p.q_exponent && prod == p.product && *p.q_exponent == n * (n - 1) / 2;
        formula = formula && ok;
        exps += (exps.empty() ? "" : ",") + (p.q_exponent ? std::to_string(*p.q_exponent) : std::string("?"));
    }
    b.check("Pochhammer exponents follow n(n-1)/2 for n <= 8", formula, "exponents " + exps);
    return b.done();
}

// 8 -----------------------------------------------------------------------

CriterionResult rewriting_equivalence(std::uint64_t seed, QMultiply q_mul, HbarMultiply h_mul) {
    using namespace weyl;
    if (!q_mul) q_mul = [](const QPoly& a, const QPoly& c) { return a * c; };
    if (!h_mul) h_mul = [](const HbarQPoly& a, const HbarQPoly& c) { return a * c; };
    Builder b(8, "rewriting", "fast multiply against free-word rewriting");
    std::mt19937_64 rng(stream(seed, 8));
    std::uniform_int_distribution<int> len(1, 8), letter(0, 1), coef(-5, 5);
    int q_fail = 0, h_fail = 0;
    for (int t = 0; t < 100; ++t) {
        std::string w;
        for (int k = len(rng); k > 0; --k) w += letter(rng) ? 'y' : 'x';
        const int c0 = coef(rng), c1 = coef(rng);

        const RatQ cq = RatQ(c0) + RatQ(c1) * RatQ::var();
        QPoly fq(cq);
        for (char ch : w) fq = q_mul(fq, ch == 'x' ? QPoly::x() : QPoly::y());
        if (fq != normalize<SymbolicQ>({{w, cq}})) ++q_fail;

        const HbarSeries ch(6, {Rational(c0), Rational(c1)});
        HbarQPoly fh(ch);
        for (char l : w) fh = h_mul(fh, l == 'x' ? HbarQPoly::x() : HbarQPoly::y());
        if (fh != normalize<OnePlusHbar>({{w, ch}})) ++h_fail;
    }
    b.check("100 words over Q(q)", q_fail == 0, std::to_string(q_fail) + " mismatches");
    b.check("100 words over q = 1 + hbar", h_fail == 0, std::to_string(h_fail) + " mismatches");
    return b.done();
}

// 9 -----------------------------------------------------------------------

CriterionResult diagram_machinery(std::uint64_t seed) {
    using namespace diagram;
    Builder b(9, "diagram", "diagram cohomology machinery");
    bool dd = true;
    for (const auto& c : {SmallCategory::from_poset(2, {{0, 1}}), parallel_arrows_category(), cospan_category(),
                          SmallCategory::from_poset(4, {{0, 1}, {1, 2}, {2, 3}}),
                          SmallCategory({"X"}, {{"s", 0, 0, false}}, {{"s", "s", "id_X"}})}) {
        const Nerve n(c, 4);
        for (int q = 2; q <= 4; ++q)
            if (n.count(q) && n.count(q - 2)) dd = dd && (n.boundary(q - 1) * n.boundary(q)).is_zero();
    }
    b.check("boundary squares to zero through dimension 4", dd);

    const auto pool = toy_diagrams();
    bool delta = true;
    const std::uint64_t s = stream(seed, 9);
    for (int trial = 0; trial < 25; ++trial) {
        const auto& d = pool[static_cast<std::size_t>(trial) % pool.size()];
        const int degree = trial % 3;
        const Nerve n(d.category(), degree + 2);
        const auto g = random_cochain(d, n, degree, s + static_cast<std::uint64_t>(trial));
        delta = delta && is_zero(total_coboundary(d, n, total_coboundary(d, n, g)));
    }
    b.check("total coboundary squares to zero on 25 seeded cochains", delta);

    b.check("single arrow has cohomology (1,0)",
            simplicial_cohomology(SmallCategory::from_poset(2, {{0, 1}}), 1) == std::vector<std::size_t>{1, 0});
    b.check("parallel arrows have cohomology (1,1)",
            simplicial_cohomology(parallel_arrows_category(), 1) == std::vector<std::size_t>{1, 1});
    b.check("cospan has cohomology (1,0)", simplicial_cohomology(cospan_category(), 1) == std::vector<std::size_t>{1, 0});

    const auto alg = diagram_algebra(ToyAlgebra::ground(), ToyAlgebra::ground(), Matrix::identity(1));
    bool lower = true;
    for (const auto& m : alg.representation) lower = lower && m(0, 1).is_zero();
    b.check("diagram algebra is associative, unital and matches 2x2 lower triangular matrices",
            alg.algebra.dim() == 3 && alg.representation_faithful && alg.representation_multiplicative && lower);
    Matrix phi(3, 2);
    phi(0, 0) = phi(2, 0) = phi(1, 1) = Rational(1);
    const auto big = diagram_algebra(ToyAlgebra::dual_numbers(), ToyAlgebra::upper_triangular2(), phi);
    b.check("diagram algebra of Q[e]/e^2 -> T2 has a faithful matrix model",
            big.representation_faithful && big.representation_multiplicative);

    Matrix alpha(2, 1), beta(1, 2), ga(2, 1), gb(1, 2), gt(1, 1);
    alpha(0, 0) = alpha(1, 0) = Rational(1);
    beta(0, 0) = Rational(1), beta(0, 1) = Rational(2);
    ga(0, 0) = Rational(1);
    gb(0, 1) = Rational(1);
    gt(0, 0) = Rational(2);  // beta ga + gb alpha = 1 + 1
    const bool pass_case = triangle_check(ga, gb, gt, alpha, beta).identity_holds;
    const bool fail_case = !triangle_check(ga, gb, Matrix(1, 1), alpha, beta).identity_holds;
    Matrix gb_neg(1, 2);
    gb_neg(0, 1) = Rational(-1);
    const auto zero_case = triangle_check(ga, gb_neg, Matrix(1, 1), alpha, beta);
    b.check("triangle verdicts on pass, fail and theta-zero instances",
            pass_case && fail_case && zero_case.identity_holds && zero_case.theta_zero && zero_case.opposite_composites);
    return b.done();
}

// 10 ----------------------------------------------------------------------

CriterionResult w1_reduction(std::uint64_t seed) {
    using namespace w1;
    Builder b(10, "w1", "reduction for the diagram k[x] -> W_1 <- k[y]");
    const int cutoff = 8;
    bool ys = true, xry = true;
    for (int j = 0; j <= cutoff; ++j) ys = ys && reduce({W1Poly(), W1Poly::monomial(0, j)}, cutoff).is_zero;
    for (int r = 0; r < cutoff; ++r) xry = xry && reduce({W1Poly(), W1Poly::monomial(r, 1)}, cutoff).is_zero;
    b.check("y^j reduces to 0 for j <= 8", ys);
    b.check("x^r y reduces to 0 for r <= 7", xry);
    const auto mu = reduce({W1Poly(), W1Poly::monomial(1, 2)}, cutoff);
    b.check("xy^2 survives", !mu.is_zero && mu.representative == W1Poly::monomial(1, 2));

    bool consistent = true;
    for (int d = 0; d <= cutoff; ++d)
        for (int i = 0; i <= d; ++i) consistent = consistent && reduce({W1Poly(), W1Poly::monomial(i, d - i)}, cutoff).consistent;
    std::mt19937_64 rng(stream(seed, 10));
    auto random_poly = [&](int maxdeg) {
        std::uniform_int_distribution<int> deg(0, maxdeg), c(-5, 5);
        W1Poly p;
        for (int t = 0; t < 4; ++t) {
            const int total = deg(rng);
            const int i = std::uniform_int_distribution<int>(0, total)(rng);
            p.add_term(i, total - i, Rational(c(rng)));
        }
        return p;
    };
    for (int t = 0; t < 30; ++t) consistent = consistent && reduce({random_poly(cutoff - 1), random_poly(cutoff)}, cutoff).consistent;
    b.check("oracle and reduce agree on all monomials of degree <= 8 and 30 random cocycles", consistent);

    const auto rep = basis_report(cutoff);
    b.check("x^i family verdict recorded with conflict flag against the printed basis",
            rep.x_power_family_conflict && !rep.printed_conflicts.empty() && rep.hand_conflicts.empty(),
            "oracle: x^i are coboundaries; printed-set conflicts " + join_pairs(rep.printed_conflicts));

    bool sound = true;
    for (int t = 0; t < 30; ++t) {
        const W1Cocycle g{random_poly(cutoff - 1), random_poly(cutoff)};
        GaugeDatum d;
        std::uniform_int_distribution<int> deg(0, cutoff), c(-3, 3);
        d.alpha.add_term(deg(rng), 0, Rational(c(rng)));
        d.beta.add_term(0, deg(rng), Rational(c(rng)));
        d.chi = random_poly(cutoff + 1);
        sound = sound && reduce(apply_gauge(g, d), cutoff).representative == reduce(g, cutoff).representative;
    }
    b.check("gauge soundness on 30 seeded trials", sound);
    const auto cz = centralizer_check(cutoff);
    b.check("centralizer facts hold through degree 8", cz.kernel_is_kx && cz.preimage_is_kx_plus_kxy);
    return b.done();
}

// -------------------------------------------------------------------------

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "groebner", "Groebner reproduction", {"groebner", "sphere"}, [](std::uint64_t) { return groebner_reproduction(); }},
        {2, "sphere-h2", "sphere H^2", {"sphere"}, [](std::uint64_t) { return sphere_h2(); }},
        {3, "geometric-series", "geometric-series identity", {"sphere", "series"}, [](std::uint64_t) { return geometric_series(); }},
        {4, "weyl-isomorphism", "Weyl isomorphism", {"weyl"}, [](std::uint64_t) { return weyl_isomorphism(); }},
        {5, "gz", "Gerstenhaber-Zhang identity", {"weyl"}, [](std::uint64_t) { return gz_identity(); }},
        {6, "star", "star products", {"star"}, [](std::uint64_t s) { return star_products(s); }},
        {7, "qweyl", "q-Weyl identities", {"weyl"}, [](std::uint64_t) { return qweyl_identities(); }},
        {8, "rewriting", "rewriting oracle equivalence", {"weyl", "oracle"}, [](std::uint64_t s) { return rewriting_equivalence(s); }},
        {9, "diagram", "diagram machinery", {"diagram"}, [](std::uint64_t s) { return diagram_machinery(s); }},
        {10, "w1", "W_1 diagram reduction", {"w1", "weyl"}, [](std::uint64_t s) { return w1_reduction(s); }},
    };
    return all;
}

std::vector<CriterionResult> run(const std::string& filter, std::uint64_t seed) {
    std::vector<CriterionResult> out;
    for (const auto& c : criteria()) {
        bool match = filter.empty() || c.key.find(filter) != std::string::npos;
        for (const auto& t : c.tags) match = match || t.find(filter) != std::string::npos;
        if (match) out.push_back(c.run(seed));
    }
    return out;
}

}  // namespace diagdef::acceptance
