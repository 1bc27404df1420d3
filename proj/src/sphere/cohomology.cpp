#include "diagdef/sphere/cohomology.hpp"

#include "diagdef/errors.hpp"

#include <random>

namespace diagdef::sphere {

namespace {

const Scalar kLambda = Scalar::var();

SphereElement apply_base(BaseMorphism base, const BElement& b) {
    return base == BaseMorphism::F ? b.value() : substitute_scale(b);
}

BElement random_b(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3), count(1, 3), kind(0, 2), pow(0, 3);
    SphereElement e;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        const Scalar c(coeff(rng));
        switch (kind(rng)) {
            case 0: e += SphereElement::x_power(pow(rng), c); break;
            case 1: e += SphereElement::pole_power(Pole::Zero, pow(rng) + 1, c); break;
            default: e += SphereElement::pole_power(Pole::One, pow(rng) + 1, c); break;
        }
    }
    return BElement(e);
}

}  // namespace

SphereElement SphereClassRep::to_element() const {
    SphereElement e = SphereElement::x_power(1, x_coeff);
    for (const auto& [n, c] : pole_one) e += SphereElement::pole_power(Pole::One, n, c);
    return e;
}

std::string SphereClassRep::to_string() const { return to_element().to_string(); }

SphereElement L_operator(const BElement& b) { return b.value() - kLambda * substitute_scale(b); }

LDecomposition solve_L(const SphereElement& c) {
    SphereElement pre;
    SphereClassRep res;
    for (const auto& [t, coef] : c.terms()) {
        if (!t.is_pole()) {
            if (t.power == 1) {
                res.x_coeff = coef;
            } else {
                const Scalar factor = Scalar(1) - kLambda.pow(1 - t.power);
                pre += SphereElement::x_power(t.power, coef / factor);
            }
            continue;
        }
        switch (t.pole()) {
            case Pole::Zero:
                pre += SphereElement::pole_power(Pole::Zero, t.power, coef / (Scalar(1) - kLambda.pow(t.power + 1)));
                break;
            case Pole::One:
                break;  // handled with its partner below
            case Pole::Lambda:
                pre += SphereElement::pole_power(Pole::One, t.power, -coef / kLambda.pow(t.power + 1));
                break;
        }
    }
    // (x-1)^-N components: u from c, plus v * lambda^-(N+1) from the partner.
    for (int n = 1, top = std::max(c.pole_order(Pole::One), c.pole_order(Pole::Lambda)); n <= top; ++n) {
        const Scalar r = c.pole_coeff(Pole::One, n) + c.pole_coeff(Pole::Lambda, n) / kLambda.pow(n + 1);
        if (!r.is_zero()) res.pole_one.emplace(n, r);
    }
    return {BElement(std::move(pre)), std::move(res)};
}

SphereClassRep canonical_class(const SphereCocycle2& gamma, bool regular) {
    if (regular) {
        for (const SphereElement* e : {&gamma.gamma_f, &gamma.gamma_g})
            if (e->has_pole_at(Pole::One) || e->has_pole_at(Pole::Lambda))
                throw RegularityViolation("cocycle value has a pole at 1 or lambda");
    }
    return solve_L(gamma.gamma_f - kLambda * gamma.gamma_g).residual;
}

std::vector<SphereClassRep> h2_basis(int cutoff, bool regular) {
    if (cutoff < 1) throw CutoffTooSmall("cutoff must be at least 1");
    std::vector<SphereClassRep> out;
    out.push_back({Scalar(1), {}});
    if (regular) return out;
    for (int n = 1; n <= cutoff; ++n) out.push_back({Scalar(), {{n, Scalar(1)}}});
    return out;
}

SphereSeries exp_deform_apply(const SphereElement& v, BaseMorphism base, int order, const BElement& b) {
    std::vector<SphereElement> coeffs;
    SphereElement term = apply_base(base, b);
    Rational fact(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) {
            term = derivation_apply(v, term);
            fact *= n;
        }
        coeffs.push_back(term * Scalar(fact.inverse()));
    }
    return SphereSeries(order, std::move(coeffs));
}

ExpDeformReport exp_deform_morphism(const SphereElement& v, BaseMorphism base, int order, std::uint64_t seed) {
    if (order < 1) throw InvalidParameter("order must be at least 1");
    ExpDeformReport rep;
    rep.order = order;
    const BElement x(SphereElement::x());
    const BElement inv_x(SphereElement::pole_power(Pole::Zero, 1));
    const BElement inv_x1(SphereElement::pole_power(Pole::One, 1));
    auto phi = [&](const BElement& b) { return exp_deform_apply(v, base, order, b); };
    const SphereSeries px = phi(x), pinv = phi(inv_x), pinv1 = phi(inv_x1);
    rep.table = {{"x", px}, {"1/x", pinv}, {"1/(x-1)", pinv1}};

    auto check = [&](const BElement& a, const BElement& b, const std::string& label) {
        ++rep.products_checked;
        const SphereSeries lhs = phi(BElement(a.value() * b.value()));
        if (!(lhs - phi(a) * phi(b)).is_zero() && rep.failure.empty()) rep.failure = label;
    };
    // Generator relations x * x^-1 = 1 and (x-1) * (x-1)^-1 = 1.
    check(x, inv_x, "x * 1/x");
    check(BElement(SphereElement::x_minus(Pole::One)), inv_x1, "(x-1) * 1/(x-1)");
    check(inv_x, inv_x1, "1/x * 1/(x-1)");
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 20; ++i) {
        const BElement a = random_b(rng), b = random_b(rng);
        check(a, b, "random product " + std::to_string(i));
    }
    rep.pass = rep.failure.empty();
    return rep;
}

std::vector<Scalar> descended_pole_set(const Rational& t) {
    if (t.is_zero()) throw ZeroMultiplier("descent multiplier must be nonzero");
    return {Scalar(0), Scalar(t.inverse()), kLambda};
}

}  // namespace diagdef::sphere
