#include "diagdef/weyl/isomorphism.hpp"

#include "diagdef/errors.hpp"

#include <algorithm>
#include <random>

namespace diagdef::weyl {

namespace {

void require_finite(int order) {
    if (order < 0 || order == HbarSeries::kExact) throw InvalidParameter("series order must be finite and non-negative");
}

/// c * hbar^k as a series known to the given order.
HbarSeries hbar_monomial(const Rational& c, int k, int order) {
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return HbarSeries(order, std::move(v));
}

HbarQPoly lift_eta(const W1Poly& eta, int r, int order) {
    HbarQPoly out;
    for (const auto& [k, c] : eta.terms()) out.add_term(k.first, k.second, hbar_monomial(c, r, order));
    return out;
}

HbarQPoly residual_of(const HbarQPoly& z, int order) {
    const HbarQPoly x = HbarQPoly::x();
    return x * z - z * x - HbarQPoly(HbarSeries::constant(Rational(1), order));
}

RatHbar q_hbar() { return RatHbar(1) + RatHbar::var(); }

std::vector<std::pair<int, int>> differing(const W1Poly& a, const W1Poly& b) {
    std::vector<std::pair<int, int>> out;
    const W1Poly d = a - b;
    for (const auto& [k, c] : d.terms()) out.push_back(k);
    return out;
}

}  // namespace

HbarQPoly to_hbar_coefficients(const WeylSeries& s) {
    std::map<W1Poly::Key, std::vector<Rational>> acc;
    const auto& cs = s.coefficients();
    for (std::size_t k = 0; k < cs.size(); ++k)
        for (const auto& [key, c] : cs[k].terms()) {
            auto& v = acc[key];
            v.resize(std::max(v.size(), k + 1));
            v[k] = c;
        }
    HbarQPoly out;
    for (auto& [key, v] : acc) out.add_term(key.first, key.second, HbarSeries(s.order(), std::move(v)));
    return out;
}

WeylSeries from_hbar_coefficients(const HbarQPoly& p, int order) {
    require_finite(order);
    std::vector<W1Poly> cs(static_cast<std::size_t>(order) + 1);
    for (const auto& [key, c] : p.terms()) {
        const auto& v = c.coefficients();
        for (std::size_t k = 0; k < v.size() && k < cs.size(); ++k) cs[k].add_term(key.first, key.second, v[k]);
    }
    return WeylSeries(order, std::move(cs));
}

WeylSeries wq_series_multiply(const WeylSeries& a, const WeylSeries& b, int order) {
    const int o = std::min({order, a.order(), b.order()});
    require_finite(o);
    return from_hbar_coefficients(to_hbar_coefficients(a.truncate(o)) * to_hbar_coefficients(b.truncate(o)), o);
}

WeylSeries EtaTable::z() const {
    std::vector<W1Poly> cs{W1Poly::y()};
    cs.insert(cs.end(), eta.begin(), eta.end());
    return WeylSeries(order, std::move(cs));
}

EtaTable solve_z(int order, std::uint64_t permutation_seed) {
    if (order < 1) throw InvalidParameter("order must be at least 1");
    EtaTable t;
    t.order = order;
    HbarQPoly z = HbarQPoly::monomial(0, 1, HbarSeries::constant(Rational(1), order));
    std::mt19937_64 rng(permutation_seed);
    for (int r = 1; r <= order; ++r) {
        const HbarQPoly res = residual_of(z, order);
        std::vector<std::pair<W1Poly::Key, Rational>> target;
        for (const auto& [key, c] : res.terms()) {
            for (int k = 0; k < r; ++k)
                if (!c.coeff(k).is_zero()) throw UnsolvableOrder("residual below order " + std::to_string(r));
            if (!c.coeff(r).is_zero()) target.emplace_back(key, -c.coeff(r));
        }
        if (permutation_seed != 0) std::shuffle(target.begin(), target.end(), rng);
        // [x, x^i y^(j+1)] = (j+1) x^i y^j in W_1
        W1Poly eta;
        for (const auto& [key, c] : target) eta.add_term(key.first, key.second + 1, c / Rational(key.second + 1));
        z += lift_eta(eta, r, order);
        t.eta.push_back(std::move(eta));
    }
    if (!residual_of(z, order).is_zero()) throw UnsolvableOrder("nonzero residual after the last order");
    return t;
}

WeylSeries commutator_residual(const EtaTable& t) {
    return from_hbar_coefficients(residual_of(to_hbar_coefficients(t.z()), t.order), t.order);
}

RatHbar closed_form_a(int r) {
    if (r < 0) throw InvalidParameter("r must be non-negative");
    const RatHbar h = RatHbar::var();
    return h.pow(r + 1) / (q_hbar().pow(r + 1) - RatHbar(1));
}

WeylSeries closed_form_z(int order) {
    require_finite(order);
    WeylSeries z(order, {W1Poly::y()});
    for (int r = 1; r <= order; ++r) {
        const HbarSeries a = series_expand(closed_form_a(r), order);
        z += a.map([&](const Rational& c) { return W1Poly::monomial(r, r + 1, c); });
    }
    return z;
}

ClosedFormReport verify_closed_form(int order) {
    if (order < 1) throw InvalidParameter("order must be at least 1");
    ClosedFormReport rep;
    rep.order = order;
    const WeylSeries solver = solve_z(order).z();
    const WeylSeries closed = closed_form_z(order);
    for (int k = 0; k <= order; ++k)
        for (const auto& key : differing(solver.coeff(k), closed.coeff(k)))
            rep.mismatches.push_back("hbar^" + std::to_string(k) + " x^" + std::to_string(key.first) + " y^" +
                                     std::to_string(key.second));
    rep.series_match = rep.mismatches.empty();
    const RatHbar q = q_hbar();
    bool rec = true;
    for (int s = 1; s <= order; ++s) {
        RatHbar qint;
        for (int i = 0; i <= s; ++i) qint += q.pow(i);
        const bool ok = closed_form_a(s) * qint == closed_form_a(s - 1) * (q.pow(s) - RatHbar(1));
        rep.recurrence.push_back(ok);
        rec = rec && ok;
    }
    rep.pass = rep.series_match && rec;
    return rep;
}

UniPoly<HbarVar> cyclotomic(int n) {
    if (n < 1) throw InvalidParameter("cyclotomic index must be positive");
    using P = UniPoly<HbarVar>;
    P p = P::monomial(Rational(1), n) - P(1);
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = exact_div(p, cyclotomic(d));
    return p;
}

PoleFactorization pole_factorization(int r) {
    if (r < 1) throw InvalidParameter("r must be at least 1");
    using P = UniPoly<HbarVar>;
    PoleFactorization rep;
    rep.r = r;
    const int n = r + 1;
    P product(1), rest(1);
    bool zero_only_in_first = true;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        P f = substitute_affine<HbarVar>(cyclotomic(d), Rational(1), Rational(1));
        product = product * f;
        if (d > 1) {
            rest = rest * f;
            if (f.coeff(0).is_zero()) zero_only_in_first = false;
        }
        rep.factors.emplace_back(d, std::move(f));
    }
    const P target = P({1, 1}).pow(static_cast<unsigned>(n)) - P(1);
    rep.product_matches = product == target;
    const RatHbar a = closed_form_a(r);
    rep.simple_zero_cancelled = zero_only_in_first && rep.factors.front().second == P({0, 1}) &&
                                a.denominator() == rest && a.numerator() == P::monomial(Rational(1), r);
    return rep;
}

GzReport gz_element(int order) {
    if (order < 1) throw InvalidParameter("order must be at least 1");
    GzReport rep;
    rep.order = order;
    // S = sum_{k>=1} (-hbar)^k (xy)^k / k!
    const W1Poly xy = W1Poly::monomial(1, 1);
    std::vector<W1Poly> s(static_cast<std::size_t>(order) + 1);
    W1Poly power(1);
    for (int k = 1; k <= order; ++k) {
        power = power * xy;
        const Rational c = Rational(k % 2 ? -1 : 1) / factorial(static_cast<unsigned>(k));
        s[static_cast<std::size_t>(k)] = c * power;
    }
    // Left division by x lowers the x-exponent of each monomial.
    std::vector<W1Poly> divided;
    for (const auto& p : s) {
        W1Poly d;
        for (const auto& [k, c] : p.terms()) {
            if (k.first == 0) throw LeftDivisionUndefined("monomial without a factor of x on the left");
            d.add_term(k.first - 1, k.second, c);
        }
        divided.push_back(std::move(d));
    }
    const WeylSeries num(order, std::move(divided));
    const HbarSeries den = exp_hbar(order) - HbarSeries(1);
    rep.y_hbar = -series_div_valuation(num, den);

    const int o = rep.y_hbar.order();
    const WeylSeries e = exp_hbar(o).map([](const Rational& c) { return W1Poly(c); });
    const WeylSeries x(W1Poly::x());
    rep.residual = e * x * rep.y_hbar - rep.y_hbar * x - WeylSeries(W1Poly(1));
    rep.pass = rep.residual.is_zero() && rep.residual.order() == order - 1;
    return rep;
}

W1Poly hat_substitute(const W1Poly& p) {
    W1Poly out;
    for (const auto& [k, c] : p.terms()) {
        const int n = k.second;
        out.add_term(k.first + 1, n + 1, c * Rational(n, n + 1));
        out.add_term(k.first, n, -c * Rational(n - 1, 2));
    }
    return out;
}

std::vector<RecursionRow> printed_recursion_compare(int order) {
    if (order < 2) throw InvalidParameter("order must be at least 2");
    const EtaTable t = solve_z(order);
    std::vector<RecursionRow> rows;
    for (int r = 0; r < order; ++r) {
        const W1Poly eta = r == 0 ? W1Poly::y() : t.eta[static_cast<std::size_t>(r - 1)];
        RecursionRow row;
        row.r = r;
        row.hat = hat_substitute(eta);
        row.x_hat = W1Poly::x() * row.hat;
        row.solver_next = t.eta[static_cast<std::size_t>(r)];
        row.hat_matches = row.hat == row.solver_next;
        row.x_hat_matches = row.x_hat == row.solver_next;
        row.hat_differences = differing(row.hat, row.solver_next);
        rows.push_back(std::move(row));
    }
    return rows;
}

EtaComparison compare_eta(int r, const W1Poly& candidate) {
    if (r < 1) throw InvalidParameter("r must be at least 1");
    EtaComparison c;
    c.r = r;
    c.candidate = candidate;
    c.solver = solve_z(r).eta.back();
    c.closed_form = closed_form_z(r).coeff(r);
    c.solver_agrees_with_closed_form = c.solver == c.closed_form;
    c.candidate_agrees = candidate == c.solver;
    c.differing_monomials = differing(candidate, c.solver);
    return c;
}

}  // namespace diagdef::weyl
