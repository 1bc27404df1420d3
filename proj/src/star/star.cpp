#include "diagdef/star/star.hpp"

#include "diagdef/errors.hpp"

#include <random>

namespace diagdef::stars {

CommPoly2 CommPoly2::monomial(int i, int j, const Rational& c) {
    if (i < 0 || j < 0) throw InvalidParameter("negative exponent");
    CommPoly2 p;
    p.add_term(i, j, c);
    return p;
}

Rational CommPoly2::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational() : it->second;
}

void CommPoly2::add_term(int i, int j, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(Key{i, j}, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

CommPoly2 CommPoly2::dx() const {
    CommPoly2 r;
    for (const auto& [k, c] : terms_)
        if (k.first > 0) r.add_term(k.first - 1, k.second, c * k.first);
    return r;
}

CommPoly2 CommPoly2::dy() const {
    CommPoly2 r;
    for (const auto& [k, c] : terms_)
        if (k.second > 0) r.add_term(k.first, k.second - 1, c * k.second);
    return r;
}

CommPoly2 CommPoly2::operator-() const {
    CommPoly2 r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

CommPoly2& CommPoly2::operator+=(const CommPoly2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

CommPoly2& CommPoly2::operator-=(const CommPoly2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

CommPoly2 operator*(const CommPoly2& a, const CommPoly2& b) {
    CommPoly2 r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

CommPoly2 operator*(const Rational& c, const CommPoly2& a) {
    CommPoly2 r;
    for (const auto& [k, v] : a.terms_) r.add_term(k.first, k.second, c * v);
    return r;
}

std::string CommPoly2::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        if (!out.empty()) out += " + ";
        std::string mono;
        if (k.first) mono += k.first == 1 ? "x" : "x^" + std::to_string(k.first);
        if (k.second) mono += (mono.empty() ? "" : "*") + std::string(k.second == 1 ? "y" : "y^" + std::to_string(k.second));
        if (mono.empty()) out += "(" + c.pretty() + ")";
        else if (c.is_one()) out += mono;
        else out += "(" + c.pretty() + ")*" + mono;
    }
    return out;
}

bool derivations_commute(const Derivation& a, const Derivation& b) {
    for (const CommPoly2& g : {CommPoly2::x(), CommPoly2::y()})
        if (!(a.apply(b.apply(g)) - b.apply(a.apply(g))).is_zero()) return false;
    return true;
}

StarSpec StarSpec::normal() { return {StarKind::Normal, {{Rational(1), Derivation::d_x(), Derivation::d_y()}}}; }

StarSpec StarSpec::moyal() {
    const Rational half(1, 2);
    return {StarKind::Moyal,
            {{half, Derivation::d_x(), Derivation::d_y()}, {-half, Derivation::d_y(), Derivation::d_x()}}};
}

StarSpec StarSpec::qplane() {
    const Derivation x_dx{CommPoly2::x(), CommPoly2()};
    const Derivation y_dy{CommPoly2(), CommPoly2::y()};
    return {StarKind::QPlane, {{Rational(1), x_dx, y_dy}}};
}

StarSpec StarSpec::custom(std::vector<Pair> pairs) {
    std::vector<const Derivation*> all;
    for (const auto& p : pairs) {
        all.push_back(&p.phi);
        all.push_back(&p.psi);
    }
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (!derivations_commute(*all[i], *all[j]))
                throw NonCommutingDerivations("derivations " + std::to_string(i) + " and " + std::to_string(j) +
                                              " do not commute");
    return {StarKind::Custom, std::move(pairs)};
}

const char* star_kind_name(StarKind k) {
    switch (k) {
        case StarKind::Normal: return "normal";
        case StarKind::Moyal: return "moyal";
        case StarKind::QPlane: return "qplane";
        case StarKind::Custom: return "custom";
    }
    return "?";
}

namespace {

/// Sum of pure tensors x^i y^j (x) x^k y^l.
using Tensor = std::map<std::array<int, 4>, Rational>;

void add_to(Tensor& t, const std::array<int, 4>& k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t.emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
}

Tensor tensor(const CommPoly2& a, const CommPoly2& b) {
    Tensor t;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) add_to(t, {ka.first, ka.second, kb.first, kb.second}, ca * cb);
    return t;
}

Tensor apply_operator(const StarSpec& spec, const Tensor& t) {
    Tensor out;
    for (const auto& [k, c] : t) {
        const CommPoly2 left = CommPoly2::monomial(k[0], k[1]);
        const CommPoly2 right = CommPoly2::monomial(k[2], k[3]);
        for (const auto& p : spec.pairs) {
            const CommPoly2 l = p.phi.apply(left);
            if (l.is_zero()) continue;
            const CommPoly2 r = p.psi.apply(right);
            for (const auto& [kl, cl] : l.terms())
                for (const auto& [kr, cr] : r.terms())
                    add_to(out, {kl.first, kl.second, kr.first, kr.second}, p.weight * c * cl * cr);
        }
    }
    return out;
}

CommPoly2 contract(const Tensor& t) {
    CommPoly2 r;
    for (const auto& [k, c] : t) r.add_term(k[0] + k[2], k[1] + k[3], c);
    return r;
}

void require_order(int order) {
    if (order < 0 || order == PolySeries::kExact) throw InvalidParameter("order must be finite and non-negative");
}

CommPoly2 random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> count(1, 4), e(0, max_degree), c(-4, 4);
    CommPoly2 p;
    for (int t = count(rng); t > 0; --t) {
        const int i = e(rng);
        const int j = std::uniform_int_distribution<int>(0, max_degree - i)(rng);
        p.add_term(i, j, Rational(c(rng), std::uniform_int_distribution<int>(1, 3)(rng)));
    }
    return p;
}

CommPoly2 random_homogeneous(std::mt19937_64& rng, int degree) {
    std::uniform_int_distribution<int> count(1, 3), j(0, 3), c(-4, 4);
    CommPoly2 p;
    for (int t = count(rng); t > 0; --t) {
        const int yj = j(rng) + std::max(0, -degree);
        p.add_term(yj + degree, yj, Rational(c(rng)));
    }
    return p;
}

}  // namespace

StarResult star(const CommPoly2& a, const CommPoly2& b, const StarSpec& spec, int order) {
    require_order(order);
    std::vector<CommPoly2> coeffs;
    Tensor t = tensor(a, b);
    Rational fact(1);
    for (int k = 0; k <= order; ++k) {
        if (k > 0) {
            t = apply_operator(spec, t);
            fact *= k;
        }
        coeffs.push_back(fact.inverse() * contract(t));
    }
    StarResult r{PolySeries(order, std::move(coeffs)), false};
    r.exact = apply_operator(spec, t).empty();
    return r;
}

PolySeries star_series(const PolySeries& a, const PolySeries& b, const StarSpec& spec, int order) {
    const int o = std::min({order, a.order(), b.order()});
    require_order(o);
    PolySeries sum = PolySeries::zero(o);
    for (int i = 0; i <= o; ++i) {
        const CommPoly2 ai = a.coeff(i);
        if (ai.is_zero()) continue;
        for (int j = 0; i + j <= o; ++j) {
            const CommPoly2 bj = b.coeff(j);
            if (bj.is_zero()) continue;
            std::vector<CommPoly2> shifted(static_cast<std::size_t>(i + j));
            const auto prod = star(ai, bj, spec, o - i - j).product;
            shifted.insert(shifted.end(), prod.coefficients().begin(), prod.coefficients().end());
            sum += PolySeries(o, std::move(shifted));
        }
    }
    return sum;
}

PolySeries star_commutator(const CommPoly2& a, const CommPoly2& b, const StarSpec& spec, int order) {
    return star(a, b, spec, order).product - star(b, a, spec, order).product;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

AssociativityReport associativity_check(const StarSpec& spec, int order, int trials, std::uint64_t seed) {
    if (trials < 1) throw InvalidParameter("trials must be at least 1");
    require_order(order);
    AssociativityReport rep;
    rep.trials = trials;
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(splitmix64(seed + static_cast<std::uint64_t>(t)));
        const PolySeries a = PolySeries::constant(random_poly(rng, 3), order);
        const PolySeries b = PolySeries::constant(random_poly(rng, 3), order);
        const PolySeries c = PolySeries::constant(random_poly(rng, 3), order);
        const PolySeries diff = star_series(star_series(a, b, spec, order), c, spec, order) -
                                star_series(a, star_series(b, c, spec, order), spec, order);
        std::size_t terms = 0;
        for (const auto& p : diff.coefficients()) terms += p.terms().size();
        rep.max_residual_terms = std::max(rep.max_residual_terms, terms);
        if (terms) ++rep.failures;
    }
    rep.pass = rep.failures == 0;
    return rep;
}

bool is_homogeneous(const CommPoly2& p, int degree) {
    for (const auto& [k, c] : p.terms())
        if (k.first - k.second != degree) return false;
    return true;
}

GradingReport grading_check(const StarSpec& spec, int trials, std::uint64_t seed, int order) {
    if (trials < 1) throw InvalidParameter("trials must be at least 1");
    GradingReport rep;
    rep.trials = trials;
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(splitmix64(seed + static_cast<std::uint64_t>(t)));
        std::uniform_int_distribution<int> deg(-2, 2);
        const int d1 = deg(rng), d2 = deg(rng);
        const CommPoly2 a = random_homogeneous(rng, d1), b = random_homogeneous(rng, d2);
        const auto prod = star(a, b, spec, order).product;
        bool ok = true;
        for (const auto& c : prod.coefficients()) ok = ok && is_homogeneous(c, d1 + d2);
        if (!ok) ++rep.failures;
    }
    rep.pass = rep.failures == 0;
    return rep;
}

}  // namespace diagdef::stars
