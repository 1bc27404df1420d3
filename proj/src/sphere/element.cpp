#include "diagdef/sphere/element.hpp"

#include "diagdef/errors.hpp"

#include <tuple>

namespace diagdef::sphere {

namespace {

const Scalar kLambda = Scalar::var();

Scalar binom(long n, long k) { return Scalar(binomial(n, k)); }

Scalar power(const Scalar& s, long n) { return s.pow(n); }

using Memo = std::map<std::tuple<int, int, int, int>, SphereElement>;

/// (x-p)^(-m) * (x-p')^(-n) for distinct poles, via
/// F(m,n) = d * (F(m, n-1) - F(m-1, n)) with d = 1/(p - p').
const SphereElement& two_pole(Pole p, int m, Pole pp, int n, Memo& memo) {
    const auto key = std::make_tuple(static_cast<int>(p), m, static_cast<int>(pp), n);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    SphereElement r;
    if (m == 0) {
        r = SphereElement::pole_power(pp, n);
    } else if (n == 0) {
        r = SphereElement::pole_power(p, m);
    } else {
        const Scalar d = (pole_location(p) - pole_location(pp)).inverse();
        r = (two_pole(p, m, pp, n - 1, memo) - two_pole(p, m - 1, pp, n, memo)) * d;
    }
    return memo.emplace(key, std::move(r)).first->second;
}

/// x^a * (x-p)^(-m), expanding x = (x-p) + p.
SphereElement power_times_pole(int a, Pole p, int m) {
    if (p == Pole::Zero) return a >= m ? SphereElement::x_power(a - m) : SphereElement::pole_power(p, m - a);
    const Scalar loc = pole_location(p);
    SphereElement r;
    for (int i = 0; i <= a; ++i) {
        const Scalar c = binom(a, i) * power(loc, a - i);
        if (i < m) {
            r += SphereElement::pole_power(p, m - i, c);
        } else {
            // (x-p)^(i-m) back in powers of x.
            const int e = i - m;
            for (int j = 0; j <= e; ++j) r += SphereElement::x_power(j, c * binom(e, j) * power(-loc, e - j));
        }
    }
    return r;
}

SphereElement term_product(const Term& s, const Term& t, Memo& memo) {
    if (!s.is_pole() && !t.is_pole()) return SphereElement::x_power(s.power + t.power);
    if (!s.is_pole()) return power_times_pole(s.power, t.pole(), t.power);
    if (!t.is_pole()) return power_times_pole(t.power, s.pole(), s.power);
    if (s.pole() == t.pole()) return SphereElement::pole_power(s.pole(), s.power + t.power);
    return two_pole(s.pole(), s.power, t.pole(), t.power, memo);
}

}  // namespace

Scalar pole_location(Pole p) {
    switch (p) {
        case Pole::Zero: return Scalar(0);
        case Pole::One: return Scalar(1);
        case Pole::Lambda: return kLambda;
    }
    return Scalar(0);
}

const char* pole_name(Pole p) {
    switch (p) {
        case Pole::Zero: return "0";
        case Pole::One: return "1";
        case Pole::Lambda: return "lambda";
    }
    return "?";
}

SphereElement SphereElement::x_power(int k, const Scalar& c) {
    if (k < 0) throw InvalidParameter("negative power of x; use pole_power(Pole::Zero, m)");
    SphereElement e;
    e.add_term(Term::x_power(k), c);
    return e;
}

SphereElement SphereElement::pole_power(Pole p, int m, const Scalar& c) {
    if (m < 1) throw InvalidParameter("pole order must be at least 1");
    SphereElement e;
    e.add_term(Term::pole(p, m), c);
    return e;
}

SphereElement SphereElement::x_minus(Pole p) { return x() - SphereElement(pole_location(p)); }

void SphereElement::add_term(const Term& t, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(t, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Scalar SphereElement::coeff(const Term& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Scalar() : it->second;
}

std::map<int, Scalar> SphereElement::principal_part(Pole p) const {
    std::map<int, Scalar> out;
    for (const auto& [t, c] : terms_)
        if (t.is_pole() && t.pole() == p) out.emplace(t.power, c);
    return out;
}

std::map<int, Scalar> SphereElement::polynomial_part() const {
    std::map<int, Scalar> out;
    for (const auto& [t, c] : terms_)
        if (!t.is_pole()) out.emplace(t.power, c);
    return out;
}

bool SphereElement::has_pole_at(Pole p) const { return pole_order(p) > 0; }

int SphereElement::pole_order(Pole p) const {
    int best = 0;
    for (const auto& [t, c] : terms_)
        if (t.is_pole() && t.pole() == p) best = std::max(best, t.power);
    return best;
}

SphereElement SphereElement::derivative() const {
    SphereElement r;
    for (const auto& [t, c] : terms_) {
        if (!t.is_pole()) {
            if (t.power > 0) r.add_term(Term::x_power(t.power - 1), c * Scalar(t.power));
        } else {
            r.add_term(Term::pole(t.pole(), t.power + 1), c * Scalar(-t.power));
        }
    }
    return r;
}

SphereElement SphereElement::operator-() const {
    SphereElement r = *this;
    for (auto& [t, c] : r.terms_) c = -c;
    return r;
}

SphereElement& SphereElement::operator+=(const SphereElement& o) {
    for (const auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
}

SphereElement& SphereElement::operator-=(const SphereElement& o) {
    for (const auto& [t, c] : o.terms_) add_term(t, -c);
    return *this;
}

SphereElement& SphereElement::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, v] : terms_) v *= c;
    return *this;
}

SphereElement operator*(const SphereElement& a, const SphereElement& b) {
    Memo memo;
    std::map<std::pair<Term, Term>, SphereElement> products;
    SphereElement r;
    for (const auto& [s, cs] : a.terms_) {
        for (const auto& [t, ct] : b.terms_) {
            const auto key = s < t ? std::make_pair(s, t) : std::make_pair(t, s);
            auto it = products.find(key);
            if (it == products.end()) it = products.emplace(key, term_product(s, t, memo)).first;
            const Scalar c = cs * ct;
            for (const auto& [u, cu] : it->second.terms_) r.add_term(u, c * cu);
        }
    }
    return r;
}

SphereElement multiply(const SphereElement& a, const SphereElement& b) { return a * b; }

std::string SphereElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [t, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string base;
        if (!t.is_pole()) {
            if (t.power == 1) base = "x";
            else if (t.power > 1) base = "x^" + std::to_string(t.power);
        } else {
            base = t.pole() == Pole::Zero ? "x" : std::string("(x-") + pole_name(t.pole()) + ")";
            base += "^-" + std::to_string(t.power);
        }
        if (base.empty()) out += "(" + c.to_string() + ")";
        else if (c.is_one()) out += base;
        else out += "(" + c.to_string() + ")*" + base;
    }
    return out;
}

BElement::BElement(SphereElement e) : value_(std::move(e)) {
    if (value_.has_pole_at(Pole::Lambda)) throw NotInB("element has a pole at lambda");
}

SphereElement substitute_scale(const BElement& b) {
    const Scalar inv = kLambda.inverse();
    SphereElement r;
    for (const auto& [t, c] : b.value().terms()) {
        if (!t.is_pole()) {
            r += SphereElement::x_power(t.power, c * inv.pow(t.power));
        } else if (t.pole() == Pole::Zero) {
            r += SphereElement::pole_power(Pole::Zero, t.power, c * kLambda.pow(t.power));
        } else {
            // (lambda^-1 x - 1)^-m = lambda^m (x - lambda)^-m
            r += SphereElement::pole_power(Pole::Lambda, t.power, c * kLambda.pow(t.power));
        }
    }
    return r;
}

SphereElement derivation_apply(const SphereElement& v, const SphereElement& e) { return v * e.derivative(); }

GeometricSeriesReport geometric_series_check(int order) {
    if (order < 0) throw InvalidParameter("series order must be non-negative");
    // x - lambda(1 + hbar), exact in hbar.
    const SphereSeries lin(SphereSeries::kExact,
                           {SphereElement::x_minus(Pole::Lambda), SphereElement(Scalar(-kLambda))});
    std::vector<SphereElement> inv;
    for (int n = 0; n <= order; ++n) inv.push_back(SphereElement::pole_power(Pole::Lambda, n + 1, kLambda.pow(n)));
    const SphereSeries s(order, std::move(inv));
    GeometricSeriesReport rep;
    rep.order = order;
    rep.residual = lin * s - SphereSeries(1);
    rep.pass = rep.residual.is_zero() && rep.residual.order() == order;
    return rep;
}

}  // namespace diagdef::sphere
