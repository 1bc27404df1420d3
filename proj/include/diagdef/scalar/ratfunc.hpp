#pragma once

#include "diagdef/errors.hpp"
#include "diagdef/scalar/unipoly.hpp"

#include <ostream>
#include <string>

namespace diagdef {

/// Univariate rational function num/den in canonical form: den monic,
/// gcd(num, den) = 1, and zero is 0/1. Equality is therefore structural.
template <class Var>
class RatFunc {
public:
    using variable = Var;
    using poly = UniPoly<Var>;

    RatFunc() : num_(), den_(1) {}
    RatFunc(int c) : num_(c), den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(const poly& p) : num_(p), den_(1) {}
    RatFunc(const poly& num, const poly& den) : num_(num), den_(den) { canonicalize(); }

    static RatFunc var() { return RatFunc(poly::var()); }

    const poly& numerator() const { return num_; }
    const poly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    /// Valid only when is_constant().
    Rational constant_value() const { return num_.coeff(0); }

    RatFunc inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    RatFunc pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        RatFunc r;
        r.num_ = num_.pow(static_cast<unsigned>(e));
        r.den_ = den_.pow(static_cast<unsigned>(e));
        return r;  // coprime powers stay coprime
    }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_polynomial() && b.is_polynomial()) {
            RatFunc r;
            r.num_ = a.num_ * b.num_;
            return r;
        }
        // Cross-cancel first to keep intermediate degrees small.
        const poly g1 = gcd(a.num_, b.den_);
        const poly g2 = gcd(b.num_, a.den_);
        RatFunc r;
        r.num_ = exact_div(a.num_, g1) * exact_div(b.num_, g2);
        r.den_ = exact_div(a.den_, g2) * exact_div(b.den_, g1);
        r.normalize_lead();
        return r;
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        auto wrap = [](const poly& p) {
            const std::string s = p.to_string();
            return (p.degree() >= 1 && p.coefficients().size() > 1) || s.find(' ') != std::string::npos ||
                           s.find('/') != std::string::npos
                       ? "(" + s + ")"
                       : s;
        };
        return wrap(num_) + "/" + wrap(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

private:
    void canonicalize() {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = poly(1);
            return;
        }
        const poly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        normalize_lead();
    }
    void normalize_lead() {
        const Rational lead = den_.leading();
        if (!lead.is_one()) {
            const Rational inv = lead.inverse();
            num_ *= inv;
            den_ *= inv;
        }
    }

    poly num_;
    poly den_;
};

template <class Var>
bool is_zero(const RatFunc<Var>& f) {
    return f.is_zero();
}

/// Evaluates f at a rational point.
template <class Var>
Rational specialize(const RatFunc<Var>& f, const Rational& value) {
    const Rational d = f.denominator()(value);
    if (d.is_zero())
        throw PoleAtPoint(f.to_string() + " at " + std::string(Var::name) + " = " + value.pretty());
    return f.numerator()(value) / d;
}

/// The named substitution var := a + b*t between variable tags.
template <class To, class From>
RatFunc<To> substitute_affine(const RatFunc<From>& f, const Rational& a, const Rational& b) {
    return RatFunc<To>(substitute_affine<To>(f.numerator(), a, b), substitute_affine<To>(f.denominator(), a, b));
}

using RatLambda = RatFunc<LambdaVar>;
using RatQ = RatFunc<QVar>;
using RatHbar = RatFunc<HbarVar>;

}  // namespace diagdef
