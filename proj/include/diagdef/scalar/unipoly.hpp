#pragma once

#include "diagdef/errors.hpp"
#include "diagdef/scalar/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace diagdef {

// Variable tags. Polynomials in different variables are different types, so
// mixing them is a compile error; substitution is explicit.
struct LambdaVar { static constexpr const char* name = "lambda"; };
struct QVar { static constexpr const char* name = "q"; };
struct HbarVar { static constexpr const char* name = "hbar"; };

/// Dense univariate polynomial over the rationals. Coefficients are stored
/// lowest degree first with no trailing zeros; the zero polynomial is empty.
template <class Var>
class UniPoly {
public:
    using variable = Var;

    UniPoly() = default;
    UniPoly(int c) : UniPoly(Rational(c)) {}
    UniPoly(const Rational& c) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }
    UniPoly(std::initializer_list<Rational> low_to_high) : coeffs_(low_to_high) { trim(); }
    explicit UniPoly(std::vector<Rational> low_to_high) : coeffs_(std::move(low_to_high)) { trim(); }

    /// The polynomial `var`.
    static UniPoly var() { return UniPoly({Rational(0), Rational(1)}); }
    static UniPoly monomial(const Rational& c, std::size_t k) {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Index of the lowest nonzero coefficient; -1 for zero.
    long valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) return static_cast<long>(i);
        return -1;
    }

    Rational operator()(const Rational& at) const {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this * leading().inverse();
    }

    UniPoly derivative() const {
        std::vector<Rational> d;
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
        return UniPoly(std::move(d));
    }

    /// Divides out var^k; requires valuation >= k.
    UniPoly shift_down(std::size_t k) const {
        if (is_zero()) return *this;
        if (static_cast<long>(k) > valuation()) throw Error("shift_down below valuation");
        return UniPoly(std::vector<Rational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
    }

    UniPoly pow(unsigned e) const {
        UniPoly result(1), base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return result;
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    UniPoly& operator+=(const UniPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    UniPoly& operator*=(const UniPoly& o) {
        *this = *this * o;
        return *this;
    }
    UniPoly& operator*=(const Rational& c) {
        if (c.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& v : coeffs_) v *= c;
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division: a = q*b + r with deg r < deg b.
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        UniPoly q, r = a;
        const Rational lead_inv = b.leading().inverse();
        std::vector<Rational> qc;
        if (a.degree() >= b.degree()) qc.resize(static_cast<std::size_t>(a.degree() - b.degree() + 1));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
            const Rational c = r.leading() * lead_inv;
            qc[shift] += c;
            for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i + shift] -= c * b.coeffs_[i];
            r.trim();
        }
        q = UniPoly(std::move(qc));
        return {q, r};
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    friend UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            auto r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// Exact quotient; throws if b does not divide a.
    friend UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw Error("polynomial exact division with nonzero remainder");
        return q;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (long i = degree(); i >= 0; --i) {
            const Rational& c = coeffs_[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            Rational mag = c.sign() < 0 ? -c : c;
            if (out.empty()) {
                if (c.sign() < 0) out += "-";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            const bool show_coeff = i == 0 || !mag.is_one();
            if (show_coeff) {
                const bool paren = !mag.is_integer() && i > 0;
                out += paren ? "(" + mag.pretty() + ")" : mag.pretty();
            }
            if (i > 0) {
                if (show_coeff) out += "*";
                out += Var::name;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

template <class Var>
bool is_zero(const UniPoly<Var>& p) {
    return p.is_zero();
}

/// Substitutes var := a + b*t, producing a polynomial in the target variable.
template <class To, class From>
UniPoly<To> substitute_affine(const UniPoly<From>& p, const Rational& a, const Rational& b) {
    const UniPoly<To> lin({a, b});
    UniPoly<To> acc;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * lin + UniPoly<To>(*it);
    return acc;
}

/// Distinct rational roots, ascending.
template <class Var>
std::vector<Rational> rational_roots(const UniPoly<Var>& p) {
    std::vector<Rational> roots;
    if (p.degree() < 1) return roots;
    // Clear denominators to an integer polynomial.
    mpz_class lcm_den = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<mpz_class> ic;
    for (const auto& c : p.coefficients()) ic.push_back(c.numerator() * (lcm_den / c.denominator()));
    std::size_t v = 0;
    while (ic[v] == 0) ++v;
    if (v > 0) roots.emplace_back(0);
    const mpz_class a0 = abs(ic[v]);
    const mpz_class an = abs(ic.back());
    auto divisors = [](const mpz_class& n) {
        std::vector<mpz_class> ds;
        for (mpz_class d = 1; d * d <= n; ++d) {
            if (n % d == 0) {
                ds.push_back(d);
                if (d * d != n) ds.push_back(n / d);
            }
        }
        return ds;
    };
    for (const auto& num : divisors(a0)) {
        for (const auto& den : divisors(an)) {
            for (int s : {1, -1}) {
                Rational cand(mpz_class(s * num), den);
                if (p(cand).is_zero() && std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace diagdef
