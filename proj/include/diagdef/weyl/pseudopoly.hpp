#pragma once

#include "diagdef/scalar/ratfunc.hpp"
#include "diagdef/scalar/ring.hpp"
#include "diagdef/scalar/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace diagdef::weyl {

/// q kept as a symbol: W_q over Q(q).
struct SymbolicQ {
    using Scalar = RatQ;
    static Scalar q() { return RatQ::var(); }
    static constexpr const char* name = "symbolic";
};

/// q = 1: the Weyl algebra W_1 over Q.
struct UnitQ {
    using Scalar = Rational;
    static Scalar q() { return Rational(1); }
    static constexpr const char* name = "unit";
};

/// q = 1 + hbar over truncated hbar-series.
struct OnePlusHbar {
    using Scalar = HbarSeries;
    static Scalar q() { return HbarSeries(HbarSeries::kExact, {Rational(1), Rational(1)}); }
    static constexpr const char* name = "one-plus-hbar";
};

/// [n]_q = 1 + q + ... + q^(n-1).
template <class Policy>
typename Policy::Scalar q_integer(int n) {
    using S = typename Policy::Scalar;
    S sum{}, p(1);
    const S q = Policy::q();
    for (int i = 0; i < n; ++i) {
        sum = sum + p;
        p = p * q;
    }
    return sum;
}

template <class Policy>
typename Policy::Scalar q_power(int n) {
    using S = typename Policy::Scalar;
    S p(1);
    const S q = Policy::q();
    for (int i = 0; i < n; ++i) p = p * q;
    return p;
}

/// Normal-form element sum c_ij x^i y^j of W_q = k{x,y}/(qxy - yx - 1).
template <class Policy>
class PseudoPoly {
public:
    using Scalar = typename Policy::Scalar;
    using Key = std::pair<int, int>;

    PseudoPoly() = default;
    PseudoPoly(int c) : PseudoPoly(Scalar(c)) {}
    PseudoPoly(const Scalar& c) { add_term(0, 0, c); }

    static PseudoPoly monomial(int i, int j, const Scalar& c = Scalar(1)) {
        PseudoPoly p;
        p.add_term(i, j, c);
        return p;
    }
    static PseudoPoly x() { return monomial(1, 0); }
    static PseudoPoly y() { return monomial(0, 1); }

    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coeff(int i, int j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Scalar{} : it->second;
    }

    void add_term(int i, int j, const Scalar& c) {
        if (detail::zero_test(c)) return;
        auto [it, inserted] = terms_.emplace(Key{i, j}, c);
        if (inserted) return;
        it->second = it->second + c;
        if (detail::zero_test(it->second)) terms_.erase(it);
    }

    /// x^a * this * y^b; exact because normal forms are x-before-y.
    PseudoPoly shifted(int a, int b) const {
        PseudoPoly r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.first + a, k.second + b}, c);
        return r;
    }

    template <class F>
    PseudoPoly map_coefficients(F&& f) const {
        PseudoPoly r;
        for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, f(c));
        return r;
    }

    PseudoPoly operator-() const {
        return map_coefficients([](const Scalar& c) { return Scalar(-c); });
    }
    PseudoPoly& operator+=(const PseudoPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    PseudoPoly& operator-=(const PseudoPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, Scalar(-c));
        return *this;
    }
    friend PseudoPoly operator+(PseudoPoly a, const PseudoPoly& b) { return a += b; }
    friend PseudoPoly operator-(PseudoPoly a, const PseudoPoly& b) { return a -= b; }
    friend PseudoPoly operator*(const Scalar& s, const PseudoPoly& a) {
        return a.map_coefficients([&](const Scalar& c) { return Scalar(s * c); });
    }
    friend PseudoPoly operator*(const PseudoPoly& a, const Scalar& s) { return s * a; }
    friend PseudoPoly operator*(const PseudoPoly& a, const PseudoPoly& b) {
        PseudoPoly r;
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                const Scalar c = ca * cb;
                if (detail::zero_test(c)) continue;
                // x^i (y^j x^k) y^l
                for (const auto& [m, cm] : shift_table(ka.second, kb.first).terms_)
                    r.add_term(m.first + ka.first, m.second + kb.second, c * cm);
            }
        }
        return r;
    }
    PseudoPoly& operator*=(const PseudoPoly& o) { return *this = *this * o; }
    friend bool operator==(const PseudoPoly&, const PseudoPoly&) = default;

    PseudoPoly pow(unsigned n) const {
        PseudoPoly r(1);
        for (unsigned i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        // Highest total degree first reads more naturally.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [k, c] = *it;
            if (!out.empty()) out += " + ";
            std::string mono;
            auto var = [&](const char* v, int e) {
                if (e == 0) return;
                if (!mono.empty()) mono += "*";
                mono += v;
                if (e > 1) mono += "^" + std::to_string(e);
            };
            var("x", k.first);
            var("y", k.second);
            const std::string ct = detail::text_of(c);
            if (mono.empty()) out += "(" + ct + ")";
            else if (ct == "1") out += mono;
            else out += "(" + ct + ")*" + mono;
        }
        return out;
    }

private:
    /// Normal form of y^b x^c, from y^b x = q^b x y^b - [b]_q y^(b-1).
    static const PseudoPoly& shift_table(int b, int c) {
        thread_local std::map<Key, PseudoPoly> cache;
        if (auto it = cache.find({b, c}); it != cache.end()) return it->second;
        PseudoPoly r;
        if (b == 0 || c == 0) {
            r = monomial(c, b);
        } else {
            r = q_power<Policy>(b) * shift_table(b, c - 1).shifted(1, 0);
            r -= q_integer<Policy>(b) * shift_table(b - 1, c - 1);
        }
        return cache.emplace(Key{b, c}, std::move(r)).first->second;
    }

    std::map<Key, Scalar> terms_;
};

template <class Policy>
bool is_zero(const PseudoPoly<Policy>& p) {
    return p.is_zero();
}

template <class Policy>
PseudoPoly<Policy> multiply(const PseudoPoly<Policy>& a, const PseudoPoly<Policy>& b) {
    return a * b;
}

template <class Policy>
PseudoPoly<Policy> commutator(const PseudoPoly<Policy>& a, const PseudoPoly<Policy>& b) {
    return a * b - b * a;
}

/// A word over {x, y} with a coefficient, before reduction.
template <class Policy>
struct FreeWord {
    std::string letters;
    typename Policy::Scalar coeff = typename Policy::Scalar(1);
};

/// Rewrites the leftmost "yx" to q*"xy" - 1 until every word is x...xy...y.
template <class Policy>
PseudoPoly<Policy> normalize(const std::vector<FreeWord<Policy>>& words) {
    using S = typename Policy::Scalar;
    const S q = Policy::q();
    std::map<std::string, S> pending;
    auto push = [&](const std::string& w, const S& c) {
        if (detail::zero_test(c)) return;
        auto [it, inserted] = pending.emplace(w, c);
        if (!inserted) {
            it->second = it->second + c;
            if (detail::zero_test(it->second)) pending.erase(it);
        }
    };
    for (const auto& w : words) {
        for (char ch : w.letters)
            if (ch != 'x' && ch != 'y') throw ParseError(std::string("letter outside {x,y}: ") + ch);
        push(w.letters, w.coeff);
    }
    PseudoPoly<Policy> out;
    while (!pending.empty()) {
        // Longest words first: rewriting only ever shortens or keeps length.
        auto it = std::prev(pending.end());
        for (auto j = pending.begin(); j != pending.end(); ++j)
            if (j->first.size() > it->first.size()) it = j;
        const std::string w = it->first;
        const S c = it->second;
        pending.erase(it);
        const auto pos = w.find("yx");
        if (pos == std::string::npos) {
            const auto nx = static_cast<int>(w.find('y') == std::string::npos ? w.size() : w.find('y'));
            out.add_term(nx, static_cast<int>(w.size()) - nx, c);
            continue;
        }
        std::string swapped = w;
        swapped[pos] = 'x';
        swapped[pos + 1] = 'y';
        push(swapped, c * q);
        push(w.substr(0, pos) + w.substr(pos + 2), S(-c));
    }
    return out;
}

/// The words x^i y^j of a normal form.
template <class Policy>
std::vector<FreeWord<Policy>> to_words(const PseudoPoly<Policy>& p) {
    std::vector<FreeWord<Policy>> out;
    for (const auto& [k, c] : p.terms())
        out.push_back({std::string(static_cast<std::size_t>(k.first), 'x') + std::string(static_cast<std::size_t>(k.second), 'y'), c});
    return out;
}

/// Product through the free-word oracle: concatenate and normalize.
template <class Policy>
PseudoPoly<Policy> multiply_by_words(const PseudoPoly<Policy>& a, const PseudoPoly<Policy>& b) {
    std::vector<FreeWord<Policy>> words;
    for (const auto& u : to_words(a))
        for (const auto& v : to_words(b)) words.push_back({u.letters + v.letters, u.coeff * v.coeff});
    return normalize(words);
}

/// Homogeneity with respect to deg x^i y^j = i - j. The zero element is
/// homogeneous without a degree.
struct DegreeInfo {
    bool homogeneous = true;
    std::optional<int> degree;
};

template <class Policy>
DegreeInfo degree(const PseudoPoly<Policy>& p) {
    DegreeInfo d;
    for (const auto& [k, c] : p.terms()) {
        const int e = k.first - k.second;
        if (!d.degree) d.degree = e;
        else if (*d.degree != e) return {false, std::nullopt};
    }
    return d;
}

using QPoly = PseudoPoly<SymbolicQ>;
using W1Poly = PseudoPoly<UnitQ>;
using HbarQPoly = PseudoPoly<OnePlusHbar>;

}  // namespace diagdef::weyl
