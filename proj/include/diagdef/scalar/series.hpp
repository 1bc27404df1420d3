#pragma once

#include "diagdef/errors.hpp"
#include "diagdef/scalar/ratfunc.hpp"
#include "diagdef/scalar/ring.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace diagdef {

/// Power series in hbar over a ring R, known modulo hbar^(order+1).
///
/// A finite-order series stores exactly order+1 coefficients. The special
/// order kExact marks an exact polynomial in hbar (used for constants such as
/// q = 1 + hbar); it stores no trailing zeros. Binary operations take the
/// minimum of the operand orders, so precision is never overstated.
template <class R>
class TruncSeries {
public:
    static constexpr int kExact = INT_MAX;
    using coefficient_type = R;

    TruncSeries() : order_(kExact) {}
    TruncSeries(int c) : TruncSeries(R(c)) {}
    TruncSeries(const R& c) : order_(kExact) {
        if (!detail::zero_test(c)) coeffs_.push_back(c);
    }
    TruncSeries(int order, std::vector<R> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
        if (order < 0) throw InvalidParameter("negative series order");
        normalize();
    }

    static TruncSeries hbar() { return TruncSeries(kExact, {R{}, R(1)}); }
    /// The zero series known through hbar^order.
    static TruncSeries zero(int order) { return TruncSeries(order, {}); }
    static TruncSeries constant(const R& c, int order) { return TruncSeries(order, {c}); }

    int order() const { return order_; }
    bool is_exact() const { return order_ == kExact; }
    const std::vector<R>& coefficients() const { return coeffs_; }

    /// Coefficient of hbar^k; zero beyond storage. Asking past a finite order is an error.
    R coeff(int k) const {
        if (k < 0) return R{};
        if (!is_exact() && k > order_) throw InvalidParameter("coefficient beyond truncation order");
        return static_cast<std::size_t>(k) < coeffs_.size() ? coeffs_[static_cast<std::size_t>(k)] : R{};
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const R& c) { return detail::zero_test(c); });
    }

    /// Index of the first nonzero coefficient, or -1 when zero to known precision.
    int valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!detail::zero_test(coeffs_[i])) return static_cast<int>(i);
        return -1;
    }

    TruncSeries truncate(int order) const {
        const int o = std::min(order, order_);
        return TruncSeries(o, coeffs_);
    }

    template <class F>
    auto map(F&& f) const {
        using S = std::invoke_result_t<F, const R&>;
        std::vector<S> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(f(c));
        return TruncSeries<S>(order_, std::move(out));
    }

    TruncSeries operator-() const { return map([](const R& c) { return R(-c); }); }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        const int o = std::min(a.order_, b.order_);
        std::vector<R> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < a.coeffs_.size()) r[i] = a.coeffs_[i];
            if (i < b.coeffs_.size()) r[i] = r[i] + b.coeffs_[i];
        }
        return TruncSeries(o, std::move(r));
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        const int o = std::min(a.order_, b.order_);
        if (a.coeffs_.empty() || b.coeffs_.empty()) return zero_like(o);
        std::size_t len = a.coeffs_.size() + b.coeffs_.size() - 1;
        if (o != kExact) len = std::min<std::size_t>(len, static_cast<std::size_t>(o) + 1);
        std::vector<R> r(len);
        for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
            if (detail::zero_test(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j) {
                if (detail::zero_test(b.coeffs_[j])) continue;
                r[i + j] = r[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return TruncSeries(o, std::move(r));
    }

    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    /// Structural equality: same order and same coefficients.
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    /// Equality modulo hbar^(min order + 1).
    bool agrees_with(const TruncSeries& o) const { return (*this - o).is_zero(); }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (detail::zero_test(coeffs_[i])) continue;
            if (!out.empty()) out += " + ";
            out += "(" + detail::text_of(coeffs_[i]) + ")";
            if (i > 0) out += i == 1 ? "*hbar" : "*hbar^" + std::to_string(i);
        }
        if (out.empty()) out = "0";
        if (!is_exact()) out += " + O(hbar^" + std::to_string(order_ + 1) + ")";
        return out;
    }

private:
    static TruncSeries zero_like(int order) { return order == kExact ? TruncSeries() : zero(order); }

    void normalize() {
        if (is_exact()) {
            while (!coeffs_.empty() && detail::zero_test(coeffs_.back())) coeffs_.pop_back();
        } else {
            coeffs_.resize(static_cast<std::size_t>(order_) + 1);
        }
    }

    int order_;
    std::vector<R> coeffs_;
};

template <class R>
bool is_zero(const TruncSeries<R>& s) {
    return s.is_zero();
}

/// Left and right multiplication by a coefficient-ring scalar.
template <class R, class S>
TruncSeries<R> scale(const S& s, const TruncSeries<R>& a) {
    return a.map([&](const R& c) { return R(s * c); });
}
template <class R, class S>
TruncSeries<R> scale(const TruncSeries<R>& a, const S& s) {
    return a.map([&](const R& c) { return R(c * s); });
}

/// Truncated exponential series sum_{n<=order} hbar^n / n!.
TruncSeries<Rational> exp_hbar(int order);

/// Expansion of a rational function in hbar to order N.
TruncSeries<Rational> series_expand(const RatHbar& f, int order);

namespace detail {
inline std::optional<Rational> try_inverse(const Rational& r) {
    if (r.is_zero()) return std::nullopt;
    return r.inverse();
}
template <class Var>
std::optional<RatFunc<Var>> try_inverse(const RatFunc<Var>& r) {
    if (r.is_zero()) return std::nullopt;
    return r.inverse();
}
}  // namespace detail

/// Divides num by den when both have the same hbar-valuation v, returning a
/// series at order N - v. The coefficients of den act on those of num from
/// the right (den may live in a scalar ring S acting on R).
template <class R, class S>
TruncSeries<R> series_div_valuation(const TruncSeries<R>& num, const TruncSeries<S>& den) {
    const int order = std::min(num.order(), den.order());
    if (order == TruncSeries<R>::kExact) throw InvalidParameter("division of two exact series needs an order");
    const int vn = num.valuation();
    const int vd = den.valuation();
    if (vd < 0) throw NonInvertibleLeadingCoefficient("denominator is zero to known precision");
    if (vn >= 0 && vn != vd)
        throw ValuationMismatch("numerator valuation " + std::to_string(vn) + " vs denominator " +
                                std::to_string(vd));
    const int v = vd;
    if (v > order) throw ValuationMismatch("valuation exceeds precision");
    const auto lead_inv = detail::try_inverse(den.coeff(v));
    if (!lead_inv) throw NonInvertibleLeadingCoefficient("leading coefficient not invertible");
    const int out_order = order - v;
    std::vector<R> q(static_cast<std::size_t>(out_order) + 1);
    for (int k = 0; k <= out_order; ++k) {
        R acc = num.coeff(v + k);
        for (int j = 0; j < k; ++j) {
            const S d = den.coeff(v + k - j);
            if (!is_zero(d)) acc = acc - q[static_cast<std::size_t>(j)] * d;
        }
        q[static_cast<std::size_t>(k)] = acc * *lead_inv;
    }
    return TruncSeries<R>(out_order, std::move(q));
}

using HbarSeries = TruncSeries<Rational>;

}  // namespace diagdef
