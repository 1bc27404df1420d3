#include "diagdef/weyl/qweyl.hpp"

#include "diagdef/errors.hpp"

namespace diagdef::weyl {

namespace {

const RatQ kQ = RatQ::var();

void require_positive(int n) {
    if (n < 1) throw InvalidParameter("n must be at least 1");
}

QPoly xy_plus(const RatQ& c) { return QPoly::monomial(1, 1) + QPoly(c); }

/// Exponent e with c = q^e, if c is a monic monomial in q.
std::optional<int> monomial_exponent(const RatQ& c) {
    if (!c.is_polynomial()) return std::nullopt;
    const auto& p = c.numerator();
    if (p.is_zero() || p.leading() != 1) return std::nullopt;
    if (p.valuation() != p.degree()) return std::nullopt;
    return static_cast<int>(p.degree());
}

/// Exact quotient of a polynomial-in-q coefficient by d, if it divides.
std::optional<RatQ> divide_exactly(const RatQ& c, const UniPoly<QVar>& d) {
    if (!c.is_polynomial()) return std::nullopt;
    auto [quo, rem] = divmod(c.numerator(), d);
    if (!rem.is_zero()) return std::nullopt;
    return RatQ(quo);
}

}  // namespace

PochhammerResult pochhammer_xy(int n) {
    require_positive(n);
    QPoly p = QPoly::monomial(1, 1);
    for (int k = 1; k < n; ++k) p = xy_plus(q_integer<SymbolicQ>(k)) * p;
    PochhammerResult r{p, std::nullopt};
    if (p.size() == 1 && p.terms().begin()->first == QPoly::Key{n, n})
        r.q_exponent = monomial_exponent(p.terms().begin()->second);
    return r;
}

QMatrix stirling_first(int n) {
    require_positive(n);
    QMatrix m(static_cast<std::size_t>(n), std::vector<RatQ>(static_cast<std::size_t>(n)));
    // Expand in t = xy; the factors commute, so plain polynomial arithmetic in t.
    std::vector<RatQ> poly{RatQ(0), RatQ(1)};
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            const RatQ c = q_integer<SymbolicQ>(k - 1);
            std::vector<RatQ> next(poly.size() + 1);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] += poly[i];
                next[i] += c * poly[i];
            }
            poly = std::move(next);
        }
        for (int j = 1; j <= k; ++j) m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)] = poly[static_cast<std::size_t>(j)];
    }
    return m;
}

QMatrix stirling_second(int n) {
    require_positive(n);
    QMatrix m(static_cast<std::size_t>(n), std::vector<RatQ>(static_cast<std::size_t>(n)));
    const QPoly xy = QPoly::monomial(1, 1);
    QPoly p = xy;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) p = p * xy;
        for (const auto& [key, c] : p.terms()) {
            if (key.first != key.second || key.first < 1 || key.first > n)
                throw Error("power of xy left the diagonal span");
            m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(key.first - 1)] = c;
        }
    }
    return m;
}

QMatrix matrix_product(const QMatrix& a, const QMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    QMatrix r(n, std::vector<RatQ>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

StirlingInverseReport stirling_inverse_check(int n) {
    require_positive(n);
    StirlingInverseReport rep;
    QMatrix diag(static_cast<std::size_t>(n), std::vector<RatQ>(static_cast<std::size_t>(n)));
    bool aligned = true;
    for (int k = 1; k <= n; ++k) {
        const auto e = pochhammer_xy(k).q_exponent;
        if (!e) {
            aligned = false;
            rep.q_exponents.push_back(-1);
            continue;
        }
        rep.q_exponents.push_back(*e);
        diag[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k - 1)] = kQ.pow(-*e);
    }
    rep.product = matrix_product(matrix_product(stirling_second(n), diag), stirling_first(n));
    rep.identity = aligned;
    for (std::size_t i = 0; i < rep.product.size(); ++i)
        for (std::size_t j = 0; j < rep.product.size(); ++j)
            if (rep.product[i][j] != RatQ(i == j ? 1 : 0)) rep.identity = false;
    return rep;
}

CommutatorDivisibility commutator_divisibility(int n) {
    require_positive(n);
    CommutatorDivisibility r;
    r.n = n;
    const QPoly x = QPoly::x(), y = QPoly::y();
    r.x_yn = commutator(x, y.pow(static_cast<unsigned>(n)));
    r.xn_y = commutator(x.pow(static_cast<unsigned>(n)), y);
    const RatQ qn = q_integer<SymbolicQ>(n);
    const UniPoly<QVar>& d = qn.numerator();
    r.divisible = true;
    auto quotient = [&](const QPoly& p) {
        QPoly out;
        for (const auto& [k, c] : p.terms()) {
            const auto qt = divide_exactly(c, d);
            if (!qt) {
                r.divisible = false;
                continue;
            }
            out.add_term(k.first, k.second, *qt);
        }
        return out;
    };
    r.x_yn_quotient = quotient(r.x_yn);
    r.xn_y_quotient = quotient(r.xn_y);
    return r;
}

bool check_y_power_shift(int n) {
    require_positive(n);
    const QPoly lhs = QPoly::y().pow(static_cast<unsigned>(n)) * QPoly::x();
    const QPoly rhs = QPoly::monomial(1, n, kQ.pow(n)) - QPoly::monomial(0, n - 1, q_integer<SymbolicQ>(n));
    return lhs == rhs;
}

bool check_x_power_shift(int n) {
    require_positive(n);
    const QPoly xn = QPoly::x().pow(static_cast<unsigned>(n));
    const QPoly lhs = kQ.pow(n) * (xn * QPoly::y()) - QPoly::y() * xn;
    return lhs == QPoly::monomial(n - 1, 0, q_integer<SymbolicQ>(n));
}

}  // namespace diagdef::weyl
