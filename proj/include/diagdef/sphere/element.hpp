#pragma once

#include "diagdef/scalar/ratfunc.hpp"
#include "diagdef/scalar/series.hpp"

#include <array>
#include <compare>
#include <map>
#include <string>

namespace diagdef::sphere {

using Scalar = RatLambda;

/// The finite poles of A = k[x, 1/x, 1/(x-1), 1/(x-lambda)].
enum class Pole { Zero = 0, One = 1, Lambda = 2 };

inline constexpr std::array<Pole, 3> kAllPoles{Pole::Zero, Pole::One, Pole::Lambda};

/// Location of the pole as an element of Q(lambda).
Scalar pole_location(Pole p);
const char* pole_name(Pole p);

/// A basis element of the principal-parts decomposition: either x^power
/// (power >= 0) or (x - p)^(-power) (power >= 1).
struct Term {
    enum class Kind { Power = 0, AtZero = 1, AtOne = 2, AtLambda = 3 } kind;
    int power;

    static Term x_power(int k) { return {Kind::Power, k}; }
    static Term pole(Pole p, int m) { return {static_cast<Kind>(static_cast<int>(p) + 1), m}; }
    bool is_pole() const { return kind != Kind::Power; }
    Pole pole() const { return static_cast<Pole>(static_cast<int>(kind) - 1); }

    friend auto operator<=>(const Term&, const Term&) = default;
};

/// Element of A over k = Q(lambda), stored as its unique principal-parts
/// decomposition: a polynomial part plus negative-power expansions at 0, 1
/// and lambda. No zero coefficients are stored.
class SphereElement {
public:
    SphereElement() = default;
    SphereElement(int c) : SphereElement(Scalar(c)) {}
    SphereElement(const Scalar& c) { add_term(Term::x_power(0), c); }

    static SphereElement x_power(int k, const Scalar& c = Scalar(1));
    /// c * (x - p)^(-m), m >= 1.
    static SphereElement pole_power(Pole p, int m, const Scalar& c = Scalar(1));
    static SphereElement x() { return x_power(1); }
    /// The linear polynomial x - p.
    static SphereElement x_minus(Pole p);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Term, Scalar>& terms() const { return terms_; }
    Scalar coeff(const Term& t) const;
    Scalar poly_coeff(int k) const { return coeff(Term::x_power(k)); }
    Scalar pole_coeff(Pole p, int m) const { return coeff(Term::pole(p, m)); }
    /// Coefficients of (x - p)^(-m), keyed by m.
    std::map<int, Scalar> principal_part(Pole p) const;
    std::map<int, Scalar> polynomial_part() const;
    bool has_pole_at(Pole p) const;
    /// Highest pole order at p, 0 when regular there.
    int pole_order(Pole p) const;

    SphereElement derivative() const;

    SphereElement operator-() const;
    SphereElement& operator+=(const SphereElement& o);
    SphereElement& operator-=(const SphereElement& o);
    SphereElement& operator*=(const Scalar& c);

    friend SphereElement operator+(SphereElement a, const SphereElement& b) { return a += b; }
    friend SphereElement operator-(SphereElement a, const SphereElement& b) { return a -= b; }
    friend SphereElement operator*(const SphereElement& a, const SphereElement& b);
    friend SphereElement operator*(SphereElement a, const Scalar& c) { return a *= c; }
    friend SphereElement operator*(const Scalar& c, SphereElement a) { return a *= c; }
    friend bool operator==(const SphereElement&, const SphereElement&) = default;

    std::string to_string() const;

private:
    void add_term(const Term& t, const Scalar& c);

    std::map<Term, Scalar> terms_;
};

inline bool is_zero(const SphereElement& e) { return e.is_zero(); }

/// Element of B = k[x, 1/x, 1/(x-1)]: a SphereElement regular at lambda.
class BElement {
public:
    BElement() = default;
    /// Throws NotInB when e has a pole at lambda.
    explicit BElement(SphereElement e);

    const SphereElement& value() const { return value_; }
    operator const SphereElement&() const { return value_; }
    friend bool operator==(const BElement&, const BElement&) = default;

private:
    SphereElement value_;
};

SphereElement multiply(const SphereElement& a, const SphereElement& b);

/// b(lambda^{-1} x), the morphism g : B -> A.
SphereElement substitute_scale(const BElement& b);

/// v * de/dx, the derivation with D(x) = v applied to e.
SphereElement derivation_apply(const SphereElement& v, const SphereElement& e);

using SphereSeries = TruncSeries<SphereElement>;

struct GeometricSeriesReport {
    int order = 0;
    bool pass = false;
    /// (x - lambda(1+hbar)) * sum_n hbar^n lambda^n (x-lambda)^-(n+1) - 1.
    SphereSeries residual;
};

/// Checks that sum_{n<=N} hbar^n lambda^n (x-lambda)^-(n+1) inverts
/// x - lambda(1+hbar) modulo hbar^(N+1).
GeometricSeriesReport geometric_series_check(int order);

}  // namespace diagdef::sphere
