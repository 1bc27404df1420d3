#pragma once

#include "diagdef/scalar/series.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace diagdef::stars {

/// Commutative polynomial sum c_ij x^i y^j over Q.
class CommPoly2 {
public:
    using Key = std::pair<int, int>;

    CommPoly2() = default;
    CommPoly2(int c) : CommPoly2(Rational(c)) {}
    CommPoly2(const Rational& c) { add_term(0, 0, c); }

    static CommPoly2 monomial(int i, int j, const Rational& c = Rational(1));
    static CommPoly2 x() { return monomial(1, 0); }
    static CommPoly2 y() { return monomial(0, 1); }

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int i, int j) const;
    void add_term(int i, int j, const Rational& c);

    CommPoly2 dx() const;
    CommPoly2 dy() const;

    CommPoly2 operator-() const;
    CommPoly2& operator+=(const CommPoly2& o);
    CommPoly2& operator-=(const CommPoly2& o);
    friend CommPoly2 operator+(CommPoly2 a, const CommPoly2& b) { return a += b; }
    friend CommPoly2 operator-(CommPoly2 a, const CommPoly2& b) { return a -= b; }
    friend CommPoly2 operator*(const CommPoly2& a, const CommPoly2& b);
    friend CommPoly2 operator*(const Rational& c, const CommPoly2& a);
    friend bool operator==(const CommPoly2&, const CommPoly2&) = default;

    std::string to_string() const;

private:
    std::map<Key, Rational> terms_;
};

inline bool is_zero(const CommPoly2& p) { return p.is_zero(); }

using PolySeries = TruncSeries<CommPoly2>;

/// Derivation p d/dx + q d/dy.
struct Derivation {
    CommPoly2 dx_coeff;
    CommPoly2 dy_coeff;

    CommPoly2 apply(const CommPoly2& f) const { return dx_coeff * f.dx() + dy_coeff * f.dy(); }
    static Derivation d_x() { return {CommPoly2(1), CommPoly2()}; }
    static Derivation d_y() { return {CommPoly2(), CommPoly2(1)}; }
};

/// [D1, D2] = 0, checked on the generators x and y.
bool derivations_commute(const Derivation& a, const Derivation& b);

enum class StarKind { Normal, Moyal, QPlane, Custom };

/// Bidifferential operator sum_i w_i phi_i (x) psi_i whose exponential
/// defines the product.
struct StarSpec {
    struct Pair {
        Rational weight;
        Derivation phi;
        Derivation psi;
    };
    StarKind kind = StarKind::Normal;
    std::vector<Pair> pairs;

    static StarSpec normal();
    static StarSpec moyal();
    static StarSpec qplane();
    /// Throws NonCommutingDerivations unless all derivations pairwise commute.
    static StarSpec custom(std::vector<Pair> pairs);
};

const char* star_kind_name(StarKind k);

struct StarResult {
    PolySeries product;
    /// The operator power of order N+1 kills a (x) b, so no terms were dropped.
    bool exact = false;
};

StarResult star(const CommPoly2& a, const CommPoly2& b, const StarSpec& spec, int order);

/// Star product extended hbar-bilinearly to truncated series.
PolySeries star_series(const PolySeries& a, const PolySeries& b, const StarSpec& spec, int order);

PolySeries star_commutator(const CommPoly2& a, const CommPoly2& b, const StarSpec& spec, int order);

struct AssociativityReport {
    int trials = 0;
    int failures = 0;
    /// Largest number of nonzero terms in any (a*b)*c - a*(b*c).
    std::size_t max_residual_terms = 0;
    bool pass = false;
};

AssociativityReport associativity_check(const StarSpec& spec, int order, int trials, std::uint64_t seed);

struct GradingReport {
    int trials = 0;
    int failures = 0;
    bool pass = false;
};

/// deg x = 1, deg y = -1; star of homogeneous inputs must stay homogeneous.
GradingReport grading_check(const StarSpec& spec, int trials, std::uint64_t seed, int order = 4);

/// Every term x^i y^j of p has i - j == degree.
bool is_homogeneous(const CommPoly2& p, int degree);

/// Deterministic per-trial seed derivation.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace diagdef::stars
