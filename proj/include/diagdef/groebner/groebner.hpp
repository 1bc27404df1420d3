#pragma once

#include "diagdef/scalar/ratfunc.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace diagdef::groebner {

using Scalar = RatLambda;

inline constexpr int kVars = 4;
inline constexpr std::array<const char*, kVars> kVarNames{"x", "y", "z", "w"};

struct Monomial {
    std::array<int, kVars> e{};

    static Monomial var(int i, int power = 1) {
        Monomial m;
        m.e[static_cast<std::size_t>(i)] = power;
        return m;
    }
    int degree() const { return e[0] + e[1] + e[2] + e[3]; }
    bool divides(const Monomial& o) const;
    Monomial operator*(const Monomial& o) const;
    /// Requires divides(o) on the divisor side: this / o.
    Monomial operator/(const Monomial& o) const;
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend bool coprime(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    std::string to_string() const;
};

/// Graded reverse lexicographic order with x > y > z > w. The only order the
/// engine supports; it is still passed explicitly at the call sites.
enum class MonomialOrder { DegRevLex };

/// a < b in degrevlex.
bool degrevlex_less(const Monomial& a, const Monomial& b);

struct DescendingOrder {
    bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_less(b, a); }
};

/// Sparse polynomial over Q(lambda); terms are kept leading-first.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(int c) : MultiPoly(Scalar(c)) {}
    MultiPoly(const Scalar& c) { add_term(Monomial{}, c); }

    static MultiPoly term(const Monomial& m, const Scalar& c = Scalar(1));
    static MultiPoly var(int i) { return term(Monomial::var(i)); }

    const std::map<Monomial, Scalar, DescendingOrder>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const Monomial& leading_monomial() const;
    const Scalar& leading_coefficient() const;
    Scalar coeff(const Monomial& m) const;

    MultiPoly monic() const;
    /// Scaled so all coefficients are polynomials in lambda with content 1
    /// and a leading coefficient with positive leading term.
    MultiPoly primitive() const;

    void add_term(const Monomial& m, const Scalar& c);
    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Scalar& c, const MultiPoly& a);
    MultiPoly times_term(const Monomial& m, const Scalar& c) const;
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    /// Coefficients specialized at lambda = value (PoleAtPoint on a pole).
    MultiPoly specialize(const Rational& value) const;

    std::string to_string() const;

private:
    std::map<Monomial, Scalar, DescendingOrder> terms_;
};

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& g, MonomialOrder ord = MonomialOrder::DegRevLex);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

struct BuchbergerStats {
    int pairs_created = 0;
    int skipped_coprime = 0;
    int skipped_chain = 0;
    int reduced_to_zero = 0;
    int basis_additions = 0;
};

struct GroebnerRun {
    /// Reduced, monic, sorted by ascending leading monomial.
    std::vector<MultiPoly> basis;
    /// Leading coefficients of the primitive forms of the basis elements.
    std::vector<Scalar> pre_monic_leads;
    /// Every non-constant leading coefficient inverted while the run was in progress.
    std::vector<Scalar> pivot_log;
    BuchbergerStats stats;
};

GroebnerRun buchberger(const std::vector<MultiPoly>& generators, MonomialOrder ord = MonomialOrder::DegRevLex);

std::vector<Monomial> leading_monomials(const std::vector<MultiPoly>& g);

/// Monomials of total degree <= maxdeg outside the initial ideal, ascending.
std::vector<Monomial> standard_monomials(const std::vector<MultiPoly>& g, int maxdeg);

struct ExceptionalValues {
    std::vector<Rational> values;
    /// Factors of the collected polynomials without rational roots.
    std::vector<UniPoly<LambdaVar>> other_factors;
};

ExceptionalValues exceptional_values(const std::vector<MultiPoly>& g, const std::vector<Scalar>& pre_monic_leads);

/// xy - 1, (x-1)z - 1, (x-lambda)w - 1.
std::vector<MultiPoly> punctured_sphere_ideal();

enum class Verdict { FixedBasis, Exceptional };

struct DeformationWitness {
    Rational lambda0;
    Verdict verdict = Verdict::Exceptional;
    std::vector<Rational> exceptional;
    std::vector<Monomial> generic_leads;
    /// Leading monomials of the basis computed after specializing lambda.
    std::vector<Monomial> specialized_leads;
    bool leads_match = false;
    /// The generic basis specializes to the specialized basis.
    bool specialization_commutes = false;
};

DeformationWitness deformation_witness(const Rational& lambda0);

const char* verdict_name(Verdict v);

}  // namespace diagdef::groebner
