#pragma once

#include "diagdef/sphere/element.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace diagdef::sphere {

/// A 2-cocycle of the punctured-sphere diagram, determined by the values of
/// Gamma^f and Gamma^g on the generator x.
struct SphereCocycle2 {
    SphereElement gamma_f;
    SphereElement gamma_g;
};

/// Canonical representative spanned by x and the (x-1)^-N.
struct SphereClassRep {
    Scalar x_coeff;
    std::map<int, Scalar> pole_one;

    bool is_zero() const { return x_coeff.is_zero() && pole_one.empty(); }
    SphereElement to_element() const;
    std::string to_string() const;
    friend bool operator==(const SphereClassRep&, const SphereClassRep&) = default;
};

/// b - lambda * b(lambda^-1 x).
SphereElement L_operator(const BElement& b);

/// c = L(preimage) + residual, with residual canonical.
struct LDecomposition {
    BElement preimage;
    SphereClassRep residual;

    bool has_witness() const { return residual.is_zero(); }
};

LDecomposition solve_L(const SphereElement& c);

/// Residual of gamma_f - lambda * gamma_g. With regular set, both values must
/// be regular at 1 and lambda (RegularityViolation otherwise).
SphereClassRep canonical_class(const SphereCocycle2& gamma, bool regular);

std::vector<SphereClassRep> h2_basis(int cutoff, bool regular);

enum class BaseMorphism { F, G };

struct ExpDeformReport {
    int order = 0;
    /// Images of the generators x, 1/x, 1/(x-1).
    std::vector<std::pair<std::string, SphereSeries>> table;
    int products_checked = 0;
    bool pass = false;
    std::string failure;
};

/// exp(hbar D) composed with base, where D(x) = v; checks multiplicativity on
/// the generator relations and on 20 seeded random products of B.
ExpDeformReport exp_deform_morphism(const SphereElement& v, BaseMorphism base, int order,
                                    std::uint64_t seed = 1);

/// Image of b under exp(hbar D) composed with base, modulo hbar^(order+1).
SphereSeries exp_deform_apply(const SphereElement& v, BaseMorphism base, int order, const BElement& b);

/// Poles {0, 1/t, lambda} of k[x, 1/x, 1/(tx-1), 1/(x-lambda)].
std::vector<Scalar> descended_pole_set(const Rational& t);

}  // namespace diagdef::sphere
