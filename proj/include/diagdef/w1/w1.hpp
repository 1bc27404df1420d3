#pragma once

#include "diagdef/weyl/pseudopoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace diagdef::w1 {

using weyl::W1Poly;

/// Values Gamma^f(x), Gamma^g(y) of a reduced 2-cocycle of k[x] -> W1 <- k[y].
struct W1Cocycle {
    W1Poly gamma_f;
    W1Poly gamma_g;
    friend bool operator==(const W1Cocycle&, const W1Cocycle&) = default;
};

/// gamma^B(x) = alpha, gamma^C(y) = beta, gamma^W1 = ad chi.
struct GaugeDatum {
    W1Poly alpha;  ///< polynomial in x only
    W1Poly beta;   ///< polynomial in y only
    W1Poly chi;
    GaugeDatum operator-() const { return {-alpha, -beta, -chi}; }
};

/// Gamma^f -= alpha - [chi, x]; Gamma^g -= beta - [chi, y].
/// Throws InvalidParameter if alpha involves y or beta involves x.
W1Cocycle apply_gauge(const W1Cocycle& g, const GaugeDatum& d);

struct KillResult {
    W1Cocycle cocycle;  ///< gamma_f == 0
    GaugeDatum witness;
};

/// alpha = 0 and chi = sum c_ij/(j+1) x^i y^(j+1) over the terms of gamma_f.
KillResult kill_gamma_f(const W1Cocycle& g);

/// Largest i + j over the support; -1 for zero.
int total_degree(const W1Poly& p);

struct MonomialLabel {
    char component = 'G';  ///< 'F' for the gamma_f equation, 'G' for gamma_g
    int i = 0;
    int j = 0;
    friend bool operator==(const MonomialLabel&, const MonomialLabel&) = default;
};

struct MembershipResult {
    bool is_coboundary = false;
    /// apply_gauge((0, p), witness) == (0, 0).
    std::optional<GaugeDatum> witness;
    /// Dual vector w with w A = 0 and w . rhs != 0, on its nonzero rows.
    std::vector<std::pair<MonomialLabel, Rational>> certificate;
    Rational pairing;  ///< w . rhs
    std::size_t unknowns = 0;
    std::size_t equations = 0;
};

/// Exact solve of (0, p) = (alpha - [chi, x], beta - [chi, y]) with chi
/// ranging over all monomials of degree <= cutoff + 1. Throws CutoffTooSmall.
MembershipResult membership_oracle(const W1Poly& p, int cutoff);

struct ReduceResult {
    W1Poly representative;  ///< class representative after kill and projection
    KillResult killed;
    bool is_zero = false;
    bool oracle_accepts = false;
    bool consistent = false;  ///< is_zero == oracle_accepts
};

/// kill_gamma_f, then reduce gamma_g modulo the span of y^j, x^i, x^i y
/// (graded-lex row reduction). Throws CutoffTooSmall.
ReduceResult reduce(const W1Cocycle& g, int cutoff);

/// Spans the reduction relies on, checked by linear algebra on degree <= maxdeg:
/// ker(ad x) = k[x] and (ad x)^{-1}(k[x]) = k[x] + k[x] y.
struct CentralizerReport {
    int maxdeg = 0;
    bool kernel_is_kx = false;
    bool preimage_is_kx_plus_kxy = false;
};
CentralizerReport centralizer_check(int maxdeg);

struct BasisRow {
    int i = 0;
    int j = 0;
    bool survivor = false;        ///< oracle verdict: not a coboundary
    bool printed_claim = false;   ///< i > 0 and (j == 0 or j >= 2)
    bool hand_claim = false;      ///< i >= 1 and j >= 2
    bool agrees_printed = false;
    bool agrees_hand = false;
};

struct BasisReport {
    int cutoff = 0;
    std::vector<BasisRow> rows;  ///< ascending total degree, then ascending i
    std::vector<std::pair<int, int>> survivors;
    std::vector<std::pair<int, int>> printed_conflicts;  ///< rows where oracle and printed set differ
    std::vector<std::pair<int, int>> hand_conflicts;
    /// Oracle says every x^i (i > 0) is a coboundary while the printed set keeps it.
    bool x_power_family_conflict = false;
    /// Survivors of degree i - j = -1 with the least total degree.
    std::vector<std::pair<int, int>> minimal_degree_minus_one;
};

/// Requires cutoff >= 3 (InvalidParameter otherwise).
BasisReport basis_report(int cutoff);

}  // namespace diagdef::w1
