#pragma once

#include "diagdef/weyl/pseudopoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace diagdef::weyl {

/// Series in hbar with W_1 normal-form coefficients. Products are taken
/// either in W_1 (operator*) or in W_{1+hbar} (wq_series_multiply).
using WeylSeries = TruncSeries<W1Poly>;

/// Reassembles a series as one normal form over Q[hbar]/(hbar^(order+1)).
HbarQPoly to_hbar_coefficients(const WeylSeries& s);
WeylSeries from_hbar_coefficients(const HbarQPoly& p, int order);

/// Product in W_{1+hbar}[[hbar]] modulo hbar^(order+1).
WeylSeries wq_series_multiply(const WeylSeries& a, const WeylSeries& b, int order);

struct EtaTable {
    int order = 0;
    std::vector<W1Poly> eta;  ///< eta[r-1] is the coefficient of hbar^r
    WeylSeries z() const;
};

/// Solves [x, z] = 1 in W_{1+hbar} order by order with no k[x] component.
/// A nonzero permutation seed shuffles the order in which monomials of each
/// right-hand side are processed. Throws UnsolvableOrder if the final
/// residual is nonzero.
EtaTable solve_z(int order, std::uint64_t permutation_seed = 0);

/// x z - z x - 1 in W_{1+hbar} at the table's order.
WeylSeries commutator_residual(const EtaTable& t);

/// hbar^(r+1) / ((1+hbar)^(r+1) - 1).
RatHbar closed_form_a(int r);

struct ClosedFormReport {
    int order = 0;
    bool series_match = false;
    std::vector<std::string> mismatches;
    /// s = 1..order: a_s [s+1]_q == a_(s-1) (q^s - 1) with q = 1 + hbar.
    std::vector<bool> recurrence;
    bool pass = false;
};

/// y + sum_r a_r(hbar) x^r y^(r+1), expanded to the given order.
WeylSeries closed_form_z(int order);

ClosedFormReport verify_closed_form(int order);

struct PoleFactorization {
    int r = 0;
    /// (d, Phi_d(1 + hbar)) for each divisor d of r + 1.
    std::vector<std::pair<int, UniPoly<HbarVar>>> factors;
    bool product_matches = false;       ///< product equals (1+hbar)^(r+1) - 1
    bool simple_zero_cancelled = false;  ///< hbar | only Phi_1, and a_r's denominator is the rest
};

/// Cyclotomic polynomial Phi_n over Q.
UniPoly<HbarVar> cyclotomic(int n);

PoleFactorization pole_factorization(int r);

struct GzReport {
    int order = 0;
    WeylSeries y_hbar;    ///< at order N - 1
    WeylSeries residual;  ///< e^hbar x y_hbar - y_hbar x - 1
    bool pass = false;
};

/// -x^-1 (e^(-hbar xy) - 1) / (e^hbar - 1) in W_1[[hbar]].
GzReport gz_element(int order);

/// Literal reading of the printed recursion: replace each y^n by
/// (n/(n+1)) x y^(n+1) - ((n-1)/2) y^n.
W1Poly hat_substitute(const W1Poly& p);

struct RecursionRow {
    int r = 0;  ///< compares the transforms of eta_r with eta_(r+1)
    W1Poly hat;
    W1Poly x_hat;
    W1Poly solver_next;
    bool hat_matches = false;
    bool x_hat_matches = false;
    /// Monomials (i, j) whose coefficients differ between hat and solver.
    std::vector<std::pair<int, int>> hat_differences;
};

std::vector<RecursionRow> printed_recursion_compare(int order);

struct EtaComparison {
    int r = 0;
    W1Poly candidate;
    W1Poly solver;
    W1Poly closed_form;
    bool solver_agrees_with_closed_form = false;
    bool candidate_agrees = false;
    std::vector<std::pair<int, int>> differing_monomials;
};

/// Compares a proposed eta_r against the solver and the closed form.
EtaComparison compare_eta(int r, const W1Poly& candidate);

}  // namespace diagdef::weyl
