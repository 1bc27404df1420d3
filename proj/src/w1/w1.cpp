#include "diagdef/w1/w1.hpp"

#include "diagdef/errors.hpp"
#include "diagdef/scalar/linalg.hpp"

#include <algorithm>
#include <map>

namespace diagdef::w1 {

namespace {

const W1Poly kX = W1Poly::x();
const W1Poly kY = W1Poly::y();

/// Monomials x^i y^j with i + j <= deg, ordered by total degree descending
/// then i descending (graded lex with x > y).
std::vector<std::pair<int, int>> graded_monomials(int deg) {
    std::vector<std::pair<int, int>> out;
    for (int d = deg; d >= 0; --d)
        for (int i = d; i >= 0; --i) out.emplace_back(i, d - i);
    return out;
}

std::map<std::pair<int, int>, std::size_t> index_map(const std::vector<std::pair<int, int>>& monos) {
    std::map<std::pair<int, int>, std::size_t> m;
    for (std::size_t k = 0; k < monos.size(); ++k) m[monos[k]] = k;
    return m;
}

void require_within(const W1Poly& p, int cutoff) {
    const int d = total_degree(p);
    if (d > cutoff)
        throw CutoffTooSmall("support reaches degree " + std::to_string(d) + " beyond cutoff " + std::to_string(cutoff));
}

}  // namespace

int total_degree(const W1Poly& p) {
    int d = -1;
    for (const auto& [k, c] : p.terms()) d = std::max(d, k.first + k.second);
    return d;
}

W1Cocycle apply_gauge(const W1Cocycle& g, const GaugeDatum& d) {
    for (const auto& [k, c] : d.alpha.terms())
        if (k.second != 0) throw InvalidParameter("alpha must be a polynomial in x");
    for (const auto& [k, c] : d.beta.terms())
        if (k.first != 0) throw InvalidParameter("beta must be a polynomial in y");
    return {g.gamma_f - (d.alpha - weyl::commutator(d.chi, kX)), g.gamma_g - (d.beta - weyl::commutator(d.chi, kY))};
}

KillResult kill_gamma_f(const W1Cocycle& g) {
    GaugeDatum d;
    for (const auto& [k, c] : g.gamma_f.terms()) d.chi.add_term(k.first, k.second + 1, c / Rational(k.second + 1));
    return {apply_gauge(g, d), d};
}

MembershipResult membership_oracle(const W1Poly& p, int cutoff) {
    if (cutoff < 0) throw CutoffTooSmall("cutoff must be non-negative");
    require_within(p, cutoff);
    const auto rows = graded_monomials(cutoff);
    const auto row_of = index_map(rows);
    const auto chis = graded_monomials(cutoff + 1);
    const std::size_t nr = rows.size();
    const std::size_t n_alpha = static_cast<std::size_t>(cutoff) + 1, n_beta = n_alpha;
    const std::size_t nc = chis.size() + n_alpha + n_beta;

    // rows [0, nr) are gamma_f monomials, [nr, 2 nr) gamma_g monomials
    Matrix a(2 * nr, nc);
    auto put = [&](std::size_t block, const W1Poly& v, std::size_t col, const Rational& sign) {
        for (const auto& [k, c] : v.terms()) a(block * nr + row_of.at(k), col) += sign * c;
    };
    for (std::size_t c = 0; c < chis.size(); ++c) {
        const W1Poly chi = W1Poly::monomial(chis[c].first, chis[c].second);
        put(0, weyl::commutator(chi, kX), c, Rational(-1));
        put(1, weyl::commutator(chi, kY), c, Rational(-1));
    }
    for (std::size_t i = 0; i < n_alpha; ++i) a(row_of.at({static_cast<int>(i), 0}), chis.size() + i) = Rational(1);
    for (std::size_t j = 0; j < n_beta; ++j)
        a(nr + row_of.at({0, static_cast<int>(j)}), chis.size() + n_alpha + j) = Rational(1);
    std::vector<Rational> rhs(2 * nr);
    for (const auto& [k, c] : p.terms()) rhs[nr + row_of.at(k)] = c;

    MembershipResult r;
    r.unknowns = nc;
    r.equations = 2 * nr;
    if (auto sol = solve(a, rhs)) {
        GaugeDatum g;
        for (std::size_t c = 0; c < chis.size(); ++c) g.chi.add_term(chis[c].first, chis[c].second, (*sol)[c]);
        for (std::size_t i = 0; i < n_alpha; ++i) g.alpha.add_term(static_cast<int>(i), 0, (*sol)[chis.size() + i]);
        for (std::size_t j = 0; j < n_beta; ++j) g.beta.add_term(0, static_cast<int>(j), (*sol)[chis.size() + n_alpha + j]);
        r.is_coboundary = true;
        r.witness = std::move(g);
        return r;
    }
    const auto w = infeasibility_certificate(a, rhs);
    if (!w) throw Error("linear system neither solvable nor certified infeasible");
    for (std::size_t k = 0; k < w->size(); ++k) {
        if ((*w)[k].is_zero()) continue;
        const auto& m = rows[k % nr];
        r.certificate.push_back({{k < nr ? 'F' : 'G', m.first, m.second}, (*w)[k]});
    }
    r.pairing = dot(*w, rhs);
    return r;
}

ReduceResult reduce(const W1Cocycle& g, int cutoff) {
    if (cutoff < 0) throw CutoffTooSmall("cutoff must be non-negative");
    require_within(g.gamma_f, cutoff);
    require_within(g.gamma_g, cutoff);
    ReduceResult r;
    r.killed = kill_gamma_f(g);
    const W1Poly& gg = r.killed.cocycle.gamma_g;

    // gauge moves that keep gamma_f = 0: beta = y^j, chi = x^i, chi = x^i y
    const auto cols = graded_monomials(cutoff);
    const auto col_of = index_map(cols);
    std::vector<W1Poly> gens;
    for (int j = 0; j <= cutoff; ++j) gens.push_back(W1Poly::monomial(0, j));
    for (int i = 1; i <= cutoff + 1; ++i) gens.push_back(weyl::commutator(W1Poly::monomial(i, 0), kY));
    for (int i = 1; i <= cutoff; ++i) gens.push_back(weyl::commutator(W1Poly::monomial(i, 1), kY));
    Matrix m(gens.size(), cols.size());
    for (std::size_t k = 0; k < gens.size(); ++k)
        for (const auto& [mono, c] : gens[k].terms()) m(k, col_of.at(mono)) = c;
    const Echelon e = row_reduce(m);

    std::vector<Rational> v(cols.size());
    for (const auto& [mono, c] : gg.terms()) v[col_of.at(mono)] = c;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
        const Rational f = v[e.pivots[k]];
        if (f.is_zero()) continue;
        for (std::size_t c = 0; c < cols.size(); ++c) v[c] -= f * e.reduced(k, c);
    }
    for (std::size_t c = 0; c < cols.size(); ++c) r.representative.add_term(cols[c].first, cols[c].second, v[c]);
    r.is_zero = r.representative.is_zero();
    r.oracle_accepts = membership_oracle(gg, cutoff).is_coboundary;
    r.consistent = r.is_zero == r.oracle_accepts;
    return r;
}

CentralizerReport centralizer_check(int maxdeg) {
    if (maxdeg < 1) throw InvalidParameter("maxdeg must be positive");
    CentralizerReport rep;
    rep.maxdeg = maxdeg;
    const auto src = graded_monomials(maxdeg);
    const auto dst = graded_monomials(maxdeg);
    const auto dst_of = index_map(dst);
    Matrix ad(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        const W1Poly image = weyl::commutator(W1Poly::monomial(src[c].first, src[c].second), kX);
        for (const auto& [k, v] : image.terms()) ad(dst_of.at(k), c) = v;
    }

    auto span_equals = [&](const std::vector<std::vector<Rational>>& basis, auto member) {
        // dimension match plus every basis vector supported on the claimed monomials
        std::size_t claimed = 0;
        for (const auto& s : src)
            if (member(s)) ++claimed;
        if (basis.size() != claimed) return false;
        for (const auto& b : basis)
            for (std::size_t c = 0; c < src.size(); ++c)
                if (!b[c].is_zero() && !member(src[c])) return false;
        return true;
    };
    rep.kernel_is_kx = span_equals(null_space(ad), [](const std::pair<int, int>& m) { return m.second == 0; });

    // preimage of k[x]: kernel of ad followed by projection onto non-k[x] monomials
    std::vector<std::size_t> off;
    for (std::size_t r = 0; r < dst.size(); ++r)
        if (dst[r].second != 0) off.push_back(r);
    Matrix proj(off.size(), src.size());
    for (std::size_t r = 0; r < off.size(); ++r)
        for (std::size_t c = 0; c < src.size(); ++c) proj(r, c) = ad(off[r], c);
    rep.preimage_is_kx_plus_kxy = span_equals(null_space(proj), [](const std::pair<int, int>& m) { return m.second <= 1; });
    return rep;
}

BasisReport basis_report(int cutoff) {
    if (cutoff < 3) throw InvalidParameter("basis report needs cutoff >= 3");
    BasisReport rep;
    rep.cutoff = cutoff;
    bool all_x_powers_trivial = true;
    for (const auto& [i, j] : graded_monomials(cutoff)) {
        BasisRow row{i, j};
        row.survivor = !membership_oracle(W1Poly::monomial(i, j), cutoff).is_coboundary;
        row.printed_claim = i > 0 && (j == 0 || j >= 2);
        row.hand_claim = i >= 1 && j >= 2;
        row.agrees_printed = row.survivor == row.printed_claim;
        row.agrees_hand = row.survivor == row.hand_claim;
        if (row.survivor) rep.survivors.emplace_back(i, j);
        if (!row.agrees_printed) rep.printed_conflicts.emplace_back(i, j);
        if (!row.agrees_hand) rep.hand_conflicts.emplace_back(i, j);
        if (i > 0 && j == 0 && row.survivor) all_x_powers_trivial = false;
        rep.rows.push_back(row);
    }
    std::reverse(rep.rows.begin(), rep.rows.end());
    std::reverse(rep.survivors.begin(), rep.survivors.end());
    std::reverse(rep.printed_conflicts.begin(), rep.printed_conflicts.end());
    std::reverse(rep.hand_conflicts.begin(), rep.hand_conflicts.end());
    rep.x_power_family_conflict = all_x_powers_trivial;
    int best = -1;
    for (const auto& [i, j] : rep.survivors) {
        if (i - j != -1) continue;
        if (best < 0 || i + j < best) {
            best = i + j;
            rep.minimal_degree_minus_one.clear();
        }
        if (i + j == best) rep.minimal_degree_minus_one.emplace_back(i, j);
    }
    return rep;
}

}  // namespace diagdef::w1
