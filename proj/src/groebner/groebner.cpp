#include "diagdef/groebner/groebner.hpp"

#include "diagdef/errors.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace diagdef::groebner {

bool Monomial::divides(const Monomial& o) const {
    for (int i = 0; i < kVars; ++i)
        if (e[static_cast<std::size_t>(i)] > o.e[static_cast<std::size_t>(i)]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m;
    for (std::size_t i = 0; i < kVars; ++i) m.e[i] = e[i] + o.e[i];
    return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial m;
    for (std::size_t i = 0; i < kVars; ++i) {
        m.e[i] = e[i] - o.e[i];
        if (m.e[i] < 0) throw InvalidParameter("monomial quotient with a negative exponent");
    }
    return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kVars; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
    return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kVars; ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

std::string Monomial::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < kVars; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += kVarNames[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

bool degrevlex_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = kVars - 1; i >= 0; --i) {
        const auto k = static_cast<std::size_t>(i);
        if (a.e[k] != b.e[k]) return a.e[k] > b.e[k];
    }
    return false;
}

MultiPoly MultiPoly::term(const Monomial& m, const Scalar& c) {
    MultiPoly p;
    p.add_term(m, c);
    return p;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw InvalidParameter("zero polynomial has no leading monomial");
    return terms_.begin()->first;
}

const Scalar& MultiPoly::leading_coefficient() const {
    if (terms_.empty()) throw InvalidParameter("zero polynomial has no leading coefficient");
    return terms_.begin()->second;
}

Scalar MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return leading_coefficient().inverse() * *this;
}

MultiPoly MultiPoly::primitive() const {
    using P = UniPoly<LambdaVar>;
    if (is_zero()) return *this;
    P den(1);
    for (const auto& [m, c] : terms_) den = exact_div(den * c.denominator(), gcd(den, c.denominator()));
    P content;
    for (const auto& [m, c] : terms_) content = gcd(content, exact_div(c.numerator() * den, c.denominator()));
    MultiPoly p = Scalar(den, content) * *this;
    // Fix the remaining rational scale by making the leading coefficient monic in lambda.
    return Scalar(p.leading_coefficient().numerator().leading().inverse()) * p;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::times_term(const Monomial& m, const Scalar& c) const {
    MultiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [n, d] : terms_) r.terms_.emplace(n * m, d * c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [m, c] : a.terms_) r += b.times_term(m, c);
    return r;
}

MultiPoly operator*(const Scalar& c, const MultiPoly& a) { return a.times_term(Monomial{}, c); }

MultiPoly MultiPoly::specialize(const Rational& value) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.add_term(m, Scalar(diagdef::specialize(c, value)));
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        const bool unit = m == Monomial{};
        if (c.is_one() && !unit) out += m.to_string();
        else if (unit) out += "(" + c.to_string() + ")";
        else out += "(" + c.to_string() + ")*" + m.to_string();
    }
    return out;
}

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& g, MonomialOrder) {
    MultiPoly rest = p, rem;
    while (!rest.is_zero()) {
        const Monomial m = rest.leading_monomial();
        const Scalar c = rest.leading_coefficient();
        const MultiPoly* divisor = nullptr;
        for (const auto& q : g)
            if (!q.is_zero() && q.leading_monomial().divides(m)) {
                divisor = &q;
                break;
            }
        if (divisor) {
            rest -= divisor->times_term(m / divisor->leading_monomial(), c / divisor->leading_coefficient());
        } else {
            rem.add_term(m, c);
            rest.add_term(m, -c);
        }
    }
    return rem;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
    const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    return f.times_term(l / f.leading_monomial(), f.leading_coefficient().inverse()) -
           g.times_term(l / g.leading_monomial(), g.leading_coefficient().inverse());
}

GroebnerRun buchberger(const std::vector<MultiPoly>& generators, MonomialOrder ord) {
    GroebnerRun run;
    std::vector<MultiPoly> g;
    auto log_pivot = [&](const MultiPoly& p) {
        if (!p.leading_coefficient().is_constant()) run.pivot_log.push_back(p.leading_coefficient());
    };
    for (const auto& f : generators) {
        if (f.is_zero()) throw InvalidParameter("zero generator");
        log_pivot(f);
        g.push_back(f.monic());
    }
    using Key = std::pair<std::size_t, std::size_t>;
    std::set<Key> pending;
    auto add_pairs_for = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            pending.insert({i, k});
            ++run.stats.pairs_created;
        }
    };
    for (std::size_t k = 1; k < g.size(); ++k) add_pairs_for(k);

    auto pair_lcm = [&](const Key& p) { return lcm(g[p.first].leading_monomial(), g[p.second].leading_monomial()); };
    auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

    while (!pending.empty()) {
        // Normal strategy: smallest lcm first, ties broken by the pair indices.
        auto best = pending.begin();
        Monomial best_l = pair_lcm(*best);
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            const Monomial l = pair_lcm(*it);
            if (degrevlex_less(l, best_l)) {
                best = it;
                best_l = l;
            }
        }
        const Key p = *best;
        pending.erase(best);
        const Monomial& li = g[p.first].leading_monomial();
        const Monomial& lj = g[p.second].leading_monomial();
        if (coprime(li, lj)) {
            ++run.stats.skipped_coprime;
            continue;
        }
        bool chain = false;
        for (std::size_t k = 0; k < g.size() && !chain; ++k) {
            if (k == p.first || k == p.second) continue;
            chain = g[k].leading_monomial().divides(best_l) && !is_pending(p.first, k) && !is_pending(p.second, k);
        }
        if (chain) {
            ++run.stats.skipped_chain;
            continue;
        }
        const MultiPoly r = normal_form(s_polynomial(g[p.first], g[p.second]), g, ord);
        if (r.is_zero()) {
            ++run.stats.reduced_to_zero;
            continue;
        }
        log_pivot(r);
        g.push_back(r.monic());
        ++run.stats.basis_additions;
        add_pairs_for(g.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial is divisible by another's.
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j || !g[j].leading_monomial().divides(g[i].leading_monomial())) continue;
            redundant = !(g[j].leading_monomial() == g[i].leading_monomial()) || j < i;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    // Interreduce tails.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = normal_form(minimal[i], others, ord).monic();
    }
    std::sort(minimal.begin(), minimal.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return degrevlex_less(a.leading_monomial(), b.leading_monomial());
    });
    run.basis = std::move(minimal);
    for (const auto& b : run.basis) run.pre_monic_leads.push_back(b.primitive().leading_coefficient());
    return run;
}

std::vector<Monomial> leading_monomials(const std::vector<MultiPoly>& g) {
    std::vector<Monomial> out;
    for (const auto& p : g) out.push_back(p.leading_monomial());
    return out;
}

std::vector<Monomial> standard_monomials(const std::vector<MultiPoly>& g, int maxdeg) {
    if (maxdeg < 0) throw InvalidParameter("maxdeg must be non-negative");
    const auto leads = leading_monomials(g);
    std::vector<Monomial> out;
    Monomial m;
    for (m.e[0] = 0; m.e[0] <= maxdeg; ++m.e[0])
        for (m.e[1] = 0; m.e[0] + m.e[1] <= maxdeg; ++m.e[1])
            for (m.e[2] = 0; m.e[0] + m.e[1] + m.e[2] <= maxdeg; ++m.e[2])
                for (m.e[3] = 0; m.degree() <= maxdeg; ++m.e[3]) {
                    if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); }))
                        out.push_back(m);
                }
    std::sort(out.begin(), out.end(), degrevlex_less);
    return out;
}

ExceptionalValues exceptional_values(const std::vector<MultiPoly>& g, const std::vector<Scalar>& pre_monic_leads) {
    using P = UniPoly<LambdaVar>;
    std::vector<P> polys;
    for (const auto& p : g)
        for (const auto& [m, c] : p.terms())
            if (c.denominator().degree() > 0) polys.push_back(c.denominator());
    for (const auto& c : pre_monic_leads) {
        if (c.numerator().degree() > 0) polys.push_back(c.numerator());
        if (c.denominator().degree() > 0) polys.push_back(c.denominator());
    }
    ExceptionalValues out;
    std::set<Rational> roots;
    for (P p : polys) {
        for (const auto& r : rational_roots(p)) {
            roots.insert(r);
            const P lin({-r, Rational(1)});
            while (divmod(p, lin).second.is_zero()) p = exact_div(p, lin);
        }
        if (p.degree() > 0) {
            p = p.monic();
            if (std::find(out.other_factors.begin(), out.other_factors.end(), p) == out.other_factors.end())
                out.other_factors.push_back(p);
        }
    }
    out.values.assign(roots.begin(), roots.end());
    return out;
}

std::vector<MultiPoly> punctured_sphere_ideal() {
    const MultiPoly x = MultiPoly::var(0), y = MultiPoly::var(1), z = MultiPoly::var(2), w = MultiPoly::var(3);
    const MultiPoly one(1), lam(Scalar::var());
    return {x * y - one, (x - one) * z - one, (x - lam) * w - one};
}

DeformationWitness deformation_witness(const Rational& lambda0) {
    DeformationWitness dw;
    dw.lambda0 = lambda0;
    const auto gens = punctured_sphere_ideal();
    const GroebnerRun generic = buchberger(gens);
    dw.exceptional = exceptional_values(generic.basis, generic.pre_monic_leads).values;
    dw.verdict = std::find(dw.exceptional.begin(), dw.exceptional.end(), lambda0) == dw.exceptional.end()
                     ? Verdict::FixedBasis
                     : Verdict::Exceptional;
    dw.generic_leads = leading_monomials(generic.basis);

    std::vector<MultiPoly> spec_gens;
    for (const auto& f : gens) spec_gens.push_back(f.specialize(lambda0));
    const GroebnerRun special = buchberger(spec_gens);
    dw.specialized_leads = leading_monomials(special.basis);
    dw.leads_match = dw.specialized_leads == dw.generic_leads;
    try {
        std::vector<MultiPoly> image;
        for (const auto& b : generic.basis) image.push_back(b.specialize(lambda0));
        dw.specialization_commutes = image == special.basis;
    } catch (const PoleAtPoint&) {
        dw.specialization_commutes = false;
    }
    return dw;
}

const char* verdict_name(Verdict v) { return v == Verdict::FixedBasis ? "FIXED_BASIS" : "EXCEPTIONAL"; }

}  // namespace diagdef::groebner
