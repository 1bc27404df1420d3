#include "diagdef/scalar/series.hpp"

namespace diagdef {

TruncSeries<Rational> exp_hbar(int order) {
    std::vector<Rational> c;
    for (int n = 0; n <= order; ++n) c.push_back(factorial(static_cast<unsigned>(n)).inverse());
    return TruncSeries<Rational>(order, std::move(c));
}

TruncSeries<Rational> series_expand(const RatHbar& f, int order) {
    if (order < 0) throw InvalidParameter("negative series order");
    if (f.is_zero()) return TruncSeries<Rational>::zero(order);
    const long vn = f.numerator().valuation();
    const long vd = f.denominator().valuation();
    if (vn < vd) throw PoleAtZero(f.to_string() + " has a pole of order " + std::to_string(vd - vn) + " at hbar = 0");
    const auto num = f.numerator().shift_down(static_cast<std::size_t>(vd));
    const auto den = f.denominator().shift_down(static_cast<std::size_t>(vd));
    const Rational d0_inv = den.coeff(0).inverse();
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        Rational acc = num.coeff(static_cast<std::size_t>(k));
        for (int j = 1; j <= k && j <= den.degree(); ++j)
            acc -= den.coeff(static_cast<std::size_t>(j)) * c[static_cast<std::size_t>(k - j)];
        c[static_cast<std::size_t>(k)] = acc * d0_inv;
    }
    return TruncSeries<Rational>(order, std::move(c));
}

}  // namespace diagdef
