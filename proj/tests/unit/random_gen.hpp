#pragma once

// Seeded generators shared by the property-style unit tests.

#include "diagdef/scalar/ratfunc.hpp"

#include <random>

namespace diagdef::testing {

inline Rational small_rational(std::mt19937_64& rng, int range = 5) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, range);
    return Rational(num(rng), den(rng));
}

template <class Var>
UniPoly<Var> small_poly(std::mt19937_64& rng, int max_degree = 3) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = small_rational(rng);
    return UniPoly<Var>(std::move(c));
}

template <class Var>
RatFunc<Var> small_ratfunc(std::mt19937_64& rng, int max_degree = 2) {
    UniPoly<Var> den;
    while (den.is_zero()) den = small_poly<Var>(rng, max_degree);
    return RatFunc<Var>(small_poly<Var>(rng, max_degree), den);
}

}  // namespace diagdef::testing
