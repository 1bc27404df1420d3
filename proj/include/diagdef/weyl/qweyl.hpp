#pragma once

#include "diagdef/weyl/pseudopoly.hpp"

#include <optional>
#include <vector>

namespace diagdef::weyl {

struct PochhammerResult {
    QPoly product;  ///< (xy + [n-1]_q) ... (xy + [1]_q) xy
    /// e with product = q^e x^n y^n, when the product has that shape.
    std::optional<int> q_exponent;
};

PochhammerResult pochhammer_xy(int n);

/// Square matrix over Q(q), row-major.
using QMatrix = std::vector<std::vector<RatQ>>;

/// Row k-1 holds the coefficients of (xy)^1..(xy)^n in P_k.
QMatrix stirling_first(int n);
/// Row m-1 holds the coefficients of x^1y^1..x^ny^n in (xy)^m.
QMatrix stirling_second(int n);

QMatrix matrix_product(const QMatrix& a, const QMatrix& b);

struct StirlingInverseReport {
    std::vector<int> q_exponents;  ///< e_k with P_k = q^(e_k) x^k y^k
    QMatrix product;               ///< second * diag(q^-e_k) * first
    bool identity = false;
};

/// The triangles invert each other once x^k y^k and P_k are aligned by the
/// oracle-determined powers q^(e_k).
StirlingInverseReport stirling_inverse_check(int n);

struct CommutatorDivisibility {
    int n = 0;
    QPoly x_yn;        ///< [x, y^n]
    QPoly xn_y;        ///< [x^n, y]
    QPoly x_yn_quotient;
    QPoly xn_y_quotient;
    bool divisible = false;
};

CommutatorDivisibility commutator_divisibility(int n);

/// y^n x = q^n x y^n - [n]_q y^(n-1).
bool check_y_power_shift(int n);
/// q^n x^n y - y x^n = [n]_q x^(n-1).
bool check_x_power_shift(int n);

}  // namespace diagdef::weyl
