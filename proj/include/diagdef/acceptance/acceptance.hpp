#pragma once

#include "diagdef/weyl/pseudopoly.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace diagdef::acceptance {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;  ///< deterministic text; never timings
};

struct CriterionResult {
    int id = 0;
    std::string key;
    std::string title;
    std::vector<Check> checks;
    bool pass = false;
};

struct Criterion {
    int id;
    std::string key;
    std::string title;
    std::vector<std::string> tags;
    std::function<CriterionResult(std::uint64_t seed)> run;
};

const std::vector<Criterion>& criteria();

/// Criteria whose key or tags contain filter (all when empty), in id order.
std::vector<CriterionResult> run(const std::string& filter, std::uint64_t seed);

CriterionResult groebner_reproduction();
CriterionResult sphere_h2();
CriterionResult geometric_series();
CriterionResult weyl_isomorphism();
CriterionResult gz_identity();
CriterionResult star_products(std::uint64_t seed);
CriterionResult qweyl_identities();

using QMultiply = std::function<weyl::QPoly(const weyl::QPoly&, const weyl::QPoly&)>;
using HbarMultiply = std::function<weyl::HbarQPoly(const weyl::HbarQPoly&, const weyl::HbarQPoly&)>;

/// Word products by the given multiplications against free-word rewriting.
/// Defaults are the library's fast products.
CriterionResult rewriting_equivalence(std::uint64_t seed, QMultiply q_mul = {}, HbarMultiply h_mul = {});

CriterionResult diagram_machinery(std::uint64_t seed);
CriterionResult w1_reduction(std::uint64_t seed);

}  // namespace diagdef::acceptance
