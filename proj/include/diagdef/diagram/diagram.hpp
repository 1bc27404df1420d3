#pragma once

#include "diagdef/scalar/linalg.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace diagdef::diagram {

using Vec = std::vector<Rational>;

/// A finite category given by objects, non-identity arrows and a complete
/// composition table. Identities are added automatically as "id_<object>"
/// and occupy morphism indices 0..objects-1.
class SmallCategory {
public:
    struct Morphism {
        std::string name;
        int dom = 0;
        int cod = 0;
        bool identity = false;
    };

    /// compositions lists (g, f, g o f) by morphism name for every composable
    /// pair of non-identity arrows. Throws InvalidCategory on any violation.
    SmallCategory(std::vector<std::string> objects, std::vector<Morphism> arrows,
                  const std::vector<std::tuple<std::string, std::string, std::string>>& compositions);

    /// Objects 0..n-1 with an arrow i -> j whenever i <= j in the order
    /// generated by the given strict relations.
    static SmallCategory from_poset(int n, const std::vector<std::pair<int, int>>& less_than);

    int object_count() const { return static_cast<int>(objects_.size()); }
    int morphism_count() const { return static_cast<int>(morphisms_.size()); }
    const std::vector<std::string>& objects() const { return objects_; }
    const Morphism& morphism(int m) const { return morphisms_.at(static_cast<std::size_t>(m)); }
    const std::vector<Morphism>& morphisms() const { return morphisms_; }
    int identity(int object) const { return object; }
    int find_morphism(const std::string& name) const;
    int find_object(const std::string& name) const;

    /// g o f for f : a -> b, g : b -> c.
    int compose(int g, int f) const;

private:
    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::map<std::pair<int, int>, int> table_;
};

/// i0 -> i1 -> ... -> iq through non-identity arrows; q = arrows.size().
struct Simplex {
    std::vector<int> objects;
    std::vector<int> arrows;

    int dim() const { return static_cast<int>(arrows.size()); }
    int dom() const { return objects.front(); }
    int cod() const { return objects.back(); }
    friend bool operator==(const Simplex&, const Simplex&) = default;
};

class Nerve {
public:
    Nerve(const SmallCategory& c, int maxdim);

    int maxdim() const { return static_cast<int>(simplices_.size()) - 1; }
    const std::vector<Simplex>& simplices(int q) const { return simplices_.at(static_cast<std::size_t>(q)); }
    std::size_t count(int q) const { return q < 0 || q > maxdim() ? 0 : simplices(q).size(); }
    int index_of(const Simplex& s) const;

    /// r-th face, or nullopt when an inner composite is an identity.
    std::optional<Simplex> face(const Simplex& s, int r) const;

    /// Matrix of the boundary C_q -> C_(q-1), rows indexed by (q-1)-simplices.
    Matrix boundary(int q) const;

    std::string describe(const Simplex& s) const;

private:
    const SmallCategory* cat_;
    std::vector<std::vector<Simplex>> simplices_;
    std::vector<std::map<std::vector<int>, int>> index_;
};

Nerve nerve(const SmallCategory& c, int maxdim);

/// Dimensions of H^0..H^maxdim of the nerve with rational coefficients.
std::vector<std::size_t> simplicial_cohomology(const SmallCategory& c, int maxdim);

/// Finite-dimensional unital associative algebra over Q by structure constants.
class ToyAlgebra {
public:
    /// table[i][j] is e_i e_j. Throws InvalidAlgebra unless associative and unital.
    ToyAlgebra(std::vector<std::vector<Vec>> table, Vec unit, std::string name = "");

    static ToyAlgebra ground();
    static ToyAlgebra split(int n);          ///< Q^n with orthogonal idempotents
    static ToyAlgebra dual_numbers();        ///< Q[e]/(e^2)
    static ToyAlgebra upper_triangular2();   ///< basis E11, E12, E22

    int dim() const { return static_cast<int>(unit_.size()); }
    const Vec& unit() const { return unit_; }
    const Vec& basis_product(int i, int j) const {
        return table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    Vec multiply(const Vec& a, const Vec& b) const;
    Vec basis(int i) const;
    const std::string& name() const { return name_; }

private:
    std::vector<std::vector<Vec>> table_;
    Vec unit_;
    std::string name_;
};

/// m is a unit-preserving multiplicative map src -> dst (dim dst x dim src).
bool is_algebra_map(const Matrix& m, const ToyAlgebra& src, const ToyAlgebra& dst);

/// Contravariant functor: arrow u : i -> j gives maps[u] : A(j) -> A(i).
class DiagramOfAlgebras {
public:
    /// maps has one entry per non-identity arrow, in category order. Throws
    /// InvalidMorphism / InvalidAlgebra when the functor laws fail.
    DiagramOfAlgebras(SmallCategory cat, std::vector<ToyAlgebra> algebras, std::vector<Matrix> arrow_maps);

    const SmallCategory& category() const { return cat_; }
    const ToyAlgebra& algebra(int object) const { return algebras_.at(static_cast<std::size_t>(object)); }
    const Matrix& map(int morphism) const { return maps_.at(static_cast<std::size_t>(morphism)); }
    /// A(f1) o ... o A(fq) : A(c sigma) -> A(d sigma).
    Matrix composite(const Simplex& s) const;

private:
    SmallCategory cat_;
    std::vector<ToyAlgebra> algebras_;
    std::vector<Matrix> maps_;  // indexed by morphism, identities included
};

/// Multilinear map (Q^in)^arity -> Q^out as values on basis tuples.
struct MultiLinear {
    int arity = 0;
    int in_dim = 0;
    int out_dim = 0;
    std::vector<Vec> values;  ///< row-major over basis tuples (first index slowest)

    static MultiLinear zero(int arity, int in_dim, int out_dim);
    std::size_t tuple_count() const { return values.size(); }
    std::vector<int> tuple(std::size_t flat) const;
    const Vec& at(const std::vector<int>& idx) const;
    Vec& at(const std::vector<int>& idx);
    Vec eval(const std::vector<Vec>& args) const;
    bool is_zero() const;
    friend bool operator==(const MultiLinear&, const MultiLinear&) = default;
};

/// Hochschild coboundary of f : A^p -> M where M is an A-bimodule through
/// the algebra map psi : A -> M.
MultiLinear hochschild_coboundary(const MultiLinear& f, const ToyAlgebra& a, const ToyAlgebra& m, const Matrix& psi);

/// Total degree n cochain: one (n-q)-linear map per q-simplex, q <= n.
struct DiagramCochain {
    int degree = 0;
    std::vector<std::vector<MultiLinear>> components;  ///< [q][simplex index]
};

DiagramCochain zero_cochain(const DiagramOfAlgebras& d, const Nerve& n, int degree);
DiagramCochain random_cochain(const DiagramOfAlgebras& d, const Nerve& n, int degree, std::uint64_t seed);
bool is_zero(const DiagramCochain& c);

/// delta_simp + (-1)^q delta_Hoch. The nerve must reach dimension degree+1.
/// Throws ArityMismatch on inconsistent components.
DiagramCochain total_coboundary(const DiagramOfAlgebras& d, const Nerve& n, const DiagramCochain& g);

struct SingleMorphismCoboundary {
    MultiLinear delta_b;
    MultiLinear delta_a;
    MultiLinear delta_phi;  ///< T Gamma^B - Gamma^A phi - delta Gamma^phi
    bool cocycle() const { return delta_b.is_zero() && delta_a.is_zero() && delta_phi.is_zero(); }
};

/// phi : B -> A; gamma_b, gamma_a of arity n, gamma_phi : B^(n-1) -> A.
SingleMorphismCoboundary single_morphism_coboundary(const ToyAlgebra& b, const ToyAlgebra& a, const Matrix& phi,
                                                    const MultiLinear& gamma_b, const MultiLinear& gamma_a,
                                                    const MultiLinear& gamma_phi);

/// Category with objects a, b and one arrow u : a -> b, so A(u) = phi : B -> A.
DiagramOfAlgebras one_arrow_diagram(const ToyAlgebra& b, const ToyAlgebra& a, const Matrix& phi);

/// B + A + A phi with (b,a1,a2)(b',a1',a2') = (bb', a1a1', a1a2' + a2 phi(b')).
struct SingleMorphismAlgebra {
    ToyAlgebra algebra;
    int b_dim = 0;
    int a_dim = 0;
    /// Left action on B + A by [[b, 0], [a2 phi, a1]], one matrix per basis element.
    std::vector<Matrix> representation;
    bool representation_faithful = false;
    bool representation_multiplicative = false;
};

/// Throws InvalidMorphism unless phi is a unital algebra map.
SingleMorphismAlgebra diagram_algebra(const ToyAlgebra& b, const ToyAlgebra& a, const Matrix& phi);

struct TriangleReport {
    bool identity_holds = false;     ///< beta G^alpha + G^beta alpha == G^theta
    bool theta_zero = false;
    bool opposite_composites = false;  ///< beta G^alpha == -G^beta alpha
};

/// alpha : W -> V, beta : V -> U; gammas are linear maps of matching shapes.
TriangleReport triangle_check(const Matrix& gamma_alpha, const Matrix& gamma_beta, const Matrix& gamma_theta,
                              const Matrix& alpha, const Matrix& beta);

/// Two objects with two parallel arrows.
SmallCategory parallel_arrows_category();
/// Objects B, A, C with arrows B -> A <- C.
SmallCategory cospan_category();

/// Small diagrams over Q, Q^2, Q[e]/e^2 and T2 with at most three objects:
/// one arrow, parallel arrows, a 3-chain, a cospan and Z/2 acting by swap.
std::vector<DiagramOfAlgebras> toy_diagrams();

}  // namespace diagdef::diagram
