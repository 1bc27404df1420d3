#include "diagdef/diagram/diagram.hpp"

#include "diagdef/errors.hpp"

#include <random>
#include <set>

namespace diagdef::diagram {

namespace {

Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n)); }

void axpy(Vec& y, const Rational& a, const Vec& x) {
    if (a.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

bool vec_zero(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

// ---------------------------------------------------------------- category

SmallCategory::SmallCategory(std::vector<std::string> objects, std::vector<Morphism> arrows,
                             const std::vector<std::tuple<std::string, std::string, std::string>>& compositions)
    : objects_(std::move(objects)) {
    if (objects_.empty()) throw InvalidCategory("category needs at least one object");
    const int n = object_count();
    std::set<std::string> names;
    for (const auto& o : objects_)
        if (!names.insert(o).second) throw InvalidCategory("duplicate object " + o);
    names.clear();
    for (int i = 0; i < n; ++i) {
        morphisms_.push_back({"id_" + objects_[static_cast<std::size_t>(i)], i, i, true});
        names.insert(morphisms_.back().name);
    }
    for (auto a : arrows) {
        if (a.dom < 0 || a.dom >= n || a.cod < 0 || a.cod >= n) throw InvalidCategory("arrow " + a.name + " has bad endpoints");
        if (!names.insert(a.name).second) throw InvalidCategory("duplicate morphism " + a.name);
        a.identity = false;
        morphisms_.push_back(std::move(a));
    }
    const int m = morphism_count();
    for (int f = 0; f < m; ++f) {
        const auto& mf = morphisms_[static_cast<std::size_t>(f)];
        table_[{f, identity(mf.dom)}] = f;
        table_[{identity(mf.cod), f}] = f;
    }
    for (const auto& [gn, fn, gfn] : compositions) {
        const int g = find_morphism(gn), f = find_morphism(fn), gf = find_morphism(gfn);
        if (g < 0 || f < 0 || gf < 0) throw InvalidCategory("composition names unknown morphism");
        const auto &mg = morphism(g), &mf = morphism(f), &mgf = morphism(gf);
        if (mf.cod != mg.dom) throw InvalidCategory(gn + " o " + fn + " is not composable");
        if (mgf.dom != mf.dom || mgf.cod != mg.cod) throw InvalidCategory(gfn + " has the wrong endpoints");
        auto [it, inserted] = table_.emplace(std::pair{g, f}, gf);
        if (!inserted && it->second != gf) throw InvalidCategory("conflicting composition for " + gn + " o " + fn);
    }
    for (int f = 0; f < m; ++f)
        for (int g = 0; g < m; ++g)
            if (morphisms_[static_cast<std::size_t>(f)].cod == morphisms_[static_cast<std::size_t>(g)].dom &&
                !table_.count({g, f}))
                throw InvalidCategory("missing composition " + morphisms_[static_cast<std::size_t>(g)].name + " o " +
                                      morphisms_[static_cast<std::size_t>(f)].name);
    for (int f = 0; f < m; ++f)
        for (int g = 0; g < m; ++g) {
            if (morphism(f).cod != morphism(g).dom) continue;
            for (int h = 0; h < m; ++h) {
                if (morphism(g).cod != morphism(h).dom) continue;
                if (compose(h, compose(g, f)) != compose(compose(h, g), f))
                    throw InvalidCategory("composition is not associative at " + morphism(h).name + ", " +
                                          morphism(g).name + ", " + morphism(f).name);
            }
        }
}

SmallCategory SmallCategory::from_poset(int n, const std::vector<std::pair<int, int>>& less_than) {
    if (n < 1) throw InvalidCategory("poset needs at least one element");
    std::vector<std::vector<bool>> le(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) le[i][i] = true;
    for (auto [i, j] : less_than) {
        if (i < 0 || j < 0 || i >= n || j >= n) throw InvalidCategory("relation out of range");
        le[i][j] = true;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (le[i][k] && le[k][j]) le[i][j] = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (le[i][j] && le[j][i]) throw InvalidCategory("relations contain a cycle");
    auto name = [](int i, int j) { return std::to_string(i) + "<" + std::to_string(j); };
    std::vector<std::string> objects;
    for (int i = 0; i < n; ++i) objects.push_back(std::to_string(i));
    std::vector<Morphism> arrows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && le[i][j]) arrows.push_back({name(i, j), i, j, false});
    std::vector<std::tuple<std::string, std::string, std::string>> comp;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (i != j && j != k && le[i][j] && le[j][k]) comp.emplace_back(name(j, k), name(i, j), name(i, k));
    return SmallCategory(std::move(objects), std::move(arrows), comp);
}

int SmallCategory::find_morphism(const std::string& name) const {
    for (int i = 0; i < morphism_count(); ++i)
        if (morphisms_[static_cast<std::size_t>(i)].name == name) return i;
    return -1;
}

int SmallCategory::find_object(const std::string& name) const {
    for (int i = 0; i < object_count(); ++i)
        if (objects_[static_cast<std::size_t>(i)] == name) return i;
    return -1;
}

int SmallCategory::compose(int g, int f) const {
    auto it = table_.find({g, f});
    if (it == table_.end()) throw InvalidCategory("morphisms are not composable");
    return it->second;
}

SmallCategory parallel_arrows_category() {
    return SmallCategory({"B", "A"}, {{"u", 1, 0, false}, {"v", 1, 0, false}}, {});
}

SmallCategory cospan_category() {
    return SmallCategory({"B", "A", "C"}, {{"b", 0, 1, false}, {"c", 2, 1, false}}, {});
}

// ---------------------------------------------------------------- nerve

Nerve::Nerve(const SmallCategory& c, int maxdim) : cat_(&c) {
    if (maxdim < 0) throw InvalidParameter("maxdim must be non-negative");
    simplices_.resize(static_cast<std::size_t>(maxdim) + 1);
    index_.resize(simplices_.size());
    for (int o = 0; o < c.object_count(); ++o) {
        index_[0][{o}] = o;
        simplices_[0].push_back({{o}, {}});
    }
    for (int q = 1; q <= maxdim; ++q) {
        for (const auto& s : simplices_[static_cast<std::size_t>(q - 1)])
            for (int f = 0; f < c.morphism_count(); ++f) {
                const auto& m = c.morphism(f);
                if (m.identity || m.dom != s.cod()) continue;
                Simplex t = s;
                t.arrows.push_back(f);
                t.objects.push_back(m.cod);
                index_[static_cast<std::size_t>(q)][t.arrows] = static_cast<int>(simplices_[static_cast<std::size_t>(q)].size());
                simplices_[static_cast<std::size_t>(q)].push_back(std::move(t));
            }
    }
}

int Nerve::index_of(const Simplex& s) const {
    const auto& idx = index_.at(static_cast<std::size_t>(s.dim()));
    auto it = idx.find(s.dim() == 0 ? s.objects : s.arrows);
    return it == idx.end() ? -1 : it->second;
}

std::optional<Simplex> Nerve::face(const Simplex& s, int r) const {
    const int q = s.dim();
    if (q == 0 || r < 0 || r > q) throw InvalidParameter("face index out of range");
    Simplex t;
    for (int i = 0; i <= q; ++i)
        if (i != r) t.objects.push_back(s.objects[static_cast<std::size_t>(i)]);
    if (r == 0) t.arrows.assign(s.arrows.begin() + 1, s.arrows.end());
    else if (r == q) t.arrows.assign(s.arrows.begin(), s.arrows.end() - 1);
    else {
        for (int i = 0; i < q; ++i) {
            if (i == r - 1) {
                const int comp = cat_->compose(s.arrows[static_cast<std::size_t>(r)], s.arrows[static_cast<std::size_t>(r - 1)]);
                if (cat_->morphism(comp).identity) return std::nullopt;
                t.arrows.push_back(comp);
                ++i;
            } else {
                t.arrows.push_back(s.arrows[static_cast<std::size_t>(i)]);
            }
        }
    }
    return t;
}

Matrix Nerve::boundary(int q) const {
    if (q < 1 || q > maxdim()) throw InvalidParameter("boundary degree out of range");
    Matrix m(count(q - 1), count(q));
    const auto& sq = simplices(q);
    for (std::size_t j = 0; j < sq.size(); ++j)
        for (int r = 0; r <= q; ++r) {
            auto f = face(sq[j], r);
            if (!f) continue;
            m(static_cast<std::size_t>(index_of(*f)), j) += Rational(r % 2 ? -1 : 1);
        }
    return m;
}

std::string Nerve::describe(const Simplex& s) const {
    std::string out = cat_->objects()[static_cast<std::size_t>(s.objects[0])];
    for (std::size_t i = 0; i < s.arrows.size(); ++i)
        out += " -" + cat_->morphism(s.arrows[i]).name + "-> " + cat_->objects()[static_cast<std::size_t>(s.objects[i + 1])];
    return out;
}

Nerve nerve(const SmallCategory& c, int maxdim) { return Nerve(c, maxdim); }

std::vector<std::size_t> simplicial_cohomology(const SmallCategory& c, int maxdim) {
    const Nerve n(c, maxdim + 1);
    // coboundary C^q -> C^(q+1) is the transpose of the boundary, same rank
    std::vector<std::size_t> ranks(static_cast<std::size_t>(maxdim) + 2, 0);
    for (int q = 1; q <= maxdim + 1; ++q) ranks[static_cast<std::size_t>(q)] = rank(n.boundary(q));
    std::vector<std::size_t> h;
    for (int q = 0; q <= maxdim; ++q)
        h.push_back(n.count(q) - ranks[static_cast<std::size_t>(q + 1)] - ranks[static_cast<std::size_t>(q)]);
    return h;
}

// ---------------------------------------------------------------- algebras

ToyAlgebra::ToyAlgebra(std::vector<std::vector<Vec>> table, Vec unit, std::string name)
    : table_(std::move(table)), unit_(std::move(unit)), name_(std::move(name)) {
    const int n = dim();
    if (n < 1) throw InvalidAlgebra("algebra needs positive dimension");
    if (static_cast<int>(table_.size()) != n) throw InvalidAlgebra("structure table has the wrong size");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n) throw InvalidAlgebra("structure table has the wrong size");
        for (const auto& v : row)
            if (static_cast<int>(v.size()) != n) throw InvalidAlgebra("structure constant has the wrong length");
    }
    for (int i = 0; i < n; ++i) {
        const Vec e = basis(i);
        if (multiply(unit_, e) != e || multiply(e, unit_) != e) throw InvalidAlgebra("unit fails on basis element " + std::to_string(i));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (multiply(basis_product(i, j), basis(k)) != multiply(basis(i), basis_product(j, k)))
                    throw InvalidAlgebra("not associative at basis triple (" + std::to_string(i) + "," +
                                         std::to_string(j) + "," + std::to_string(k) + ")");
}

Vec ToyAlgebra::basis(int i) const {
    Vec v = zero_vec(dim());
    v.at(static_cast<std::size_t>(i)) = Rational(1);
    return v;
}

Vec ToyAlgebra::multiply(const Vec& a, const Vec& b) const {
    if (static_cast<int>(a.size()) != dim() || static_cast<int>(b.size()) != dim())
        throw TypeMismatch("vector length does not match algebra dimension");
    Vec r = zero_vec(dim());
    for (int i = 0; i < dim(); ++i) {
        if (a[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (b[static_cast<std::size_t>(j)].is_zero()) continue;
            axpy(r, a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)], basis_product(i, j));
        }
    }
    return r;
}

ToyAlgebra ToyAlgebra::ground() { return ToyAlgebra({{{Rational(1)}}}, {Rational(1)}, "Q"); }

ToyAlgebra ToyAlgebra::split(int n) {
    if (n < 1) throw InvalidParameter("split algebra needs n >= 1");
    std::vector<std::vector<Vec>> t(static_cast<std::size_t>(n), std::vector<Vec>(static_cast<std::size_t>(n), zero_vec(n)));
    for (std::size_t i = 0; i < t.size(); ++i) t[i][i][i] = Rational(1);
    return ToyAlgebra(std::move(t), Vec(static_cast<std::size_t>(n), Rational(1)), "Q^" + std::to_string(n));
}

ToyAlgebra ToyAlgebra::dual_numbers() {
    const Rational o(1), z(0);
    return ToyAlgebra({{{o, z}, {z, o}}, {{z, o}, {z, z}}}, {o, z}, "Q[e]/e^2");
}

ToyAlgebra ToyAlgebra::upper_triangular2() {
    // E11 E12 = E12, E12 E22 = E12, Eii idempotent
    const Rational o(1), z(0);
    const Vec e11{o, z, z}, e12{z, o, z}, e22{z, z, o}, zero{z, z, z};
    return ToyAlgebra({{e11, e12, zero}, {zero, zero, e12}, {zero, zero, e22}}, {o, z, o}, "T2");
}

bool is_algebra_map(const Matrix& m, const ToyAlgebra& src, const ToyAlgebra& dst) {
    if (m.rows() != static_cast<std::size_t>(dst.dim()) || m.cols() != static_cast<std::size_t>(src.dim())) return false;
    if (m * src.unit() != dst.unit()) return false;
    for (int i = 0; i < src.dim(); ++i)
        for (int j = 0; j < src.dim(); ++j)
            if (m * src.basis_product(i, j) != dst.multiply(m.column(static_cast<std::size_t>(i)), m.column(static_cast<std::size_t>(j))))
                return false;
    return true;
}

DiagramOfAlgebras::DiagramOfAlgebras(SmallCategory cat, std::vector<ToyAlgebra> algebras, std::vector<Matrix> arrow_maps)
    : cat_(std::move(cat)), algebras_(std::move(algebras)) {
    if (static_cast<int>(algebras_.size()) != cat_.object_count()) throw InvalidMorphism("one algebra per object required");
    const int objs = cat_.object_count();
    if (static_cast<int>(arrow_maps.size()) != cat_.morphism_count() - objs)
        throw InvalidMorphism("one map per non-identity arrow required");
    for (int o = 0; o < objs; ++o) maps_.push_back(Matrix::identity(static_cast<std::size_t>(algebra(o).dim())));
    for (auto& m : arrow_maps) maps_.push_back(std::move(m));
    for (int f = objs; f < cat_.morphism_count(); ++f) {
        const auto& mf = cat_.morphism(f);
        if (!is_algebra_map(map(f), algebra(mf.cod), algebra(mf.dom)))
            throw InvalidMorphism("image of " + mf.name + " is not a unital algebra map A(cod) -> A(dom)");
    }
    for (int f = 0; f < cat_.morphism_count(); ++f)
        for (int g = 0; g < cat_.morphism_count(); ++g) {
            if (cat_.morphism(f).cod != cat_.morphism(g).dom) continue;
            if (map(cat_.compose(g, f)) != map(f) * map(g))
                throw InvalidMorphism("functor law fails for " + cat_.morphism(g).name + " o " + cat_.morphism(f).name);
        }
}

Matrix DiagramOfAlgebras::composite(const Simplex& s) const {
    Matrix m = Matrix::identity(static_cast<std::size_t>(algebra(s.dom()).dim()));
    for (int f : s.arrows) m = m * map(f);
    return m;
}

// ---------------------------------------------------------------- cochains

MultiLinear MultiLinear::zero(int arity, int in_dim, int out_dim) {
    if (arity < 0 || in_dim < 1 || out_dim < 1) throw InvalidParameter("bad multilinear shape");
    std::size_t n = 1;
    for (int i = 0; i < arity; ++i) n *= static_cast<std::size_t>(in_dim);
    return {arity, in_dim, out_dim, std::vector<Vec>(n, zero_vec(out_dim))};
}

std::vector<int> MultiLinear::tuple(std::size_t flat) const {
    std::vector<int> idx(static_cast<std::size_t>(arity));
    for (int k = arity - 1; k >= 0; --k) {
        idx[static_cast<std::size_t>(k)] = static_cast<int>(flat % static_cast<std::size_t>(in_dim));
        flat /= static_cast<std::size_t>(in_dim);
    }
    return idx;
}

namespace {
std::size_t flatten(const MultiLinear& f, const std::vector<int>& idx) {
    if (static_cast<int>(idx.size()) != f.arity) throw ArityMismatch("wrong number of arguments");
    std::size_t flat = 0;
    for (int i : idx) {
        if (i < 0 || i >= f.in_dim) throw InvalidParameter("basis index out of range");
        flat = flat * static_cast<std::size_t>(f.in_dim) + static_cast<std::size_t>(i);
    }
    return flat;
}
}  // namespace

const Vec& MultiLinear::at(const std::vector<int>& idx) const { return values[flatten(*this, idx)]; }
Vec& MultiLinear::at(const std::vector<int>& idx) { return values[flatten(*this, idx)]; }

Vec MultiLinear::eval(const std::vector<Vec>& args) const {
    if (static_cast<int>(args.size()) != arity) throw ArityMismatch("wrong number of arguments");
    for (const auto& a : args)
        if (static_cast<int>(a.size()) != in_dim) throw TypeMismatch("argument has the wrong dimension");
    Vec out = zero_vec(out_dim);
    for (std::size_t flat = 0; flat < values.size(); ++flat) {
        if (vec_zero(values[flat])) continue;
        const auto idx = tuple(flat);
        Rational c(1);
        for (int k = 0; k < arity && !c.is_zero(); ++k)
            c *= args[static_cast<std::size_t>(k)][static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
        axpy(out, c, values[flat]);
    }
    return out;
}

bool MultiLinear::is_zero() const {
    for (const auto& v : values)
        if (!vec_zero(v)) return false;
    return true;
}

MultiLinear hochschild_coboundary(const MultiLinear& f, const ToyAlgebra& a, const ToyAlgebra& m, const Matrix& psi) {
    if (f.in_dim != a.dim() || f.out_dim != m.dim()) throw TypeMismatch("cochain shape does not match the algebras");
    if (psi.rows() != static_cast<std::size_t>(m.dim()) || psi.cols() != static_cast<std::size_t>(a.dim()))
        throw TypeMismatch("bimodule map has the wrong shape");
    const int p = f.arity;
    MultiLinear out = MultiLinear::zero(p + 1, a.dim(), m.dim());
    for (std::size_t flat = 0; flat < out.tuple_count(); ++flat) {
        const auto idx = out.tuple(flat);
        std::vector<Vec> args;
        for (int i : idx) args.push_back(a.basis(i));
        Vec& v = out.values[flat];
        {
            const std::vector<Vec> rest(args.begin() + 1, args.end());
            axpy(v, Rational(1), m.multiply(psi.column(static_cast<std::size_t>(idx[0])), f.eval(rest)));
        }
        for (int i = 1; i <= p; ++i) {
            std::vector<Vec> merged;
            for (int k = 0; k <= p; ++k) {
                if (k == i - 1) {
                    merged.push_back(a.basis_product(idx[static_cast<std::size_t>(k)], idx[static_cast<std::size_t>(k + 1)]));
                    ++k;
                } else {
                    merged.push_back(args[static_cast<std::size_t>(k)]);
                }
            }
            axpy(v, Rational(i % 2 ? -1 : 1), f.eval(merged));
        }
        {
            const std::vector<Vec> init(args.begin(), args.end() - 1);
            axpy(v, Rational((p + 1) % 2 ? -1 : 1), m.multiply(f.eval(init), psi.column(static_cast<std::size_t>(idx.back()))));
        }
    }
    return out;
}

DiagramCochain zero_cochain(const DiagramOfAlgebras& d, const Nerve& n, int degree) {
    if (degree < 0) throw InvalidParameter("cochain degree must be non-negative");
    if (n.maxdim() < degree) throw InvalidParameter("nerve too short for this degree");
    DiagramCochain c{degree, {}};
    for (int q = 0; q <= degree; ++q) {
        c.components.emplace_back();
        for (const auto& s : n.simplices(q))
            c.components.back().push_back(MultiLinear::zero(degree - q, d.algebra(s.cod()).dim(), d.algebra(s.dom()).dim()));
    }
    return c;
}

DiagramCochain random_cochain(const DiagramOfAlgebras& d, const Nerve& n, int degree, std::uint64_t seed) {
    DiagramCochain c = zero_cochain(d, n, degree);
    std::mt19937_64 rng(mix(seed));
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (auto& row : c.components)
        for (auto& f : row)
            for (auto& v : f.values)
                for (auto& x : v) x = Rational(coeff(rng));
    return c;
}

bool is_zero(const DiagramCochain& c) {
    for (const auto& row : c.components)
        for (const auto& f : row)
            if (!f.is_zero()) return false;
    return true;
}

DiagramCochain total_coboundary(const DiagramOfAlgebras& d, const Nerve& n, const DiagramCochain& g) {
    const int deg = g.degree;
    if (deg < 0) throw InvalidParameter("cochain degree must be non-negative");
    if (n.maxdim() < deg + 1) throw InvalidParameter("nerve must reach dimension degree + 1");
    if (static_cast<int>(g.components.size()) != deg + 1) throw ArityMismatch("cochain has the wrong number of simplicial degrees");
    for (int q = 0; q <= deg; ++q) {
        const auto& row = g.components[static_cast<std::size_t>(q)];
        if (row.size() != n.count(q)) throw ArityMismatch("cochain does not cover every simplex");
        for (std::size_t i = 0; i < row.size(); ++i) {
            const auto& s = n.simplices(q)[i];
            if (row[i].arity != deg - q) throw ArityMismatch("component on " + n.describe(s) + " has arity " +
                                                             std::to_string(row[i].arity) + ", expected " + std::to_string(deg - q));
            if (row[i].in_dim != d.algebra(s.cod()).dim() || row[i].out_dim != d.algebra(s.dom()).dim())
                throw TypeMismatch("component on " + n.describe(s) + " has the wrong shape");
            if (row[i].values.size() != MultiLinear::zero(deg - q, row[i].in_dim, row[i].out_dim).values.size())
                throw ArityMismatch("component on " + n.describe(s) + " has the wrong number of values");
        }
    }
    auto component = [&](const Simplex& s) -> const MultiLinear& {
        return g.components[static_cast<std::size_t>(s.dim())][static_cast<std::size_t>(n.index_of(s))];
    };

    DiagramCochain out = zero_cochain(d, n, deg + 1);
    for (int q = 0; q <= deg + 1; ++q) {
        for (std::size_t si = 0; si < n.count(q); ++si) {
            const Simplex& s = n.simplices(q)[si];
            MultiLinear& res = out.components[static_cast<std::size_t>(q)][si];
            if (q >= 1) {
                const Matrix& t = d.map(s.arrows.front());
                const Matrix& phi = d.map(s.arrows.back());
                for (std::size_t flat = 0; flat < res.tuple_count(); ++flat) {
                    const auto idx = res.tuple(flat);
                    std::vector<Vec> args, pushed;
                    for (int i : idx) {
                        args.push_back(d.algebra(s.cod()).basis(i));
                        pushed.push_back(phi.column(static_cast<std::size_t>(i)));
                    }
                    Vec& v = res.values[flat];
                    axpy(v, Rational(1), t * component(*n.face(s, 0)).eval(args));
                    for (int r = 1; r < q; ++r)
                        if (auto f = n.face(s, r)) axpy(v, Rational(r % 2 ? -1 : 1), component(*f).eval(args));
                    axpy(v, Rational(q % 2 ? -1 : 1), component(*n.face(s, q)).eval(pushed));
                }
            }
            if (q <= deg) {
                const MultiLinear h = hochschild_coboundary(component(s), d.algebra(s.cod()), d.algebra(s.dom()), d.composite(s));
                const Rational sign(q % 2 ? -1 : 1);
                for (std::size_t flat = 0; flat < res.tuple_count(); ++flat) axpy(res.values[flat], sign, h.values[flat]);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- single morphism

DiagramOfAlgebras one_arrow_diagram(const ToyAlgebra& b, const ToyAlgebra& a, const Matrix& phi) {
    SmallCategory c({"a", "b"}, {{"u", 0, 1, false}}, {});
    return DiagramOfAlgebras(std::move(c), {a, b}, {phi});
}

SingleMorphismCoboundary single_morphism_coboundary(const ToyAlgebra& b, const ToyAlgebra& a, const Matrix& phi,
                                                    const MultiLinear& gamma_b, const MultiLinear& gamma_a,
                                                    const MultiLinear& gamma_phi) {
    if (!is_algebra_map(phi, b, a)) throw InvalidMorphism("phi is not a unital algebra map B -> A");
    const int n = gamma_b.arity;
    if (gamma_a.arity != n || gamma_phi.arity != n - 1) throw ArityMismatch("arities must be n, n, n-1");
    if (gamma_b.in_dim != b.dim() || gamma_b.out_dim != b.dim() || gamma_a.in_dim != a.dim() || gamma_a.out_dim != a.dim() ||
        gamma_phi.in_dim != b.dim() || gamma_phi.out_dim != a.dim())
        throw TypeMismatch("cochain shapes do not match B, A");
    SingleMorphismCoboundary r;
    r.delta_b = hochschild_coboundary(gamma_b, b, b, Matrix::identity(static_cast<std::size_t>(b.dim())));
    r.delta_a = hochschild_coboundary(gamma_a, a, a, Matrix::identity(static_cast<std::size_t>(a.dim())));
    r.delta_phi = MultiLinear::zero(n, b.dim(), a.dim());
    const MultiLinear hp = hochschild_coboundary(gamma_phi, b, a, phi);
    for (std::size_t flat = 0; flat < r.delta_phi.tuple_count(); ++flat) {
        const auto idx = r.delta_phi.tuple(flat);
        std::vector<Vec> args, pushed;
        for (int i : idx) {
            args.push_back(b.basis(i));
            pushed.push_back(phi.column(static_cast<std::size_t>(i)));
        }
        Vec& v = r.delta_phi.values[flat];
        axpy(v, Rational(1), phi * gamma_b.eval(args));
        axpy(v, Rational(-1), gamma_a.eval(pushed));
        axpy(v, Rational(-1), hp.values[flat]);
    }
    return r;
}

SingleMorphismAlgebra diagram_algebra(const ToyAlgebra& b, const ToyAlgebra& a, const Matrix& phi) {
    if (!is_algebra_map(phi, b, a)) throw InvalidMorphism("phi is not a unital algebra map B -> A");
    const int nb = b.dim(), na = a.dim(), n = nb + 2 * na;
    // coordinates: [b | a1 | a2]
    struct Triple {
        Vec b, a1, a2;
    };
    auto split = [&](const Vec& v) {
        Triple t{Vec(v.begin(), v.begin() + nb), Vec(v.begin() + nb, v.begin() + nb + na), Vec(v.begin() + nb + na, v.end())};
        return t;
    };
    auto join = [&](const Triple& t) {
        Vec v = t.b;
        v.insert(v.end(), t.a1.begin(), t.a1.end());
        v.insert(v.end(), t.a2.begin(), t.a2.end());
        return v;
    };
    auto mult = [&](const Vec& x, const Vec& y) {
        const Triple s = split(x), t = split(y);
        Vec a2 = a.multiply(s.a1, t.a2);
        axpy(a2, Rational(1), a.multiply(s.a2, phi * t.b));
        return join({b.multiply(s.b, t.b), a.multiply(s.a1, t.a1), a2});
    };
    std::vector<std::vector<Vec>> table(static_cast<std::size_t>(n));
    auto e = [&](int i) {
        Vec v = zero_vec(n);
        v[static_cast<std::size_t>(i)] = Rational(1);
        return v;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i)].push_back(mult(e(i), e(j)));
    Triple unit{b.unit(), a.unit(), zero_vec(na)};
    SingleMorphismAlgebra r{ToyAlgebra(std::move(table), join(unit), "B+A+Aphi"), nb, na, {}, false, false};

    // left action on B + A: (beta, alpha) -> (b beta, a2 phi(beta) + a1 alpha)
    const int vd = nb + na;
    for (int i = 0; i < n; ++i) {
        const Triple t = split(e(i));
        Matrix m(static_cast<std::size_t>(vd), static_cast<std::size_t>(vd));
        for (int c = 0; c < vd; ++c) {
            Vec image = zero_vec(vd);
            if (c < nb) {
                const Vec beta = b.basis(c);
                const Vec top = b.multiply(t.b, beta);
                const Vec bottom = a.multiply(t.a2, phi * beta);
                for (int k = 0; k < nb; ++k) image[static_cast<std::size_t>(k)] = top[static_cast<std::size_t>(k)];
                for (int k = 0; k < na; ++k) image[static_cast<std::size_t>(nb + k)] = bottom[static_cast<std::size_t>(k)];
            } else {
                const Vec bottom = a.multiply(t.a1, a.basis(c - nb));
                for (int k = 0; k < na; ++k) image[static_cast<std::size_t>(nb + k)] = bottom[static_cast<std::size_t>(k)];
            }
            for (int k = 0; k < vd; ++k) m(static_cast<std::size_t>(k), static_cast<std::size_t>(c)) = image[static_cast<std::size_t>(k)];
        }
        r.representation.push_back(std::move(m));
    }
    auto rep = [&](const Vec& v) {
        Matrix m(static_cast<std::size_t>(vd), static_cast<std::size_t>(vd));
        for (int i = 0; i < n; ++i) {
            if (v[static_cast<std::size_t>(i)].is_zero()) continue;
            Matrix s = r.representation[static_cast<std::size_t>(i)];
            for (std::size_t x = 0; x < s.rows(); ++x)
                for (std::size_t y = 0; y < s.cols(); ++y) m(x, y) += v[static_cast<std::size_t>(i)] * s(x, y);
        }
        return m;
    };
    bool mult_ok = rep(r.algebra.unit()) == Matrix::identity(static_cast<std::size_t>(vd));
    for (int i = 0; i < n && mult_ok; ++i)
        for (int j = 0; j < n && mult_ok; ++j)
            mult_ok = rep(r.algebra.basis_product(i, j)) == r.representation[static_cast<std::size_t>(i)] * r.representation[static_cast<std::size_t>(j)];
    r.representation_multiplicative = mult_ok;
    Matrix flat(static_cast<std::size_t>(vd * vd), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int x = 0; x < vd; ++x)
            for (int y = 0; y < vd; ++y)
                flat(static_cast<std::size_t>(x * vd + y), static_cast<std::size_t>(i)) =
                    r.representation[static_cast<std::size_t>(i)](static_cast<std::size_t>(x), static_cast<std::size_t>(y));
    r.representation_faithful = rank(flat) == static_cast<std::size_t>(n);
    return r;
}

// ---------------------------------------------------------------- triangle

TriangleReport triangle_check(const Matrix& gamma_alpha, const Matrix& gamma_beta, const Matrix& gamma_theta,
                              const Matrix& alpha, const Matrix& beta) {
    // alpha : W -> V is (dim V x dim W); beta : V -> U is (dim U x dim V)
    if (beta.cols() != alpha.rows()) throw TypeMismatch("alpha and beta are not composable");
    if (gamma_alpha.rows() != alpha.rows() || gamma_alpha.cols() != alpha.cols())
        throw TypeMismatch("Gamma^alpha must have the shape of alpha");
    if (gamma_beta.rows() != beta.rows() || gamma_beta.cols() != beta.cols())
        throw TypeMismatch("Gamma^beta must have the shape of beta");
    if (gamma_theta.rows() != beta.rows() || gamma_theta.cols() != alpha.cols())
        throw TypeMismatch("Gamma^theta must have the shape of beta alpha");
    const Matrix left = beta * gamma_alpha, right = gamma_beta * alpha;
    TriangleReport r;
    r.identity_holds = left + right == gamma_theta;
    r.theta_zero = gamma_theta.is_zero();
    r.opposite_composites = (left + right).is_zero();
    return r;
}

std::vector<DiagramOfAlgebras> toy_diagrams() {
    auto mat = [](std::vector<std::vector<int>> rows) {
        Matrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Rational(rows[i][j]);
        return m;
    };
    auto unit_into = [](const ToyAlgebra& a) {
        Matrix m(static_cast<std::size_t>(a.dim()), 1);
        for (int i = 0; i < a.dim(); ++i) m(static_cast<std::size_t>(i), 0) = a.unit()[static_cast<std::size_t>(i)];
        return m;
    };
    const auto q = ToyAlgebra::ground(), d = ToyAlgebra::dual_numbers(), t = ToyAlgebra::upper_triangular2(),
               s2 = ToyAlgebra::split(2);
    const Matrix dual_to_t2 = mat({{1, 0}, {0, 1}, {1, 0}});  // 1 -> E11 + E22, e -> E12
    std::vector<DiagramOfAlgebras> pool;
    pool.push_back(one_arrow_diagram(d, t, dual_to_t2));
    pool.push_back(DiagramOfAlgebras(parallel_arrows_category(), {d, d}, {mat({{1, 0}, {0, 1}}), mat({{1, 0}, {0, 2}})}));
    pool.push_back(DiagramOfAlgebras(SmallCategory::from_poset(3, {{0, 1}, {1, 2}}), {t, d, q},
                                     {dual_to_t2, unit_into(t), unit_into(d)}));
    pool.push_back(DiagramOfAlgebras(cospan_category(), {s2, q, d}, {unit_into(s2), unit_into(d)}));
    pool.push_back(DiagramOfAlgebras(SmallCategory({"X"}, {{"s", 0, 0, false}}, {{"s", "s", "id_X"}}), {s2},
                                     {mat({{0, 1}, {1, 0}})}));
    return pool;
}

}  // namespace diagdef::diagram
