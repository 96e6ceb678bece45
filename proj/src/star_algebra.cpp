#include "qgroupoid/star_algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qgroupoid/errors.hpp"

namespace qgroupoid {
namespace {

const SparseVector kZero;

std::string triple(Index a, Index b, Index c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::string pair_str(Index a, Index b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

StarAlgebra::StarAlgebra(std::size_t dim, std::vector<std::string> labels, std::vector<Product> products,
                         SparseVector unit, std::vector<SparseVector> star_columns)
    : dim_(dim), labels_(std::move(labels)), rows_(dim), cols_(dim), unit_(std::move(unit)),
      star_(std::move(star_columns)) {
    if (labels_.empty())
        for (std::size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i));
    if (labels_.size() != dim) throw DimensionMismatch("label count differs from dimension");
    if (star_.size() != dim) throw DimensionMismatch("star matrix has wrong number of columns");
    auto in_range = [dim](const SparseVector& v) { return v.empty() || v.entries().back().first < dim; };
    if (!in_range(unit_)) throw DimensionMismatch("unit index out of range");
    for (const auto& s : star_)
        if (!in_range(s)) throw DimensionMismatch("star index out of range");
    std::stable_sort(products.begin(), products.end(),
                     [](const Product& a, const Product& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
    for (auto& p : products) {
        if (p.i >= dim || p.j >= dim || !in_range(p.value)) throw DimensionMismatch("product index out of range");
        auto& row = rows_[p.i];
        if (!row.empty() && row.back().first == p.j)
            row.back().second.add_scaled(p.value, 1);
        else
            row.emplace_back(p.j, std::move(p.value));
    }
    for (Index i = 0; i < dim; ++i) {
        std::erase_if(rows_[i], [](const auto& e) { return e.second.empty(); });
        for (const auto& [j, v] : rows_[i]) {
            cols_[j].push_back(i);
            if (v.size() > 1) monomial_ = false;
        }
        nnz_ += rows_[i].size();
    }
    if (dim <= 64) {
        dense_.assign(dim * dim, -1);
        for (Index i = 0; i < dim; ++i)
            for (std::size_t p = 0; p < rows_[i].size(); ++p)
                dense_[i * dim + rows_[i][p].first] = static_cast<std::int32_t>(p);
    }
    UnionFind uf(2 * dim);
    for (Index i = 0; i < dim; ++i)
        for (const auto& e : rows_[i]) uf.unite(static_cast<std::uint32_t>(dim + i), e.first);
    std::map<std::uint32_t, std::uint32_t> compact;
    auto key = [&](std::uint32_t node) {
        auto [it, fresh] = compact.try_emplace(uf.find(node), static_cast<std::uint32_t>(compact.size()));
        return it->second;
    };
    left_key_.resize(dim);
    right_key_.resize(dim);
    for (Index i = 0; i < dim; ++i) {
        left_key_[i] = key(i);
        right_key_[i] = key(static_cast<std::uint32_t>(dim + i));
    }
    key_count_ = compact.size();
}

const SparseVector& StarAlgebra::product(Index i, Index j) const {
    const auto& row = rows_[i];
    if (!dense_.empty()) {
        auto p = dense_[i * dim_ + j];
        return p < 0 ? kZero : row[static_cast<std::size_t>(p)].second;
    }
    auto it = std::lower_bound(row.begin(), row.end(), j, [](const auto& e, Index k) { return e.first < k; });
    return (it != row.end() && it->first == j) ? it->second : kZero;
}

SparseVector StarAlgebra::multiply(const SparseVector& x, const SparseVector& y) const {
    std::vector<SparseVector::Entry> out;
    for (const auto& [i, a] : x) {
        const auto& r = rows_[i];
        if (r.size() < y.size()) {
            for (const auto& [j, p] : r) {
                Rational b = y.at(j);
                if (b.is_zero()) continue;
                Rational c = a * b;
                for (const auto& [k, v] : p) out.emplace_back(k, v * c);
            }
        } else {
            for (const auto& [j, b] : y) {
                const SparseVector& p = product(i, j);
                if (p.empty()) continue;
                Rational c = a * b;
                for (const auto& [k, v] : p) out.emplace_back(k, v * c);
            }
        }
    }
    return SparseVector::from_entries(std::move(out));
}

SparseVector StarAlgebra::multiply(const SparseVector& x, Index j) const {
    std::vector<SparseVector::Entry> out;
    for (const auto& [i, a] : x)
        for (const auto& [k, v] : product(i, j)) out.emplace_back(k, v * a);
    return SparseVector::from_entries(std::move(out));
}

SparseVector StarAlgebra::multiply(Index i, const SparseVector& y) const {
    std::vector<SparseVector::Entry> out;
    for (const auto& [j, b] : y)
        for (const auto& [k, v] : product(i, j)) out.emplace_back(k, v * b);
    return SparseVector::from_entries(std::move(out));
}

SparseVector StarAlgebra::star(const SparseVector& x) const {
    std::vector<SparseVector::Entry> out;
    for (const auto& [i, a] : x)
        for (const auto& [k, v] : star_[i]) out.emplace_back(k, v * a);
    return SparseVector::from_entries(std::move(out));
}

std::vector<Product> StarAlgebra::products() const {
    std::vector<Product> out;
    out.reserve(nnz_);
    for (Index i = 0; i < dim_; ++i)
        for (const auto& [j, v] : rows_[i]) out.push_back({i, j, v});
    return out;
}

namespace {

std::vector<Index> monomial_generators(const StarAlgebra& a) {
    const std::size_t n = a.dim();
    std::vector<Index> gens;
    std::vector<bool> in(n, false);
    std::size_t covered = 0;
    for (Index i = 0; i < n && covered < n; ++i) {
        if (in[i]) continue;
        gens.push_back(i);
        // all words in the generators, by right multiplication
        in.assign(n, false);
        std::vector<Index> list;
        for (Index g : gens)
            if (!in[g]) {
                in[g] = true;
                list.push_back(g);
            }
        for (std::size_t p = 0; p < list.size(); ++p)
            for (Index g : gens) {
                const SparseVector& v = a.product(list[p], g);
                if (v.empty()) continue;
                Index k = v.leading();
                if (!in[k]) {
                    in[k] = true;
                    list.push_back(k);
                }
            }
        covered = list.size();
    }
    return gens;
}

std::vector<Index> linear_generators(const StarAlgebra& a) {
    const std::size_t n = a.dim();
    std::vector<Index> gens;
    Echelon sub;
    std::vector<SparseVector> vecs;
    for (Index i = 0; i < n && sub.rank() < n; ++i) {
        SparseVector ei = SparseVector::basis(i);
        if (sub.contains(ei)) continue;
        gens.push_back(i);
        std::vector<SparseVector> queue{ei};
        for (const auto& v : vecs) queue.push_back(a.multiply(v, i));
        while (!queue.empty()) {
            SparseVector v = std::move(queue.back());
            queue.pop_back();
            SparseVector r = sub.reduce(v);
            if (r.empty()) continue;
            sub.insert(r);
            for (Index g : gens) queue.push_back(a.multiply(r, g));
            vecs.push_back(std::move(r));
        }
    }
    return gens;
}

}  // namespace

std::vector<Index> generating_basis(const StarAlgebra& a) {
    return a.monomial() ? monomial_generators(a) : linear_generators(a);
}

namespace {

// (ab)c = a(bc) for a in `left`, all b, c; pairs known to vanish on both sides are skipped.
void check_associativity(const StarAlgebra& alg, const std::vector<Index>& left, Report& rep) {
    const std::size_t n = alg.dim();
    for (Index a : left)
        for (Index b = 0; b < n; ++b) {
            const SparseVector& ab = alg.product(a, b);
            std::vector<Index> cs;
            for (const auto& e : alg.row(b)) cs.push_back(e.first);
            for (const auto& [p, unused] : ab)
                for (const auto& e : alg.row(p)) cs.push_back(e.first);
            std::sort(cs.begin(), cs.end());
            cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
            for (Index c : cs) {
                SparseVector lhs = alg.multiply(ab, c);
                SparseVector rhs = alg.multiply(a, alg.product(b, c));
                if (lhs != rhs) {
                    rep.add("associativity", false, triple(a, b, c));
                    return;
                }
            }
        }
    rep.add("associativity", true);
}

}  // namespace

Report verify_algebra(const StarAlgebra& alg) {
    Report rep("algebra");
    const std::size_t n = alg.dim();
    std::vector<Index> all(n);
    std::iota(all.begin(), all.end(), 0u);
    std::vector<Index> gens = generating_basis(alg);
    check_associativity(alg, gens, rep);
    bool associative = rep.passed("associativity");
    const std::vector<Index>& left = associative ? gens : all;

    std::string bad;
    for (Index i = 0; i < n && bad.empty(); ++i) {
        SparseVector ei = SparseVector::basis(i);
        if (alg.multiply(alg.unit(), ei) != ei || alg.multiply(ei, alg.unit()) != ei) bad = std::to_string(i);
    }
    rep.add("unit", bad.empty(), bad);

    bad.clear();
    for (Index i = 0; i < n && bad.empty(); ++i)
        if (alg.star(alg.star(i)) != SparseVector::basis(i)) bad = std::to_string(i);
    rep.add("involutivity", bad.empty(), bad);

    bad.clear();
    for (Index a : left) {
        for (Index b = 0; b < n && bad.empty(); ++b) {
            SparseVector lhs = alg.star(alg.product(a, b));
            SparseVector rhs = alg.multiply(alg.star(b), alg.star(a));
            if (lhs != rhs) bad = pair_str(a, b);
        }
        if (!bad.empty()) break;
    }
    rep.add("star anti-multiplicativity", bad.empty(), bad);
    return rep;
}

StarAlgebra tensor_algebra(const StarAlgebra& a, const StarAlgebra& b) {
    const std::size_t nb = b.dim();
    auto idx = [nb](Index i, Index j) { return static_cast<Index>(i * nb + j); };
    auto tensor = [&](const SparseVector& x, const SparseVector& y) {
        std::vector<SparseVector::Entry> out;
        for (const auto& [i, u] : x)
            for (const auto& [j, v] : y) out.emplace_back(idx(i, j), u * v);
        return SparseVector::from_entries(std::move(out));
    };
    std::vector<std::string> labels;
    for (Index i = 0; i < a.dim(); ++i)
        for (Index j = 0; j < nb; ++j) labels.push_back(a.label(i) + "⊗" + b.label(j));
    std::vector<Product> products;
    for (Index i = 0; i < a.dim(); ++i)
        for (const auto& [k, u] : a.row(i))
            for (Index j = 0; j < nb; ++j)
                for (const auto& [l, v] : b.row(j)) products.push_back({idx(i, j), idx(k, l), tensor(u, v)});
    std::vector<SparseVector> star;
    for (Index i = 0; i < a.dim(); ++i)
        for (Index j = 0; j < nb; ++j) star.push_back(tensor(a.star(i), b.star(j)));
    return StarAlgebra(a.dim() * nb, std::move(labels), std::move(products), tensor(a.unit(), b.unit()),
                       std::move(star));
}

std::vector<SparseVector> center(const StarAlgebra& a) {
    std::vector<SparseVector> rows;
    for (Index g : generating_basis(a)) {
        std::map<Index, std::vector<SparseVector::Entry>> by_output;
        for (Index i = 0; i < a.dim(); ++i) {
            for (const auto& [k, v] : a.product(i, g)) by_output[k].emplace_back(i, v);
            for (const auto& [k, v] : a.product(g, i)) by_output[k].emplace_back(i, -v);
        }
        for (auto& [k, entries] : by_output) {
            SparseVector r = SparseVector::from_entries(std::move(entries));
            if (!r.empty()) rows.push_back(std::move(r));
        }
    }
    return solve_subspace(a.dim(), std::move(rows));
}

SparseVector LinearMap::apply(const SparseVector& x) const {
    std::vector<SparseVector::Entry> out;
    for (const auto& [i, a] : x)
        for (const auto& [k, v] : columns[i]) out.emplace_back(k, v * a);
    return SparseVector::from_entries(std::move(out));
}

LinearMap LinearMap::identity(std::size_t n) {
    LinearMap f{n, n, {}};
    for (Index i = 0; i < n; ++i) f.columns.push_back(SparseVector::basis(i));
    return f;
}

Report verify_homomorphism(const StarAlgebra& source, const StarAlgebra& target, const LinearMap& f) {
    Report rep("homomorphism");
    bool dims = f.source_dim == source.dim() && f.target_dim == target.dim() && f.columns.size() == source.dim();
    for (const auto& c : f.columns)
        if (!c.empty() && c.entries().back().first >= target.dim()) dims = false;
    rep.add("dimensions", dims);
    if (!dims) return rep;
    const std::size_t n = source.dim();
    std::vector<Index> left = generating_basis(source);
    if (!verify_algebra(source).passed("associativity")) {
        left.resize(n);
        std::iota(left.begin(), left.end(), 0u);
    }
    std::string bad;
    for (Index x : left) {
        for (Index y = 0; y < n && bad.empty(); ++y)
            if (f.apply(source.product(x, y)) != target.multiply(f.columns[x], f.columns[y])) bad = pair_str(x, y);
        if (!bad.empty()) break;
    }
    rep.add("multiplicativity", bad.empty(), bad);
    bad.clear();
    for (Index x = 0; x < n && bad.empty(); ++x)
        if (f.apply(source.star(x)) != target.star(f.columns[x])) bad = std::to_string(x);
    rep.add("star compatibility", bad.empty(), bad);
    rep.add("unit", f.apply(source.unit()) == target.unit());
    return rep;
}

Report verify_isomorphism(const StarAlgebra& source, const StarAlgebra& target, const LinearMap& f) {
    Report rep = verify_homomorphism(source, target, f);
    bool dims = rep.passed("dimensions");
    rep.add("invertibility", dims && source.dim() == target.dim() && rank(f.columns) == source.dim());
    return rep;
}

QuotientAlgebra quotient_tensor(const StarAlgebra& m, const StarAlgebra& a, const Coproduct& coproduct_a,
                                const ActionFn& action, const std::vector<SparseVector>& relators) {
    const std::size_t na = a.dim();
    const std::size_t tensor_dim = m.dim() * na;
    auto idx = [na](Index x, Index y) { return static_cast<Index>(x * na + y); };

    Echelon rel;
    for (const auto& r : relators) rel.insert(r);
    QuotientAlgebra q{StarAlgebra(0, {}, {}, {}, {}), {}, rel.reduced_rows(), tensor_dim};
    std::vector<bool> pivot(tensor_dim, false);
    for (const auto& r : q.relator_basis) pivot[r.leading()] = true;
    std::vector<std::int64_t> position(tensor_dim, -1);
    for (Index c = 0; c < tensor_dim; ++c)
        if (!pivot[c]) {
            position[c] = static_cast<std::int64_t>(q.free_columns.size());
            q.free_columns.push_back(c);
        }
    auto project = [&](const SparseVector& v) {
        std::vector<SparseVector::Entry> out;
        for (const auto& [c, x] : rel.reduce(v)) out.emplace_back(static_cast<Index>(position[c]), x);
        return SparseVector::from_entries(std::move(out));
    };
    // products and star on M⊗A itself
    auto basis_product = [&](Index p, Index r) {
        Index x = p / static_cast<Index>(na), y = p % static_cast<Index>(na);
        Index x2 = r / static_cast<Index>(na), y2 = r % static_cast<Index>(na);
        std::vector<SparseVector::Entry> out;
        for (const auto& t : coproduct_a[y]) {
            SparseVector left = m.multiply(x, action(t.left, x2));
            if (left.empty()) continue;
            const SparseVector& right = a.product(t.right, y2);
            for (const auto& [i, u] : left)
                for (const auto& [j, v] : right) out.emplace_back(idx(i, j), t.coef * u * v);
        }
        return SparseVector::from_entries(std::move(out));
    };
    auto tensor_product = [&](const SparseVector& u, const SparseVector& v) {
        std::vector<SparseVector::Entry> out;
        for (const auto& [p, x] : u)
            for (const auto& [r, y] : v)
                for (const auto& [k, z] : basis_product(p, r)) out.emplace_back(k, x * y * z);
        return SparseVector::from_entries(std::move(out));
    };
    auto tensor_star = [&](const SparseVector& u) {
        std::vector<SparseVector::Entry> out;
        for (const auto& [p, coef] : u) {
            Index x = p / static_cast<Index>(na), y = p % static_cast<Index>(na);
            for (const auto& [ys, c1] : a.star(y))
                for (const auto& t : coproduct_a[ys])
                    for (const auto& [xs, c2] : m.star(x))
                        for (const auto& [i, c3] : action(t.left, xs))
                            out.emplace_back(idx(i, t.right), coef * c1 * t.coef * c2 * c3);
        }
        return SparseVector::from_entries(std::move(out));
    };

    for (const auto& r : q.relator_basis) {
        if (!project(tensor_star(r)).empty())
            throw IllDefinedOnQuotient("star of relator with pivot " + std::to_string(r.leading()));
        // the relator span must be a two-sided ideal of all of M⊗A, pivots included
        for (Index c = 0; c < tensor_dim; ++c) {
            SparseVector z = SparseVector::basis(c);
            if (!project(tensor_product(r, z)).empty() || !project(tensor_product(z, r)).empty())
                throw IllDefinedOnQuotient("relator with pivot " + std::to_string(r.leading()) + " times basis " +
                                           std::to_string(c));
        }
    }

    const std::size_t dim = q.free_columns.size();
    std::vector<std::string> labels;
    for (Index c : q.free_columns)
        labels.push_back("[" + m.label(c / static_cast<Index>(na)) + "⊗" + a.label(c % static_cast<Index>(na)) + "]");
    std::vector<Product> products;
    for (Index i = 0; i < dim; ++i)
        for (Index j = 0; j < dim; ++j) {
            SparseVector v = project(basis_product(q.free_columns[i], q.free_columns[j]));
            if (!v.empty()) products.push_back({i, j, std::move(v)});
        }
    std::vector<SparseVector> star;
    for (Index i = 0; i < dim; ++i) star.push_back(project(tensor_star(SparseVector::basis(q.free_columns[i]))));
    std::vector<SparseVector::Entry> unit_entries;
    for (const auto& [x, u] : m.unit())
        for (const auto& [y, v] : a.unit()) unit_entries.emplace_back(idx(x, y), u * v);
    SparseVector unit = project(SparseVector::from_entries(std::move(unit_entries)));
    q.algebra = StarAlgebra(dim, std::move(labels), std::move(products), std::move(unit), std::move(star));
    return q;
}

}  // namespace qgroupoid
