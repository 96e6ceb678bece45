#include "qgroupoid/weak_hopf.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qgroupoid/errors.hpp"

namespace qgroupoid {
namespace {

std::string tuple_str(std::initializer_list<std::uint64_t> xs) {
    std::string s = "(";
    bool first = true;
    for (auto x : xs) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + ")";
}

std::vector<TensorTerm> sorted_terms(std::vector<TensorTerm> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const TensorTerm& a, const TensorTerm& b) { return std::tie(a.left, a.right) < std::tie(b.left, b.right); });
    std::vector<TensorTerm> out;
    for (auto& t : terms) {
        if (!out.empty() && out.back().left == t.left && out.back().right == t.right)
            out.back().coef += t.coef;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const TensorTerm& t) { return t.coef.is_zero(); });
    return out;
}

// u ⊗ v added into a sum keyed by left·n + right
void add_tensor(KeyedSum& sum, std::size_t n, const SparseVector& u, const SparseVector& v, const Rational& c) {
    for (const auto& [i, x] : u)
        for (const auto& [j, y] : v) add_to(sum, static_cast<std::uint64_t>(i) * n + j, c * x * y);
}

}  // namespace

Rational WeakHopfAlgebra::epsilon(const SparseVector& x) const {
    Rational r;
    for (const auto& [i, a] : x)
        if (!counit[i].is_zero()) r += a * counit[i];
    return r;
}

SparseVector WeakHopfAlgebra::kappa(const SparseVector& x) const {
    std::vector<SparseVector::Entry> out;
    for (const auto& [i, a] : x)
        for (const auto& [k, v] : antipode[i]) out.emplace_back(k, v * a);
    return SparseVector::from_entries(std::move(out));
}

std::vector<TensorTerm> WeakHopfAlgebra::gamma(const SparseVector& x) const {
    std::vector<TensorTerm> out;
    for (const auto& [i, a] : x)
        for (const auto& t : coproduct[i]) out.push_back({t.left, t.right, t.coef * a});
    return sorted_terms(std::move(out));
}

namespace {

void check_multiplicativity(const WeakHopfAlgebra& w, const std::vector<Index>& left, Report& rep) {
    const StarAlgebra& alg = w.algebra;
    const std::size_t n = w.dim();
    auto pack = [](std::uint32_t a, std::uint32_t b) { return (static_cast<std::uint64_t>(a) << 32) | b; };
    // Γ(y) terms grouped by the left keys of their legs
    std::vector<std::vector<std::pair<std::uint64_t, const TensorTerm*>>> by_key(n);
    for (Index y = 0; y < n; ++y) {
        for (const auto& t : w.coproduct[y])
            by_key[y].emplace_back(pack(alg.left_key(t.left), alg.left_key(t.right)), &t);
        std::stable_sort(by_key[y].begin(), by_key[y].end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    for (Index x : left) {
        std::map<std::uint64_t, std::vector<const TensorTerm*>> groups;
        for (const auto& t : w.coproduct[x])
            groups[pack(alg.right_key(t.left), alg.right_key(t.right))].push_back(&t);
        for (Index y = 0; y < n; ++y) {
            KeyedSum lhs, rhs;
            for (const auto& t : w.gamma(alg.product(x, y)))
                add_to(lhs, static_cast<std::uint64_t>(t.left) * n + t.right, t.coef);
            const auto& ys = by_key[y];
            for (const auto& [key, xterms] : groups) {
                auto lo = std::lower_bound(ys.begin(), ys.end(), key,
                                           [](const auto& e, std::uint64_t k) { return e.first < k; });
                for (auto it = lo; it != ys.end() && it->first == key; ++it) {
                    const TensorTerm& u = *it->second;
                    for (const TensorTerm* t : xterms) {
                        const SparseVector& p = alg.product(t->left, u.left);
                        if (p.empty()) continue;
                        const SparseVector& q = alg.product(t->right, u.right);
                        if (q.empty()) continue;
                        add_tensor(rhs, n, p, q, t->coef * u.coef);
                    }
                }
            }
            if (auto d = first_difference(std::move(lhs), std::move(rhs))) {
                rep.add("coproduct multiplicativity", false, tuple_str({x, y}),
                        "component " + tuple_str({*d / n, *d % n}));
                return;
            }
        }
    }
    rep.add("coproduct multiplicativity", true);
}

void check_coassociativity(const WeakHopfAlgebra& w, const std::vector<Index>& elems, Report& rep) {
    const std::size_t n = w.dim();
    for (Index x : elems) {
        KeyedSum lhs, rhs;
        for (const auto& t : w.coproduct[x]) {
            for (const auto& u : w.coproduct[t.left])
                add_to(lhs, (static_cast<std::uint64_t>(u.left) * n + u.right) * n + t.right, t.coef * u.coef);
            for (const auto& u : w.coproduct[t.right])
                add_to(rhs, (static_cast<std::uint64_t>(t.left) * n + u.left) * n + u.right, t.coef * u.coef);
        }
        if (auto d = first_difference(std::move(lhs), std::move(rhs))) {
            rep.add("coassociativity", false, std::to_string(x),
                    "component " + tuple_str({*d / n / n, (*d / n) % n, *d % n}));
            return;
        }
    }
    rep.add("coassociativity", true);
}

void check_counit(const WeakHopfAlgebra& w, Report& rep) {
    for (Index x = 0; x < w.dim(); ++x) {
        std::vector<SparseVector::Entry> left, right;
        for (const auto& t : w.coproduct[x]) {
            left.emplace_back(t.right, t.coef * w.counit[t.left]);
            right.emplace_back(t.left, t.coef * w.counit[t.right]);
        }
        SparseVector ex = SparseVector::basis(x);
        if (SparseVector::from_entries(left) != ex || SparseVector::from_entries(right) != ex) {
            rep.add("counit", false, std::to_string(x));
            return;
        }
    }
    rep.add("counit", true);
}

void check_weak_multiplicativity(const WeakHopfAlgebra& w, const std::vector<TensorTerm>& g1, Report& rep) {
    const StarAlgebra& alg = w.algebra;
    const std::size_t n = w.dim();
    KeyedSum lhs, rhs;
    for (const auto& t : g1) {
        std::vector<std::pair<Index, Rational>> xs, ys;
        for (Index x : alg.column(t.left)) {
            Rational e = w.epsilon(alg.product(x, t.left));
            if (!e.is_zero()) xs.emplace_back(x, e);
        }
        for (const auto& [y, p] : alg.row(t.right)) {
            Rational e = w.epsilon(p);
            if (!e.is_zero()) ys.emplace_back(y, e);
        }
        for (const auto& [x, ex] : xs)
            for (const auto& [y, ey] : ys) add_to(lhs, static_cast<std::uint64_t>(x) * n + y, t.coef * ex * ey);
    }
    for (Index x = 0; x < n; ++x)
        for (const auto& [y, p] : alg.row(x)) add_to(rhs, static_cast<std::uint64_t>(x) * n + y, w.epsilon(p));
    auto d = first_difference(std::move(lhs), std::move(rhs));
    rep.add("counit weak multiplicativity", !d, d ? tuple_str({*d / n, *d % n}) : "");
}

void check_antipode_axiom(const WeakHopfAlgebra& w, const std::vector<TensorTerm>& g1, Report& rep) {
    const StarAlgebra& alg = w.algebra;
    const std::size_t n = w.dim();
    // s(t) = κ(t₍₁₎)t₍₂₎
    std::vector<SparseVector> s(n);
    for (Index t = 0; t < n; ++t) {
        std::vector<SparseVector::Entry> out;
        for (const auto& u : w.coproduct[t])
            for (const auto& [k, v] : alg.multiply(w.antipode[u.left], u.right)) out.emplace_back(k, v * u.coef);
        s[t] = SparseVector::from_entries(std::move(out));
    }
    std::vector<std::vector<const TensorTerm*>> by_right(n);
    for (const auto& t : g1) by_right[t.right].push_back(&t);
    for (Index x = 0; x < n; ++x) {
        KeyedSum lhs, rhs;
        for (const auto& t : w.coproduct[x]) add_tensor(lhs, n, s[t.left], SparseVector::basis(t.right), t.coef);
        for (const auto& [v, p] : alg.row(x))
            for (const TensorTerm* t : by_right[v]) add_tensor(rhs, n, SparseVector::basis(t->left), p, t->coef);
        if (auto d = first_difference(std::move(lhs), std::move(rhs))) {
            rep.add("antipode axiom", false, std::to_string(x), "component " + tuple_str({*d / n, *d % n}));
            return;
        }
    }
    rep.add("antipode axiom", true);
}

void check_antipode_antimultiplicative(const WeakHopfAlgebra& w, const std::vector<Index>& left, Report& rep) {
    const StarAlgebra& alg = w.algebra;
    for (Index x : left)
        for (Index y = 0; y < w.dim(); ++y) {
            SparseVector lhs = w.kappa(alg.product(x, y));
            SparseVector rhs = alg.multiply(w.antipode[y], w.antipode[x]);
            if (lhs != rhs) {
                rep.add("antipode anti-multiplicativity", false, tuple_str({x, y}));
                return;
            }
        }
    rep.add("antipode anti-multiplicativity", true);
}

void check_antipode_flip(const WeakHopfAlgebra& w, Report& rep) {
    const std::size_t n = w.dim();
    for (Index x = 0; x < n; ++x) {
        KeyedSum lhs, rhs;
        for (const auto& t : w.coproduct[x]) add_tensor(lhs, n, w.antipode[t.left], w.antipode[t.right], t.coef);
        for (const auto& t : w.gamma(w.antipode[x]))
            add_to(rhs, static_cast<std::uint64_t>(t.right) * n + t.left, t.coef);
        if (auto d = first_difference(std::move(lhs), std::move(rhs))) {
            rep.add("antipode coproduct flip", false, std::to_string(x));
            return;
        }
    }
    rep.add("antipode coproduct flip", true);
}

void check_kappa_star(const WeakHopfAlgebra& w, Report& rep) {
    const StarAlgebra& alg = w.algebra;
    for (Index x = 0; x < w.dim(); ++x) {
        SparseVector once = w.kappa(alg.star(x));
        SparseVector twice = w.kappa(alg.star(once));
        if (twice != SparseVector::basis(x)) {
            rep.add("(antipode∘star)^2 = id", false, std::to_string(x));
            return;
        }
    }
    rep.add("(antipode∘star)^2 = id", true);
}

bool well_formed(const WeakHopfAlgebra& w) {
    const std::size_t n = w.dim();
    if (w.coproduct.size() != n || w.counit.size() != n || w.antipode.size() != n) return false;
    for (const auto& terms : w.coproduct)
        for (const auto& t : terms)
            if (t.left >= n || t.right >= n) return false;
    for (const auto& v : w.antipode)
        if (!v.empty() && v.entries().back().first >= n) return false;
    return true;
}

}  // namespace

Report verify_weak_hopf(const WeakHopfAlgebra& w) {
    Report rep("weak Hopf algebra");
    bool formed = well_formed(w);
    rep.add("well-formed", formed);
    if (!formed) return rep;
    Report alg = verify_algebra(w.algebra);
    rep.merge(alg, "algebra");
    const std::size_t n = w.dim();
    std::vector<Index> all(n);
    std::iota(all.begin(), all.end(), 0u);
    bool associative = alg.passed("associativity");
    std::vector<Index> gens = associative ? generating_basis(w.algebra) : all;

    check_multiplicativity(w, gens, rep);
    // with Γ multiplicative both sides of coassociativity are multiplicative maps
    check_coassociativity(w, associative && rep.passed("coproduct multiplicativity") ? gens : all, rep);
    check_counit(w, rep);
    auto g1 = w.gamma_of_unit();
    check_weak_multiplicativity(w, g1, rep);
    check_antipode_axiom(w, g1, rep);
    check_antipode_antimultiplicative(w, gens, rep);
    check_antipode_flip(w, rep);
    check_kappa_star(w, rep);
    return rep;
}

Report verify_weak_kac(const WeakHopfAlgebra& w) {
    Report rep("weak Kac");
    std::string bad;
    for (Index x = 0; x < w.dim() && bad.empty(); ++x)
        if (w.kappa(w.antipode[x]) != SparseVector::basis(x)) bad = std::to_string(x);
    rep.add("antipode involutive", bad.empty(), bad);
    bad.clear();
    for (Index x = 0; x < w.dim() && bad.empty(); ++x)
        if (w.epsilon(w.antipode[x]) != w.counit[x]) bad = std::to_string(x);
    rep.add("counit antipode invariance", bad.empty(), bad);
    return rep;
}

SparseVector epsilon_t(const WeakHopfAlgebra& w, const SparseVector& a) {
    std::vector<SparseVector::Entry> out;
    for (const auto& t : w.gamma_of_unit()) {
        Rational e = w.epsilon(w.algebra.multiply(SparseVector::basis(t.left), a));
        if (!e.is_zero()) out.emplace_back(t.right, e * t.coef);
    }
    return SparseVector::from_entries(std::move(out));
}

namespace {

// Rows of the linear system Γ(x) = L(x) where L is given per basis element.
void append_rows(const WeakHopfAlgebra& w, const std::vector<KeyedSum>& other, std::vector<SparseVector>& rows) {
    const std::size_t n = w.dim();
    std::unordered_map<std::uint64_t, std::vector<SparseVector::Entry>> by_key;
    for (Index x = 0; x < n; ++x) {
        KeyedSum diff = other[x];
        for (const auto& t : w.coproduct[x]) add_to(diff, static_cast<std::uint64_t>(t.left) * n + t.right, -t.coef);
        prune(diff);
        for (const auto& [k, c] : diff) by_key[k].emplace_back(x, c);
    }
    std::vector<std::uint64_t> keys;
    for (const auto& [k, unused] : by_key) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    for (auto k : keys) rows.push_back(SparseVector::from_entries(std::move(by_key[k])));
}

}  // namespace

CartanSubalgebras cartan_subalgebras(const WeakHopfAlgebra& w) {
    const StarAlgebra& alg = w.algebra;
    const std::size_t n = w.dim();
    auto g1 = w.gamma_of_unit();
    // Γ(1)(x⊗1), (x⊗1)Γ(1), (1⊗x)Γ(1), Γ(1)(1⊗x)
    std::vector<KeyedSum> g1x(n), xg1(n), xs1(n), g1xs(n);
    for (const auto& t : g1) {
        for (const auto& [x, p] : alg.row(t.left)) add_tensor(g1x[x], n, p, SparseVector::basis(t.right), t.coef);
        for (Index x : alg.column(t.left))
            add_tensor(xg1[x], n, alg.product(x, t.left), SparseVector::basis(t.right), t.coef);
        for (Index x : alg.column(t.right))
            add_tensor(xs1[x], n, SparseVector::basis(t.left), alg.product(x, t.right), t.coef);
        for (const auto& [x, p] : alg.row(t.right)) add_tensor(g1xs[x], n, SparseVector::basis(t.left), p, t.coef);
    }
    std::vector<SparseVector> rows_t, rows_s;
    append_rows(w, g1x, rows_t);
    append_rows(w, xg1, rows_t);
    append_rows(w, xs1, rows_s);
    append_rows(w, g1xs, rows_s);
    CartanSubalgebras c;
    c.target = solve_subspace(n, std::move(rows_t));
    c.source = solve_subspace(n, std::move(rows_s));
    c.report = Report("Cartan subalgebras");
    c.report.diagnostic("dimensions", true,
                        "dim A_t = " + std::to_string(c.target.size()) + ", dim A_s = " + std::to_string(c.source.size()));
    std::string bad;
    for (std::size_t i = 0; i < c.target.size() && bad.empty(); ++i)
        for (std::size_t j = 0; j < c.source.size() && bad.empty(); ++j)
            if (alg.multiply(c.target[i], c.source[j]) != alg.multiply(c.source[j], c.target[i]))
                bad = tuple_str({i, j});
    c.report.add("A_t and A_s commute", bad.empty(), bad);
    std::vector<SparseVector> image;
    for (const auto& v : c.target) image.push_back(w.kappa(v));
    c.report.add("antipode maps A_t onto A_s", same_span(image, c.source));
    c.target_commutative = true;
    for (std::size_t i = 0; i < c.target.size() && c.target_commutative; ++i)
        for (std::size_t j = i + 1; j < c.target.size() && c.target_commutative; ++j)
            if (alg.multiply(c.target[i], c.target[j]) != alg.multiply(c.target[j], c.target[i]))
                c.target_commutative = false;
    c.report.diagnostic("A_t commutative", c.target_commutative);
    return c;
}

void validate_groupoid(const FiniteGroupoid& g) {
    const std::size_t n = g.size();
    if (g.product.size() != n || g.inverse.size() != n || g.is_unit.size() != n)
        throw NotAGroupoid("inconsistent sizes");
    auto prod = [&](std::size_t a, std::size_t b) { return g.product[a][b]; };
    std::vector<std::int32_t> left(n, -1), right(n, -1);
    for (std::size_t u = 0; u < n; ++u)
        if (g.is_unit[u] && prod(u, u) != static_cast<std::int32_t>(u)) throw NotAGroupoid("unit not idempotent");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t u = 0; u < n; ++u) {
            if (!g.is_unit[u]) continue;
            if (prod(u, x) == static_cast<std::int32_t>(x)) {
                if (left[x] >= 0) throw NotAGroupoid("two left units");
                left[x] = static_cast<std::int32_t>(u);
            } else if (prod(u, x) >= 0) {
                throw NotAGroupoid("unit acts non-trivially");
            }
            if (prod(x, u) == static_cast<std::int32_t>(x)) {
                if (right[x] >= 0) throw NotAGroupoid("two right units");
                right[x] = static_cast<std::int32_t>(u);
            } else if (prod(x, u) >= 0) {
                throw NotAGroupoid("unit acts non-trivially");
            }
        }
    for (std::size_t x = 0; x < n; ++x) {
        if (left[x] < 0 || right[x] < 0) throw NotAGroupoid("element without units: " + g.labels[x]);
        for (std::size_t y = 0; y < n; ++y) {
            bool composable = right[x] == left[y];
            if ((prod(x, y) >= 0) != composable) throw NotAGroupoid("composability is not source = target");
            if (!composable) continue;
            auto xy = static_cast<std::size_t>(prod(x, y));
            if (left[xy] != left[x] || right[xy] != right[y]) throw NotAGroupoid("product has wrong units");
            for (std::size_t z = 0; z < n; ++z) {
                if (right[y] != left[z]) continue;
                if (prod(xy, z) != prod(x, static_cast<std::size_t>(prod(y, z))))
                    throw NotAGroupoid("associativity fails");
            }
        }
        Index xi = g.inverse[x];
        if (prod(x, xi) != left[x] || prod(xi, x) != right[x]) throw NotAGroupoid("bad inverse");
    }
}

FiniteGroupoid groupoid_of_group(const FiniteGroup& grp) {
    FiniteGroupoid g;
    for (Element x = 0; x < grp.order(); ++x) {
        g.labels.push_back(grp.name(x));
        g.inverse.push_back(grp.inv(x));
        g.is_unit.push_back(x == 0);
        std::vector<std::int32_t> row;
        for (Element y = 0; y < grp.order(); ++y) row.push_back(static_cast<std::int32_t>(grp.mul(x, y)));
        g.product.push_back(std::move(row));
    }
    return g;
}

WeakHopfAlgebra groupoid_function_wha(const FiniteGroupoid& g) {
    validate_groupoid(g);
    const std::size_t n = g.size();
    std::vector<std::string> labels;
    std::vector<Product> products;
    std::vector<SparseVector> star;
    std::vector<SparseVector::Entry> unit;
    Coproduct cop(n);
    std::vector<Rational> counit(n);
    std::vector<SparseVector> antipode;
    for (Index x = 0; x < n; ++x) {
        labels.push_back("delta(" + g.labels[x] + ")");
        products.push_back({x, x, SparseVector::basis(x)});
        star.push_back(SparseVector::basis(x));
        unit.emplace_back(x, 1);
        counit[x] = g.is_unit[x] ? 1 : 0;
        antipode.push_back(SparseVector::basis(g.inverse[x]));
        for (Index y = 0; y < n; ++y)
            if (g.product[x][y] >= 0) cop[static_cast<std::size_t>(g.product[x][y])].push_back({x, y, 1});
    }
    return {StarAlgebra(n, labels, products, SparseVector::from_entries(unit), star), cop, counit, antipode};
}

WeakHopfAlgebra groupoid_regular_wha(const FiniteGroupoid& g) {
    validate_groupoid(g);
    const std::size_t n = g.size();
    std::vector<std::string> labels;
    std::vector<Product> products;
    std::vector<SparseVector> star;
    std::vector<SparseVector::Entry> unit;
    Coproduct cop(n);
    std::vector<Rational> counit(n, 1);
    std::vector<SparseVector> antipode;
    for (Index x = 0; x < n; ++x) {
        labels.push_back("rho(" + g.labels[x] + ")");
        for (Index y = 0; y < n; ++y)
            if (g.product[x][y] >= 0)
                products.push_back({x, y, SparseVector::basis(static_cast<Index>(g.product[x][y]))});
        star.push_back(SparseVector::basis(g.inverse[x]));
        if (g.is_unit[x]) unit.emplace_back(x, 1);
        cop[x].push_back({x, x, 1});
        antipode.push_back(SparseVector::basis(g.inverse[x]));
    }
    return {StarAlgebra(n, labels, products, SparseVector::from_entries(unit), star), cop, counit, antipode};
}

}  // namespace qgroupoid
