#include "qgroupoid/quantum_groupoid.hpp"

#include <algorithm>
#include <map>

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

std::string square_label(const DoubleGroupoid& sq, const Square& s) {
    const FiniteGroup& g = sq.group();
    return std::string(sq.variant() == Variant::T ? "T" : "T'") + "[" + g.name(s.a) + "," + g.name(s.b) + "," +
           g.name(s.c) + "," + g.name(s.d) + "]";
}

}  // namespace

WeakHopfAlgebra build_square_algebra(const DoubleGroupoid& sq, std::size_t s_order) {
    const std::size_t n = sq.size();
    std::vector<std::string> labels;
    std::vector<Product> products;
    std::vector<SparseVector> star;
    std::vector<SparseVector::Entry> unit;
    Coproduct cop(n);
    std::vector<Rational> counit(n);
    std::vector<SparseVector> antipode;
    const Rational weight(1, static_cast<std::int64_t>(s_order));

    // squares grouped by their left edge c, for the horizontal product
    std::map<Element, std::vector<Index>> by_c, by_a;
    for (Index i = 0; i < n; ++i) {
        by_c[sq[i].c].push_back(i);
        by_a[sq[i].a].push_back(i);
    }
    for (Index i = 0; i < n; ++i) {
        const Square& t = sq[i];
        labels.push_back(square_label(sq, t));
        for (Index j : by_c[t.b]) {
            auto r = sq.h_compose(t, sq[j]);
            products.push_back({i, j, SparseVector::basis(static_cast<Index>(sq.at(*r)))});
        }
        star.push_back(SparseVector::basis(static_cast<Index>(sq.at(sq.h_inverse(t)))));
        if (sq.is_h_unit(t)) unit.emplace_back(i, 1);
        if (sq.is_v_unit(t)) counit[i] = static_cast<std::int64_t>(s_order);
        antipode.push_back(SparseVector::basis(static_cast<Index>(sq.at(sq.hv_inverse(t)))));
        // t = t₂ ⋆ᵛ t₁: t₂ shares the top edge, t₁ is then forced
        const FiniteGroup& g = sq.group();
        for (Index j2 : by_a[t.a]) {
            const Square& t2 = sq[j2];
            Square t1{t2.d, g.mul(g.inv(t2.b), t.b), g.mul(g.inv(t2.c), t.c), t.d};
            if (auto j1 = sq.index_of(t1)) cop[i].push_back({static_cast<Index>(*j1), j2, weight});
        }
        std::sort(cop[i].begin(), cop[i].end(), [](const TensorTerm& a, const TensorTerm& b) {
            return std::tie(a.left, a.right) < std::tie(b.left, b.right);
        });
    }
    return {StarAlgebra(n, std::move(labels), std::move(products), SparseVector::from_entries(std::move(unit)),
                        std::move(star)),
            std::move(cop), std::move(counit), std::move(antipode)};
}

WeakHopfAlgebra build_CT(const RelativeMatchedPair& pair, const DoubleGroupoid& t) {
    if (t.variant() != Variant::T) throw Error("build_CT needs the squares T");
    return build_square_algebra(t, pair.S().order());
}

WeakHopfAlgebra build_CT_prime(const RelativeMatchedPair& pair, const DoubleGroupoid& t_prime) {
    if (t_prime.variant() != Variant::TPrime) throw Error("build_CT_prime needs the squares T'");
    return build_square_algebra(t_prime, pair.S().order());
}

FiniteGroupoid horizontal_groupoid(const DoubleGroupoid& sq) {
    FiniteGroupoid g;
    const std::size_t n = sq.size();
    g.product.assign(n, std::vector<std::int32_t>(n, -1));
    for (Index i = 0; i < n; ++i) {
        g.labels.push_back(square_label(sq, sq[i]));
        g.inverse.push_back(static_cast<Index>(sq.at(sq.h_inverse(sq[i]))));
        g.is_unit.push_back(sq.is_h_unit(sq[i]));
        for (Index j = 0; j < n; ++j)
            if (auto r = sq.h_compose(sq[i], sq[j])) g.product[i][j] = static_cast<std::int32_t>(sq.at(*r));
    }
    return g;
}

Rational pairing(const RelativeMatchedPair& pair, const Square& x, const Square& x_prime) {
    return transpose(x) == x_prime ? Rational(static_cast<std::int64_t>(pair.S().order())) : Rational(0);
}

DualityPairing build_pairing(const RelativeMatchedPair& pair, const DoubleGroupoid& t, const DoubleGroupoid& tp) {
    DualityPairing p;
    for (const Square& x : t.squares()) {
        std::vector<SparseVector::Entry> row;
        if (auto j = tp.index_of(transpose(x))) row.emplace_back(static_cast<Index>(*j), pairing(pair, x, tp[*j]));
        p.rows.push_back(SparseVector::from_entries(std::move(row)));
    }
    return p;
}

Report verify_duality(const WeakHopfAlgebra& left, const WeakHopfAlgebra& right, const DualityPairing& p) {
    Report rep("duality");
    const std::size_t n = left.dim(), m = right.dim();
    bool dims = p.rows.size() == n;
    for (const auto& r : p.rows)
        if (!r.empty() && r.entries().back().first >= m) dims = false;
    rep.add("dimensions", dims);
    if (!dims) return rep;
    std::vector<std::vector<std::pair<Index, Rational>>> cols(m);
    for (Index x = 0; x < n; ++x)
        for (const auto& [y, v] : p.rows[x]) cols[y].emplace_back(x, v);
    auto key3 = [](std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t nb, std::uint64_t nc) {
        return (a * nb + b) * nc + c;
    };

    // ⟨Γ(x), y⊗z⟩ = ⟨x, yz⟩, keyed (x, y, z)
    {
        KeyedSum lhs, lhs_flat, rhs;
        for (Index x = 0; x < n; ++x)
            for (const auto& t : left.coproduct[x])
                for (const auto& [a, pa] : p.rows[t.left])
                    for (const auto& [b, pb] : p.rows[t.right]) {
                        add_to(lhs, key3(x, b, a, m, m), t.coef * pa * pb);
                        add_to(lhs_flat, key3(x, a, b, m, m), t.coef * pa * pb);
                    }
        for (Index y = 0; y < m; ++y)
            for (const auto& [z, prod] : right.algebra.row(y))
                for (const auto& [u, val] : prod)
                    for (const auto& [x, px] : cols[u]) add_to(rhs, key3(x, y, z, m, m), val * px);
        auto d = first_difference(lhs, rhs);
        rep.add("coproduct-product adjointness", !d,
                d ? tuple_str({*d / m / m, (*d / m) % m, *d % m}) : "");
        rep.diagnostic("coproduct-product adjointness, unreversed legs", !first_difference(lhs_flat, rhs));
    }
    // ⟨xw, y⟩ = ⟨x⊗w, Γ̂(y)⟩, keyed (x, w, y)
    {
        KeyedSum lhs, rhs, rhs_flat;
        for (Index x = 0; x < n; ++x)
            for (const auto& [w, prod] : left.algebra.row(x))
                for (const auto& [u, val] : prod)
                    for (const auto& [y, py] : p.rows[u]) add_to(lhs, key3(x, w, y, n, m), val * py);
        for (Index y = 0; y < m; ++y)
            for (const auto& t : right.coproduct[y])
                for (const auto& [a, pa] : cols[t.left])
                    for (const auto& [b, pb] : cols[t.right]) {
                        add_to(rhs, key3(b, a, y, n, m), t.coef * pa * pb);
                        add_to(rhs_flat, key3(a, b, y, n, m), t.coef * pa * pb);
                    }
        auto d = first_difference(lhs, rhs);
        rep.add("product-coproduct adjointness", !d, d ? tuple_str({*d / m / n, (*d / m) % n, *d % m}) : "");
        rep.diagnostic("product-coproduct adjointness, unreversed legs", !first_difference(lhs, rhs_flat));
    }
    // ε̂(y) = ⟨1, y⟩ and ε(x) = ⟨x, 1̂⟩
    {
        std::vector<Rational> one_left(m);
        for (const auto& [x, c] : left.algebra.unit())
            for (const auto& [y, v] : p.rows[x]) one_left[y] += c * v;
        std::string bad;
        for (Index y = 0; y < m && bad.empty(); ++y)
            if (one_left[y] != right.counit[y]) bad = std::to_string(y);
        rep.add("counit-unit compatibility", bad.empty(), bad);
        bad.clear();
        for (Index x = 0; x < n && bad.empty(); ++x) {
            Rational v;
            for (const auto& [y, c] : right.algebra.unit()) v += c * p.rows[x].at(y);
            if (v != left.counit[x]) bad = std::to_string(x);
        }
        rep.add("unit-counit compatibility", bad.empty(), bad);
    }
    // ⟨x, κ̂(y)⟩ = ⟨x*, y*⟩ and ⟨κ(x), y⟩ = ⟨x*, y*⟩, keyed (x, y)
    {
        KeyedSum a, b, c;
        for (Index y = 0; y < m; ++y)
            for (const auto& [k, v] : right.antipode[y])
                for (const auto& [x, px] : cols[k]) add_to(a, static_cast<std::uint64_t>(x) * m + y, v * px);
        for (Index x = 0; x < n; ++x) {
            for (const auto& [k, v] : left.antipode[x])
                for (const auto& [y, py] : p.rows[k]) add_to(c, static_cast<std::uint64_t>(x) * m + y, v * py);
            for (const auto& [xs, u] : left.algebra.star(x))
                for (const auto& [ys, pv] : p.rows[xs])
                    // y* = ys for the basis y with star(y) ∋ ys; invert through the star columns
                    for (const auto& [y, w] : right.algebra.star(ys))
                        add_to(b, static_cast<std::uint64_t>(x) * m + y, u * pv * w);
        }
        auto d = first_difference(a, b);
        rep.add("antipode-star compatibility", !d, d ? tuple_str({*d / m, *d % m}) : "");
        auto d2 = first_difference(c, b);
        rep.add("antipode-star compatibility (left antipode)", !d2, d2 ? tuple_str({*d2 / m, *d2 % m}) : "");
    }
    rep.add("nondegeneracy", n == m && rank(p.rows) == n);
    return rep;
}

ModuleAction::ModuleAction(const DoubleGroupoid& t, const DoubleGroupoid& tp, ActionFormula formula)
    : formula_(formula), module_dim_(t.size()), table_(tp.size()) {
    std::map<Element, std::vector<Index>> by_a;
    for (Index x = 0; x < t.size(); ++x) by_a[t[x].a].push_back(x);
    for (Index a = 0; a < tp.size(); ++a) {
        Square at = transpose(tp[a]);
        Square left = formula == ActionFormula::Dual ? t.h_inverse(at) : t.v_inverse(at);
        for (Index x : by_a[left.d]) {
            auto r = t.v_compose(left, t[x]);
            table_[a].emplace_back(x, static_cast<Index>(t.at(*r)));
        }
    }
}

SparseVector ModuleAction::apply(Index actor, Index x) const {
    const auto& row = table_[actor];
    auto it = std::lower_bound(row.begin(), row.end(), x, [](const auto& e, Index k) { return e.first < k; });
    if (it == row.end() || it->first != x) return {};
    return SparseVector::basis(it->second);
}

SparseVector ModuleAction::apply(const SparseVector& a, const SparseVector& x) const {
    std::vector<SparseVector::Entry> out;
    for (const auto& [i, u] : a)
        for (const auto& [j, v] : x)
            for (const auto& [k, w] : apply(i, j)) out.emplace_back(k, u * v * w);
    return SparseVector::from_entries(std::move(out));
}

ModuleAction module_action(const DoubleGroupoid& t, const DoubleGroupoid& t_prime, ActionFormula formula) {
    return ModuleAction(t, t_prime, formula);
}

Report verify_action(const ModuleAction& act, const WeakHopfAlgebra& acting, const WeakHopfAlgebra& module) {
    Report rep(act.formula() == ActionFormula::Dual ? "module action" : "module action (displayed formula)");
    const StarAlgebra& A = acting.algebra;
    const StarAlgebra& M = module.algebra;
    const std::size_t na = A.dim(), nm = M.dim();
    auto first_bad = [](auto&& pred, std::size_t n1, std::size_t n2, std::size_t n3) -> std::string {
        for (Index i = 0; i < n1; ++i)
            for (Index j = 0; j < n2; ++j)
                for (Index k = 0; k < n3; ++k)
                    if (!pred(i, j, k)) return tuple_str({i, j, k});
        return {};
    };
    std::string bad;
    bad = first_bad([&](Index x, Index, Index) { return act.apply(A.unit(), SparseVector::basis(x)) == SparseVector::basis(x); },
                    nm, 1, 1);
    rep.add("unit law", bad.empty(), bad);
    bad = first_bad(
        [&](Index a, Index b, Index x) {
            return act.apply(A.product(a, b), SparseVector::basis(x)) ==
                   act.apply(SparseVector::basis(a), act.apply(b, x));
        },
        na, na, nm);
    rep.add("module law", bad.empty(), bad);
    bad = first_bad(
        [&](Index a, Index x, Index y) {
            SparseVector lhs = act.apply(SparseVector::basis(a), M.product(x, y));
            SparseVector rhs;
            for (const auto& t : acting.coproduct[a])
                rhs.add_scaled(M.multiply(act.apply(t.left, x), act.apply(t.right, y)), t.coef);
            return lhs == rhs;
        },
        na, nm, nm);
    rep.add("module-algebra product", bad.empty(), bad);
    bad = first_bad(
        [&](Index a, Index x, Index) {
            SparseVector lhs = M.star(act.apply(a, x));
            SparseVector rhs = act.apply(A.star(acting.antipode[a]), M.star(x));
            return lhs == rhs;
        },
        na, nm, 1);
    rep.add("star compatibility", bad.empty(), bad, "(a▷x)* = κ(a)*▷x*");
    bad = first_bad(
        [&](Index a, Index x, Index) {
            return M.star(act.apply(a, x)) == act.apply(acting.antipode[a], M.star(x));
        },
        na, nm, 1);
    rep.diagnostic("star compatibility without star on κ(a)", bad.empty(), "(a▷x)* = κ(a)▷x*");
    bad = first_bad(
        [&](Index a, Index, Index) {
            SparseVector ea = SparseVector::basis(a);
            return act.apply(ea, M.unit()) == act.apply(epsilon_t(acting, ea), M.unit());
        },
        na, 1, 1);
    rep.add("target counit condition", bad.empty(), bad, "a▷1 = ε^t(a)▷1");
    return rep;
}

std::optional<CrossedProduct> crossed_product(const ModuleAction& act, const WeakHopfAlgebra& acting,
                                              const WeakHopfAlgebra& module, std::size_t s_order, std::size_t guard) {
    const StarAlgebra& A = acting.algebra;
    const StarAlgebra& M = module.algebra;
    const std::size_t na = A.dim(), nm = M.dim();
    if (nm * na / s_order > guard) return std::nullopt;
    auto idx = [na](Index x, Index y) { return static_cast<Index>(x * na + y); };
    CartanSubalgebras cartan = cartan_subalgebras(acting);
    std::vector<SparseVector> relators;
    for (const auto& at : cartan.target) {
        SparseVector at1 = act.apply(at, M.unit());
        for (Index m = 0; m < nm; ++m) {
            SparseVector left = M.multiply(m, at1);
            for (Index a = 0; a < na; ++a) {
                std::vector<SparseVector::Entry> e;
                for (const auto& [i, u] : left) e.emplace_back(idx(i, a), u);
                for (const auto& [j, v] : A.multiply(at, a)) e.emplace_back(idx(m, j), -v);
                SparseVector r = SparseVector::from_entries(std::move(e));
                if (!r.empty()) relators.push_back(std::move(r));
            }
        }
    }
    ActionFn fn = [&act](Index a, Index x) { return act.apply(a, x); };
    CrossedProduct cp{quotient_tensor(M, A, acting.coproduct, fn, relators), 0};
    cp.center_dim = center(cp.quotient.algebra).size();
    return cp;
}

}  // namespace qgroupoid
