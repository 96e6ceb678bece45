#include "qgroupoid/suite.hpp"

#include "qgroupoid/errors.hpp"
#include "qgroupoid/presentation.hpp"

namespace qgroupoid {
namespace {

SparseVector relabel(const SparseVector& v, const std::vector<Index>& m) {
    std::vector<SparseVector::Entry> e;
    for (const auto& [i, c] : v) e.emplace_back(m[i], c);
    return SparseVector::from_entries(std::move(e));
}

bool is_abelian(const Subgroup& s) {
    const FiniteGroup& g = s.group();
    for (Element x : s.elements())
        for (Element y : s.elements())
            if (g.mul(x, y) != g.mul(y, x)) return false;
    return true;
}

bool has_alternative(const CosetSpace& c) {
    for (const auto& b : c.blocks())
        if (b.size() > 1 && b.front() != 0) return true;
    return false;
}

}  // namespace

Report compare_weak_hopf(const WeakHopfAlgebra& a, const WeakHopfAlgebra& b, const std::vector<Index>& matching) {
    Report rep("structure constants");
    const std::size_t n = a.dim();
    bool bijective = b.dim() == n && matching.size() == n;
    std::vector<bool> hit(b.dim());
    for (Index m : matching)
        if (m < hit.size()) hit[m] = true;
    for (bool h : hit) bijective = bijective && h;
    rep.add("basis bijection", bijective);
    if (!bijective) return rep;
    std::string prod, star, cop, counit, anti;
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n && prod.empty(); ++j)
            if (relabel(a.algebra.product(i, j), matching) != b.algebra.product(matching[i], matching[j]))
                prod = a.algebra.label(i) + " " + a.algebra.label(j);
        if (star.empty() && relabel(a.algebra.star(i), matching) != b.algebra.star(matching[i]))
            star = a.algebra.label(i);
        KeyedSum x, y;
        for (const auto& t : a.coproduct[i])
            add_to(x, static_cast<std::uint64_t>(matching[t.left]) * n + matching[t.right], t.coef);
        for (const auto& t : b.coproduct[matching[i]]) add_to(y, static_cast<std::uint64_t>(t.left) * n + t.right, t.coef);
        if (cop.empty() && first_difference(x, y)) cop = a.algebra.label(i);
        if (counit.empty() && a.counit[i] != b.counit[matching[i]]) counit = a.algebra.label(i);
        if (anti.empty() && relabel(a.antipode[i], matching) != b.antipode[matching[i]]) anti = a.algebra.label(i);
    }
    rep.add("unit", relabel(a.algebra.unit(), matching) == b.algebra.unit());
    rep.add("product", prod.empty(), prod);
    rep.add("star", star.empty(), star);
    rep.add("coproduct", cop.empty(), cop);
    rep.add("counit", counit.empty(), counit);
    rep.add("antipode", anti.empty(), anti);
    return rep;
}

Report verify_cartan(const RelativeMatchedPair& pair, const WeakHopfAlgebra& w) {
    CartanSubalgebras c = cartan_subalgebras(w);
    Report rep("Cartan subalgebras");
    rep.merge(c.report);
    const std::size_t s = pair.S().order();
    rep.add("dim A_t = |S|", c.target.size() == s, std::to_string(c.target.size()));
    rep.add("dim A_s = |S|", c.source.size() == s, std::to_string(c.source.size()));
    rep.add("A_t commutative iff S abelian", c.target_commutative == is_abelian(pair.S()),
            c.target_commutative ? "commutative" : "noncommutative");
    return rep;
}

Report verify_degeneration(const RelativeMatchedPair& pair, const DoubleGroupoid& t, const WeakHopfAlgebra& ct) {
    Report rep("degeneration");
    const FiniteGroup& g = pair.group();
    std::vector<Index> identity, inverse;
    for (Index i = 0; i < t.size(); ++i) {
        Element x = pair.H().order() == 1 ? t[i].b : t[i].a;
        identity.push_back(x);
        inverse.push_back(g.inv(x));
    }
    FiniteGroupoid group = groupoid_of_group(g);
    if (pair.H().order() == 1) {
        WeakHopfAlgebra f = groupoid_function_wha(group);
        rep.merge(compare_weak_hopf(ct, f, inverse), "function algebra, (e,k,k,e) -> delta(k^-1)");
        rep.diagnostic("function algebra under (e,k,k,e) -> delta(k)", compare_weak_hopf(ct, f, identity).ok());
    }
    if (pair.K().order() == 1) {
        WeakHopfAlgebra r = groupoid_regular_wha(group);
        rep.merge(compare_weak_hopf(ct, r, identity), "group algebra, (h,e,e,h) -> h");
    }
    return rep;
}

Report verify_pair(const RelativeMatchedPair& pair, const SuiteOptions& opt) {
    Report rep("relative matched pair");
    const std::size_t s_order = pair.S().order();

    rep.merge(verify_action_tables(pair), "tables");
    rep.merge(verify_cocycles(pair), "cocycles");
    std::optional<RelativeMatchedPair> alt;
    if (has_alternative(pair.I()) || has_alternative(pair.J())) {
        alt = pair.with_representatives(alternative_representatives(pair.I()), alternative_representatives(pair.J()));
        rep.merge(verify_action_conjugacy(pair, *alt), "representatives");
    } else {
        rep.skip("representatives", "every coset has a single admissible representative");
    }

    DoubleGroupoid t(pair, Variant::T), tp(pair, Variant::TPrime);
    rep.merge(verify_double_groupoid(pair, t, opt.interchange_limit), "T");
    rep.merge(verify_double_groupoid(pair, tp, opt.interchange_limit), "T'");
    rep.merge(verify_transpose(t, tp), "transpose");

    WeakHopfAlgebra ct = build_CT(pair, t), ctp = build_CT_prime(pair, tp);
    rep.merge(verify_weak_hopf(ct), "CT");
    rep.merge(verify_weak_kac(ct), "CT");
    rep.merge(verify_cartan(pair, ct), "CT");
    rep.merge(verify_weak_hopf(ctp), "CT'");
    rep.merge(verify_weak_kac(ctp), "CT'");
    rep.merge(verify_cartan(pair, ctp), "CT'");
    rep.merge(verify_duality(ct, ctp, build_pairing(pair, t, tp)), "duality");

    ModuleAction action = module_action(t, tp);
    if (ct.dim() <= opt.action_guard) {
        rep.merge(verify_action(action, ctp, ct), "action");
        rep.diagnostic("action: displayed formula satisfies the axioms",
                       verify_action(module_action(t, tp, ActionFormula::Displayed), ctp, ct).ok());
    } else {
        rep.skip("action", "module dimension " + std::to_string(ct.dim()) + " exceeds the action guard");
    }

    for (Side side : {Side::HK, Side::KH}) {
        const std::string tag = side == Side::HK ? "presented HK" : "presented KH";
        const DoubleGroupoid& sq = side == Side::HK ? t : tp;
        const WeakHopfAlgebra& target = side == Side::HK ? ct : ctp;
        PresentedAlgebra p = build_presented(pair, side);
        rep.add(tag + ": dimension |H||K||S|", p.algebra.dim() == t.size(), std::to_string(p.algebra.dim()));
        rep.merge(verify_algebra(p.algebra), tag);
        rep.merge(verify_generator_relations(pair, p), tag);
        rep.merge(verify_sigma(pair, p), tag + " sigma");
        LinearMap iso = calmos_iso(pair, p, sq);
        rep.merge(verify_isomorphism(p.algebra, target.algebra, iso), tag + " calmos_iso");
        rep.merge(verify_theta(p, sq, theta_basis(iso)), tag + " theta");
        if (alt) {
            PresentedAlgebra p2 = build_presented(*alt, side);
            rep.merge(verify_sigma_conjugacy(pair, p, *alt, p2), tag);
            rep.merge(verify_isomorphism(p.algebra, p2.algebra, representative_iso(pair, p, *alt, p2)),
                      tag + " representative change");
        }
    }

    const std::size_t expected = s_order * pair.H().order() * pair.K().order() * pair.H().order() * pair.K().order();
    if (expected <= opt.crossed_product_guard && ct.dim() <= opt.action_guard) {
        try {
            auto cp = crossed_product(action, ctp, ct, s_order, opt.crossed_product_guard);
            rep.add("crossed product: dimension |S|(|H||K|)^2", cp->quotient.algebra.dim() == expected,
                    std::to_string(cp->quotient.algebra.dim()));
            const std::size_t classes = conjugacy_classes(pair.S()).size();
            rep.add("crossed product: center dimension = classes of S", cp->center_dim == classes,
                    std::to_string(cp->center_dim) + " vs " + std::to_string(classes));
            rep.merge(verify_algebra(cp->quotient.algebra), "crossed product");
        } catch (const IllDefinedOnQuotient& e) {
            rep.add("crossed product: well defined", false, e.what());
        }
    } else {
        rep.skip("crossed product", "dimension " + std::to_string(expected) + " exceeds the guard");
    }

    if (t.size() <= opt.fixture_guard) {
        FiniteGroupoid hg = horizontal_groupoid(t);
        try {
            validate_groupoid(hg);
            rep.add("fixtures: (T, h) is a groupoid", true);
            rep.merge(verify_weak_hopf(groupoid_function_wha(hg)), "fixtures: function algebra");
            rep.merge(verify_weak_hopf(groupoid_regular_wha(hg)), "fixtures: groupoid algebra");
        } catch (const NotAGroupoid& e) {
            rep.add("fixtures: (T, h) is a groupoid", false, e.what());
        }
    } else {
        rep.skip("fixtures", std::to_string(t.size()) + " squares exceed the fixture guard");
    }

    rep.merge(verify_degeneration(pair, t, ct), "degeneration");
    return rep;
}

}  // namespace qgroupoid
