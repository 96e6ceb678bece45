#include <doctest.h>

#include <set>

#include "qgroupoid/quantum_groupoid.hpp"
#include "qgroupoid/suite.hpp"
#include "support.hpp"

using namespace qgroupoid;

namespace {

struct Built {
    PairInput in;
    DoubleGroupoid t, tp;
    WeakHopfAlgebra ct, ctp;
    explicit Built(const std::string& file)
        : in(testing::load(file)),
          t(in.pair, Variant::T),
          tp(in.pair, Variant::TPrime),
          ct(build_CT(in.pair, t)),
          ctp(build_CT_prime(in.pair, tp)) {}
};

std::size_t brute_classes(const Subgroup& s) {
    const FiniteGroup& g = s.group();
    std::set<std::set<Element>> classes;
    for (Element x : s.elements()) {
        std::set<Element> c;
        for (Element y : s.elements()) c.insert(g.mul(y, x, g.inv(y)));
        classes.insert(c);
    }
    return classes.size();
}

}  // namespace

TEST_CASE("CT and CT' satisfy the weak Hopf axioms on the small corpus") {
    for (const char* file : testing::kSmall) {
        Built b(file);
        INFO(file);
        Report r = verify_weak_hopf(b.ct);
        INFO(r.text());
        CHECK(r.ok());
        CHECK(verify_weak_hopf(b.ctp).ok());
        CHECK(verify_weak_kac(b.ct).ok());
        CHECK(verify_weak_kac(b.ctp).ok());
    }
}

TEST_CASE("counit, unit and coproduct against their defining sums") {
    Built b("b_s3_s3_c2.json");
    const auto& sq = b.t;
    const FiniteGroup& g = b.in.pair.group();
    const Rational s(static_cast<std::int64_t>(b.in.pair.S().order()));
    for (Index i = 0; i < sq.size(); ++i) {
        const Square& t = sq[i];
        CHECK(b.ct.counit[i] == ((t.b == 0 && t.c == 0) ? s : Rational(0)));
        CHECK(b.ct.algebra.unit().at(i) == ((t.a == 0 && t.d == 0 && t.b == t.c) ? Rational(1) : Rational(0)));
        // Γ(t) = |S|⁻¹ Σ t₁ ⊗ t₂ over all pairs with t₂ ⋆ᵛ t₁ = t, by scanning T × T
        KeyedSum expect, got;
        for (Index x = 0; x < sq.size(); ++x)
            for (Index y = 0; y < sq.size(); ++y) {
                const Square &t1 = sq[x], &t2 = sq[y];
                if (t2.d == t1.a && Square{t2.a, g.mul(t2.b, t1.b), g.mul(t2.c, t1.c), t1.d} == t)
                    add_to(expect, static_cast<std::uint64_t>(x) * sq.size() + y, Rational(1) / s);
            }
        for (const auto& term : b.ct.coproduct[i])
            add_to(got, static_cast<std::uint64_t>(term.left) * sq.size() + term.right, term.coef);
        CHECK_FALSE(first_difference(expect, got));
    }
    // weak: Γ(1) ≠ 1 ⊗ 1
    CHECK(b.ct.gamma_of_unit().size() > 1);
}

TEST_CASE("Cartan subalgebras have dimension |S|") {
    for (const char* file : {"a_s3_matched.json", "b_s3_s3_c2.json", "c_s4_frattini_p3.json", "d_trivial_s3.json"}) {
        Built b(file);
        INFO(file);
        Report r = verify_cartan(b.in.pair, b.ct);
        INFO(r.text());
        CHECK(r.ok());
        CHECK(verify_cartan(b.in.pair, b.ctp).ok());
    }
}

TEST_CASE("nonabelian S gives a noncommutative A_t") {
    Built b("e_s3xs3.json");
    CHECK(b.in.pair.S().order() == 6);
    auto c = cartan_subalgebras(b.ct);
    CHECK(c.target.size() == 6);
    CHECK_FALSE(c.target_commutative);
    CHECK(verify_cartan(b.in.pair, b.ct).ok());
}

TEST_CASE("pairing matrix is |S| times the transpose permutation") {
    for (const char* file : testing::kSmall) {
        Built b(file);
        auto p = build_pairing(b.in.pair, b.t, b.tp);
        const Rational s(static_cast<std::int64_t>(b.in.pair.S().order()));
        for (Index x = 0; x < b.t.size(); ++x)
            for (Index y = 0; y < b.tp.size(); ++y) {
                const Square &u = b.t[x], &v = b.tp[y];
                bool transposed = v.a == u.c && v.b == u.d && v.c == u.a && v.d == u.b;
                CHECK(p.rows[x].at(y) == (transposed ? s : Rational(0)));
            }
        Report r = verify_duality(b.ct, b.ctp, p);
        INFO(r.text());
        CHECK(r.ok());
    }
}

TEST_CASE("a mis-scaled pairing fails the duality checks") {
    Built b("b_s3_s3_c2.json");
    auto p = build_pairing(b.in.pair, b.t, b.tp);
    for (auto& row : p.rows) row = row.scaled(Rational(1, 2));
    Report r = verify_duality(b.ct, b.ctp, p);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.passed("counit-unit compatibility"));
}

TEST_CASE("the action dual to the pairing satisfies the module-algebra axioms") {
    for (const char* file : testing::kSmall) {
        Built b(file);
        INFO(file);
        Report r = verify_action(module_action(b.t, b.tp), b.ctp, b.ct);
        INFO(r.text());
        CHECK(r.ok());
    }
}

TEST_CASE("the displayed action formula fails the module-algebra product axiom") {
    Built b("a_s3_matched.json");
    Report r = verify_action(module_action(b.t, b.tp, ActionFormula::Displayed), b.ctp, b.ct);
    CHECK_FALSE(r.passed("module-algebra product"));
    Built c("b_s3_s3_c2.json");
    Report s = verify_action(module_action(c.t, c.tp, ActionFormula::Displayed), c.ctp, c.ct);
    CHECK_FALSE(s.passed("module law"));
}

TEST_CASE("crossed products: dimension |S|(|H||K|)^2 and center of dimension #classes(S)") {
    for (const char* file : testing::kSmall) {
        Built b(file);
        INFO(file);
        const auto& p = b.in.pair;
        auto cp = crossed_product(module_action(b.t, b.tp), b.ctp, b.ct, p.S().order());
        REQUIRE(cp);
        std::size_t hk = p.H().order() * p.K().order();
        CHECK(cp->quotient.algebra.dim() == p.S().order() * hk * hk);
        CHECK(cp->center_dim == brute_classes(p.S()));
        CHECK(verify_algebra(cp->quotient.algebra).ok());
    }
}

TEST_CASE("the crossed-product guard skips large cases") {
    Built b("c_s4_frattini_p3.json");
    CHECK_FALSE(crossed_product(module_action(b.t, b.tp), b.ctp, b.ct, b.in.pair.S().order()));
}

TEST_CASE("({e}, G) is the function algebra under t_k -> delta(k^-1)") {
    Built b("d_trivial_s3.json");
    const FiniteGroup& g = b.in.pair.group();
    // squares are (e,k,k,e), one per k, in id order
    for (Index k = 0; k < g.order(); ++k) REQUIRE(b.t[k].b == k);
    for (Index k = 0; k < g.order(); ++k) {
        for (Index l = 0; l < g.order(); ++l)
            CHECK(b.ct.algebra.product(k, l) == (k == l ? SparseVector::basis(k) : SparseVector{}));
        CHECK(b.ct.counit[k] == (k == 0 ? Rational(1) : Rational(0)));
        // Γ(δ_{k⁻¹}) = Σ_{xy = k⁻¹} δ_x ⊗ δ_y, pulled back through x = b₁⁻¹, y = b₂⁻¹
        std::set<std::pair<Index, Index>> expect, got;
        for (Element x = 0; x < g.order(); ++x)
            for (Element y = 0; y < g.order(); ++y)
                if (g.mul(x, y) == g.inv(k)) expect.insert({g.inv(x), g.inv(y)});
        for (const auto& term : b.ct.coproduct[k]) {
            CHECK(term.coef == Rational(1));
            got.insert({term.left, term.right});
        }
        CHECK(expect == got);
        CHECK(b.ct.antipode[k] == SparseVector::basis(g.inv(k)));
    }
    Report r = verify_degeneration(b.in.pair, b.t, b.ct);
    CHECK(r.ok());
    // the naive matching t_k -> delta(k) only works for abelian groups
    const Check* naive = r.find("function algebra under (e,k,k,e) -> delta(k)");
    REQUIRE(naive);
    CHECK_FALSE(naive->passed);
    Built z("d_trivial_z2.json");
    Report rz = verify_degeneration(z.in.pair, z.t, z.ct);
    CHECK(rz.ok());
    CHECK(rz.find("function algebra under (e,k,k,e) -> delta(k)")->passed);
}

TEST_CASE("(G, {e}) is the group algebra under the identity matching") {
    for (const char* file : {"d_s3_trivial.json", "d_z2_trivial.json"}) {
        Built b(file);
        const FiniteGroup& g = b.in.pair.group();
        for (Index h = 0; h < g.order(); ++h) {
            REQUIRE(b.t[h].a == h);
            for (Index l = 0; l < g.order(); ++l) CHECK(b.ct.algebra.product(h, l) == SparseVector::basis(g.mul(h, l)));
            REQUIRE(b.ct.coproduct[h].size() == 1);
            CHECK(b.ct.coproduct[h][0].left == h);
            CHECK(b.ct.coproduct[h][0].right == h);
            CHECK(b.ct.counit[h] == Rational(1));
            CHECK(b.ct.algebra.star(h) == SparseVector::basis(g.inv(h)));
        }
        CHECK(verify_degeneration(b.in.pair, b.t, b.ct).ok());
    }
}

TEST_CASE("horizontal groupoid fixtures pass the verifier") {
    for (const char* file : {"a_s3_matched.json", "b_s3_s3_c2.json"}) {
        Built b(file);
        FiniteGroupoid hg = horizontal_groupoid(b.t);
        validate_groupoid(hg);
        CHECK(verify_weak_hopf(groupoid_function_wha(hg)).ok());
        CHECK(verify_weak_hopf(groupoid_regular_wha(hg)).ok());
        // the square algebra with |S| = 1 has the groupoid algebra as its underlying algebra
        if (b.in.pair.S().order() == 1) {
            auto reg = groupoid_regular_wha(hg);
            for (Index i = 0; i < b.t.size(); ++i)
                for (Index j = 0; j < b.t.size(); ++j)
                    CHECK(reg.algebra.product(i, j) == b.ct.algebra.product(i, j));
        }
    }
}
