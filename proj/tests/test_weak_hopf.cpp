#include <doctest.h>

#include "qgroupoid/errors.hpp"
#include "qgroupoid/weak_hopf.hpp"

using namespace qgroupoid;

namespace {

// the pair groupoid on n objects: arrows (i, j), (i, j)(j, k) = (i, k)
FiniteGroupoid pair_groupoid(int n) {
    FiniteGroupoid g;
    auto idx = [n](int i, int j) { return i * n + j; };
    g.product.assign(n * n, std::vector<std::int32_t>(n * n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            g.labels.push_back(std::to_string(i) + "<-" + std::to_string(j));
            g.inverse.push_back(idx(j, i));
            g.is_unit.push_back(i == j);
            for (int k = 0; k < n; ++k) g.product[idx(i, j)][idx(j, k)] = idx(i, k);
        }
    return g;
}

Element testing_three_cycle(const FiniteGroup& g) {
    for (Element x = 0; x < g.order(); ++x)
        if (g.element_order(x) == 3) return x;
    return 0;
}

WeakHopfAlgebra with_coproduct(WeakHopfAlgebra w, Index i, Coproduct::value_type terms) {
    w.coproduct[i] = std::move(terms);
    return w;
}

}  // namespace

TEST_CASE("group and function algebras of a group are weak Kac algebras") {
    auto g = symmetric_group(3);
    for (const auto& w : {groupoid_regular_wha(groupoid_of_group(*g)), groupoid_function_wha(groupoid_of_group(*g))}) {
        Report r = verify_weak_hopf(w);
        INFO(r.text());
        CHECK(r.ok());
        CHECK(verify_weak_kac(w).ok());
        CHECK(cartan_subalgebras(w).target.size() == 1);
    }
    // a Hopf algebra: Γ(1) = 1 ⊗ 1
    auto reg = groupoid_regular_wha(groupoid_of_group(*g));
    auto g1 = reg.gamma_of_unit();
    REQUIRE(g1.size() == 1);
    CHECK(g1[0].left == 0);
    CHECK(g1[0].right == 0);
}

TEST_CASE("groupoid algebras have Cartan subalgebras of dimension the number of objects") {
    for (int n : {2, 3}) {
        FiniteGroupoid pg = pair_groupoid(n);
        validate_groupoid(pg);
        for (const auto& w : {groupoid_regular_wha(pg), groupoid_function_wha(pg)}) {
            CHECK(verify_weak_hopf(w).ok());
            auto c = cartan_subalgebras(w);
            CHECK(c.target.size() == static_cast<std::size_t>(n));
            CHECK(c.source.size() == static_cast<std::size_t>(n));
            CHECK(c.report.ok());
        }
        // Γ(1) ≠ 1 ⊗ 1 for the groupoid algebra: Σ_i e_i ⊗ e_i
        auto g1 = groupoid_regular_wha(pg).gamma_of_unit();
        CHECK(g1.size() == static_cast<std::size_t>(n));
    }
}

TEST_CASE("epsilon_t on the groupoid algebra maps an arrow to its target unit") {
    FiniteGroupoid pg = pair_groupoid(3);
    auto w = groupoid_regular_wha(pg);
    for (Index a = 0; a < 9; ++a) {
        Index target = (a / 3) * 3 + a / 3;  // (i, j) ↦ (i, i)
        CHECK(epsilon_t(w, SparseVector::basis(a)) == SparseVector::basis(target));
    }
}

TEST_CASE("invalid groupoids are rejected") {
    FiniteGroupoid pg = pair_groupoid(2);
    pg.product[1][2] = 1;  // (0,1)(1,0) should be the unit (0,0)
    CHECK_THROWS_AS(validate_groupoid(pg), NotAGroupoid);
    FiniteGroupoid q = pair_groupoid(2);
    q.inverse[1] = 1;
    CHECK_THROWS_AS(validate_groupoid(q), NotAGroupoid);
}

TEST_CASE("mutations of the coproduct, counit and antipode are caught") {
    auto g = symmetric_group(3);
    auto w = groupoid_regular_wha(groupoid_of_group(*g));
    // Γ(g) = g ⊗ g replaced by g ⊗ e
    Report c = verify_weak_hopf(with_coproduct(w, 1, {{1, 0, 1}}));
    CHECK_FALSE(c.ok());
    CHECK_FALSE(c.passed("coproduct multiplicativity"));

    auto scaled = w;
    scaled.counit[2] = 2;
    CHECK_FALSE(verify_weak_hopf(scaled).passed("counit"));

    // κ(g) = g is wrong on a 3-cycle
    auto anti = w;
    Element r = testing_three_cycle(*g);
    anti.antipode[r] = SparseVector::basis(r);
    CHECK_FALSE(verify_weak_hopf(anti).passed("antipode axiom"));

    // a non-involutive antipode breaks the weak Kac property
    auto f = groupoid_function_wha(groupoid_of_group(*g));
    auto bad = f;
    std::swap(bad.antipode[1], bad.antipode[2]);
    CHECK_FALSE(verify_weak_hopf(bad).ok());
}
