#include <doctest.h>

#include <set>

#include "qgroupoid/errors.hpp"
#include "qgroupoid/group.hpp"
#include "qgroupoid/star_algebra.hpp"

using namespace qgroupoid;

namespace {

// M_n(Q) on matrix units e_ij = index i*n + j
StarAlgebra matrix_algebra(std::size_t n) {
    std::vector<std::string> labels;
    std::vector<Product> products;
    std::vector<SparseVector> star;
    std::vector<SparseVector::Entry> unit;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            labels.push_back("e" + std::to_string(i) + std::to_string(j));
            star.push_back(SparseVector::basis(j * n + i));
            if (i == j) unit.emplace_back(i * n + i, 1);
            for (Index l = 0; l < n; ++l)
                products.push_back({static_cast<Index>(i * n + j), static_cast<Index>(j * n + l),
                                    SparseVector::basis(static_cast<Index>(i * n + l))});
        }
    return StarAlgebra(n * n, labels, products, SparseVector::from_entries(unit), star);
}

StarAlgebra group_algebra(const FiniteGroup& g) {
    std::vector<std::string> labels;
    std::vector<Product> products;
    std::vector<SparseVector> star;
    for (Element x = 0; x < g.order(); ++x) {
        labels.push_back(g.name(x));
        star.push_back(SparseVector::basis(g.inv(x)));
        for (Element y = 0; y < g.order(); ++y) products.push_back({x, y, SparseVector::basis(g.mul(x, y))});
    }
    return StarAlgebra(g.order(), labels, products, SparseVector::basis(0), star);
}

}  // namespace

TEST_CASE("matrix algebras are simple star algebras") {
    for (std::size_t n : {1u, 2u, 3u}) {
        StarAlgebra m = matrix_algebra(n);
        CHECK(verify_algebra(m).ok());
        CHECK(center(m).size() == 1);
    }
    StarAlgebra m2 = matrix_algebra(2);
    CHECK(m2.product(1, 2) == SparseVector::basis(0));  // e01 e10 = e00
    CHECK(m2.product(2, 2).empty());                    // e10 e10 = 0
    CHECK(m2.monomial());
}

TEST_CASE("tensor products multiply dimensions and centers") {
    StarAlgebra t = tensor_algebra(matrix_algebra(2), matrix_algebra(2));
    CHECK(t.dim() == 16);
    CHECK(verify_algebra(t).ok());
    CHECK(center(t).size() == 1);
    auto s3 = symmetric_group(3);
    StarAlgebra g = group_algebra(*s3);
    CHECK(center(tensor_algebra(g, matrix_algebra(2))).size() == 3);
}

TEST_CASE("the center of a group algebra is spanned by class sums") {
    for (int n : {3, 4}) {
        auto g = symmetric_group(n);
        StarAlgebra a = group_algebra(*g);
        CHECK(verify_algebra(a).ok());
        auto z = center(a);
        std::set<std::set<Element>> classes;
        for (Element x = 0; x < g->order(); ++x) {
            std::set<Element> c;
            for (Element y = 0; y < g->order(); ++y) c.insert(g->mul(y, x, g->inv(y)));
            classes.insert(c);
        }
        CHECK(z.size() == classes.size());
        std::vector<SparseVector> sums;
        for (const auto& c : classes) {
            std::vector<SparseVector::Entry> e;
            for (Element x : c) e.emplace_back(x, 1);
            sums.push_back(SparseVector::from_entries(e));
        }
        CHECK(same_span(z, sums));
    }
}

TEST_CASE("mutated structure constants are caught") {
    auto s3 = symmetric_group(3);
    StarAlgebra a = group_algebra(*s3);
    auto products = a.products();
    for (auto& p : products)
        if (p.i == 1 && p.j == 2) p.value = SparseVector::basis(p.value.leading() == 0 ? 1 : 0);
    StarAlgebra broken(a.dim(), a.labels(), products, a.unit(), a.star_columns());
    Report r = verify_algebra(broken);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.passed("associativity"));

    auto star = a.star_columns();
    star[1] = SparseVector::basis(1, 2);
    Report s = verify_algebra(StarAlgebra(a.dim(), a.labels(), a.products(), a.unit(), star));
    CHECK_FALSE(s.passed("involutivity"));
}

TEST_CASE("homomorphism checks") {
    StarAlgebra m = matrix_algebra(2);
    CHECK(verify_isomorphism(m, m, LinearMap::identity(4)).ok());
    LinearMap zero{4, 4, std::vector<SparseVector>(4)};
    Report z = verify_homomorphism(m, m, zero);
    CHECK_FALSE(z.passed("unit"));
    // transpose is an anti-automorphism, so not multiplicative
    LinearMap tr{4, 4, {}};
    for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 2; ++j) tr.columns.push_back(SparseVector::basis(j * 2 + i));
    CHECK_FALSE(verify_homomorphism(m, m, tr).passed("multiplicativity"));
    // conjugation by the swap matrix is an automorphism
    LinearMap swap{4, 4, {}};
    for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 2; ++j) swap.columns.push_back(SparseVector::basis((1 - i) * 2 + (1 - j)));
    CHECK(verify_isomorphism(m, m, swap).ok());
    LinearMap wrong{4, 3, std::vector<SparseVector>(4)};
    CHECK_FALSE(verify_homomorphism(m, m, wrong).passed("dimensions"));
}

TEST_CASE("generating basis reaches every basis element") {
    auto s4 = symmetric_group(4);
    StarAlgebra a = group_algebra(*s4);
    auto gens = generating_basis(a);
    CHECK(gens.size() < a.dim());
    std::set<Index> reached(gens.begin(), gens.end());
    reached.insert(0);
    bool grew = true;
    while (grew) {
        grew = false;
        for (Index x : std::vector<Index>(reached.begin(), reached.end()))
            for (Index g : gens) grew |= reached.insert(a.product(x, g).leading()).second;
    }
    CHECK(reached.size() == a.dim());
}

TEST_CASE("relative tensor quotients") {
    // Q ⊗ Q[Z/2] with the trivial action; Γ(g) = g ⊗ g
    auto z2 = cyclic_group(2);
    StarAlgebra a = group_algebra(*z2);
    StarAlgebra m = matrix_algebra(1);
    Coproduct cop = {{{0, 0, 1}}, {{1, 1, 1}}};
    ActionFn trivial = [](Index, Index x) { return SparseVector::basis(x); };
    QuotientAlgebra free = quotient_tensor(m, a, cop, trivial, {});
    CHECK(free.algebra.dim() == 2);
    CHECK(verify_algebra(free.algebra).ok());
    QuotientAlgebra collapsed =
        quotient_tensor(m, a, cop, trivial, {SparseVector::from_entries({{0, -1}, {1, 1}})});
    CHECK(collapsed.algebra.dim() == 1);
    CHECK(verify_algebra(collapsed.algebra).ok());
    CHECK_THROWS_AS(quotient_tensor(m, a, cop, trivial, {SparseVector::basis(1)}), IllDefinedOnQuotient);
}
