#pragma once

#include <string>
#include <vector>

#include "qgroupoid/group.hpp"
#include "qgroupoid/star_algebra.hpp"

namespace qgroupoid {

struct WeakHopfAlgebra {
    StarAlgebra algebra;
    Coproduct coproduct;             // Γ(e_i)
    std::vector<Rational> counit;    // ε(e_i)
    std::vector<SparseVector> antipode;  // κ(e_i)

    std::size_t dim() const { return algebra.dim(); }
    Rational epsilon(const SparseVector& x) const;
    SparseVector kappa(const SparseVector& x) const;
    // Γ applied to a vector, as terms sorted by (left, right).
    std::vector<TensorTerm> gamma(const SparseVector& x) const;
    std::vector<TensorTerm> gamma_of_unit() const { return gamma(algebra.unit()); }
};

// Coassociativity, Γ multiplicativity, counit and weak multiplicativity,
// the antipode axioms and (κ∘*)² = id, plus the underlying algebra checks.
Report verify_weak_hopf(const WeakHopfAlgebra& w);
// κ² = id and ε∘κ = ε.
Report verify_weak_kac(const WeakHopfAlgebra& w);

// ε(1₍₁₎a)1₍₂₎
SparseVector epsilon_t(const WeakHopfAlgebra& w, const SparseVector& a);

struct CartanSubalgebras {
    std::vector<SparseVector> target;  // A_t
    std::vector<SparseVector> source;  // A_s
    bool target_commutative = false;
    Report report;
};

CartanSubalgebras cartan_subalgebras(const WeakHopfAlgebra& w);

// A finite groupoid as a partial multiplication table.
struct FiniteGroupoid {
    std::vector<std::string> labels;
    std::vector<std::vector<std::int32_t>> product;  // -1 when not composable
    std::vector<Index> inverse;
    std::vector<bool> is_unit;

    std::size_t size() const { return labels.size(); }
};

// Throws NotAGroupoid.
void validate_groupoid(const FiniteGroupoid& g);
FiniteGroupoid groupoid_of_group(const FiniteGroup& g);

WeakHopfAlgebra groupoid_function_wha(const FiniteGroupoid& g);
WeakHopfAlgebra groupoid_regular_wha(const FiniteGroupoid& g);

}  // namespace qgroupoid
