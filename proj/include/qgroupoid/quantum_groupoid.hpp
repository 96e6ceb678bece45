#pragma once

#include <optional>

#include "qgroupoid/double_groupoid.hpp"
#include "qgroupoid/weak_hopf.hpp"

namespace qgroupoid {

// Weak Hopf algebra on the squares of a double groupoid: product ⋆ʰ, star t⁻ʰ,
// Γ(t) = |S|⁻¹ Σ_{t₂⋆ᵛt₁ = t} t₁⊗t₂, ε = |S| on vertical units, κ(t) = t⁻ʰᵛ.
WeakHopfAlgebra build_square_algebra(const DoubleGroupoid& squares, std::size_t s_order);
WeakHopfAlgebra build_CT(const RelativeMatchedPair& pair, const DoubleGroupoid& t);
WeakHopfAlgebra build_CT_prime(const RelativeMatchedPair& pair, const DoubleGroupoid& t_prime);

// (T, ⋆ʰ) as a finite groupoid.
FiniteGroupoid horizontal_groupoid(const DoubleGroupoid& squares);

// |S| when x′ is the transpose of x, else 0
Rational pairing(const RelativeMatchedPair& pair, const Square& x, const Square& x_prime);

struct DualityPairing {
    std::vector<SparseVector> rows;  // rows[x] = Σ ⟨x, x′⟩ e_x′
};

DualityPairing build_pairing(const RelativeMatchedPair& pair, const DoubleGroupoid& t, const DoubleGroupoid& t_prime);

// Adjointness in both directions with legs paired as ⟨a⊗b, y⊗z⟩ = ⟨a,z⟩⟨b,y⟩,
// counit/unit, antipode/star and nondegeneracy.
Report verify_duality(const WeakHopfAlgebra& left, const WeakHopfAlgebra& right, const DualityPairing& p);

enum class ActionFormula {
    Dual,       // a▷x = (aᵗ)⁻ʰ ⋆ᵛ x, the transpose of right multiplication by κ̂(a)
    Displayed,  // a▷x = (aᵗ)⁻ᵛ ⋆ᵛ x
};

// ℂT′ acting on ℂT; each basis pair acts to a single square or zero.
class ModuleAction {
public:
    ModuleAction(const DoubleGroupoid& t, const DoubleGroupoid& t_prime, ActionFormula formula);
    ActionFormula formula() const { return formula_; }
    std::size_t actor_dim() const { return table_.size(); }
    std::size_t module_dim() const { return module_dim_; }
    SparseVector apply(Index actor, Index x) const;
    SparseVector apply(const SparseVector& a, const SparseVector& x) const;

private:
    ActionFormula formula_;
    std::size_t module_dim_;
    std::vector<std::vector<std::pair<Index, Index>>> table_;  // actor -> sorted (x, result)
};

ModuleAction module_action(const DoubleGroupoid& t, const DoubleGroupoid& t_prime,
                           ActionFormula formula = ActionFormula::Dual);

// Module law, unit law and the three module-algebra axioms.
Report verify_action(const ModuleAction& action, const WeakHopfAlgebra& acting, const WeakHopfAlgebra& module);

struct CrossedProduct {
    QuotientAlgebra quotient;
    std::size_t center_dim = 0;
};

inline constexpr std::size_t kDefaultCrossedProductGuard = 4096;

// M ⊗_{A_t} A for M = ℂT, A = ℂT′. nullopt when the quotient dimension
// |S|·(|H||K|)² would exceed the guard.
std::optional<CrossedProduct> crossed_product(const ModuleAction& action, const WeakHopfAlgebra& acting,
                                              const WeakHopfAlgebra& module, std::size_t s_order,
                                              std::size_t guard = kDefaultCrossedProductGuard);

}  // namespace qgroupoid
