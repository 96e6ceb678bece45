#pragma once

#include <vector>

#include "qgroupoid/matched_pair.hpp"
#include "qgroupoid/quantum_groupoid.hpp"
#include "qgroupoid/report.hpp"

namespace qgroupoid {

struct SuiteOptions {
    std::size_t crossed_product_guard = kDefaultCrossedProductGuard;
    std::size_t action_guard = 256;         // module dimension limit for the cubic action checks
    std::size_t fixture_guard = 1500;       // |T| limit for the groupoid fixtures
    std::size_t interchange_limit = 1500;
};

// Structure-constant equality of a and b under the basis bijection i ↦ matching[i].
Report compare_weak_hopf(const WeakHopfAlgebra& a, const WeakHopfAlgebra& b, const std::vector<Index>& matching);

// dim A_t = dim A_s = |S| and A_t commutative iff S abelian, on top of the Cartan report.
Report verify_cartan(const RelativeMatchedPair& pair, const WeakHopfAlgebra& w);

// For H = {e}: ℂT against the function algebra of K through (e,k,k,e) ↦ δ_{k⁻¹}.
// For K = {e}: ℂT against the group algebra of H through (h,e,e,h) ↦ h.
// Empty report otherwise.
Report verify_degeneration(const RelativeMatchedPair& pair, const DoubleGroupoid& t, const WeakHopfAlgebra& ct);

// Everything: action tables, cocycles, representative changes, squares,
// both quantum groupoids, Cartan subalgebras, duality, the module action,
// the presented algebras with calmos_iso and θ, the crossed product,
// the groupoid fixtures and the degenerate cases.
Report verify_pair(const RelativeMatchedPair& pair, const SuiteOptions& options = {});

}  // namespace qgroupoid
