#pragma once

#include <array>
#include <vector>

#include "qgroupoid/double_groupoid.hpp"
#include "qgroupoid/matched_pair.hpp"
#include "qgroupoid/report.hpp"
#include "qgroupoid/star_algebra.hpp"

namespace qgroupoid {

// HK: (C(K)⋊S)⋊H with basis V_h·χ_k·ρ(s), h ∈ H, k ∈ K.
// KH: (C(H)⋊S)⋊K with basis V_k·χ_h·ρ(s), the roles of H and K swapped.
enum class Side { HK, KH };

struct PresentedAlgebra {
    Side side = Side::HK;
    StarAlgebra algebra;
    std::vector<std::array<Element, 3>> triples;  // (acting, function index, s) per basis element
    std::size_t n_function = 0, n_s = 0;

    // by positions in the acting subgroup, the function subgroup and S
    Index index_of(std::size_t v, std::size_t x, std::size_t s) const {
        return static_cast<Index>((v * n_function + x) * n_s + s);
    }
};

// Multiplication δ_{ks, h′▷′k′} V_{hh′}χ_{k′s⁻¹}ρ(ss′), star V_{h⁻¹}χ_{h▷′(ks)}ρ(s⁻¹).
PresentedAlgebra build_presented(const RelativeMatchedPair& pair, Side side = Side::HK);

// Generators inside the presented algebra.
SparseVector rho(const RelativeMatchedPair& pair, const PresentedAlgebra& p, Element s);
SparseVector chi(const RelativeMatchedPair& pair, const PresentedAlgebra& p, Element k);
SparseVector unitary(const RelativeMatchedPair& pair, const PresentedAlgebra& p, Element h);

// ρ(s)χ_k = χ_{ks⁻¹}ρ(s), V_hχ_k = χ_{h▷′k}V_h, ρ(s)V_h = V_hρ(s), plus unitarity.
Report verify_generator_relations(const RelativeMatchedPair& pair, const PresentedAlgebra& p);

// σ_h on the C(K)⋊S part (basis elements with acting entry e).
// Throws InputError for vectors outside that part.
SparseVector sigma_action(const RelativeMatchedPair& pair, const PresentedAlgebra& p, Element h,
                          const SparseVector& x);

// Automorphism and action laws of σ, and V_h x V_h⁻¹ = σ_h(x).
Report verify_sigma(const RelativeMatchedPair& pair, const PresentedAlgebra& p);
// Φ∘σ^I_h = σ^{I′}_h∘Φ with Φ(χ_kρ(s)) = χ_{φ(k)}ρ(s).
Report verify_sigma_conjugacy(const RelativeMatchedPair& first, const PresentedAlgebra& p1,
                              const RelativeMatchedPair& second, const PresentedAlgebra& p2);
// The isomorphism between presented algebras for two representative sets, induced by φ.
LinearMap representative_iso(const RelativeMatchedPair& first, const PresentedAlgebra& p1,
                             const RelativeMatchedPair& second, const PresentedAlgebra& p2);

// (h, k, s) ↦ (h, ks, h▷′k, (h◁′k)s) into ℂT; the KH side lands in ℂT′.
LinearMap calmos_iso(const RelativeMatchedPair& pair, const PresentedAlgebra& p, const DoubleGroupoid& squares);

// θ_t = iso⁻¹(t), indexed by square. Throws DimensionMismatch if iso is not a scaled basis bijection.
std::vector<SparseVector> theta_basis(const LinearMap& iso);

// θ_tθ_t′ = θ_{t⋆ʰt′} or 0, θ_t* = θ_{t⁻ʰ}, Σ over horizontal units of θ = 1, and linear independence.
Report verify_theta(const PresentedAlgebra& p, const DoubleGroupoid& squares, const std::vector<SparseVector>& theta);

}  // namespace qgroupoid
