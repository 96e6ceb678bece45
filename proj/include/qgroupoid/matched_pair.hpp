#pragma once

#include <optional>
#include <vector>

#include "qgroupoid/group.hpp"
#include "qgroupoid/report.hpp"

namespace qgroupoid {

// An extended action of a subgroup X on a subgroup Y of G = XY, built from a
// choice of representatives for the cosets yS (S = X ∩ Y):
//   x·y = act(x, y)·comp(x, y),  act(x, y) ∈ Y,  comp(x, y) ∈ X.
struct ExtendedAction {
    std::vector<std::vector<Element>> act;   // [x index][y index] -> element of Y
    std::vector<std::vector<Element>> comp;  // [x index][y index] -> element of X
};

class RelativeMatchedPair {
public:
    // Throws NotARelativeMatchedPair, InvalidRepresentativeSet.
    static RelativeMatchedPair create(const Subgroup& h, const Subgroup& k,
                                      const std::optional<std::vector<Element>>& reps_i = std::nullopt,
                                      const std::optional<std::vector<Element>>& reps_j = std::nullopt);
    RelativeMatchedPair with_representatives(const std::optional<std::vector<Element>>& reps_i,
                                             const std::optional<std::vector<Element>>& reps_j) const;

    const FiniteGroup& group() const { return h_.group(); }
    const GroupPtr& group_ptr() const { return h_.parent(); }
    const Subgroup& H() const { return h_; }
    const Subgroup& K() const { return k_; }
    const Subgroup& S() const { return s_; }
    // Cosets kS of K carrying I, and cosets hS of H carrying J.
    const CosetSpace& I() const { return k_mod_s_; }
    const CosetSpace& J() const { return h_mod_s_; }

    // Coset indices: p1 into H/S (g ∈ hK), p2 into S\K (g ∈ Hk),
    // p1_prime into K/S (g ∈ kH), p2_prime into S\H (g ∈ Kh).
    std::size_t p1(Element g) const { return p1_[g]; }
    std::size_t p2(Element g) const { return p2_[g]; }
    std::size_t p1_prime(Element g) const { return p1p_[g]; }
    std::size_t p2_prime(Element g) const { return p2p_[g]; }
    const CosetSpace& S_mod_K() const { return s_k_; }
    const CosetSpace& S_mod_H() const { return s_h_; }

    // k ▷ hS = p1(kh), h ▷′ kS = p1′(hk)
    std::size_t coset_action_K_on_H(Element k, std::size_t coset) const;
    std::size_t coset_action_H_on_K(Element h, std::size_t coset) const;

    // ▷′_I, ◁′_I, ▷_J, ◁_J
    Element act_HK(Element h, Element k) const { return hk_.act[h_.index_of(h)][k_.index_of(k)]; }
    Element comp_HK(Element h, Element k) const { return hk_.comp[h_.index_of(h)][k_.index_of(k)]; }
    Element act_KH(Element k, Element h) const { return kh_.act[k_.index_of(k)][h_.index_of(h)]; }
    Element comp_KH(Element k, Element h) const { return kh_.comp[k_.index_of(k)][h_.index_of(h)]; }

    Element cocycle_kI(Element k, Element h) const;
    Element cocycle_hJ(Element h, Element k) const;

private:
    RelativeMatchedPair(Subgroup h, Subgroup k, Subgroup s, CosetSpace i, CosetSpace j, CosetSpace sk,
                        CosetSpace sh);
    Subgroup h_, k_, s_;
    CosetSpace k_mod_s_, h_mod_s_, s_k_, s_h_;
    std::vector<std::size_t> p1_, p2_, p1p_, p2p_;
    ExtendedAction hk_, kh_;
};

bool check_relative_matched_pair(const Subgroup& h, const Subgroup& k);

// The representative swap φ(k¹_c s) = k²_c s, indexed by position in K
// (or in H for the J side). Throws InvalidRepresentativeSet.
std::vector<Element> action_conjugacy(const RelativeMatchedPair& pair, const std::vector<Element>& i1,
                                      const std::vector<Element>& i2);
std::vector<Element> action_conjugacy_J(const RelativeMatchedPair& pair, const std::vector<Element>& j1,
                                        const std::vector<Element>& j2);

// A second representative set: the current one with the first non-trivial coset re-chosen.
std::vector<Element> alternative_representatives(const CosetSpace& cosets);

// Factorization invariants of both extended actions.
Report verify_action_tables(const RelativeMatchedPair& pair);
// Composition identities for k′_I, h′_J and ◁_J, over all arguments.
Report verify_cocycles(const RelativeMatchedPair& pair);
// φ(h ▷′ k) = h ▷′ φ(k) between two choices of I, and the mirror for J.
Report verify_action_conjugacy(const RelativeMatchedPair& first, const RelativeMatchedPair& second);

// (N, N_G(P)) for P = sylow_subgroup(N, p). Throws NotNormal, PDoesNotDivideOrder.
RelativeMatchedPair frattini_pair(const GroupPtr& g, const Subgroup& n, int p);

}  // namespace qgroupoid
