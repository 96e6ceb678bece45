#include "qgroupoid/matched_pair.hpp"

#include <algorithm>

#include "qgroupoid/errors.hpp"

namespace qgroupoid {
namespace {

// For g ∈ XY find x ∈ X with x⁻¹g ∈ Y.
Element left_factor(const FiniteGroup& g, const Subgroup& x, const Subgroup& y, Element elem) {
    for (Element a : x.elements())
        if (y.contains(g.mul(g.inv(a), elem))) return a;
    throw Error("element does not factor");
}

ExtendedAction extended_action(const FiniteGroup& g, const Subgroup& x, const Subgroup& y, const CosetSpace& reps) {
    ExtendedAction e;
    e.act.assign(x.order(), std::vector<Element>(y.order()));
    e.comp.assign(x.order(), std::vector<Element>(y.order()));
    for (std::size_t xi = 0; xi < x.order(); ++xi) {
        Element a = x.elements()[xi];
        for (std::size_t yi = 0; yi < y.order(); ++yi) {
            Element b = y.elements()[yi];
            Element rep = reps.representative(reps.block_of(b));
            Element s = g.mul(g.inv(rep), b);
            Element yprime = left_factor(g, y, x, g.mul(a, rep));
            Element target_rep = reps.representative(reps.block_of(yprime));
            Element act = g.mul(target_rep, s);
            Element comp = g.mul(g.inv(act), a, b);
            if (!x.contains(comp)) throw Error("extended action: complement outside subgroup");
            e.act[xi][yi] = act;
            e.comp[xi][yi] = comp;
        }
    }
    return e;
}

void require_identity_rep(const CosetSpace& cs, const char* which) {
    if (cs.representative(cs.block_of(0)) != 0)
        throw InvalidRepresentativeSet(std::string(which) + ": the coset S must be represented by the identity");
}

std::vector<Element> conjugacy_map(const Subgroup& y, const CosetSpace& c1, const CosetSpace& c2) {
    const FiniteGroup& g = y.group();
    std::vector<Element> phi(y.order());
    for (std::size_t i = 0; i < y.order(); ++i) {
        Element b = y.elements()[i];
        std::size_t c = c1.block_of(b);
        Element s = g.mul(g.inv(c1.representative(c)), b);
        phi[i] = g.mul(c2.representative(c), s);
    }
    return phi;
}

}  // namespace

bool check_relative_matched_pair(const Subgroup& h, const Subgroup& k) {
    return product_set(h, k).size() == h.group().order();
}

RelativeMatchedPair::RelativeMatchedPair(Subgroup h, Subgroup k, Subgroup s, CosetSpace i, CosetSpace j,
                                         CosetSpace sk, CosetSpace sh)
    : h_(std::move(h)), k_(std::move(k)), s_(std::move(s)), k_mod_s_(std::move(i)), h_mod_s_(std::move(j)),
      s_k_(std::move(sk)), s_h_(std::move(sh)) {
    const FiniteGroup& g = group();
    const std::size_t n = g.order();
    p1_.resize(n);
    p2_.resize(n);
    p1p_.resize(n);
    p2p_.resize(n);
    for (Element x = 0; x < n; ++x) {
        Element hh = left_factor(g, h_, k_, x);  // x = hh·k
        p1_[x] = h_mod_s_.block_of(hh);
        p2_[x] = s_k_.block_of(g.mul(g.inv(hh), x));
        Element kk = left_factor(g, k_, h_, x);  // x = kk·h
        p1p_[x] = k_mod_s_.block_of(kk);
        p2p_[x] = s_h_.block_of(g.mul(g.inv(kk), x));
    }
    hk_ = extended_action(g, h_, k_, k_mod_s_);
    kh_ = extended_action(g, k_, h_, h_mod_s_);
}

RelativeMatchedPair RelativeMatchedPair::create(const Subgroup& h, const Subgroup& k,
                                                const std::optional<std::vector<Element>>& reps_i,
                                                const std::optional<std::vector<Element>>& reps_j) {
    if (h.parent() != k.parent() && h.parent()->table() != k.parent()->table())
        throw NotARelativeMatchedPair("H and K live in different groups");
    if (!check_relative_matched_pair(h, k))
        throw NotARelativeMatchedPair("HK covers " + std::to_string(product_set(h, k).size()) + " of " +
                                      std::to_string(h.group().order()) + " elements");
    Subgroup s = intersection(h, k);
    CosetSpace i = coset_space(k, s, CosetKind::Left, reps_i);
    CosetSpace j = coset_space(h, s, CosetKind::Left, reps_j);
    require_identity_rep(i, "I");
    require_identity_rep(j, "J");
    CosetSpace sk = coset_space(k, s, CosetKind::Right);
    CosetSpace sh = coset_space(h, s, CosetKind::Right);
    return RelativeMatchedPair(h, k, s, std::move(i), std::move(j), std::move(sk), std::move(sh));
}

RelativeMatchedPair RelativeMatchedPair::with_representatives(
    const std::optional<std::vector<Element>>& reps_i, const std::optional<std::vector<Element>>& reps_j) const {
    return create(h_, k_, reps_i ? reps_i : std::optional(k_mod_s_.representatives()),
                  reps_j ? reps_j : std::optional(h_mod_s_.representatives()));
}

std::size_t RelativeMatchedPair::coset_action_K_on_H(Element k, std::size_t coset) const {
    return p1(group().mul(k, h_mod_s_.representative(coset)));
}

std::size_t RelativeMatchedPair::coset_action_H_on_K(Element h, std::size_t coset) const {
    return p1_prime(group().mul(h, k_mod_s_.representative(coset)));
}

Element RelativeMatchedPair::cocycle_kI(Element k, Element h) const {
    return group().mul(group().inv(act_HK(h, k)), k);
}

Element RelativeMatchedPair::cocycle_hJ(Element h, Element k) const {
    return group().mul(group().inv(act_KH(k, h)), h);
}

std::vector<Element> action_conjugacy(const RelativeMatchedPair& pair, const std::vector<Element>& i1,
                                      const std::vector<Element>& i2) {
    CosetSpace c1 = coset_space(pair.K(), pair.S(), CosetKind::Left, i1);
    CosetSpace c2 = coset_space(pair.K(), pair.S(), CosetKind::Left, i2);
    return conjugacy_map(pair.K(), c1, c2);
}

std::vector<Element> action_conjugacy_J(const RelativeMatchedPair& pair, const std::vector<Element>& j1,
                                        const std::vector<Element>& j2) {
    CosetSpace c1 = coset_space(pair.H(), pair.S(), CosetKind::Left, j1);
    CosetSpace c2 = coset_space(pair.H(), pair.S(), CosetKind::Left, j2);
    return conjugacy_map(pair.H(), c1, c2);
}

std::vector<Element> alternative_representatives(const CosetSpace& cosets) {
    // a uniform shift of every coset tends to leave the extended action unchanged, so only the first
    // movable coset is changed
    std::vector<Element> reps = cosets.representatives();
    for (std::size_t i = 0; i < cosets.size(); ++i) {
        const auto& b = cosets.block(i);
        if (b.size() < 2 || std::find(b.begin(), b.end(), 0u) != b.end()) continue;
        reps[i] = b[0] == reps[i] ? b[1] : b[0];
        break;
    }
    return reps;
}

RelativeMatchedPair frattini_pair(const GroupPtr& g, const Subgroup& n, int p) {
    Subgroup whole = Subgroup::whole(g);
    if (!is_normal(whole, n)) throw NotNormal("N is not normal in G");
    Subgroup sylow = sylow_subgroup(n, p);
    return RelativeMatchedPair::create(n, normalizer(whole, sylow));
}

}  // namespace qgroupoid

namespace qgroupoid {
namespace {

std::string names(const FiniteGroup& g, std::initializer_list<Element> xs) {
    std::string s;
    for (Element x : xs) s += (s.empty() ? "" : ", ") + g.name(x);
    return s;
}

// act(x, y)·comp(x, y) = x·y, act is an action of X on Y fixing S pointwise,
// compatible with right multiplication by S and with the coset action.
void check_extended(Report& rep, const std::string& tag, const FiniteGroup& g, const Subgroup& x, const Subgroup& y,
                    const Subgroup& s, const CosetSpace& reps, auto act, auto comp) {
    std::string fact, law, fixes, equiv, cosets;
    for (Element a : x.elements())
        for (Element b : y.elements()) {
            Element u = act(a, b), v = comp(a, b);
            if (fact.empty() && (!y.contains(u) || !x.contains(v) || g.mul(u, v) != g.mul(a, b)))
                fact = names(g, {a, b});
            if (equiv.empty())
                for (Element t : s.elements())
                    if (act(a, g.mul(b, t)) != g.mul(u, t)) equiv = names(g, {a, b, t});
            if (fixes.empty() && s.contains(b) && u != b) fixes = names(g, {a, b});
            if (cosets.empty() && reps.representative(reps.block_of(b)) == b &&
                reps.representative(reps.block_of(u)) != u)
                cosets = names(g, {a, b});
            if (law.empty() && (act(0, b) != b))
                law = names(g, {0, b});
            for (Element a2 : x.elements())
                if (law.empty() && act(g.mul(a, a2), b) != act(a, act(a2, b))) law = names(g, {a, a2, b});
        }
    rep.add(tag + " factorization", fact.empty(), fact);
    rep.add(tag + " action law", law.empty(), law);
    rep.add(tag + " fixes S", fixes.empty(), fixes);
    rep.add(tag + " S-equivariance", equiv.empty(), equiv);
    rep.add(tag + " representatives preserved", cosets.empty(), cosets);
}

}  // namespace

Report verify_action_tables(const RelativeMatchedPair& pair) {
    Report rep("action tables");
    const FiniteGroup& g = pair.group();
    std::vector<std::size_t> count(g.order());
    for (Element h : pair.H().elements())
        for (Element k : pair.K().elements()) ++count[g.mul(h, k)];
    rep.add("factorization count |S|",
            std::all_of(count.begin(), count.end(), [&](std::size_t c) { return c == pair.S().order(); }));
    check_extended(rep, "H on K", g, pair.H(), pair.K(), pair.S(), pair.I(),
                   [&](Element h, Element k) { return pair.act_HK(h, k); },
                   [&](Element h, Element k) { return pair.comp_HK(h, k); });
    check_extended(rep, "K on H", g, pair.K(), pair.H(), pair.S(), pair.J(),
                   [&](Element k, Element h) { return pair.act_KH(k, h); },
                   [&](Element k, Element h) { return pair.comp_KH(k, h); });
    // ◁′_I is a right action of K on H only in the matched-pair case
    std::string bad;
    for (Element h : pair.H().elements())
        for (Element k : pair.K().elements())
            for (Element k2 : pair.K().elements())
                if (bad.empty() && pair.comp_HK(h, g.mul(k, k2)) != pair.comp_HK(pair.comp_HK(h, k), k2))
                    bad = names(g, {h, k, k2});
    if (pair.S().order() == 1)
        rep.add("complement is a right action", bad.empty(), bad);
    else
        rep.diagnostic("complement is a right action", bad.empty());
    return rep;
}

Report verify_cocycles(const RelativeMatchedPair& pair) {
    Report rep("cocycles");
    const FiniteGroup& g = pair.group();
    std::string k_bad, h_bad, h_literal, c_bad;
    for (Element h : pair.H().elements())
        for (Element h2 : pair.H().elements())
            for (Element k : pair.K().elements())
                if (k_bad.empty() && g.mul(pair.cocycle_kI(pair.act_HK(h2, k), h), pair.cocycle_kI(k, h2)) !=
                                         pair.cocycle_kI(k, g.mul(h, h2)))
                    k_bad = names(g, {h, h2, k});
    for (Element h : pair.H().elements())
        for (Element k : pair.K().elements())
            for (Element k2 : pair.K().elements()) {
                Element kh = pair.act_KH(k, h);
                Element lhs = g.mul(pair.cocycle_hJ(kh, k2), pair.cocycle_hJ(h, k));
                if (h_bad.empty() && lhs != pair.cocycle_hJ(h, g.mul(k2, k))) h_bad = names(g, {h, k, k2});
                if (h_literal.empty() && lhs != pair.cocycle_hJ(h, g.mul(k, k2))) h_literal = names(g, {h, k, k2});
                if (c_bad.empty() &&
                    g.mul(pair.comp_KH(k2, kh), pair.comp_KH(k, h)) != pair.comp_KH(g.mul(k2, k), h))
                    c_bad = names(g, {h, k, k2});
            }
    rep.add("k'_I composition", k_bad.empty(), k_bad, "k'(h'▷'k', h)·k'(k', h') = k'(k', hh')");
    rep.add("h'_J composition", h_bad.empty(), h_bad, "h'(k▷h, k')·h'(h, k) = h'(h, k'k)");
    rep.diagnostic("h'_J composition with kk'", h_literal.empty(),
                   h_literal.empty() ? "h'(k▷h, k')·h'(h, k) = h'(h, kk')" : "fails at " + h_literal);
    rep.add("complement composition", c_bad.empty(), c_bad, "(k'◁(k▷h))(k◁h) = k'k◁h");
    return rep;
}

Report verify_action_conjugacy(const RelativeMatchedPair& first, const RelativeMatchedPair& second) {
    Report rep("action conjugacy");
    if (!(first.H() == second.H()) || !(first.K() == second.K())) {
        rep.add("same subgroups", false);
        return rep;
    }
    const FiniteGroup& g = first.group();
    auto phi = action_conjugacy(first, first.I().representatives(), second.I().representatives());
    auto psi = action_conjugacy_J(first, first.J().representatives(), second.J().representatives());
    std::string bad_i, bad_j;
    for (Element h : first.H().elements())
        for (Element k : first.K().elements()) {
            if (bad_i.empty() && phi[first.K().index_of(first.act_HK(h, k))] !=
                                     second.act_HK(h, phi[first.K().index_of(k)]))
                bad_i = names(g, {h, k});
            if (bad_j.empty() && psi[first.H().index_of(first.act_KH(k, h))] !=
                                     second.act_KH(k, psi[first.H().index_of(h)]))
                bad_j = names(g, {k, h});
        }
    rep.add("I-side intertwiner", bad_i.empty(), bad_i);
    rep.add("J-side intertwiner", bad_j.empty(), bad_j);
    return rep;
}

}  // namespace qgroupoid
