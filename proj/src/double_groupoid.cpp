#include "qgroupoid/double_groupoid.hpp"

#include <algorithm>
#include <map>

#include "qgroupoid/errors.hpp"

namespace qgroupoid {

std::string to_string(const Square& s) {
    return "(" + std::to_string(s.a) + "," + std::to_string(s.b) + "," + std::to_string(s.c) + "," +
           std::to_string(s.d) + ")";
}

DoubleGroupoid::DoubleGroupoid(const RelativeMatchedPair& pair, Variant variant)
    : variant_(variant),
      outer_(variant == Variant::T ? pair.H() : pair.K()),
      inner_(variant == Variant::T ? pair.K() : pair.H()) {
    const FiniteGroup& g = group();
    const std::size_t no = outer_.order(), ni = inner_.order();
    index_.assign(no * ni * ni, -1);
    // lexicographic order on (a, b, c, d); d is determined by a, b, c
    for (Element a : outer_.elements())
        for (Element b : inner_.elements())
            for (Element c : inner_.elements()) {
                Element d = g.mul(g.inv(c), a, b);
                if (!outer_.contains(d)) continue;
                index_[(outer_.index_of(a) * ni + inner_.index_of(b)) * ni + inner_.index_of(c)] =
                    static_cast<std::int32_t>(squares_.size());
                squares_.push_back({a, b, c, d});
            }
    std::sort(squares_.begin(), squares_.end());
    for (std::size_t i = 0; i < squares_.size(); ++i) {
        const Square& s = squares_[i];
        index_[(outer_.index_of(s.a) * ni + inner_.index_of(s.b)) * ni + inner_.index_of(s.c)] =
            static_cast<std::int32_t>(i);
    }
}

std::optional<std::size_t> DoubleGroupoid::index_of(const Square& s) const {
    const std::size_t n = group().order();
    if (s.a >= n || s.b >= n || s.c >= n || s.d >= n) return std::nullopt;
    if (!outer_.contains(s.a) || !outer_.contains(s.d) || !inner_.contains(s.b) || !inner_.contains(s.c))
        return std::nullopt;
    const std::size_t ni = inner_.order();
    auto i = index_[(outer_.index_of(s.a) * ni + inner_.index_of(s.b)) * ni + inner_.index_of(s.c)];
    if (i < 0 || squares_[static_cast<std::size_t>(i)].d != s.d) return std::nullopt;
    return static_cast<std::size_t>(i);
}

std::size_t DoubleGroupoid::at(const Square& s) const {
    auto i = index_of(s);
    if (!i) throw Error("not a square: " + to_string(s));
    return *i;
}

Composite DoubleGroupoid::h_compose(const Square& t, const Square& u) const {
    if (t.b != u.c) return std::nullopt;
    const FiniteGroup& g = group();
    return Square{g.mul(t.a, u.a), u.b, t.c, g.mul(t.d, u.d)};
}

Composite DoubleGroupoid::v_compose(const Square& t, const Square& u) const {
    if (t.d != u.a) return std::nullopt;
    const FiniteGroup& g = group();
    return Square{t.a, g.mul(t.b, u.b), g.mul(t.c, u.c), u.d};
}

Square DoubleGroupoid::h_inverse(const Square& t) const {
    const FiniteGroup& g = group();
    return {g.inv(t.a), t.c, t.b, g.inv(t.d)};
}

Square DoubleGroupoid::v_inverse(const Square& t) const {
    const FiniteGroup& g = group();
    return {t.d, g.inv(t.b), g.inv(t.c), t.a};
}

Square DoubleGroupoid::hv_inverse(const Square& t) const {
    const FiniteGroup& g = group();
    return {g.inv(t.d), g.inv(t.c), g.inv(t.b), g.inv(t.a)};
}

DoubleGroupoid enumerate_T(const RelativeMatchedPair& pair) { return DoubleGroupoid(pair, Variant::T); }
DoubleGroupoid enumerate_T_prime(const RelativeMatchedPair& pair) { return DoubleGroupoid(pair, Variant::TPrime); }

}  // namespace qgroupoid

namespace qgroupoid {
namespace {

using Index = std::uint32_t;
using Compose = Composite (DoubleGroupoid::*)(const Square&, const Square&) const;

// Groupoid axioms for one of the two partial products, exhaustively.
void check_groupoid(Report& rep, const std::string& tag, const DoubleGroupoid& sq, Compose compose,
                    Square (DoubleGroupoid::*inverse)(const Square&) const, bool (DoubleGroupoid::*is_unit)(const Square&) const,
                    Element Square::*source, Element Square::*target) {
    // u composes after t when u.*source == t.*target
    std::map<Element, std::vector<Index>> starting;
    for (Index i = 0; i < sq.size(); ++i) starting[sq[i].*source].push_back(i);
    std::string closure, assoc, units, inv;
    for (Index i = 0; i < sq.size(); ++i) {
        const Square& t = sq[i];
        for (Index j : starting[t.*target]) {
            const Square& u = sq[j];
            auto tu = (sq.*compose)(t, u);
            if (!tu || !sq.contains(*tu)) {
                if (closure.empty()) closure = to_string(t) + " " + to_string(u);
                continue;
            }
            for (Index k : starting[u.*target]) {
                auto left = (sq.*compose)(*tu, sq[k]);
                auto right = (sq.*compose)(t, *(sq.*compose)(u, sq[k]));
                if (assoc.empty() && left != right) assoc = to_string(t) + " " + to_string(u) + " " + to_string(sq[k]);
            }
        }
        // exactly one unit on each side, and it acts trivially
        std::size_t left_units = 0, right_units = 0;
        for (Index j : starting[t.*target])
            if ((sq.*is_unit)(sq[j])) {
                ++right_units;
                if ((sq.*compose)(t, sq[j]) != t && units.empty()) units = to_string(t);
            }
        for (Index j = 0; j < sq.size(); ++j)
            if ((sq.*is_unit)(sq[j]) && (sq.*compose)(sq[j], t)) {
                ++left_units;
                if ((sq.*compose)(sq[j], t) != t && units.empty()) units = to_string(t);
            }
        if ((left_units != 1 || right_units != 1) && units.empty()) units = to_string(t);
        Square ti = (sq.*inverse)(t);
        auto a = (sq.*compose)(t, ti), b = (sq.*compose)(ti, t);
        if (inv.empty() && (!sq.contains(ti) || !a || !b || !(sq.*is_unit)(*a) || !(sq.*is_unit)(*b)))
            inv = to_string(t);
    }
    rep.add(tag + " closure", closure.empty(), closure);
    rep.add(tag + " associativity", assoc.empty(), assoc);
    rep.add(tag + " units", units.empty(), units);
    rep.add(tag + " inverses", inv.empty(), inv);
}

}  // namespace

Report verify_double_groupoid(const RelativeMatchedPair& pair, const DoubleGroupoid& sq,
                              std::size_t interchange_limit) {
    Report rep(sq.variant() == Variant::T ? "squares T" : "squares T'");
    const FiniteGroup& g = sq.group();
    rep.add("size |H||K||S|", sq.size() == pair.H().order() * pair.K().order() * pair.S().order(),
            std::to_string(sq.size()));
    std::string constraint;
    for (const Square& t : sq.squares())
        if (constraint.empty() && g.mul(t.a, t.b) != g.mul(t.c, t.d)) constraint = to_string(t);
    rep.add("a·b = c·d", constraint.empty(), constraint);
    std::map<std::pair<Element, Element>, std::size_t> corners;
    for (const Square& t : sq.squares()) ++corners[{t.a, t.b}];
    bool corner_ok = corners.size() == sq.outer().order() * sq.inner().order();
    for (const auto& [key, count] : corners) corner_ok = corner_ok && count == pair.S().order();
    rep.add("corner count |S|", corner_ok);

    check_groupoid(rep, "horizontal", sq, &DoubleGroupoid::h_compose, &DoubleGroupoid::h_inverse,
                   &DoubleGroupoid::is_h_unit, &Square::c, &Square::b);
    check_groupoid(rep, "vertical", sq, &DoubleGroupoid::v_compose, &DoubleGroupoid::v_inverse,
                   &DoubleGroupoid::is_v_unit, &Square::a, &Square::d);
    std::string hv;
    for (const Square& t : sq.squares()) {
        Square x = sq.hv_inverse(t);
        if (hv.empty() && (x != sq.v_inverse(sq.h_inverse(t)) || x != sq.h_inverse(sq.v_inverse(t))))
            hv = to_string(t);
    }
    rep.add("hv inverse both ways", hv.empty(), hv);

    if (sq.size() > interchange_limit) {
        rep.skip("interchange law", std::to_string(sq.size()) + " squares exceed the limit");
        return rep;
    }
    // (t1⋆ʰt2)⋆ᵛ(t3⋆ʰt4) = (t1⋆ᵛt3)⋆ʰ(t2⋆ᵛt4) whenever the four inner products exist
    std::map<Element, std::vector<Index>> by_c, by_a;
    std::map<std::pair<Element, Element>, std::vector<Index>> by_ac;
    for (Index i = 0; i < sq.size(); ++i) {
        by_c[sq[i].c].push_back(i);
        by_a[sq[i].a].push_back(i);
        by_ac[{sq[i].a, sq[i].c}].push_back(i);
    }
    std::string inter;
    for (const Square& t1 : sq.squares())
        for (Index j2 : by_c[t1.b])
            for (Index j3 : by_a[t1.d]) {
                const Square &t2 = sq[j2], &t3 = sq[j3];
                for (Index j4 : by_ac[{t2.d, t3.b}]) {
                    const Square& t4 = sq[j4];
                    auto top = sq.h_compose(t1, t2), bottom = sq.h_compose(t3, t4);
                    auto left = sq.v_compose(t1, t3), right = sq.v_compose(t2, t4);
                    auto x = sq.v_compose(*top, *bottom), y = sq.h_compose(*left, *right);
                    if (inter.empty() && x != y)
                        inter = to_string(t1) + " " + to_string(t2) + " " + to_string(t3) + " " + to_string(t4);
                }
            }
    rep.diagnostic("interchange law", inter.empty(), inter);
    return rep;
}

Report verify_transpose(const DoubleGroupoid& t, const DoubleGroupoid& tp) {
    Report rep("transpose");
    const FiniteGroup& g = t.group();
    rep.add("variants", t.variant() == opposite(tp.variant()));
    std::vector<bool> hit(tp.size());
    std::string maps, invol, charac;
    for (const Square& x : t.squares()) {
        auto j = tp.index_of(transpose(x));
        if (!j) {
            if (maps.empty()) maps = to_string(x);
            continue;
        }
        hit[*j] = true;
        if (invol.empty() && transpose(tp[*j]) != x) invol = to_string(x);
    }
    bool onto = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    rep.add("maps T into T'", maps.empty(), maps);
    rep.add("bijective", maps.empty() && onto && t.size() == tp.size());
    rep.add("involutive", invol.empty(), invol);
    std::map<Element, std::vector<Index>> by_a;
    for (Index i = 0; i < tp.size(); ++i) by_a[tp[i].a].push_back(i);
    for (const Square& x : t.squares())
        for (Index j : by_a[x.c]) {
            const Square& y = tp[j];
            bool lhs = transpose(x) == y;
            bool rhs = g.mul(x.a, x.b) == g.mul(y.a, y.b) && x.a == y.c;
            if (charac.empty() && lhs != rhs) charac = to_string(x) + " " + to_string(y);
        }
    rep.add("characterization", charac.empty(), charac, "t' = t^t iff hk = k1h1, h = h'1, k' = k1");
    return rep;
}

}  // namespace qgroupoid
