#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "qgroupoid/matched_pair.hpp"
#include "qgroupoid/report.hpp"

namespace qgroupoid {

enum class Variant { T, TPrime };

inline Variant opposite(Variant v) { return v == Variant::T ? Variant::TPrime : Variant::T; }

// (a, b, c, d) with a·b = c·d; for T: a, d ∈ H and b, c ∈ K, for T′ the roles swap.
struct Square {
    Element a = 0, b = 0, c = 0, d = 0;
    friend auto operator<=>(const Square&, const Square&) = default;
};

std::string to_string(const Square& s);

// Partial products return nullopt when the squares are not composable.
using Composite = std::optional<Square>;

class DoubleGroupoid {
public:
    DoubleGroupoid(const RelativeMatchedPair& pair, Variant variant);

    Variant variant() const { return variant_; }
    const FiniteGroup& group() const { return outer_.group(); }
    // Subgroup carrying the a/d entries and the one carrying the b/c entries.
    const Subgroup& outer() const { return outer_; }
    const Subgroup& inner() const { return inner_; }
    std::size_t size() const { return squares_.size(); }
    const std::vector<Square>& squares() const { return squares_; }
    const Square& operator[](std::size_t i) const { return squares_[i]; }
    std::optional<std::size_t> index_of(const Square& s) const;
    std::size_t at(const Square& s) const;  // throws if absent
    bool contains(const Square& s) const { return index_of(s).has_value(); }

    // horizontal: t.b == u.c; vertical: t.d == u.a
    Composite h_compose(const Square& t, const Square& u) const;
    Composite v_compose(const Square& t, const Square& u) const;
    Square h_inverse(const Square& t) const;
    Square v_inverse(const Square& t) const;
    Square hv_inverse(const Square& t) const;
    Square h_unit(Element side) const { return {0, side, side, 0}; }
    Square v_unit(Element top) const { return {top, 0, 0, top}; }
    bool is_h_unit(const Square& t) const { return t.a == 0 && t.d == 0 && t.b == t.c; }
    bool is_v_unit(const Square& t) const { return t.b == 0 && t.c == 0 && t.a == t.d; }

private:
    Variant variant_;
    Subgroup outer_, inner_;
    std::vector<Square> squares_;
    std::vector<std::int32_t> index_;  // (a, b, c) positions -> square index
};

DoubleGroupoid enumerate_T(const RelativeMatchedPair& pair);
DoubleGroupoid enumerate_T_prime(const RelativeMatchedPair& pair);

// (a, b, c, d) -> (c, d, a, b), a square of the opposite variant.
inline Square transpose(const Square& t) { return {t.c, t.d, t.a, t.b}; }

// Size |H||K||S|, corner counts, closure, both groupoid structures, the inverses
// and the interchange law. The interchange law is a finding, not an assertion,
// and is skipped above interchange_limit squares.
Report verify_double_groupoid(const RelativeMatchedPair& pair, const DoubleGroupoid& squares,
                              std::size_t interchange_limit = 1500);
// transpose is an involutive bijection T ↔ T′ with t′ = tᵗ iff a·b = a′·b′, a = c′, c = a′.
Report verify_transpose(const DoubleGroupoid& t, const DoubleGroupoid& t_prime);

}  // namespace qgroupoid
