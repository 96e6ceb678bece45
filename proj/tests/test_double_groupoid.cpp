#include <doctest.h>

#include <set>

#include "qgroupoid/double_groupoid.hpp"
#include "support.hpp"

using namespace qgroupoid;

namespace {

// every (a, b, c, d) with a, d ∈ X, b, c ∈ Y and ab = cd, by scanning G⁴
std::set<Square> brute_squares(const FiniteGroup& g, const Subgroup& x, const Subgroup& y) {
    std::set<Square> out;
    for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); ++b)
            for (Element c = 0; c < g.order(); ++c)
                for (Element d = 0; d < g.order(); ++d)
                    if (x.contains(a) && x.contains(d) && y.contains(b) && y.contains(c) && g.mul(a, b) == g.mul(c, d))
                        out.insert({a, b, c, d});
    return out;
}

}  // namespace

TEST_CASE("square enumeration matches a scan of G^4") {
    for (const char* file : testing::kSmall) {
        auto in = testing::load(file);
        const auto& p = in.pair;
        DoubleGroupoid t(p, Variant::T), tp(p, Variant::TPrime);
        auto bt = brute_squares(p.group(), p.H(), p.K());
        auto btp = brute_squares(p.group(), p.K(), p.H());
        CHECK(std::set<Square>(t.squares().begin(), t.squares().end()) == bt);
        CHECK(std::set<Square>(tp.squares().begin(), tp.squares().end()) == btp);
        CHECK(t.size() == p.H().order() * p.K().order() * p.S().order());
        CHECK(std::is_sorted(t.squares().begin(), t.squares().end()));
    }
}

TEST_CASE("H = {e}, K = G gives exactly the squares (e,k,k,e)") {
    auto in = testing::load("d_trivial_s3.json");
    DoubleGroupoid t(in.pair, Variant::T);
    REQUIRE(t.size() == 6);
    for (const Square& s : t.squares()) {
        CHECK(s.a == 0);
        CHECK(s.d == 0);
        CHECK(s.b == s.c);
    }
}

TEST_CASE("closed-form inverses solve the unit equations") {
    for (const char* file : {"a_s3_matched.json", "b_s3_s3_c2.json"}) {
        auto in = testing::load(file);
        DoubleGroupoid t(in.pair, Variant::T);
        for (const Square& x : t.squares()) {
            // the unique squares u with x⋆u and u⋆x units, found by search
            std::vector<Square> h_found, v_found;
            for (const Square& u : t.squares()) {
                auto a = t.h_compose(x, u), b = t.h_compose(u, x);
                if (a && b && t.is_h_unit(*a) && t.is_h_unit(*b)) h_found.push_back(u);
                auto c = t.v_compose(x, u), d = t.v_compose(u, x);
                if (c && d && t.is_v_unit(*c) && t.is_v_unit(*d)) v_found.push_back(u);
            }
            REQUIRE(h_found.size() == 1);
            REQUIRE(v_found.size() == 1);
            CHECK(t.h_inverse(x) == h_found[0]);
            CHECK(t.v_inverse(x) == v_found[0]);
            CHECK(t.hv_inverse(x) == t.v_inverse(t.h_inverse(x)));
        }
        Square unit = t.h_unit(in.pair.K().elements().back());
        CHECK(t.h_inverse(unit) == unit);
    }
}

TEST_CASE("units compose trivially") {
    auto in = testing::load("b_s3_s3_c2.json");
    DoubleGroupoid t(in.pair, Variant::T);
    for (const Square& x : t.squares()) {
        CHECK(t.h_compose(x, t.h_unit(x.b)) == x);
        CHECK(t.v_compose(t.v_unit(x.a), x) == x);
        CHECK_FALSE(t.h_compose(x, t.h_unit(x.b == 0 ? in.pair.K().elements().back() : 0)));
    }
}

TEST_CASE("double groupoid and transpose verifiers pass on the corpus") {
    for (const char* file : {"a_s3_matched.json", "b_s3_s3_c2.json", "c_s4_frattini_p3.json", "d_trivial_s3.json",
                             "d_s3_trivial.json"}) {
        auto in = testing::load(file);
        INFO(file);
        DoubleGroupoid t(in.pair, Variant::T), tp(in.pair, Variant::TPrime);
        Report r = verify_double_groupoid(in.pair, t);
        CHECK(r.ok());
        REQUIRE(r.find("interchange law"));
        CHECK(r.find("interchange law")->passed);
        CHECK(verify_double_groupoid(in.pair, tp).ok());
        CHECK(verify_transpose(t, tp).ok());
        for (const Square& x : t.squares()) CHECK(transpose(transpose(x)) == x);
    }
}

TEST_CASE("corner count is |S| by direct tally") {
    auto in = testing::load("c_s4_frattini_p3.json");
    DoubleGroupoid t(in.pair, Variant::T);
    std::map<std::pair<Element, Element>, int> tally;
    for (const Square& s : t.squares()) ++tally[{s.a, s.b}];
    CHECK(tally.size() == in.pair.H().order() * in.pair.K().order());
    for (const auto& [k, n] : tally) CHECK(n == 3);
}
