#include "qgroupoid/presentation.hpp"

#include "qgroupoid/errors.hpp"

namespace qgroupoid {
namespace {

// The side-dependent data: X acts on Y through act/comp.
struct Sides {
    const RelativeMatchedPair& pair;
    Side side;
    const Subgroup& X() const { return side == Side::HK ? pair.H() : pair.K(); }
    const Subgroup& Y() const { return side == Side::HK ? pair.K() : pair.H(); }
    Element act(Element x, Element y) const { return side == Side::HK ? pair.act_HK(x, y) : pair.act_KH(x, y); }
    Element comp(Element x, Element y) const { return side == Side::HK ? pair.comp_HK(x, y) : pair.comp_KH(x, y); }
};

Index basis_of(const Sides& sd, const PresentedAlgebra& p, Element x, Element y, Element s) {
    return p.index_of(sd.X().index_of(x), sd.Y().index_of(y), sd.pair.S().index_of(s));
}

std::string triple_str(const FiniteGroup& g, const std::array<Element, 3>& t) {
    return g.name(t[0]) + "|" + g.name(t[1]) + "|" + g.name(t[2]);
}

}  // namespace

PresentedAlgebra build_presented(const RelativeMatchedPair& pair, Side side) {
    const Sides sd{pair, side};
    const FiniteGroup& g = pair.group();
    const auto& X = sd.X().elements();
    const auto& Y = sd.Y().elements();
    const auto& S = pair.S().elements();
    PresentedAlgebra p{side, StarAlgebra(0, {}, {}, {}, {}), {}, Y.size(), S.size()};
    const std::size_t n = X.size() * Y.size() * S.size();

    // solve act(x, y) = target for y
    std::vector<std::vector<Element>> preimage(X.size(), std::vector<Element>(Y.size()));
    for (std::size_t xi = 0; xi < X.size(); ++xi)
        for (Element y : Y) preimage[xi][sd.Y().index_of(sd.act(X[xi], y))] = y;

    std::vector<std::string> labels;
    std::vector<Product> products;
    std::vector<SparseVector> star;
    std::vector<SparseVector::Entry> unit;
    for (Element x : X)
        for (Element y : Y)
            for (Element s : S) {
                Index i = basis_of(sd, p, x, y, s);
                p.triples.push_back({x, y, s});
                labels.push_back("V(" + std::to_string(x) + ")·chi(" + std::to_string(y) + ")·rho(" +
                                 std::to_string(s) + ")");
                Element ys = g.mul(y, s);
                for (std::size_t xi2 = 0; xi2 < X.size(); ++xi2) {
                    Element y2 = preimage[xi2][sd.Y().index_of(ys)];
                    for (Element s2 : S)
                        products.push_back({i, basis_of(sd, p, X[xi2], y2, s2),
                                            SparseVector::basis(basis_of(sd, p, g.mul(x, X[xi2]),
                                                                         g.mul(y2, g.inv(s)), g.mul(s, s2)))});
                }
                star.push_back(SparseVector::basis(basis_of(sd, p, g.inv(x), sd.act(x, ys), g.inv(s))));
                if (x == 0 && s == 0) unit.emplace_back(i, 1);
            }
    p.algebra = StarAlgebra(n, std::move(labels), std::move(products), SparseVector::from_entries(std::move(unit)),
                            std::move(star));
    return p;
}

SparseVector rho(const RelativeMatchedPair& pair, const PresentedAlgebra& p, Element s) {
    const Sides sd{pair, p.side};
    std::vector<SparseVector::Entry> e;
    for (Element y : sd.Y().elements()) e.emplace_back(basis_of(sd, p, 0, y, s), 1);
    return SparseVector::from_entries(std::move(e));
}

SparseVector chi(const RelativeMatchedPair& pair, const PresentedAlgebra& p, Element k) {
    return SparseVector::basis(basis_of(Sides{pair, p.side}, p, 0, k, 0));
}

SparseVector unitary(const RelativeMatchedPair& pair, const PresentedAlgebra& p, Element h) {
    const Sides sd{pair, p.side};
    std::vector<SparseVector::Entry> e;
    for (Element y : sd.Y().elements()) e.emplace_back(basis_of(sd, p, h, y, 0), 1);
    return SparseVector::from_entries(std::move(e));
}

Report verify_generator_relations(const RelativeMatchedPair& pair, const PresentedAlgebra& p) {
    Report rep("generator relations");
    const Sides sd{pair, p.side};
    const FiniteGroup& g = pair.group();
    const StarAlgebra& A = p.algebra;
    std::string r1, r2, r3, u;
    for (Element s : pair.S().elements())
        for (Element k : sd.Y().elements())
            if (r1.empty() && A.multiply(rho(pair, p, s), chi(pair, p, k)) !=
                                  A.multiply(chi(pair, p, g.mul(k, g.inv(s))), rho(pair, p, s)))
                r1 = g.name(s) + ", " + g.name(k);
    for (Element h : sd.X().elements()) {
        SparseVector v = unitary(pair, p, h);
        for (Element k : sd.Y().elements())
            if (r2.empty() &&
                A.multiply(v, chi(pair, p, k)) != A.multiply(chi(pair, p, sd.act(h, k)), v))
                r2 = g.name(h) + ", " + g.name(k);
        for (Element s : pair.S().elements())
            if (r3.empty() && A.multiply(rho(pair, p, s), v) != A.multiply(v, rho(pair, p, s)))
                r3 = g.name(s) + ", " + g.name(h);
        if (u.empty() && (A.multiply(v, A.star(v)) != A.unit() || A.multiply(A.star(v), v) != A.unit()))
            u = g.name(h);
    }
    for (Element s : pair.S().elements()) {
        SparseVector r = rho(pair, p, s);
        if (u.empty() && A.multiply(r, A.star(r)) != A.unit()) u = g.name(s);
    }
    rep.add("rho(s)chi(k) = chi(ks^-1)rho(s)", r1.empty(), r1);
    rep.add("V(h)chi(k) = chi(h▷'k)V(h)", r2.empty(), r2);
    rep.add("rho(s)V(h) = V(h)rho(s)", r3.empty(), r3);
    rep.add("V and rho unitary", u.empty(), u);
    return rep;
}

SparseVector sigma_action(const RelativeMatchedPair& pair, const PresentedAlgebra& p, Element h,
                          const SparseVector& x) {
    const Sides sd{pair, p.side};
    std::vector<SparseVector::Entry> out;
    for (const auto& [i, c] : x) {
        const auto& [v, y, s] = p.triples.at(i);
        if (v != 0) throw InputError("sigma_action: argument outside the crossed product part");
        // χ_yρ(s) = ρ(s)χ_{ys} ↦ ρ(s)χ_{h▷′(ys)} = χ_{h▷′y}ρ(s)
        out.emplace_back(basis_of(sd, p, 0, sd.act(h, y), s), c);
    }
    return SparseVector::from_entries(std::move(out));
}

Report verify_sigma(const RelativeMatchedPair& pair, const PresentedAlgebra& p) {
    Report rep("sigma action");
    const Sides sd{pair, p.side};
    const FiniteGroup& g = pair.group();
    const StarAlgebra& A = p.algebra;
    std::vector<Index> part;
    for (Index i = 0; i < A.dim(); ++i)
        if (p.triples[i][0] == 0) part.push_back(i);
    SparseVector part_unit;
    for (Element y : sd.Y().elements()) part_unit.add_scaled(chi(pair, p, y), Rational(1));

    std::string id, law, mult, star, unit, conj;
    for (Index b : part)
        if (id.empty() && sigma_action(pair, p, 0, SparseVector::basis(b)) != SparseVector::basis(b))
            id = A.label(b);
    for (Element h : sd.X().elements()) {
        SparseVector v = unitary(pair, p, h), vinv = A.star(v);
        std::vector<SparseVector> img;
        for (Index b : part) img.push_back(sigma_action(pair, p, h, SparseVector::basis(b)));
        for (std::size_t i = 0; i < part.size(); ++i) {
            SparseVector eb = SparseVector::basis(part[i]);
            for (Element h2 : sd.X().elements())
                if (law.empty() && sigma_action(pair, p, h, sigma_action(pair, p, h2, eb)) !=
                                       sigma_action(pair, p, g.mul(h, h2), eb))
                    law = g.name(h) + ", " + g.name(h2) + ", " + A.label(part[i]);
            for (std::size_t j = 0; j < part.size() && mult.empty(); ++j)
                if (sigma_action(pair, p, h, A.product(part[i], part[j])) != A.multiply(img[i], img[j]))
                    mult = g.name(h) + ", " + A.label(part[i]) + ", " + A.label(part[j]);
            if (star.empty() && sigma_action(pair, p, h, A.star(part[i])) != A.star(img[i]))
                star = g.name(h) + ", " + A.label(part[i]);
            if (conj.empty() && A.multiply(A.multiply(v, eb), vinv) != img[i])
                conj = g.name(h) + ", " + A.label(part[i]);
        }
        if (unit.empty() && sigma_action(pair, p, h, part_unit) != part_unit) unit = g.name(h);
    }
    rep.add("sigma_e = id", id.empty(), id);
    rep.add("action law", law.empty(), law);
    rep.add("multiplicative", mult.empty(), mult);
    rep.add("star compatible", star.empty(), star);
    rep.add("unital", unit.empty(), unit);
    rep.add("implemented by V(h)", conj.empty(), conj, "V(h) x V(h)* = sigma_h(x)");
    return rep;
}

namespace {

std::vector<Element> phi_for(const RelativeMatchedPair& first, const RelativeMatchedPair& second, Side side) {
    return side == Side::HK ? action_conjugacy(first, first.I().representatives(), second.I().representatives())
                            : action_conjugacy_J(first, first.J().representatives(), second.J().representatives());
}

}  // namespace

LinearMap representative_iso(const RelativeMatchedPair& first, const PresentedAlgebra& p1,
                             const RelativeMatchedPair& second, const PresentedAlgebra& p2) {
    if (p1.side != p2.side || p1.algebra.dim() != p2.algebra.dim())
        throw DimensionMismatch("presented algebras differ in side or dimension");
    const Sides sd{second, p2.side};
    auto phi = phi_for(first, second, p1.side);
    LinearMap f{p1.algebra.dim(), p2.algebra.dim(), {}};
    for (const auto& [x, y, s] : p1.triples)
        f.columns.push_back(SparseVector::basis(basis_of(sd, p2, x, phi[sd.Y().index_of(y)], s)));
    return f;
}

Report verify_sigma_conjugacy(const RelativeMatchedPair& first, const PresentedAlgebra& p1,
                              const RelativeMatchedPair& second, const PresentedAlgebra& p2) {
    Report rep("sigma conjugacy");
    LinearMap f = representative_iso(first, p1, second, p2);
    const FiniteGroup& g = first.group();
    const Sides sd{first, p1.side};
    std::string bad;
    for (Element h : sd.X().elements())
        for (Index b = 0; b < p1.algebra.dim() && bad.empty(); ++b) {
            if (p1.triples[b][0] != 0) continue;
            SparseVector eb = SparseVector::basis(b);
            if (f.apply(sigma_action(first, p1, h, eb)) != sigma_action(second, p2, h, f.apply(eb)))
                bad = g.name(h) + ", " + p1.algebra.label(b);
        }
    rep.add("phi intertwines sigma", bad.empty(), bad);
    return rep;
}

LinearMap calmos_iso(const RelativeMatchedPair& pair, const PresentedAlgebra& p, const DoubleGroupoid& squares) {
    if ((p.side == Side::HK) != (squares.variant() == Variant::T))
        throw DimensionMismatch("HK pairs with T, KH with T'");
    const Sides sd{pair, p.side};
    const FiniteGroup& g = pair.group();
    LinearMap f{p.algebra.dim(), squares.size(), {}};
    for (const auto& [x, y, s] : p.triples) {
        Square t{x, g.mul(y, s), sd.act(x, y), g.mul(sd.comp(x, y), s)};
        auto j = squares.index_of(t);
        if (!j) throw Error("calmos_iso: image is not a square: " + triple_str(g, {x, y, s}));
        f.columns.push_back(SparseVector::basis(static_cast<Index>(*j)));
    }
    return f;
}

std::vector<SparseVector> theta_basis(const LinearMap& iso) {
    if (iso.source_dim != iso.target_dim) throw DimensionMismatch("theta_basis: map is not square");
    std::vector<SparseVector> theta(iso.target_dim);
    std::vector<bool> hit(iso.target_dim);
    for (Index i = 0; i < iso.source_dim; ++i) {
        const SparseVector& c = iso.columns[i];
        if (c.size() != 1 || hit[c.entries()[0].first])
            throw DimensionMismatch("theta_basis: map is not a scaled basis bijection");
        const auto& [t, v] = c.entries()[0];
        hit[t] = true;
        theta[t] = SparseVector::from_entries({{i, Rational(1) / v}});
    }
    return theta;
}

Report verify_theta(const PresentedAlgebra& p, const DoubleGroupoid& squares, const std::vector<SparseVector>& theta) {
    Report rep("theta basis");
    const StarAlgebra& A = p.algebra;
    const std::size_t n = squares.size();
    rep.add("basis", theta.size() == n && n == A.dim() && rank(theta) == n);
    if (theta.size() != n) return rep;
    std::string mult, star;
    SparseVector units;
    for (Index t = 0; t < n; ++t) {
        const Square& st = squares[t];
        for (Index u = 0; u < n && mult.empty(); ++u) {
            auto c = squares.h_compose(st, squares[u]);
            SparseVector expect = c ? theta[squares.at(*c)] : SparseVector{};
            if (A.multiply(theta[t], theta[u]) != expect) mult = to_string(st) + " " + to_string(squares[u]);
        }
        if (star.empty() && A.star(theta[t]) != theta[squares.at(squares.h_inverse(st))]) star = to_string(st);
        if (squares.is_h_unit(st)) units.add_scaled(theta[t], Rational(1));
    }
    rep.add("product law", mult.empty(), mult, "theta_t theta_u = theta_{t*u}, or 0");
    rep.add("star law", star.empty(), star, "theta_t* = theta_{t^-h}");
    rep.add("unit decomposition", units == A.unit());
    return rep;
}

}  // namespace qgroupoid
