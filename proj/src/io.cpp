#include "qgroupoid/io.hpp"

#include <fstream>
#include <map>
#include <ostream>

#include "qgroupoid/errors.hpp"

namespace qgroupoid {

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

GroupInput parse_group(const json& spec, std::size_t max_order) {
    try {
        if (spec.contains("table")) {
            Table t = spec.at("table").get<Table>();
            return {group_from_table(t, max_order), 0};
        }
        int degree = spec.at("degree").get<int>();
        std::vector<Cycles> gens;
        for (const auto& g : spec.at("generators")) gens.push_back(g.get<Cycles>());
        return {group_from_permutations(degree, gens, max_order), degree};
    } catch (const json::exception& e) {
        throw InputError(std::string("group: ") + e.what());
    }
}

Element parse_element(const GroupInput& g, const json& spec) {
    if (spec.is_number_integer()) {
        auto id = spec.get<long long>();
        if (id < 0 || static_cast<std::size_t>(id) >= g.group->order())
            throw InputError("element id out of range: " + spec.dump());
        return static_cast<Element>(id);
    }
    if (g.degree == 0) throw InputError("cycle notation needs a permutation group: " + spec.dump());
    std::string name;
    try {
        name = cycle_string(permutation_image(g.degree, spec.get<Cycles>()));
    } catch (const json::exception& e) {
        throw InputError("element " + spec.dump() + ": " + e.what());
    }
    const auto& names = g.group->names();
    for (Element x = 0; x < names.size(); ++x)
        if (names[x] == name) return x;
    throw InputError("permutation " + name + " is not in the group");
}

json element_json(const GroupInput& g, Element x) {
    if (g.degree == 0) return x;
    // cycle_string gives "(1 2)(3 4)" or "()"
    json cycles = json::array();
    const std::string& n = g.group->name(x);
    json cur = json::array();
    std::string num;
    for (char ch : n) {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            num += ch;
            continue;
        }
        if (!num.empty()) {
            cur.push_back(std::stoi(num));
            num.clear();
        }
        if (ch == ')' && !cur.empty()) {
            cycles.push_back(cur);
            cur = json::array();
        }
    }
    return cycles;
}

Subgroup parse_subgroup(const GroupInput& g, const json& gens) {
    if (!gens.is_array()) throw InputError("generators must be a list: " + gens.dump());
    std::vector<Element> xs;
    for (const auto& x : gens) xs.push_back(parse_element(g, x));
    return subgroup_generated(g.group, xs);
}

std::vector<Element> generators_of(const Subgroup& s) {
    std::vector<Element> gens;
    Subgroup cur = Subgroup::trivial(s.parent());
    for (Element x : s.elements())
        if (!cur.contains(x)) {
            gens.push_back(x);
            cur = subgroup_generated(s.parent(), gens);
        }
    return gens;
}

namespace {

std::optional<std::vector<Element>> parse_reps(const GroupInput& g, const json* spec) {
    if (!spec || spec->is_null()) return std::nullopt;
    std::vector<Element> reps;
    for (const auto& x : *spec) reps.push_back(parse_element(g, x));
    return reps;
}

}  // namespace

PairInput parse_pair(const json& spec, std::size_t max_order, const std::optional<json>& reps_i,
                     const std::optional<json>& reps_j) {
    if (!spec.is_object() || !spec.contains("group")) throw InputError("pair descriptor needs a \"group\"");
    GroupInput g = parse_group(spec.at("group"), max_order);
    std::string name = spec.value("name", "");
    const json* ri = reps_i ? &*reps_i : (spec.contains("I") ? &spec.at("I") : nullptr);
    const json* rj = reps_j ? &*reps_j : (spec.contains("J") ? &spec.at("J") : nullptr);
    if (spec.contains("frattini")) {
        const json& f = spec.at("frattini");
        if (!f.contains("N_gens") || !f.contains("p")) throw InputError("frattini needs N_gens and p");
        RelativeMatchedPair base = frattini_pair(g.group, parse_subgroup(g, f.at("N_gens")), f.at("p").get<int>());
        return {name, g, base.with_representatives(parse_reps(g, ri), parse_reps(g, rj))};
    }
    if (!spec.contains("H_gens") || !spec.contains("K_gens")) throw InputError("pair descriptor needs H_gens and K_gens");
    Subgroup h = parse_subgroup(g, spec.at("H_gens"));
    Subgroup k = parse_subgroup(g, spec.at("K_gens"));
    return {name, g, RelativeMatchedPair::create(h, k, parse_reps(g, ri), parse_reps(g, rj))};
}

json pair_descriptor(const GroupInput& g, const json& group_spec, const RelativeMatchedPair& pair,
                     const std::string& name) {
    json d = json::object();
    if (!name.empty()) d["name"] = name;
    d["group"] = group_spec;
    auto gens = [&](const Subgroup& s) {
        json out = json::array();
        for (Element x : generators_of(s)) out.push_back(element_json(g, x));
        return out;
    };
    auto reps = [&](const CosetSpace& c) {
        json out = json::array();
        for (Element x : c.representatives()) out.push_back(element_json(g, x));
        return out;
    };
    d["H_gens"] = gens(pair.H());
    d["K_gens"] = gens(pair.K());
    d["I"] = reps(pair.I());
    d["J"] = reps(pair.J());
    return d;
}

namespace {

void write_vector(std::ostream& os, const SparseVector& v) {
    os << '[';
    bool first = true;
    for (const auto& [i, c] : v) {
        os << (first ? "" : ",") << '[' << i << ",\"" << c.fraction() << "\"]";
        first = false;
    }
    os << ']';
}

// one [i, j, "c"] line per nonzero entry of column i
void write_columns(std::ostream& os, const std::vector<SparseVector>& cols) {
    bool first = true;
    for (Index i = 0; i < cols.size(); ++i)
        for (const auto& [j, c] : cols[i]) {
            os << (first ? "\n    " : ",\n    ") << '[' << i << ',' << j << ",\"" << c.fraction() << "\"]";
            first = false;
        }
}

void write_algebra_fields(std::ostream& os, const StarAlgebra& a) {
    os << "  \"dim\": " << a.dim() << ",\n  \"labels\": [";
    for (Index i = 0; i < a.dim(); ++i) os << (i ? ",\n    " : "\n    ") << json(a.label(i)).dump();
    os << "\n  ],\n  \"unit\": ";
    write_vector(os, a.unit());
    os << ",\n  \"mult\": [";
    bool first = true;
    for (Index i = 0; i < a.dim(); ++i)
        for (const auto& [j, v] : a.row(i))
            for (const auto& [k, c] : v) {
                os << (first ? "\n    " : ",\n    ") << '[' << i << ',' << j << ',' << k << ",\"" << c.fraction()
                   << "\"]";
                first = false;
            }
    os << "\n  ],\n  \"star\": [";
    write_columns(os, a.star_columns());
    os << "\n  ]";
}

SparseVector parse_vector(const json& v) {
    std::vector<SparseVector::Entry> e;
    for (const auto& x : v) e.emplace_back(x.at(0).get<Index>(), Rational::parse(x.at(1).get<std::string>()));
    return SparseVector::from_entries(std::move(e));
}

}  // namespace

void write_star_algebra(std::ostream& os, const StarAlgebra& a, const std::string& name) {
    os << "{\n  \"kind\": \"star_algebra\",\n  \"name\": " << json(name).dump() << ",\n";
    write_algebra_fields(os, a);
    os << "\n}\n";
}

void write_weak_hopf(std::ostream& os, const WeakHopfAlgebra& w, const std::string& name) {
    os << "{\n  \"kind\": \"weak_hopf\",\n  \"name\": " << json(name).dump() << ",\n";
    write_algebra_fields(os, w.algebra);
    os << ",\n  \"coproduct\": [";
    bool first = true;
    for (Index i = 0; i < w.dim(); ++i)
        for (const auto& t : w.coproduct[i]) {
            os << (first ? "\n    " : ",\n    ") << '[' << i << ',' << t.left << ',' << t.right << ",\""
               << t.coef.fraction() << "\"]";
            first = false;
        }
    os << "\n  ],\n  \"counit\": [";
    for (Index i = 0; i < w.dim(); ++i) os << (i ? "," : "") << '"' << w.counit[i].fraction() << '"';
    os << "],\n  \"antipode\": [";
    write_columns(os, w.antipode);
    os << "\n  ]\n}\n";
}

void write_pairing(std::ostream& os, const DualityPairing& p, std::size_t right_dim, const std::string& name) {
    os << "{\n  \"kind\": \"pairing\",\n  \"name\": " << json(name).dump() << ",\n  \"rows\": " << p.rows.size()
       << ",\n  \"columns\": " << right_dim << ",\n  \"matrix\": [";
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        os << (i ? ",\n    " : "\n    ");
        write_vector(os, p.rows[i]);
    }
    os << "\n  ]\n}\n";
}

namespace {

Index checked_index(const json& x, std::size_t dim) {
    auto i = x.get<Index>();
    if (i >= dim) throw InputError("index " + std::to_string(i) + " out of range");
    return i;
}

std::vector<SparseVector> parse_columns(const json& entries, std::size_t dim) {
    std::vector<std::vector<SparseVector::Entry>> cols(dim);
    for (const auto& e : entries)
        cols[checked_index(e.at(0), dim)].emplace_back(checked_index(e.at(1), dim),
                                                       Rational::parse(e.at(2).get<std::string>()));
    std::vector<SparseVector> out;
    for (auto& c : cols) out.push_back(SparseVector::from_entries(std::move(c)));
    return out;
}

}  // namespace

StarAlgebra parse_star_algebra(const json& doc) {
    try {
        const auto dim = doc.at("dim").get<std::size_t>();
        auto labels = doc.at("labels").get<std::vector<std::string>>();
        if (labels.size() != dim) throw InputError("algebra: labels differ from dim");
        std::map<std::pair<Index, Index>, std::vector<SparseVector::Entry>> table;
        for (const auto& m : doc.at("mult"))
            table[{checked_index(m.at(0), dim), checked_index(m.at(1), dim)}].emplace_back(
                checked_index(m.at(2), dim), Rational::parse(m.at(3).get<std::string>()));
        std::vector<Product> products;
        for (auto& [ij, entries] : table)
            products.push_back({ij.first, ij.second, SparseVector::from_entries(std::move(entries))});
        return StarAlgebra(dim, std::move(labels), std::move(products), parse_vector(doc.at("unit")),
                           parse_columns(doc.at("star"), dim));
    } catch (const json::exception& e) {
        throw InputError(std::string("algebra: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("algebra: ") + e.what());
    }
}

WeakHopfAlgebra parse_weak_hopf(const json& doc) {
    StarAlgebra a = parse_star_algebra(doc);
    const std::size_t dim = a.dim();
    try {
        Coproduct cop(dim);
        for (const auto& t : doc.at("coproduct"))
            cop[checked_index(t.at(0), dim)].push_back(
                {checked_index(t.at(1), dim), checked_index(t.at(2), dim), Rational::parse(t.at(3).get<std::string>())});
        std::vector<Rational> counit;
        for (const auto& c : doc.at("counit")) counit.push_back(Rational::parse(c.get<std::string>()));
        if (counit.size() != dim) throw InputError("weak Hopf algebra: counit length differs from dim");
        return {std::move(a), std::move(cop), std::move(counit), parse_columns(doc.at("antipode"), dim)};
    } catch (const json::exception& e) {
        throw InputError(std::string("weak Hopf algebra: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("weak Hopf algebra: ") + e.what());
    }
}

}  // namespace qgroupoid
