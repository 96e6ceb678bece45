#include "qgroupoid/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "qgroupoid/errors.hpp"
#include "qgroupoid/presentation.hpp"

namespace qgroupoid {
namespace {

namespace fs = std::filesystem;

PairInput load_pair(const RunConfig& cfg) {
    return parse_pair(read_json(cfg.input), cfg.max_order, cfg.reps_i, cfg.reps_j);
}

// Group files may hold the group spec directly or under "group".
json group_spec_of(const json& doc) { return doc.contains("group") ? doc.at("group") : doc; }

std::ofstream open_out(const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write " + path.string());
    return f;
}

std::string subgroup_str(const Subgroup& s) {
    std::string out = "<";
    bool first = true;
    for (Element x : generators_of(s)) {
        out += (first ? "" : ", ") + s.group().name(x);
        first = false;
    }
    return out + ">";
}

std::vector<std::size_t> order_profile(const Subgroup& s) {
    std::vector<std::size_t> p;
    for (Element x : s.elements()) p.push_back(s.group().element_order(x));
    std::sort(p.begin(), p.end());
    return p;
}

void write_export(const std::string& what, const PairInput& in, const RunConfig& cfg, std::ostream& os) {
    const RelativeMatchedPair& pair = in.pair;
    const std::size_t s = pair.S().order();
    if (what == "CT" || what == "CT_prime" || what == "pairing" || what == "crossed_product") {
        DoubleGroupoid t(pair, Variant::T), tp(pair, Variant::TPrime);
        if (what == "CT") return write_weak_hopf(os, build_CT(pair, t), "CT");
        if (what == "CT_prime") return write_weak_hopf(os, build_CT_prime(pair, tp), "CT'");
        if (what == "pairing") return write_pairing(os, build_pairing(pair, t, tp), tp.size(), "<T,T'>");
        WeakHopfAlgebra ct = build_CT(pair, t), ctp = build_CT_prime(pair, tp);
        auto cp = crossed_product(module_action(t, tp), ctp, ct, s, cfg.suite.crossed_product_guard);
        if (!cp) throw InputError("crossed product exceeds the guard of " + std::to_string(cfg.suite.crossed_product_guard));
        return write_star_algebra(os, cp->quotient.algebra, "CT x| CT'");
    }
    if (what == "presented_HK") return write_star_algebra(os, build_presented(pair, Side::HK).algebra, "(C(K)x|S)x|H");
    if (what == "presented_KH") return write_star_algebra(os, build_presented(pair, Side::KH).algebra, "(C(H)x|S)x|K");
    if (what == "pair") {
        os << pair_descriptor(in.group, group_spec_of(read_json(cfg.input)), pair, in.name).dump(2) << '\n';
        return;
    }
    throw InputError("unknown export target: " + what);
}

}  // namespace

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
    json doc = read_json(cfg.input);
    json spec = group_spec_of(doc);
    GroupInput g = parse_group(spec, cfg.max_order);
    auto subs = all_subgroups(g.group);
    json listing = json::array();
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>,
             std::size_t>
        seen;
    std::vector<std::string> lines;
    std::vector<decltype(seen)::key_type> line_keys;
    for (const Subgroup& h : subs)
        for (const Subgroup& k : subs) {
            if (!check_relative_matched_pair(h, k)) continue;
            const std::size_t s = intersection(h, k).order();
            auto key = std::make_tuple(h.order(), k.order(), s, order_profile(h), order_profile(k));
            json entry = {{"H_gens", json::array()}, {"K_gens", json::array()},
                          {"H", h.order()},         {"K", k.order()},
                          {"S", s},                 {"T", h.order() * k.order() * s}};
            for (Element x : generators_of(h)) entry["H_gens"].push_back(element_json(g, x));
            for (Element x : generators_of(k)) entry["K_gens"].push_back(element_json(g, x));
            listing.push_back(entry);
            std::ostringstream line;
            line << "H=" << subgroup_str(h) << " K=" << subgroup_str(k) << " |H|=" << h.order()
                 << " |K|=" << k.order() << " |S|=" << s << " |T|=" << h.order() * k.order() * s;
            if (cfg.all || !seen.count(key)) {
                lines.push_back(line.str());
                line_keys.push_back(key);
            }
            ++seen[key];
        }
    for (std::size_t i = 0; i < lines.size(); ++i) {
        out << lines[i];
        if (!cfg.all && seen[line_keys[i]] > 1) out << "  (" << seen[line_keys[i]] << " pairs with this signature)";
        out << '\n';
    }
    out << listing.size() << " relative matched pairs\n";
    if (!cfg.out.empty()) {
        auto f = open_out(cfg.out);
        f << listing.dump(2) << '\n';
    }
    return kExitPass;
}

int cmd_build(const RunConfig& cfg, std::ostream& out) {
    if (cfg.out.empty()) throw InputError("build needs --out DIR");
    PairInput in = load_pair(cfg);
    fs::create_directories(cfg.out);
    for (const char* what : {"CT", "CT_prime", "presented_HK", "presented_KH", "pairing"}) {
        fs::path path = fs::path(cfg.out) / (std::string(what) + ".json");
        auto f = open_out(path);
        write_export(what, in, cfg, f);
        out << "wrote " << path.string() << '\n';
    }
    return kExitPass;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    json doc = read_json(cfg.input);
    Report rep;
    const std::string kind = doc.is_object() ? doc.value("kind", "") : "";
    if (kind == "weak_hopf") {
        WeakHopfAlgebra w = parse_weak_hopf(doc);
        rep = verify_weak_hopf(w);
        rep.merge(verify_weak_kac(w));
    } else if (kind == "star_algebra") {
        rep = verify_algebra(parse_star_algebra(doc));
    } else {
        PairInput in = parse_pair(doc, cfg.max_order, cfg.reps_i, cfg.reps_j);
        rep = verify_pair(in.pair, cfg.suite);
    }
    out << rep.text();
    if (!cfg.json_report.empty()) {
        auto f = open_out(cfg.json_report);
        f << rep.json() << '\n';
    }
    return rep.ok() ? kExitPass : kExitFail;
}

int cmd_frattini(const RunConfig& cfg, std::ostream& out) {
    json doc = read_json(cfg.input);
    json spec = group_spec_of(doc);
    GroupInput g = parse_group(spec, cfg.max_order);
    RelativeMatchedPair pair = frattini_pair(g.group, parse_subgroup(g, cfg.normal_gens), cfg.p);
    json d = pair_descriptor(g, spec, pair, "frattini p=" + std::to_string(cfg.p));
    if (cfg.out.empty()) {
        out << d.dump(2) << '\n';
    } else {
        auto f = open_out(cfg.out);
        f << d.dump(2) << '\n';
        out << "wrote " << cfg.out << '\n';
    }
    return kExitPass;
}

int cmd_export(const RunConfig& cfg, std::ostream& out) {
    PairInput in = load_pair(cfg);
    if (cfg.out.empty()) {
        write_export(cfg.what, in, cfg, out);
    } else {
        auto f = open_out(cfg.out);
        write_export(cfg.what, in, cfg, f);
    }
    return kExitPass;
}

int run_command(int (*command)(const RunConfig&, std::ostream&), const RunConfig& cfg, std::ostream& out,
                std::ostream& err) {
    try {
        return command(cfg, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

}  // namespace qgroupoid
