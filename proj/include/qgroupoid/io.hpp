#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgroupoid/group.hpp"
#include "qgroupoid/matched_pair.hpp"
#include "qgroupoid/quantum_groupoid.hpp"
#include "qgroupoid/weak_hopf.hpp"

namespace qgroupoid {

using json = nlohmann::json;

// Throws InputError on unreadable files or malformed JSON.
json read_json(const std::string& path);

// {"degree": n, "generators": [cycles, ...]} or {"table": [[...], ...]}.
struct GroupInput {
    GroupPtr group;
    int degree = 0;  // 0 for table input
};
GroupInput parse_group(const json& spec, std::size_t max_order = kDefaultMaxOrder);

// An element is an id, or a list of cycles on 1-based points for permutation groups.
Element parse_element(const GroupInput& g, const json& spec);
json element_json(const GroupInput& g, Element x);
Subgroup parse_subgroup(const GroupInput& g, const json& gens);
// A short generating set, greedy in id order.
std::vector<Element> generators_of(const Subgroup& s);

// {"group": ..., "H_gens": [...], "K_gens": [...], "I": [...], "J": [...]}
// or {"group": ..., "frattini": {"N_gens": [...], "p": p}}.
struct PairInput {
    std::string name;
    GroupInput group;
    RelativeMatchedPair pair;
};
PairInput parse_pair(const json& spec, std::size_t max_order = kDefaultMaxOrder,
                     const std::optional<json>& reps_i = std::nullopt, const std::optional<json>& reps_j = std::nullopt);
json pair_descriptor(const GroupInput& g, const json& group_spec, const RelativeMatchedPair& pair,
                     const std::string& name = {});

// Deterministic exports. Coefficients are written as "n/d" strings and
// vectors as [[index, coefficient], ...].
void write_star_algebra(std::ostream& os, const StarAlgebra& a, const std::string& name);
void write_weak_hopf(std::ostream& os, const WeakHopfAlgebra& w, const std::string& name);
void write_pairing(std::ostream& os, const DualityPairing& p, std::size_t right_dim, const std::string& name);

StarAlgebra parse_star_algebra(const json& doc);
WeakHopfAlgebra parse_weak_hopf(const json& doc);

}  // namespace qgroupoid
