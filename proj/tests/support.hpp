#pragma once

#include <stdexcept>
#include <string>

#include "qgroupoid/io.hpp"

namespace testing {

inline std::string corpus(const std::string& file) { return std::string(QG_CORPUS_DIR) + "/" + file; }

inline qgroupoid::PairInput load(const std::string& file) {
    return qgroupoid::parse_pair(qgroupoid::read_json(corpus(file)));
}

inline qgroupoid::Element by_name(const qgroupoid::FiniteGroup& g, const std::string& name) {
    for (qgroupoid::Element x = 0; x < g.order(); ++x)
        if (g.name(x) == name) return x;
    throw std::runtime_error("no element " + name);
}

// corpus files small enough for cubic checks
inline const char* const kSmall[] = {"a_s3_matched.json", "b_s3_s3_c2.json",  "d_trivial_z2.json",
                                     "d_z2_trivial.json", "d_trivial_s3.json", "d_s3_trivial.json"};

}  // namespace testing
