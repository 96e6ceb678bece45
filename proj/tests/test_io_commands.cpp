#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qgroupoid/commands.hpp"
#include "qgroupoid/errors.hpp"
#include "support.hpp"

using namespace qgroupoid;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    fs::path p = fs::temp_directory_path() / ("qgroupoid_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string write_file(const fs::path& p, const std::string& text) {
    std::ofstream(p) << text;
    return p.string();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Run {
    int code;
    std::string out, err;
};

Run run(int (*command)(const RunConfig&, std::ostream&), const RunConfig& cfg) {
    std::ostringstream out, err;
    int code = run_command(command, cfg, out, err);
    return {code, out.str(), err.str()};
}

int cli(const std::string& args) {
    std::string cmd = std::string(QG_CLI) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("enumerate S3 lists the matched pair and omits non-factorizations") {
    RunConfig cfg;
    cfg.input = testing::corpus("group_s3.json");
    cfg.all = true;
    Run r = run(cmd_enumerate, cfg);
    REQUIRE(r.code == kExitPass);
    CHECK(r.out.find("H=<(1 2)> K=<(1 2 3)>") != std::string::npos);
    CHECK(r.out.find("H=<(1 2)> K=<(1 3)>") == std::string::npos);
    // 6 subgroups; S3 paired with anything on either side gives 11, each order-2 subgroup with A3 in
    // either order gives 6 more
    CHECK(r.out.find("17 relative matched pairs") != std::string::npos);
}

TEST_CASE("enumerate on the trivial group and on Z/4") {
    fs::path dir = scratch("enumerate");
    RunConfig cfg;
    cfg.input = write_file(dir / "trivial.json", R"({"order": 1, "table": [[0]]})");
    cfg.all = true;
    Run r = run(cmd_enumerate, cfg);
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("1 relative matched pairs") != std::string::npos);

    // Z/4: subgroups 1 < 2 < 4 form a chain, so HK = G iff one of them is G
    cfg.input = write_file(dir / "z4.json", R"({"degree": 4, "generators": [[[1, 2, 3, 4]]]})");
    cfg.out = (dir / "z4_pairs.json").string();
    r = run(cmd_enumerate, cfg);
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("5 relative matched pairs") != std::string::npos);
    json listing = read_json(cfg.out);
    REQUIRE(listing.size() == 5);
    for (const auto& e : listing) CHECK((e["H"] == 4 || e["K"] == 4));
}

TEST_CASE("build writes the algebras deterministically") {
    fs::path d1 = scratch("build1"), d2 = scratch("build2");
    RunConfig cfg;
    cfg.input = testing::corpus("a_s3_matched.json");
    cfg.out = d1.string();
    REQUIRE(run(cmd_build, cfg).code == kExitPass);
    cfg.out = d2.string();
    REQUIRE(run(cmd_build, cfg).code == kExitPass);
    for (const char* f : {"CT.json", "CT_prime.json", "presented_HK.json", "presented_KH.json", "pairing.json"}) {
        REQUIRE(fs::exists(d1 / f));
        CHECK(slurp(d1 / f) == slurp(d2 / f));
    }
    for (const char* f : {"CT.json", "CT_prime.json", "presented_HK.json", "presented_KH.json"})
        CHECK(read_json((d1 / f).string())["dim"] == 6);
}

TEST_CASE("build dimensions on (b) and on ({e}, Z/2)") {
    fs::path d = scratch("build_dims");
    RunConfig cfg;
    cfg.input = testing::corpus("b_s3_s3_c2.json");
    cfg.out = (d / "b").string();
    REQUIRE(run(cmd_build, cfg).code == kExitPass);
    CHECK(read_json((d / "b" / "CT.json").string())["dim"] == 24);
    CHECK(read_json((d / "b" / "presented_KH.json").string())["dim"] == 24);
    cfg.input = testing::corpus("d_trivial_z2.json");
    cfg.out = (d / "d").string();
    REQUIRE(run(cmd_build, cfg).code == kExitPass);
    CHECK(read_json((d / "d" / "CT.json").string())["dim"] == 2);
}

TEST_CASE("exported algebras round-trip through the parser") {
    fs::path d = scratch("roundtrip");
    RunConfig cfg;
    cfg.input = testing::corpus("b_s3_s3_c2.json");
    cfg.out = d.string();
    REQUIRE(run(cmd_build, cfg).code == kExitPass);
    WeakHopfAlgebra w = parse_weak_hopf(read_json((d / "CT.json").string()));
    auto in = testing::load("b_s3_s3_c2.json");
    WeakHopfAlgebra ref = build_CT(in.pair, DoubleGroupoid(in.pair, Variant::T));
    CHECK(w.dim() == ref.dim());
    CHECK(w.counit == ref.counit);
    CHECK(w.antipode == ref.antipode);
    CHECK(w.algebra.unit() == ref.algebra.unit());
    for (Index i = 0; i < w.dim(); ++i)
        for (Index j = 0; j < w.dim(); ++j) CHECK(w.algebra.product(i, j) == ref.algebra.product(i, j));
    std::ostringstream a, b;
    write_weak_hopf(a, w, "CT");
    write_weak_hopf(b, ref, "CT");
    CHECK(a.str() == b.str());
}

TEST_CASE("verify passes on corpus pairs and names the axiom broken by a mutation") {
    RunConfig cfg;
    for (const char* f : {"a_s3_matched.json", "d_trivial_z2.json"}) {
        cfg.input = testing::corpus(f);
        Run r = run(cmd_verify, cfg);
        INFO(r.out);
        CHECK(r.code == kExitPass);
    }
    fs::path d = scratch("mutation");
    cfg.input = testing::corpus("a_s3_matched.json");
    cfg.out = d.string();
    REQUIRE(run(cmd_build, cfg).code == kExitPass);
    cfg.out.clear();

    cfg.input = (d / "CT.json").string();
    CHECK(run(cmd_verify, cfg).code == kExitPass);

    json doc = read_json(cfg.input);
    doc["counit"][0] = "2";
    cfg.input = write_file(d / "CT_counit.json", doc.dump());
    Run r = run(cmd_verify, cfg);
    CHECK(r.code == kExitFail);
    CHECK(r.out.find("FAIL counit") != std::string::npos);

    doc = read_json((d / "CT.json").string());
    // κ(e_1) doubled
    for (auto& e : doc["antipode"])
        if (e[0] == 1) e[2] = "2";
    cfg.input = write_file(d / "CT_antipode.json", doc.dump());
    r = run(cmd_verify, cfg);
    CHECK(r.code == kExitFail);
    CHECK(r.out.find("FAIL antipode") != std::string::npos);

    cfg.input = (d / "presented_HK.json").string();
    CHECK(run(cmd_verify, cfg).code == kExitPass);
    cfg.json_report = (d / "report.json").string();
    run(cmd_verify, cfg);
    CHECK(read_json(cfg.json_report)["ok"] == true);
}

TEST_CASE("input errors exit with code 2") {
    fs::path d = scratch("errors");
    RunConfig cfg;
    cfg.input = (d / "missing.json").string();
    CHECK(run(cmd_verify, cfg).code == kExitInput);
    cfg.input = write_file(d / "broken.json", "{not json");
    CHECK(run(cmd_verify, cfg).code == kExitInput);
    // (12) and (13) do not factorize S3
    cfg.input = write_file(d / "bad_pair.json",
                           R"({"group": {"degree": 3, "generators": [[[1, 2]], [[1, 2, 3]]]},
                               "H_gens": [[[1, 2]]], "K_gens": [[[1, 3]]]})");
    Run r = run(cmd_verify, cfg);
    CHECK(r.code == kExitInput);
    CHECK(r.err.find("error") != std::string::npos);
    cfg.input = testing::corpus("group_s4.json");
    cfg.max_order = 10;
    CHECK(run(cmd_enumerate, cfg).code == kExitInput);
}

TEST_CASE("frattini produces a pair descriptor that builds and verifies") {
    fs::path d = scratch("frattini");
    RunConfig cfg;
    cfg.input = testing::corpus("group_s4.json");
    cfg.normal_gens = json::parse("[[[1,2,3]],[[2,3,4]]]");
    cfg.p = 3;
    cfg.out = (d / "pair.json").string();
    REQUIRE(run(cmd_frattini, cfg).code == kExitPass);
    auto in = parse_pair(read_json(cfg.out));
    CHECK(in.pair.H().order() == 12);
    CHECK(in.pair.K().order() == 6);
    CHECK(in.pair.S().order() == 3);

    cfg.p = 5;
    CHECK(run(cmd_frattini, cfg).code == kExitInput);
    cfg.p = 3;
    cfg.normal_gens = json::parse("[[[1,2]]]");
    CHECK(run(cmd_frattini, cfg).code == kExitInput);

    RunConfig ex;
    ex.input = (d / "pair.json").string();
    ex.what = "pair";
    Run r = run(cmd_export, ex);
    REQUIRE(r.code == kExitPass);
    auto again = parse_pair(json::parse(r.out));
    CHECK(again.pair.H() == in.pair.H());
    CHECK(again.pair.K() == in.pair.K());
    CHECK(again.pair.I().representatives() == in.pair.I().representatives());
}

TEST_CASE("export targets") {
    RunConfig cfg;
    cfg.input = testing::corpus("a_s3_matched.json");
    cfg.what = "crossed_product";
    Run r = run(cmd_export, cfg);
    REQUIRE(r.code == kExitPass);
    CHECK(json::parse(r.out)["dim"] == 36);
    cfg.what = "pairing";
    r = run(cmd_export, cfg);
    REQUIRE(r.code == kExitPass);
    json p = json::parse(r.out);
    CHECK(p["rows"] == 6);
    CHECK(p["columns"] == 6);
    cfg.what = "nonsense";
    CHECK(run(cmd_export, cfg).code == kExitInput);
    cfg.input = testing::corpus("c_s4_frattini_p3.json");
    cfg.what = "crossed_product";
    CHECK(run(cmd_export, cfg).code == kExitInput);
}

TEST_CASE("representative overrides") {
    auto in = testing::load("e_s3xs3.json");
    auto alt = alternative_representatives(in.pair.I());
    json reps = json::array();
    for (Element x : alt) reps.push_back(element_json(in.group, x));
    auto changed = parse_pair(read_json(testing::corpus("e_s3xs3.json")), kDefaultMaxOrder, reps);
    CHECK(changed.pair.I().representatives() == alt);
    // a list that misses a coset is rejected
    json bad = json::array({reps[0], reps[0]});
    CHECK_THROWS_AS(parse_pair(read_json(testing::corpus("e_s3xs3.json")), kDefaultMaxOrder, bad), Error);
}

TEST_CASE("the command-line binary maps outcomes to exit codes") {
    fs::path d = scratch("cli");
    const std::string a = testing::corpus("a_s3_matched.json");
    CHECK(cli("verify --input " + a) == 0);
    CHECK(cli("build --input " + a + " --out " + (d / "a").string()) == 0);
    CHECK(fs::exists(d / "a" / "pairing.json"));
    write_file(d / "bad.json", R"({"counit": 1})");
    CHECK(cli("verify --input " + (d / "bad.json").string()) == 2);
    CHECK(cli("verify --input " + (d / "nope.json").string()) == 2);
    CHECK(cli("export --input " + a + " --what bogus") == 2);
    CHECK(cli("frattini --input " + testing::corpus("group_s4.json") + " --normal '[[[1,2,3]],[[2,3,4]]]' --p 2") == 0);
    CHECK(cli("enumerate --input " + testing::corpus("group_s3.json") + " --reps-I x") == 2);
}
