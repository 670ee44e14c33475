#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "strata/io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(STRATA_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("strata_cli_test_" + name);
}

} // namespace

TEST_CASE("gallery: writes a loadable space file and rejects unknown names") {
    fs::path space = temp_file("tp2.space");
    RunResult w = run("gallery pinched_torus --out " + space.string());
    CHECK(w.exit_code == 0);
    RunResult ih = run("ih " + space.string() + " --perversity zero");
    CHECK(ih.exit_code == 0);
    CHECK(ih.out == "i=0:1, i=1:0, i=2:1\n");
    RunResult to_stdout = run("gallery susp_torus3_2p");
    CHECK(to_stdout.exit_code == 0);
    CHECK(to_stdout.out.find("\"dimension\": 4") != std::string::npos);
    RunResult bad = run("gallery nope");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("gallery output is byte-for-byte deterministic") {
    RunResult a = run("gallery susp_torus3_2p");
    RunResult b = run("gallery susp_torus3_2p");
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("space files round-trip losslessly") {
    fs::path space = temp_file("roundtrip.space");
    run("gallery susp_torus2 --out " + space.string());
    std::string text = strata::io::read_file(space.string());
    auto doc = strata::io::parse_space_json(text);
    auto loaded = strata::io::space_from_document(doc);
    auto doc2 = strata::io::document_from_space(loaded, doc.subdivisions);
    CHECK(strata::io::write_space_json(doc2) == text);
}

TEST_CASE("ih: paper rows through the CLI") {
    RunResult csv = run("ih susp_torus2 --perversity top --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "degree,dim\n0,1\n1,0\n2,2\n3,1\n");
    RunResult lm = run("ih susp_torus3_2p --perversity lower-middle");
    CHECK(lm.exit_code == 0);
    CHECK(lm.out == "i=0:2, i=1:4, i=2:0, i=3:0, i=4:2\n");
    RunResult json = run("ih pinched_torus --perversity zero --format json");
    CHECK(json.exit_code == 0);
    CHECK(json.out.find("\"dims\"") != std::string::npos);
    CHECK(json.out.find("\"ichi\": 2") != std::string::npos);
}

TEST_CASE("ih: custom perversity spelling and engine flags") {
    RunResult c = run("ih susp_torus2 --perversity custom:0,1 --rank-engine checked");
    CHECK(c.exit_code == 0);
    CHECK(c.out == "i=0:1, i=1:0, i=2:2, i=3:1\n");
    RunResult bad = run("ih susp_torus2 --perversity custom:0,9");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("chi: both methods agree and report through formats") {
    RunResult both = run("chi pinched_torus --perversity zero --method both");
    CHECK(both.exit_code == 0);
    CHECK(both.out == "direct = 2\nstratumwise = 2\n");
    RunResult strat = run("chi susp_torus2 --perversity zero --method stratumwise");
    CHECK(strat.exit_code == 0);
    CHECK(strat.out == "stratumwise = -2\n");
    RunResult json = run("chi susp_torus2 --perversity zero --format json");
    CHECK(json.exit_code == 0);
    CHECK(json.out.find("\"direct\": -2") != std::string::npos);
    CHECK(json.out.find("\"stratumwise\": -2") != std::string::npos);
    CHECK(json.out.find("\"equal\": true") != std::string::npos);
}

TEST_CASE("multiplicity through the CLI: the paper's values") {
    CHECK(run("multiplicity pinched_torus --stratum 0 --perversity zero").out == "2\n");
    CHECK(run("multiplicity susp_torus2 --stratum 0 --perversity zero").out == "-1\n");
    CHECK(run("multiplicity susp_torus2 --stratum 0 --perversity top").out == "1\n");
    CHECK(run("multiplicity susp_torus3_2p --stratum 1 --component 1 --perversity top").out ==
          "-2\n");
    CHECK(run("multiplicity susp_torus3_2p --stratum 9 --perversity top").exit_code == 2);
}

TEST_CASE("verify-ph: verdicts drive the exit code") {
    fs::path zeros = temp_file("zeros.json");
    strata::io::ZerosDocument doc;
    doc.field_class = "semi-radial";
    doc.zeros = {{0, 0, 1, "pinch"}};
    strata::io::write_file(zeros.string(), strata::io::write_zeros_json(doc));
    RunResult ok = run("verify-ph pinched_torus " + zeros.string() + " --perversity zero");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("verdict: equal") != std::string::npos);

    RunResult csv =
        run("verify-ph pinched_torus " + zeros.string() + " --perversity zero --format csv");
    CHECK(csv.out == "stratum,component,chi_c,multiplicity,index,singular_index\n0,0,1,2,1,2\n");

    strata::io::ZerosDocument wrong;
    wrong.zeros = {{0, 0, 5, "too much"}};
    fs::path wrong_path = temp_file("zeros_wrong.json");
    strata::io::write_file(wrong_path.string(), strata::io::write_zeros_json(wrong));
    RunResult mism = run("verify-ph sphere2 " + wrong_path.string() + " --perversity zero");
    CHECK(mism.exit_code == 3);
    CHECK(mism.out.find("verdict: mismatch") != std::string::npos);

    strata::io::ZerosDocument ghost;
    ghost.zeros = {{7, 0, 1, "ghost"}};
    fs::path ghost_path = temp_file("zeros_ghost.json");
    strata::io::write_file(ghost_path.string(), strata::io::write_zeros_json(ghost));
    CHECK(run("verify-ph sphere2 " + ghost_path.string() + " --perversity zero").exit_code == 2);
}

TEST_CASE("verify-ph: json output carries every number of the text report") {
    fs::path zeros = temp_file("zeros4.json");
    strata::io::ZerosDocument doc;
    doc.zeros = {{0, 0, 1, "p0"}, {0, 1, 1, "p1"}, {1, 0, -1, "a0"}, {1, 1, -1, "a1"}};
    strata::io::write_file(zeros.string(), strata::io::write_zeros_json(doc));
    RunResult json =
        run("verify-ph susp_torus3_2p " + zeros.string() + " --perversity top --format json");
    CHECK(json.exit_code == 0);
    for (const char* needle :
         {"\"ichi\": 0", "\"sum\": 0", "\"verdict\": \"equal\"", "\"multiplicity\": -2",
          "\"singular_index\": 2", "\"index\": -1"})
        CHECK(json.out.find(needle) != std::string::npos);
}

TEST_CASE("converse: exit codes separate yes and no") {
    RunResult no = run("converse susp_torus3_2p_x_sphere2");
    CHECK(no.exit_code == 3);
    CHECK(no.out.find("exists: no") != std::string::npos);
    CHECK(no.out.find("chi_c = 2") != std::string::npos);
    RunResult yes = run("converse circle");
    CHECK(yes.exit_code == 0);
    CHECK(yes.out.find("exists: yes") != std::string::npos);
    RunResult json = run("converse sphere2 --format json");
    CHECK(json.exit_code == 3);
    CHECK(json.out.find("\"chi_c\": 2") != std::string::npos);
}

TEST_CASE("chain-level work on the 6-space is gated behind --force-chains") {
    RunResult gated = run("ih susp_torus3_2p_x_sphere2 --perversity zero");
    CHECK(gated.exit_code == 2);
    RunResult chi_gated = run("chi susp_torus3_2p_x_sphere2 --perversity zero --method direct");
    CHECK(chi_gated.exit_code == 2);
    // stratumwise never needs the gate
    RunResult strat = run("chi susp_torus3_2p_x_sphere2 --perversity zero --method stratumwise");
    CHECK(strat.exit_code == 0);
    CHECK(strat.out == "stratumwise = 0\n");
}

TEST_CASE("bad inputs exit with code 2") {
    CHECK(run("ih /nonexistent/path.space --perversity zero").exit_code == 2);
    CHECK(run("ih pinched_torus --perversity middle").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    fs::path broken = temp_file("broken.space");
    std::ofstream(broken) << "{ not json";
    CHECK(run("ih " + broken.string() + " --perversity zero").exit_code == 2);
}

TEST_CASE("bare complexes load with a single default stratum") {
    fs::path space = temp_file("bare.space");
    std::ofstream(space) << "{\"dimension\": 2, \"maximal_simplices\": "
                            "[[0,1,2],[0,1,3],[0,2,3],[1,2,3]]}";
    RunResult r = run("ih " + space.string() + " --perversity zero");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "i=0:1, i=1:0, i=2:1\n");
}

TEST_CASE("the subdivisions field of a space file is the default level") {
    fs::path space = temp_file("subdiv.space");
    auto doc = strata::io::parse_space_json(run("gallery pinched_torus").out);
    doc.subdivisions = 1;
    strata::io::write_file(space.string(), strata::io::write_space_json(doc));
    RunResult r = run("ih " + space.string() + " --perversity zero --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"subdivisions\": 1") != std::string::npos);
    CHECK(r.out.find("\"ichi\": 2") != std::string::npos);
    RunResult forced = run("ih " + space.string() + " --perversity zero --subdivide 0");
    CHECK(forced.exit_code == 0);
    CHECK(forced.out == "i=0:1, i=1:0, i=2:1\n");
}

TEST_CASE("json reports are deterministic") {
    RunResult a = run("ih torus3_2p --perversity top --format json");
    RunResult b = run("ih torus3_2p --perversity top --format json");
    CHECK(a.out == b.out);
}
