#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"
#include "rainbowlab/coloring.hpp"
#include "rainbowlab/graph.hpp"

using json = nlohmann::json;
using namespace rainbowlab;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

fs::path temp_file(const std::string& tag) {
    static int counter = 0;
    return fs::temp_directory_path() /
           ("rainbowlab_cli_" + std::to_string(::getpid()) + "_" + tag + "_" + std::to_string(counter++));
}

// Runs the binary under test through the shell; `env` is a prefix like
// "RAINBOWLAB_WORKERS=3 ".
RunResult run(const std::string& args, const std::string& env = "") {
    const char* bin = std::getenv("RAINBOWLAB_BIN");
    REQUIRE(bin != nullptr);
    fs::path out = temp_file("out"), err = temp_file("err");
    std::string cmd = env + "\"" + bin + "\" " + args + " > " + out.string() + " 2> " + err.string();
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    fs::remove(out);
    fs::remove(err);
    return r;
}

json parse_report(const RunResult& r) {
    json rep = json::parse(r.out);
    REQUIRE(rep["schema_version"] == 1);
    REQUIRE(rep.contains("command"));
    REQUIRE(rep.contains("config"));
    return rep;
}

}  // namespace

TEST_CASE("formulas text output") {
    RunResult r = run("formulas --n 57 --t 0");
    CHECK(r.code == 0);
    CHECK(r.out == "turan_edges 812\nmoon_ex 812\nar_formula 814\nin_proven_range true\n");

    RunResult small = run("formulas --n 6 --t 0");
    CHECK(small.code == 0);
    CHECK(small.out == "turan_edges 9\nmoon_ex 9\nar_formula 11\nin_proven_range false\n");
}

TEST_CASE("formulas json agrees with text") {
    RunResult r = run("formulas --n 87 --t 2 --json");
    CHECK(r.code == 0);
    json rep = parse_report(r);
    CHECK(rep["command"] == "formulas");
    CHECK(rep["config"]["n"] == 87);
    CHECK(rep["config"]["t"] == 2);
    CHECK(rep["turan_edges"] == 1806);
    CHECK(rep["moon_ex"] == 1977);
    CHECK(rep["ar_formula"] == 1979);
    CHECK(rep["in_proven_range"] == true);

    RunResult text = run("formulas --n 87 --t 2");
    CHECK(text.out == "turan_edges 1806\nmoon_ex 1977\nar_formula 1979\nin_proven_range true\n");
}

TEST_CASE("formulas rejects bad parameters") {
    CHECK(run("formulas --n 5 --t 9").code == 2);
    CHECK(run("formulas --t 0").code == 2);
    CHECK(run("formulas --n x --t 0").code == 2);
}

TEST_CASE("construct emits the coloring") {
    RunResult r = run("construct --n 10 --t 0");
    CHECK(r.code == 0);
    EdgeColoring c = coloring_from_text(r.out);
    CHECK(c.vertex_count() == 10);
    CHECK(c.color_count() == 26);

    fs::path out = temp_file("construct");
    RunResult j = run("construct --n 20 --t 1 --out " + out.string() + " --json");
    CHECK(j.code == 0);
    json rep = parse_report(j);
    CHECK(rep["colors"] == 110);
    CHECK(rep["edges"] == 190);
    CHECK(rep["verified_avoids"] == 3);
    EdgeColoring stored = coloring_from_text(slurp(out));
    CHECK(stored.color_count() == 110);
    fs::remove(out);

    CHECK(run("construct --n 9 --t 1").code == 2);
}

TEST_CASE("check-rainbow round-trips constructed colorings") {
    fs::path f20 = temp_file("c20");
    REQUIRE(run("construct --n 20 --t 1 --out " + f20.string()).code == 0);

    RunResult absent = run("check-rainbow --in " + f20.string() + " --k 3");
    CHECK(absent.code == 0);
    CHECK(absent.out == "no rainbow packing of size 3\n");

    RunResult jabsent = run("check-rainbow --in " + f20.string() + " --k 3 --json");
    CHECK(jabsent.code == 0);
    json rep = parse_report(jabsent);
    CHECK(rep["rainbow_found"] == false);
    CHECK(rep["n"] == 20);
    CHECK(rep["colors"] == 110);

    RunResult found = run("check-rainbow --in " + f20.string() + " --k 2 --json");
    CHECK(found.code == 1);
    json frep = parse_report(found);
    CHECK(frep["rainbow_found"] == true);
    REQUIRE(frep["packing"]["triples"].size() == 2);
    std::set<int> cols;
    for (const auto& triple : frep["packing"]["colors"])
        for (int c : triple) cols.insert(c);
    CHECK(cols.size() == 6);
    fs::remove(f20);

    CHECK(run("check-rainbow --in /nonexistent/coloring --k 1").code == 2);
}

TEST_CASE("ar-search computes tiny exact values") {
    RunResult r5 = run("ar-search --n 5 --k 1");
    CHECK(r5.code == 0);
    CHECK(r5.out.find("outcome exact\nar 5\n") == 0);

    RunResult j4 = run("ar-search --n 4 --k 1 --json");
    CHECK(j4.code == 0);
    json rep = parse_report(j4);
    CHECK(rep["outcome"] == "exact");
    CHECK(rep["ar"] == 4);
    CHECK(rep["ar_lower"] == 4);
    CHECK(rep["ar_upper"] == 4);
    CHECK(rep["config"]["n"] == 4);
    CHECK(rep["config"]["k"] == 1);
}

TEST_CASE("ar-search existence mode with witness output") {
    fs::path wit = temp_file("witness");
    RunResult present = run("ar-search --n 5 --k 1 --r 4 --witness-out " + wit.string());
    CHECK(present.code == 0);
    CHECK(present.out.find("outcome present\n") == 0);
    EdgeColoring w = coloring_from_text(slurp(wit));
    CHECK(w.color_count() == 4);

    RunResult recheck = run("check-rainbow --in " + wit.string() + " --k 1");
    CHECK(recheck.code == 0);
    fs::remove(wit);

    RunResult absent = run("ar-search --n 5 --k 1 --r 5 --json");
    CHECK(absent.code == 0);
    CHECK(parse_report(absent)["outcome"] == "absent");
}

TEST_CASE("ar-search exhaustion and resume") {
    fs::path ckpt = temp_file("ckpt");
    std::string common = "ar-search --n 6 --k 2 --r 12 --checkpoint " + ckpt.string();

    RunResult first = run(common + " --budget 1024 --json");
    CHECK(first.code == 4);
    CHECK(parse_report(first)["outcome"] == "exhausted");
    REQUIRE(fs::exists(ckpt));

    RunResult second = run(common + " --resume --budget 1000000000 --json");
    CHECK(second.code == 0);
    CHECK(parse_report(second)["outcome"] == "absent");
    CHECK_FALSE(fs::exists(ckpt));

    CHECK(run(common + " --resume").code == 2);
    CHECK(run("ar-search --n 5 --k 1 --budget 0").code == 2);
}

TEST_CASE("verify-moon and verify-gamma censuses") {
    RunResult moon = run("verify-moon --n-max 7 --json");
    CHECK(moon.code == 0);
    json mrep = parse_report(moon);
    CHECK(mrep["ok"] == true);
    CHECK(mrep["graphs_examined"] == 1253);
    REQUIRE(mrep["extremal"].size() == 3);
    for (const auto& e : mrep["extremal"]) CHECK(e["matches_reference"] == true);

    RunResult moon_text = run("verify-moon --n-max 7");
    CHECK(moon_text.code == 0);
    CHECK(moon_text.out.find("examined 1253\n") == 0);
    CHECK(moon_text.out.rfind("ok\n") == moon_text.out.size() - 3);

    RunResult gamma = run("verify-gamma --n-max 7 --json");
    CHECK(gamma.code == 0);
    json grep_ = parse_report(gamma);
    CHECK(grep_["ok"] == true);
    CHECK(grep_["graphs_examined"] == 1253);

    CHECK(run("verify-moon --n-max 9").code == 2);
}

TEST_CASE("verify-pairs runs seeded instances") {
    std::string args = "verify-pairs --n 60 --t 0 --count 25 --max-deletions 30 --seed 1";
    RunResult r = run(args + " --json");
    CHECK(r.code == 0);
    json rep = parse_report(r);
    CHECK(rep["ok"] == true);
    CHECK(rep["failures"].empty());
    CHECK(rep["config"]["seed"] == 1);
    CHECK(rep["config"]["count"] == 25);

    RunResult text = run(args);
    CHECK(text.code == 0);
    CHECK(text.out == "instances 25\nfailures 0\nok\n");

    RunResult again = run(args + " --json");
    CHECK(again.out == r.out);

    CHECK(run("verify-pairs --n 60 --t 0 --count 1 --max-deletions 42").code == 2);
}

TEST_CASE("i3 and matching report packing numbers") {
    RunResult i3 = run("i3 --graph Bw");
    CHECK(i3.code == 0);
    CHECK(i3.out == "1\n");

    RunResult ji3 = run("i3 --graph Bw --json");
    json rep = parse_report(ji3);
    CHECK(rep["value"] == 1);
    REQUIRE(rep["packing"].size() == 1);
    CHECK(rep["packing"][0] == json({0, 1, 2}));

    RunResult m = run("matching --graph Bw");
    CHECK(m.code == 0);
    CHECK(m.out == "1\n");

    CHECK(run("i3 --graph no~t-a-graph").code == 2);
}

TEST_CASE("encode and decode round-trip") {
    RunResult enc = run("encode --n 3 --edge 0,1 --edge 0,2 --edge 1,2");
    CHECK(enc.code == 0);
    CHECK(enc.out == "Bw\n");

    RunResult dec = run("decode --graph Bw");
    CHECK(dec.code == 0);
    CHECK(dec.out == "3 3\n0 1\n0 2\n1 2\n");

    CHECK(run("encode --n 3 --edge 0:1").code == 2);
    CHECK(run("decode --graph \"~\"").code == 2);
}

TEST_CASE("worker resolution from flag and environment") {
    RunResult flag = run("ar-search --n 4 --k 1 --workers 2 --json");
    CHECK(parse_report(flag)["config"]["workers"] == 2);

    RunResult env = run("ar-search --n 4 --k 1 --json", "RAINBOWLAB_WORKERS=3 ");
    CHECK(parse_report(env)["config"]["workers"] == 3);

    RunResult both = run("ar-search --n 4 --k 1 --workers 2 --json", "RAINBOWLAB_WORKERS=3 ");
    CHECK(parse_report(both)["config"]["workers"] == 2);

    RunResult none = run("ar-search --n 4 --k 1 --json");
    CHECK(parse_report(none)["config"]["workers"] == 1);

    CHECK(run("ar-search --n 4 --k 1", "RAINBOWLAB_WORKERS=zero ").code == 2);
    CHECK(run("ar-search --n 4 --k 1", "RAINBOWLAB_WORKERS=0 ").code == 2);
    CHECK(run("ar-search --n 4 --k 1 --workers 0").code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("formulas --n 5 --t 0 --bogus").code == 2);
    CHECK(run("--help").code == 0);
}
