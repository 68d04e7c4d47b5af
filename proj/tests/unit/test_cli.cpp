#include "cli/commands.hpp"
#include "cli/formats.hpp"

#include <subrep/classify.hpp>
#include <subrep/errors.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace subrep;
using nlohmann::json;

namespace {

const std::string data_dir = SUBREP_DATA_DIR;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return data_dir + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("subrep-test-" + name);
    std::ofstream(path) << content;
    return path.string();
}

} // namespace

TEST_CASE("poset file format") {
    const Poset p = cli::parse_poset_text("# c\nelem a b c\na < b < c # trailing\n\n");
    CHECK(p.size() == 3);
    CHECK(p.less(0, 2));
    CHECK_THROWS_AS(cli::parse_poset_text("elem a\na <\n"), Error);
    CHECK_THROWS_AS(cli::parse_poset_text("elem a b\na b\n"), Error);
}

TEST_CASE("classify output and JSON round-trip") {
    for (const char* f : {"flower4.poset", "side-point-chain.poset", "diamond.poset", "chains.poset", "claw.poset",
                          "tailed-wedge.poset", "vee.poset"}) {
        const auto r = run_cli({"classify", data(f)});
        REQUIRE(r.code == cli::exit_ok);
        const json j = json::parse(r.out);
        CHECK(j.contains("kind"));
        CHECK(j.contains("subRepresentable"));
        CHECK(j.contains("witness"));
        const Poset p = cli::parse_poset_text(cli::read_file(data(f)));
        const Verdict v = cli::verdict_from_json(j, &p);
        CHECK(v == classify_finite(p));
        CHECK(cli::verdict_to_json(&p, v) == j);
    }
    const json side = json::parse(run_cli({"classify", data("side-point-chain.poset")}).out);
    CHECK(side["subRepresentable"] == false);
    CHECK(side["witness"]["type"] == "patterns");
    const json flower = json::parse(run_cli({"classify", data("flower4.poset")}).out);
    CHECK(flower["kind"] == "Flower");
    CHECK(flower["witness"]["element"] == "2");
}

TEST_CASE("classify descriptors") {
    auto sub = [](const char* f) { return json::parse(run_cli({"classify", data(f)}).out)["subRepresentable"]; };
    CHECK(sub("integers.desc") == false);
    CHECK(sub("omega.desc") == true);
    CHECK(sub("pinboard.desc") == true);
    CHECK(sub("flower.desc") == true);
    const auto bad = run_cli({"classify", temp_file("bad.desc", "flower w0 1\n")});
    CHECK(bad.code == cli::exit_semantic);
}

TEST_CASE("dot output") {
    const auto r = run_cli({"classify", data("vee.poset"), "--dot"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"a\" -> \"b\"") != std::string::npos);
}

TEST_CASE("embed command") {
    const auto r = run_cli({"embed", data("vee.poset"), data("diamond.poset")});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["embeds"] == true);
    CHECK(j["witness"]["a"] == "bot");
    const json no = json::parse(run_cli({"embed", data("diamond.poset"), data("vee.poset")}).out);
    CHECK(no["embeds"] == false);
    CHECK(no["witness"].is_null());
}

TEST_CASE("subrep command") {
    const auto r = run_cli({"subrep", data("flower4.poset")});
    CHECK(r.code == 0);
    CHECK(r.out.find("{1,3,4}    {2,3,4}") != std::string::npos);
    const json j = json::parse(run_cli({"subrep", data("flower4.poset"), "--json"}).out);
    CHECK(j["g"].size() == 15);
    const auto refusal = run_cli({"subrep", data("diamond.poset")});
    CHECK(refusal.code == 0);
    CHECK(json::parse(refusal.out)["subRepresentable"] == false);
}

TEST_CASE("oracle command") {
    const json yes = json::parse(run_cli({"oracle", data("claw.poset")}).out);
    CHECK(yes["subRepresentable"] == true);
    CHECK(yes["g"].size() == 15);
    const json no = json::parse(run_cli({"oracle", data("side-point-chain.poset")}).out);
    CHECK(no["subRepresentable"] == false);
    const auto big = run_cli({"oracle", temp_file("big.poset", "elem a b c d e f g\na < b < c < d < e < f < g\n")});
    CHECK(big.code == cli::exit_semantic);
    CHECK(big.err.find("TooLarge") != std::string::npos);
}

TEST_CASE("survey command") {
    const auto r = run_cli({"survey", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("16 classes, 9 sub-representable, 7 not, 0 disagreements") != std::string::npos);
    const json j = json::parse(run_cli({"survey", "3", "--json"}).out);
    CHECK(j["classes"] == 5);
    CHECK(j["rows"].size() == 5);
    CHECK(run_cli({"survey", "6"}).code == cli::exit_semantic);
}

TEST_CASE("pinboard commands") {
    const auto t = run_cli({"pinboard", "theta", "pin (aleph2,12) (7,aleph3)", "pin (w1,1) (5,aleph0) (3,aleph0)"});
    CHECK(t.code == 0);
    CHECK(t.out.find("5 of columns lambda(1+t) for all t < aleph0") != std::string::npos);
    const auto e = run_cli({"pinboard", "embed", "pin (aleph2,12) (7,aleph3)", "pin (5,aleph1)", "pin (7,aleph0)"});
    CHECK(e.out == "embeds: false\nsubset: false\n");
    CHECK(run_cli({"pinboard", "theta", "pin (aleph2,12) (7,aleph3)", "pin (w3,1)"}).code == cli::exit_semantic);
    CHECK(run_cli({"pinboard", "theta", "pin (aleph2,12) (7,aleph3)", "pin (w3"}).code == cli::exit_parse);
}

TEST_CASE("demos are deterministic and reproduce the examples") {
    for (const char* d : {"fig1", "fig3", "section2"}) {
        const auto a = run_cli({"demo", d});
        const auto b = run_cli({"demo", d});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
    const auto s2 = run_cli({"demo", "section2"}).out;
    CHECK(s2.find("subset: true\n") != std::string::npos);
    CHECK(s2.find("reverse subset: false\n") != std::string::npos);
    CHECK(s2.find("embeds: true\n") != std::string::npos);
    CHECK(s2.find("frequencies: {1,1,2,1,2,1,aleph0}") != std::string::npos);
    CHECK(s2.find("6 of columns lambda(9+t) for all t < aleph1") != std::string::npos);
    const auto f1 = run_cli({"demo", "fig1"}).out;
    CHECK(f1.find("violations: 0") != std::string::npos);
    CHECK(f1.find("vee           {2,3,4}") != std::string::npos);
    const auto f3 = run_cli({"demo", "fig3"}).out;
    CHECK(f3.find("{1,3,4} {2,3,4}") != std::string::npos);
    CHECK(f3.find("oracle: not sub-representable") != std::string::npos);
}

TEST_CASE("usage and parse errors") {
    CHECK(run_cli({}).code == cli::exit_parse);
    CHECK(run_cli({"frobnicate"}).code == cli::exit_parse);
    CHECK(run_cli({"demo", "fig9"}).code == cli::exit_parse);
    CHECK(run_cli({"classify", "/nonexistent/file"}).code == cli::exit_parse);
    CHECK(run_cli({"classify", temp_file("cycle.poset", "elem a b\na < b\nb < a\n")}).code == cli::exit_parse);
    CHECK(run_cli({"--help"}).code == cli::exit_ok);
}
