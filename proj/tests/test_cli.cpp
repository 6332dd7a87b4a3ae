#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "clfi/cli.hpp"
#include "clfi/explore.hpp"
#include "clfi/io.hpp"

using namespace clfi;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("clfi_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
    fs::path p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

std::string fixture_file(const std::string& name) {
    return write_file(name + ".json", model_to_json(fixture(name).model).dump());
}

}  // namespace

TEST_CASE("classify golden line") {
    Run r = run({"classify", "--model", fixture_file("matching-pennies"), "--coalition", "0", "--formula", "p"});
    CHECK(r.code == 0);
    CHECK(r.out == "state 0: FI, state 1: FI\n");
    Run one = run({"classify", "--model", fixture_file("dictator"), "--coalition", "{0}", "--formula", "p",
                   "--state", "1"});
    CHECK(one.out == "state 1: FC\n");
}

TEST_CASE("translate golden line") {
    Run r = run({"translate", "--formula", "FI[{0}](p)"});
    CHECK(r.code == 0);
    CHECK(r.out == "((~[{0}](p)) & (~[{0}]((~p))))\n");
}

TEST_CASE("validate exit codes") {
    Run ok = run({"validate", "--model", fixture_file("veto")});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("playable: yes") != std::string::npos);

    std::string broken = write_file("broken.json", R"({"states": 2, "agents": 1, "effectivity": [
        {"state": 0, "coalition": [], "minimal": [[]]}, {"state": 0, "coalition": [0], "minimal": [[0, 1]]},
        {"state": 1, "coalition": [], "minimal": [[0, 1]]}, {"state": 1, "coalition": [0], "minimal": [[0, 1]]}]})");
    Run bad = run({"validate", "--model", broken});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("Liveness C={}") != std::string::npos);
    CHECK(bad.out.find("playable: no") != std::string::npos);
}

TEST_CASE("input errors exit 2") {
    CHECK(run({"check", "--model", "/nonexistent.json", "--formula", "p"}).code == 2);
    Run parse_err = run({"check", "--model", fixture_file("dictator"), "--formula", "p &"});
    CHECK(parse_err.code == 2);
    CHECK(parse_err.err.find("position") != std::string::npos);
    CHECK(run({"classify", "--model", fixture_file("dictator"), "--coalition", "5", "--formula", "p"}).code == 2);
    CHECK(run({"classify", "--model", fixture_file("dictator"), "--coalition", "0,0", "--formula", "p"}).code == 2);
    CHECK(run({"nosuch"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"check", "--formula", "p"}).code == 2);
    std::string junk = write_file("junk.json", "{not json");
    CHECK(run({"validate", "--model", junk}).code == 2);
    CHECK(run({"gen", "--kind", "bogus"}).code == 2);
}

TEST_CASE("help exits 0") {
    Run r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("classify") != std::string::npos);
}

TEST_CASE("klein: precondition failure and table") {
    Run mp = run({"klein", "--model", fixture_file("matching-pennies"), "--formula", "p"});
    CHECK(mp.code == 1);
    CHECK(mp.err.find("alpha-dual") != std::string::npos);
    Run d = run({"klein", "--model", fixture_file("dictator"), "--formula", "p"});
    CHECK(d.code == 0);
    CHECK(d.out.find("f_neg") != std::string::npos);
    CHECK(d.out.find("klein action: pass") != std::string::npos);
}

TEST_CASE("robustness exit code follows k") {
    std::string mp = fixture_file("matching-pennies");
    Run r1 = run({"robustness", "--model", mp, "--formula", "p", "--k", "1"});
    CHECK(r1.code == 0);
    CHECK(r1.out.find("degree=2") != std::string::npos);
    CHECK(r1.out.find("minimal_escaping=[{0,1}]") != std::string::npos);
    CHECK(run({"robustness", "--model", mp, "--formula", "p", "--k", "2"}).code == 1);
}

TEST_CASE("profile and dummy") {
    Run p = run({"profile", "--model", fixture_file("matching-pennies"), "--formula", "p", "--agent", "0"});
    CHECK(p.out == "FC=0 PD=0 AD=0 FI=2\n");
    Run d = run({"dummy", "--model", fixture_file("dictator"), "--formula", "p", "--agent", "1"});
    CHECK(d.code == 0);
    CHECK(d.out.find("dummy=yes") != std::string::npos);
    CHECK(d.out.find("verdict=confirmed") != std::string::npos);
}

TEST_CASE("regions report") {
    std::string report = (scratch() / "regions.json").string();
    Run r = run({"regions", "--model", fixture_file("shutdown"), "-o", report});
    CHECK(r.code == 0);
    Json j = read_json_file(report);
    CHECK(j["all_convex"] == true);
    CHECK(j["reports"].size() == 8);
    CHECK(j["reports"][0]["regions"].contains("FC"));
}

TEST_CASE("gen, induce and check round trip") {
    std::string gf = (scratch() / "mp_form.json").string();
    std::string model = (scratch() / "mp_model.json").string();
    CHECK(run({"gen", "--kind", "matching-pennies", "--as", "game-form", "-o", gf}).code == 0);
    CHECK(run({"induce", "--game-form", gf, "-o", model}).code == 0);
    CHECK(model_from_json(read_json_file(model)) == fixture("matching-pennies").model);
    Run c = run({"check", "--model", model, "--formula", "FI[{1}](p)"});
    CHECK(c.out == "state 0: true\nstate 1: true\n");

    Run a = run({"gen", "--kind", "random", "--seed", "3", "--states", "3", "--agents", "2"});
    Run b = run({"gen", "--kind", "random", "--seed", "3", "--states", "3", "--agents", "2"});
    CHECK(a.out == b.out);
    CHECK(run({"gen", "--kind", "alpha-dual", "--seed", "3", "--states", "2", "--agents", "2"}).code == 0);
}

TEST_CASE("sat") {
    Run r = run({"sat", "--formula", "FI[{0}](p)", "--max-states", "2", "--max-actions", "2", "--format", "json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["result"] == "witness");
    CoalitionModel m = model_from_json(j["model"]);
    CHECK(satisfies(m, j["state"].get<unsigned>(), parse("FI[{0}](p)")));
    Run u = run({"sat", "--formula", "p & ~p", "--max-states", "2", "--max-actions", "2"});
    CHECK(u.code == 1);
    CHECK(u.out.find("unknown") != std::string::npos);
}

TEST_CASE("json output on every subcommand") {
    std::string dict = fixture_file("dictator");
    std::vector<std::vector<std::string>> cmds = {
        {"validate", "--model", dict},
        {"check", "--model", dict, "--formula", "p"},
        {"classify", "--model", dict, "--formula", "p", "--coalition", "{}"},
        {"regions", "--model", dict, "--state", "0"},
        {"klein", "--model", dict, "--formula", "p"},
        {"robustness", "--model", dict, "--formula", "p"},
        {"dummy", "--model", dict, "--formula", "p", "--agent", "0"},
        {"translate", "--formula", "FI[{0}](p)"},
        {"profile", "--model", dict, "--formula", "p", "--agent", "0"},
        {"gen", "--kind", "veto"},
        {"induce", "--game-form", write_file("g.json", game_form_to_json(fixture("veto").form).dump())},
    };
    for (auto args : cmds) {
        args.push_back("--format");
        args.push_back("json");
        CAPTURE(args[0]);
        Run r = run(args);
        CHECK(r.code == 0);
        CHECK(Json::accept(r.out));
    }
}
