#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string("'") + TORICFANO_CLI + "' " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

fs::path scratch_dir() {
    auto dir = fs::temp_directory_path() / ("toricfano_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream f(p);
    f << text;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(run("").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("invariants --bound -3").status == 2);
    CHECK(run("invariants --id 99999").status == 2);
    CHECK(run("invariants --id twelve").status == 2);
    CHECK(run("classify --relation nonsense").status == 2);
    CHECK(run("invariants --id 12 --mod 4").status == 2);
    CHECK(run("validate --input /nonexistent/file.txt").status == 2);
    CHECK(run("iso --ids 1").status == 2);
}

TEST_CASE("validate reports a corrupted record") {
    auto dir = scratch_dir();
    write(dir / "good.txt", "id 1 dim 2 vertices 3\n1 0\n0 1\n-1 -1\n");
    write(dir / "bad.txt", "id 1 dim 2 vertices 3\n1 0\n0 1\n-1 -1\n\nid 2 dim 2 vertices 3\n2 1\n1 2\n-1 -1\n");
    write(dir / "broken.txt", "id 1 dim 2 vertices 3\n1 0\n0 1 7\n-1 -1\n");
    CHECK(run("validate --input " + (dir / "good.txt").string()).status == 0);
    CHECK(run("validate --input " + (dir / "bad.txt").string()).status == 1);
    CHECK(run("validate --input " + (dir / "broken.txt").string()).status == 2);
    auto r = run("validate --output - --input " + (dir / "bad.txt").string());
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    fs::remove_all(dir);
}

TEST_CASE("bundled fixtures validate") {
    auto r = run("validate");
    CHECK(r.status == 0);
    CHECK(r.out.find("146 records, 0 invalid") != std::string::npos);
}

TEST_CASE("invariants JSON for one polytope") {
    auto r = run("invariants --id 12 --output -");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "invariants");
    const auto& p = j["results"].at(0);
    CHECK(p["polytope"]["id"] == 12);
    CHECK(p["presentation"]["generators"] == nlohmann::json::array({"x", "y", "z"}));
    CHECK(p["degree"]["anticanonical"] == 50);
    CHECK(p["degree"]["via_ring"] == 50);
    CHECK(p["mbn"]["lower"] == 1);
    CHECK(p["mbn"]["upper"] == 1);
}

TEST_CASE("golden comparison") {
    auto dir = scratch_dir();
    auto full = run("degrees --id 12 --output -");
    REQUIRE(full.status == 0);
    auto j = nlohmann::json::parse(full.out);
    write(dir / "exact.json", j.dump());
    CHECK(run("degrees --id 12 --golden " + (dir / "exact.json").string()).status == 0);
    // Objects match as subsets: a golden file may omit keys.
    write(dir / "subset.json", R"({"schema": 1, "command": "degrees"})");
    CHECK(run("degrees --id 12 --golden " + (dir / "subset.json").string()).status == 0);
    auto tweaked = j;
    tweaked["degrees"][0]["degree"] = 51;
    write(dir / "bad.json", tweaked.dump());
    CHECK(run("degrees --id 12 --golden " + (dir / "bad.json").string()).status == 1);
    write(dir / "garbage.json", "{ not json");
    CHECK(run("degrees --id 12 --golden " + (dir / "garbage.json").string()).status == 2);
    fs::remove_all(dir);
}

TEST_CASE("iso with an explicit map") {
    auto r = run("iso --ids 50,57 --map '-1,0,0,0;0,-1,0,0;0,0,0,-1;2,1,1,0' --output -");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    const auto& pair = j["pairs"].at(0);
    CHECK(pair["map"]["ring_isomorphism"] == true);
    CHECK(pair["map"]["c1_preserving"] == false);
    CHECK(pair["map"]["pontryagin_preserving"] == true);
}

TEST_CASE("iso search on 70 and 141") {
    auto r = run("iso --ids 70,141 --output -");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["pairs"].at(0)["count"] == 2);
}

TEST_CASE("degrees on a user file") {
    auto dir = scratch_dir();
    write(dir / "p2.txt", "id 1 dim 2 vertices 3\n1 0\n0 1\n-1 -1\n");
    auto r = run("degrees --output - --input " + (dir / "p2.txt").string());
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["degrees"].at(0)["degree"] == 9);
    CHECK(j["degrees"].at(0)["agree"] == true);
    fs::remove_all(dir);
}
