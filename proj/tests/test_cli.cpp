#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(AGCODES_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "agcodes_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("build writes the matrix file and sidecar") {
    const auto out = scratch("ex2.mat");
    const auto r = run("build --family as --q 8 --m 3 --r 20 --out " + out.string());
    CHECK(r.code == 0);
    const auto text = slurp(out);
    CHECK(text.rfind("FIELD GF(2^6) mod=1,0,0,0,0,1,1\nCODE n=176 k=14 r=20 family=as\n", 0) == 0);
    const auto side = nlohmann::json::parse(slurp(out.string() + ".json"));
    CHECK(side.at("n") == 176);
    CHECK(side.at("k") == 14);
    CHECK(side.at("d0_lower") == 156);
    CHECK(side.at("monomials").size() == 14);
}

TEST_CASE("build herm-add(2,1) at r = 2") {
    const auto out = scratch("add.mat");
    CHECK(run("build --family herm-add --q 2 --k 1 --r 2 --out " + out.string()).code == 0);
    CHECK(slurp(out).find("CODE n=4 k=2 r=2 family=herm-add") != std::string::npos);
}

TEST_CASE("exit codes") {
    const auto bad = run("build --family as --q 8 --m 2 --r 5");
    CHECK(bad.code == 2);
    CHECK(bad.out.find("p ∤ m−1") != std::string::npos);

    CHECK(run("build --family as --q 6 --m 1 --r 1").code == 2);
    CHECK(run("build --family as --q 2 --r 1").code == 2);          // missing --m
    CHECK(run("build --family nope --q 2 --m 3 --r 1").code == 2);  // parse error
    CHECK(run("quantum --family as --q 2 --m 3 --r 3").code == 2);  // outside the Hermitian range
    CHECK(run("build --family as --q 2 --m 3 --r 1 --out /nonexistent-dir/x.mat").code == 1);
    CHECK(run("sweep --family as --q 2 --m 3 --json /nonexistent-dir/r.json").code == 1);
    CHECK(run("build --family as --q 2 --m 3 --r 1 --modulus 1,0,1").code == 2);  // reducible modulus
}

TEST_CASE("quantum emits the bracket notation") {
    for (auto [args, notation] : {std::pair{"--q 8 --m 3 --r 20", "[[176,148,>=8]]_8"},
                                  {"--q 2 --m 3 --r 2", "[[8,4,>=2]]_2"},
                                  {"--q 27 --m 7 --r 181", "[[4941,4733,>=27]]_27"}}) {
        const auto r = run(std::string("quantum --family as ") + args);
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j.at("quantum").at("notation") == notation);
    }
}

TEST_CASE("sweep as(2,3) passes with exact distances") {
    const auto path = scratch("sweep.json");
    const auto r = run("sweep --family as --q 2 --m 3 --json " + path.string());
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(slurp(path));
    REQUIRE(j.at("records").size() == 4);
    for (const auto& rec : j.at("records")) CHECK(rec.at("distance").at("kind") == "exact");
    CHECK(j.at("summary").at("failed") == 0);
}

TEST_CASE("sweep herm-mult(3,2) reports no self-dual radius") {
    const auto r = run("sweep --family herm-mult --q 3 --s 2 --json -");
    CHECK(r.code == 0);
    const auto start = r.out.find('{');
    REQUIRE(start != std::string::npos);
    const auto j = nlohmann::json::parse(r.out.substr(start));
    CHECK(j.at("ranges").at("self_dual_r").is_null());
}

TEST_CASE("verify reports are deterministic given a seed") {
    const auto a = run("verify --family as --q 8 --m 3 --r 20 --samples 300 --seed 5 --json -");
    const auto b = run("verify --family as --q 8 --m 3 --r 20 --samples 300 --seed 5 --json -");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("explicit modulus is honored") {
    const auto out = scratch("mod.mat");
    CHECK(run("build --family as --q 2 --m 3 --r 2 --modulus 1,1,1 --out " + out.string()).code == 0);
    CHECK(slurp(out).rfind("FIELD GF(2^2) mod=1,1,1\n", 0) == 0);
}

TEST_CASE("curve subcommand") {
    const auto r = run("curve --q 8 --m 3");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("rational_points") == 177);
    CHECK(j.at("maximal") == true);
}
