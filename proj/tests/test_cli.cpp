#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(ALCOVE_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = ::popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), n);
    const int status = ::pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_file(const std::string& name, const std::string& text)
{
    const std::string path = std::string(CLI_TMP_DIR) + "/" + name;
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("verify a single claim")
{
    const auto r = run("verify --claim d4-needs-8 --json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "verified");
    CHECK(j["min_cover"] == 8);
    CHECK(run("verify --claim e8-fvector").code == 0);
    CHECK(run("verify --claim highest-root-lines").code == 1);
    CHECK(run("verify --claim no-such-claim").code == 2);
}

TEST_CASE("symmetric generators")
{
    const auto r = run("symmetric --type F4 --lambda 7 --mu 5 --generators --json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["orbit_points"].size() == 12);
    CHECK(j["verified"] == true);
    CHECK(j["type"] == "F");
    CHECK(j["rank"] == 4);
    CHECK(run("symmetric --type F4 --lambda 9 --mu 4").code == 2);
    CHECK(run("symmetric --type A3 --lambda 1 --mu 1").code == 2);
}

TEST_CASE("hull of two square corners")
{
    const auto pts = write_file("square.json", "[[0,0,1],[0,1,0]]");
    const auto r = run("hull --type A --rank 2 --points " + pts + " --json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["constraints"].size() == 6);
    int zeros = 0;
    for (const auto& c : j["constraints"])
        zeros += c["rhs"] == "0";
    CHECK(zeros == 2);
}

TEST_CASE("malformed input")
{
    CHECK(run("hull --type A --rank 2 --points " + write_file("bad.json", "[[0,0,1") ).code == 2);
    CHECK(run("hull --type A --rank 2 --points " + write_file("ragged.json", "[[0,0,1],[0,1]]")).code == 2);
    CHECK(run("hull --type A --rank 2 --points /nonexistent/file.json").code == 2);
    CHECK(run("mincover --polytope " + write_file("p.json", "{\"type\": \"Q\", \"rank\": 2}")).code == 2);
    CHECK(run("hull --type Z9 --points " + write_file("ok.json", "[[0,0]]")).code == 2);
    CHECK(run("frobnicate").code == 2);
}

TEST_CASE("mincover and tropical")
{
    const auto r = run("mincover --d4-example --json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["size"] == 8);
    CHECK(j["optimal"] == true);
    CHECK(j["chosen_vertex_indices"].size() == 8);

    const auto pts = write_file("trop.json", "[[0,0,1],[0,1,0]]");
    const auto t = run("tropical --points " + pts + " --query 0,1,1 --json");
    CHECK(t.code == 0);
    CHECK(nlohmann::json::parse(t.out)["contains"] == false);
    CHECK(nlohmann::json::parse(run("tropical --points " + pts + " --query 5,5,5 --json").out)["contains"] == true);
}

TEST_CASE("verify --all is deterministic")
{
    const auto a = run("verify --all --json --no-timing");
    const auto b = run("verify --all --json --no-timing");
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["claims"].size() >= 30);
}
