#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "critind/fixtures.hpp"
#include "critind/parse.hpp"
#include "json.hpp"

namespace {

struct RunResult {
    int exitCode = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CRITIND_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    int status = pclose(pipe);
    r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string tempDir() {
    char templ[] = "/tmp/critind_cli_XXXXXX";
    REQUIRE(mkdtemp(templ) != nullptr);
    return templ;
}

} // namespace

TEST_CASE("analyze a fixture") {
    RunResult r = run("analyze fixture:G2");
    CHECK(r.exitCode == 0);
    CHECK(r.output.find("dc = 1") != std::string::npos);
    CHECK(r.output.find("ker = {x, y}") != std::string::npos);
    CHECK(r.output.find("core = {x, y, z}") != std::string::npos);
    CHECK(r.output.find("quasi_regularizable = false") != std::string::npos);
}

TEST_CASE("analyze emits valid json") {
    RunResult r = run("analyze fixture:K2 --json");
    CHECK(r.exitCode == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["schema"] == 1);
    CHECK(j["dc"] == 0);
    CHECK(j["quasi_regularizable"] == true);
    CHECK(j["ker"].empty());
    CHECK(j["alpha_c"] == 1);
}

TEST_CASE("analyze error paths use exit code 2") {
    CHECK(run("analyze /nonexistent/file").exitCode == 2);
    CHECK(run("analyze fixture:notreal").exitCode == 2);
    std::string dir = tempDir();
    std::string bad = dir + "/bad.edges";
    std::ofstream(bad) << "a a\n";
    RunResult r = run("analyze " + bad);
    CHECK(r.exitCode == 2);
    CHECK(r.output.find("error") != std::string::npos);
    CHECK(run("analyze").exitCode == 2);
    CHECK(run("bogus-subcommand").exitCode == 2);
}

TEST_CASE("analyze dimacs input") {
    std::string dir = tempDir();
    std::string path = dir + "/p3.col";
    std::ofstream(path) << "p edge 3 2\ne 1 2\ne 2 3\n";
    RunResult r = run("analyze " + path + " --format dimacs");
    CHECK(r.exitCode == 0);
    CHECK(r.output.find("dc = 1") != std::string::npos);
}

TEST_CASE("analyze with the kernel cross check") {
    RunResult r = run("analyze fixture:Gfig3 --cross-check-ker");
    CHECK(r.exitCode == 0);
}

TEST_CASE("verify all fixtures") {
    RunResult r = run("verify fixtures");
    CHECK(r.exitCode == 0);
    CHECK(r.output.find("total check failures: 0") != std::string::npos);
}

TEST_CASE("verify a random corpus deterministically") {
    RunResult a = run("verify --random gnp:10,0.2 --count 5 --seed 42 --json");
    CHECK(a.exitCode == 0);
    auto j = nlohmann::json::parse(a.output);
    CHECK(j["schema"] == 1);
    CHECK(j["count"] == 5);
    CHECK(j["total_failures"] == 0);
    CHECK(j["graphs"].size() == 5);
    CHECK(j["graphs"][3]["seed"] == 45);
    RunResult b = run("verify --random gnp:10,0.2 --count 5 --seed 42 --json");
    CHECK(a.output == b.output);
    RunResult c = run("verify --random gnp:10,0.2 --count 5 --seed 43 --json");
    CHECK(a.output != c.output);
}

TEST_CASE("verify random trees with the check filter") {
    RunResult r = run("verify --random tree:15 --count 4 --seed 7 --checks C13");
    CHECK(r.exitCode == 0);
    CHECK(r.output.find("C13 pass") != std::string::npos);
    CHECK(r.output.find("C1 ") == std::string::npos);
}

TEST_CASE("verify usage errors") {
    CHECK(run("verify").exitCode == 2);
    CHECK(run("verify fixtures --random gnp:5,0.5").exitCode == 2);
    CHECK(run("verify --random nonsense:3").exitCode == 2);
    CHECK(run("verify --random gnp:10").exitCode == 2);
    CHECK(run("verify fixtures --checks C99").exitCode == 2);
}

TEST_CASE("gen models") {
    RunResult empty = run("gen --model gnp --n 5 --p 0 --seed 1");
    CHECK(empty.exitCode == 0);
    {
        critind::Graph g = critind::parseEdgeList(empty.output);
        CHECK(g.order() == 5);
        CHECK(g.size() == 0);
        CHECK(g.hasIsolatedVertex());
    }
    RunResult complete = run("gen --model gnp --n 5 --p 1 --seed 1");
    {
        critind::Graph g = critind::parseEdgeList(complete.output);
        CHECK(g.order() == 5);
        CHECK(g.size() == 10);
    }
    RunResult tree = run("gen --model tree --n 8 --seed 3");
    {
        critind::Graph g = critind::parseEdgeList(tree.output);
        CHECK(g.order() == 8);
        CHECK(g.size() == 7);
        CHECK(critind::isConnected(g));
        CHECK(critind::isAcyclic(g));
    }
    CHECK(run("gen --model gnp --n 5 --seed 1").exitCode == 2); // missing --p
    CHECK(run("gen --model wat --n 5").exitCode == 2);

    std::string dir = tempDir();
    std::string path = dir + "/out.edges";
    CHECK(run("gen --model tree --n 6 --seed 2 --out " + path).exitCode == 0);
    std::ifstream in(path);
    CHECK(in.good());
}

TEST_CASE("fixtures subcommand writes round-trippable files") {
    std::string dir = tempDir();
    RunResult r = run("fixtures --out " + dir);
    CHECK(r.exitCode == 0);
    for (const auto& name : critind::fixtureNames()) {
        std::ifstream in(dir + "/" + name + ".edges");
        REQUIRE(in.good());
        std::string body((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        critind::Graph parsed = critind::parseEdgeList(body);
        critind::Graph expected = critind::fixtureGraph(name);
        CHECK(critind::toEdgeListText(parsed) == critind::toEdgeListText(expected));
    }
    CHECK(run("fixtures --out /nonexistent/dir").exitCode == 2);
}

TEST_CASE("analyze core corona toggle") {
    RunResult r = run("analyze fixture:G3 --no-core-corona");
    CHECK(r.exitCode == 0);
    CHECK(r.output.find("core unavailable") != std::string::npos);
    CHECK(r.output.find("dc = 1") != std::string::npos);
}

TEST_CASE("version flag") {
    RunResult r = run("--version");
    CHECK(r.exitCode == 0);
    CHECK(r.output.find("0.1.0") != std::string::npos);
}
