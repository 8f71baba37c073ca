#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(ACOMP_BIN_DIR) + "/acomp " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    while (size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string without_timing(std::string text) {
    return std::regex_replace(text, std::regex("\"timing_seconds\": [0-9.eE+-]+"),
                              "\"timing_seconds\": 0");
}

} // namespace

TEST_CASE("analyze: text and json output, exit 0") {
    auto r = run("analyze --rule \"[ab,a]\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("points:         2") != std::string::npos);

    auto j = run("analyze --rule \"[ab,a]\" --format json");
    CHECK(j.exit_code == 0);
    CHECK(j.out.find("\"rule\": \"[ab,a]\"") != std::string::npos);
    CHECK(j.out.find("\"minpoly\": \"x^2-x-1\"") != std::string::npos);
    CHECK(j.out.find("\"canonical_key\": \"n=2|L={1,2}|R={1,2}|P=(1,2)\"") != std::string::npos);
}

TEST_CASE("analyze: repeated runs are byte-identical apart from timing") {
    auto a = run("analyze --rule \"[bc,a,b]\" --format json");
    auto b = run("analyze --rule \"[bc,a,b]\" --format json");
    CHECK(a.exit_code == 0);
    CHECK(without_timing(a.out) == without_timing(b.out));
}

TEST_CASE("compare and mirror exit codes") {
    CHECK(run("compare --rule1 \"[c,ca,cb]\" --rule2 \"[c,ac,bc]\"").exit_code == 0);
    CHECK(run("compare --rule1 \"[aab,ba]\" --rule2 \"[baa,ab]\"").exit_code == 1);

    auto m = run("mirror --rule \"[c,ca,cb]\"");
    CHECK(m.exit_code == 0);
    CHECK(m.out.find("no_obstruction") != std::string::npos);
    CHECK(m.out.find("caution:") != std::string::npos);

    auto m2 = run("mirror --rule \"[aab,ba]\"");
    CHECK(m2.exit_code == 1);
    CHECK(m2.out.find("obstruction_found") != std::string::npos);
}

TEST_CASE("malformed input exits 2; refused computation exits 3") {
    CHECK(run("analyze --rule \"[ab\"").exit_code == 2);
    CHECK(run("analyze --rule \"[ac,a]\"").exit_code == 2);
    CHECK(run("analyze").exit_code == 2); // missing required flag
    CHECK(run("analyze --rule \"[a,b]\"").exit_code == 3); // not primitive
    CHECK(run("analyze --rule \"[abbba,aba]\"").exit_code == 3); // composite spectrum
}

TEST_CASE("enumerate counts and grouping") {
    auto r = run("enumerate --charpoly \"x^3-x^2-x-1\" --format tsv");
    CHECK(r.exit_code == 0);
    int matrices = 0;
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line);)
        if (line.rfind("matrix\t", 0) == 0) ++matrices;
    CHECK(matrices == 4);

    auto g = run("enumerate --matrix \"[[1,1],[1,0]]\" --group --format tsv");
    CHECK(g.exit_code == 0);
    CHECK(g.out.find("[ab,a] [ba,a]") != std::string::npos);
    CHECK(g.out.find("(self)") != std::string::npos);
}

TEST_CASE("tables subcommand over one table passes") {
    auto r = run("tables --table 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("summary: 5 pass, 0 paper-typo candidates, 0 unexplained") !=
          std::string::npos);
}

TEST_CASE("render writes an SVG document") {
    std::string path = std::string(ACOMP_BIN_DIR) + "/test_cli_render.svg";
    auto r = run("render --rule \"[ab,a]\" --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    CHECK(first.rfind("<svg", 0) == 0);
    std::remove(path.c_str());

    CHECK(run("render --rule \"[ab,a]\" --out /nonexistent/dir/x.svg").exit_code == 4);
}
