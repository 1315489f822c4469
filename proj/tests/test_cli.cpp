#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// Runs the cli with the given argument text; stderr is discarded.
Run cli(const std::string& args) {
    std::string cmd = std::string("'") + HYPCOX_CLI + "' " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("hypcox_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

const char* kPointV = R"({"A":[0.31,0.12],"B":[0.47,-0.08],"C":[0.62,0.05],"D":[0.28,0.21],"E":[0.83,-0.11],"F":[0.71,0.17]})";

} // namespace

TEST_CASE("cli: orbits and distances") {
    auto r = cli("--format json orbits");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["O1"].size() == 12);
    CHECK(j["O2"].size() == 12);
    CHECK(j["O3"].size() == 32);

    r = cli("distance '+v(0,1)' '-v(0,1)'");
    CHECK(r.code == 0);
    CHECK(r.out == "6\n");
    r = cli("distance 4 4bar");
    CHECK(r.out == "4\n");
}

TEST_CASE("cli: classify T has 18 orbits") {
    auto r = cli("--format json classify --space T");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["orbits"].size() == 18);
}

TEST_CASE("cli: eval J at a point") {
    auto path = temp_file("pv.json", kPointV);
    auto r = cli("--format json eval --func J --point '" + path + "'");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["converged"] == true);
    CHECK(j["value"][0].get<double>() == doctest::Approx(0.061259415903286172671).epsilon(1e-12));
    CHECK(j["value"][1].get<double>() == doctest::Approx(0.041432229471081533181).epsilon(1e-12));
    // Keys come out sorted.
    std::string prev;
    for (auto it = j.begin(); it != j.end(); ++it) {
        CHECK(prev < it.key());
        prev = it.key();
    }
}

TEST_CASE("cli: input errors exit with 2") {
    CHECK(cli("bogus").code == 2);
    CHECK(cli("eval --func J --point /nonexistent/point.json").code == 2);
    CHECK(cli("distance '+v(9,1)' '+v(0,1)'").code == 2);
    CHECK(cli("order H").code == 2);
    std::string extra = kPointV;
    extra.insert(extra.size() - 1, R"(,"Q":[1,0])");
    CHECK(cli("eval --func J --point '" + temp_file("extra.json", extra) + "'").code == 2);
    CHECK(cli("--format yaml orbits").code == 2);
}

TEST_CASE("cli: seeded checks are reproducible") {
    auto a = cli("--format json --seed 3 check limits");
    auto b = cli("--format json --seed 3 check limits");
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["check"] == "limits");
}
