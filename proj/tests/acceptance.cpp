#include <cstdio>
#include <iostream>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "suite.hpp"

namespace {

std::set<int> parse_ids(const std::string& spec) {
    std::set<int> ids;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        auto comma = spec.find(',', pos);
        std::string part = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        auto dash = part.find('-');
        int lo = std::stoi(part.substr(0, dash));
        int hi = dash == std::string::npos ? lo : std::stoi(part.substr(dash + 1));
        for (int k = lo; k <= hi; ++k) ids.insert(k);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return ids;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria, one line each"};
    std::string only = "1-15";
    suite::Config cfg;
    bool verbose = false;
    app.add_option("--only", only, "criteria to run, e.g. 1-14 or 3,9,15");
    app.add_option("--seed", cfg.seed, "seed for the sampled points");
    app.add_option("--fixture", cfg.fixture, "appendix fixture file");
    app.add_flag("-v,--verbose", verbose, "print the notes of every criterion");
    CLI11_PARSE(app, argc, argv);

    std::set<int> ids;
    try {
        ids = parse_ids(only);
    } catch (const std::exception&) {
        std::cerr << "bad --only '" << only << "'\n";
        return 2;
    }
    int failed = 0;
    for (int id : ids) {
        auto r = suite::run(id, cfg);
        std::printf("[%s] %2d %-22s %8.2fs\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds);
        if (verbose || !r.pass)
            for (const auto& n : r.notes) std::printf("       %s\n", n.c_str());
        std::fflush(stdout);
        failed += !r.pass;
    }
    return failed ? 1 : 0;
}
