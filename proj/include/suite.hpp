#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "correspond.hpp"
#include "hypnum.hpp"

// The acceptance catalog shared by the selftest verb and the acceptance binary.
namespace suite {

struct Tolerances {
    double jl = 1e-7;        // J/L invariance, L vs 7F6, orbit1jll
    double m = 1e-5;         // M invariance, roy463, roy463b
    double appendix = 1e-8;  // M on generated vs fixture argument lists
    double gamma = 1e-12;    // reflection and recursion residuals
    double stirling = 1e-10;
    double limitFactor = 0.6;
    double translateFactor = 10;
    double ratioLo = 0.3, ratioHi = 0.7;
};

struct Config {
    std::uint64_t seed = 7;
    Tolerances tol;
    std::vector<double> shifts{8, 16, 32};
    std::string fixture;  // empty: the fixture installed with the sources
    hypnum::SeriesCtrl ctrl;
};

struct Result {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    std::vector<std::string> notes;
    std::map<std::string, double> metrics;
};

constexpr int kCriteria = 15;

std::string default_fixture();
const char* criterion_name(int id);
Result run(int id, const Config& cfg);

// Criterion-specific seeded generator: the same (seed, id) always yields the same points.
std::mt19937_64 rng_for(std::uint64_t seed, int id);

// Pieces reused by the cli check verbs.
Result check_invariance(const Config& cfg);
Result check_relations(const Config& cfg);
Result check_limits(const Config& cfg);
Result check_pipeline(const Config& cfg);

} // namespace suite
