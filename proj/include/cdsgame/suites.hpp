#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cdsgame/games.hpp"
#include "cdsgame/serialize.hpp"

namespace cds {

struct SuiteLimits {
    int max_n = 6;             // exhaustive permutation bound
    int max_m = 5;             // N/P classification up to this chain index
    int collapse_max_m = 6;    // chain-collapse up to this chain index
    int tight_max_n = 12;      // tight instances n = 8, 12, ... up to this
    int samples = 10000;       // random commutation samples at n = 8..10
    int random_graphs = 1000;  // random graphs for the gcds route comparison
    std::uint64_t seed = 1;
    int threads = 1;
    SolveCache* cache = nullptr;
};

struct SuiteFailure {
    std::string check;
    json input; // smallest failing instance found
};

struct SuiteResult {
    std::string name;
    std::uint64_t cases = 0;
    std::vector<SuiteFailure> failures;
    json findings = json::object(); // reported observations that are not pass/fail
    double elapsed_seconds = 0;

    [[nodiscard]] bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();

/// Throws ArgumentError on an unknown suite name.
SuiteResult verify_suite(std::string_view name, const SuiteLimits& limits = {});

/// Timing lives under "timing" so the rest of the document is reproducible.
json to_json(const SuiteResult& r);

} // namespace cds
