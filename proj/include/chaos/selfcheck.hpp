#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chaos {

struct PropertyResult {
    std::string module;
    std::string property;
    bool passed = false;
    std::string detail;  // first failure, empty when passed
};

/// Runs the property suite of every module at desk scale. Deterministic
/// given the seed.
std::vector<PropertyResult> run_self_check(std::uint64_t seed);

}  // namespace chaos
