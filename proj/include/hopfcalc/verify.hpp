#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hopfcalc {

inline constexpr std::uint64_t kDefaultSeed = 0x4E434731ULL;

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;  // empty when ok
};

/// Known suite names, in the order "all" runs them.
std::vector<std::string> verify_suite_names();

/// Runs one suite ("hopf", "projectors", "connection", "topology") or "all".
/// Throws std::invalid_argument for unknown names.  Randomized checks draw
/// from the given seed and report it in their failure detail.
std::vector<CheckResult> verify_suite(const std::string& suite,
                                      std::uint64_t seed = kDefaultSeed);

}  // namespace hopfcalc
