#pragma once

/**
 * @file verify.hpp
 * @brief Randomized invariant suites, one per module, runnable from the CLI.
 *
 * Failures are report content, not exceptions. The negative-control option
 * swaps a deliberately broken rotation builder into the core suite; a
 * healthy harness must then report failures.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace rotlab {

struct VerifyOptions {
    long long cases = 100;
    std::uint64_t seed = 1;
    bool negative_control = false;
};

struct VerifyReport {
    std::string suite;
    long long cases = 0;
    long long checks = 0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

/// Suites: core, lift, census, surfaces, polymethod, all.
VerifyReport verify_suite(const std::string& name, const VerifyOptions& options);

const std::vector<std::string>& verify_suite_names();

std::string format_verify_report(const VerifyReport& report);

} // namespace rotlab
