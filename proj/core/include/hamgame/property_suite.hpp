#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hamgame {

struct SuiteOptions {
    int samples = 0;  // 0: the suite's default
    std::uint64_t seed = 1;
};

struct SuiteReport {
    std::string suite;
    int requested = 0;
    int checked = 0;     // instances that met the suite's preconditions and were tested
    int attempts = 0;    // instances drawn, including rejected ones
    int violations = 0;
    std::vector<std::string> counterexamples;  // first few, verbatim
    double seconds = 0.0;

    bool passed() const noexcept { return violations == 0 && checked >= requested; }
};

/// lemma1, lemma2, booster-soundness, replay, monotonicity.
const std::vector<std::string_view>& suite_ids();

int default_samples(std::string_view suite);

/// Throws UnknownSuite.
SuiteReport run_property_suite(std::string_view suite, const SuiteOptions& options = {});

std::string format_report(const SuiteReport& report);

}  // namespace hamgame
