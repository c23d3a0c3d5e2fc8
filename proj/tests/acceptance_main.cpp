// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Fixture paths come from the build configuration.

#include "suspzeta/verification.hpp"

#include <cstdio>

#ifndef SUSPZETA_FIXTURES_DIR
#define SUSPZETA_FIXTURES_DIR "fixtures"
#endif

int main() {
    suspzeta::VerifyOptions options;
    options.fixtures_dir = SUSPZETA_FIXTURES_DIR;
    const auto results = suspzeta::run_acceptance(options);
    for (const auto& r : results)
        std::printf("[%s] %d %s%s%s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.empty() ? "" : " — ", r.detail.c_str());
    return suspzeta::all_passed(results) ? 0 : 1;
}
