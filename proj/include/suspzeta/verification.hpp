#pragma once

#include "suspzeta/suspension.hpp"

#include <string>
#include <vector>

namespace suspzeta {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    std::string fixtures_dir = "fixtures";
    int profile_count = 50;   // randomized stratum profiles for the oracle triangle
    unsigned seed = 240611;
};

/// Runs the shipped fixture suite; one result per criterion.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace suspzeta
