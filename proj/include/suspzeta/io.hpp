#pragma once

#include "suspzeta/zeta.hpp"

#include <string>
#include <vector>

namespace suspzeta {

/// Parse the ResolutionData schema:
/// { "divisors": [ { "id": "E1", "N": 10, "nu": 2 }, ... ],
///   "strata":   [ { "divisors": ["E1"], "euler": -8 }, ... ],
///   "classes":  optional [ { "divisors": [...], "classInL": [[exp, coeff], ...] } ] }
/// Schema violations throw std::invalid_argument with a field path.
ResolutionData parse_resolution_json(const std::string& text);

/// Load from a file; runs check_z_at_zero and appends a warning (not an
/// error) when it fails.
ResolutionData load_resolution_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

/// Parse the ZetaBundle schema:
/// { "variable": "t" | "s",
///   "entries": [ { "twist": 1, "num": "10*s+11", "den": "(30*s+11)*(s+1)" }, ... ] }
/// The entry at twist 1 must be present.
ZetaBundle parse_bundle_json(const std::string& text);

ZetaBundle load_bundle_file(const std::string& path);

std::string resolution_to_json(const ResolutionData& res);
std::string bundle_to_json(const ZetaBundle& bundle, const std::string& variable = "s");

} // namespace suspzeta
