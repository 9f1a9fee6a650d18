#pragma once

#include <string>

#include "pwlie/pweights.hpp"
#include "pwlie/weylkac.hpp"

namespace pwlie {

/// One line per depth, members sorted lexicographically descending:
/// "(2,1,1,1,1)_1".  Deterministic for a fixed input.
std::string format_pweights_table(const PermutationWeightSet& set);

/// Aligned rows of string coefficients, one class per row.
std::string format_strings_table(const StringFunctionTable& table);

/// Power-series style, e.g. "q^2 ( 5 + 50 q + 315 q^2 + ... )".
std::string format_strings_series(const StringFunctionTable& table);

std::string strings_to_json(const StringFunctionTable& table, const AlgebraContext& ctx);
std::string strings_to_csv(const StringFunctionTable& table);

}  // namespace pwlie
