#pragma once

#include <string>
#include <vector>

#include "pwlie/weightlattice.hpp"

namespace pwlie {

/// Guard for the brute-force enumerations; they are meant for small ranks
/// and horizons only.
struct OracleLimits {
    Int max_search_nodes = 20'000'000;
};

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Root-lattice translation vectors (zero-sum integer coordinate vectors)
/// whose translate of the source stays within the depth horizon.
struct TranslationBall {
    std::vector<std::vector<Int>> betas;
};

TranslationBall translation_ball(const AffineDominant& source, Int horizon,
                                 const AlgebraContext& ctx, const OracleLimits& limits = {});

/// Ground-truth orbit slices: every translate of the source, reduced to its
/// dominant representative with the sorting parity, grouped by depth and
/// deduplicated.  A sign of 0 marks either a coordinate collision or, for
/// sources that are not strictly dominant, a representative reached with
/// both parities.  Independent of the depth-equation and signature code.
std::vector<std::vector<SignedWeight>> orbit_bruteforce(const AffineDominant& source, Int horizon,
                                                        const AlgebraContext& ctx,
                                                        const OracleLimits& limits = {});

/// Partition numbers p(0..horizon) by the pentagonal-number recurrence; the
/// known coefficient string of the basic level-1 representation at rank 1.
std::vector<Int> string_by_counting(Int horizon);

/// Plain-text diff of (depth, weight, sign) triples present in exactly one
/// of the two slices; empty when they agree.  With compare_signs false only
/// the weight sets per depth are compared.
std::string diff_report(const std::vector<std::vector<SignedWeight>>& oracle_side,
                        const std::vector<std::vector<SignedWeight>>& main_side,
                        bool compare_signs);

}  // namespace pwlie
