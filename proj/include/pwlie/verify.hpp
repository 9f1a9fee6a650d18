#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pwlie/pweights.hpp"
#include "pwlie/weightlattice.hpp"

namespace pwlie {

/// A known defect of a shipped reference table: `raw` is the entry exactly as
/// transcribed; `correction` is the enumeration-confirmed replacement, or
/// empty when the entry is simply spurious.  `missing` entries are weights
/// the table omits.
struct AllowlistItem {
    std::string table;
    std::string raw;
    std::optional<std::string> correction;
    bool missing = false;
    std::string note;
};

/// Reference table transcribed from the published listings: the source labels
/// and, per depth, the entries as raw display tokens.
struct FixtureTable {
    std::string name;
    std::vector<Int> labels;
    Int horizon = 0;
    std::vector<std::pair<std::string, Int>> raw_entries;  // (token, depth)
};

std::vector<AllowlistItem> load_allowlist(const std::filesystem::path& file);
FixtureTable load_fixture(const std::filesystem::path& file);

/// Fixture resolved against the allowlist into per-depth weight sets, with a
/// count of the allowlist items that were applied.
struct ResolvedFixture {
    AffineDominant source;
    Int horizon;
    std::vector<std::vector<FiniteWeight>> by_depth;
    std::size_t allowlisted = 0;
};

ResolvedFixture resolve_fixture(const FixtureTable& fixture,
                                const std::vector<AllowlistItem>& allowlist,
                                const AlgebraContext& ctx);

struct CheckResult {
    std::string name;
    bool ok = true;
    std::size_t allowlisted = 0;
    std::string diff;  // mismatch report, empty when ok
};

/// Recomputes a reference table and compares the per-depth sets.
CheckResult check_fixture(const ResolvedFixture& fixture, const AlgebraContext& ctx,
                          PWeightsCache* cache = nullptr);

/// Exhaustive small-scale comparison of the composed sets against the
/// translation enumeration: every dominant label vector with the given rank
/// and level bounds.
CheckResult check_oracle_equivalence(int max_rank, Int max_level, Int horizon);

/// Signature index against the sorting parity of the translation picture,
/// over every strictly dominant source within the bounds.
CheckResult check_signature_oracle(int max_rank, Int max_level, Int horizon);

/// Locations of the shipped reference tables.
std::filesystem::path default_fixture_directory();

struct VerifyOptions {
    std::filesystem::path fixtures = default_fixture_directory();
    std::vector<std::string> only;  // table names ("a2".."a10"), empty = all
    bool run_oracle = true;
    bool run_signatures = true;
    int oracle_rank = 3;
    Int oracle_level = 3;
    Int oracle_horizon = 5;
};

struct VerifySummary {
    std::vector<CheckResult> results;
    bool all_ok() const;
    std::string summary_line() const;
};

VerifySummary run_verification(const VerifyOptions& options);

}  // namespace pwlie
