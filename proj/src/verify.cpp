#include "pwlie/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pwlie/oracle.hpp"
#include "pwlie/signatures.hpp"

#ifndef PWLIE_DATA_DIR
#define PWLIE_DATA_DIR "data"
#endif

namespace pwlie {

std::filesystem::path default_fixture_directory() {
    if (const char* env = std::getenv("PWLIE_FIXTURES")) return env;
    return std::filesystem::path(PWLIE_DATA_DIR) / "appendix";
}

std::vector<AllowlistItem> load_allowlist(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open allowlist: " + file.string());
    nlohmann::json j = nlohmann::json::parse(in);
    std::vector<AllowlistItem> items;
    for (const auto& e : j) {
        AllowlistItem item;
        item.table = e.at("table").get<std::string>();
        item.raw = e.at("raw").get<std::string>();
        if (e.contains("correction") && !e.at("correction").is_null())
            item.correction = e.at("correction").get<std::string>();
        item.missing = e.value("missing", false);
        item.note = e.value("note", "");
        items.push_back(std::move(item));
    }
    return items;
}

FixtureTable load_fixture(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open fixture: " + file.string());
    FixtureTable table;
    table.name = file.stem().string();

    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream is(line);
        std::string token;
        while (is >> token) {
            if (token == "source:") {
                std::string value;
                is >> value;
                table.labels = parse_int_list(value);
            } else if (token == "horizon:") {
                is >> table.horizon;
            } else {
                auto us = token.rfind('_');
                if (us == std::string::npos || us + 1 >= token.size())
                    throw std::runtime_error(table.name + ": malformed fixture token " + token);
                Int depth = 0;
                try {
                    depth = std::stoll(token.substr(us + 1));
                } catch (const std::exception&) {
                    throw std::runtime_error(table.name + ": malformed fixture depth in " + token);
                }
                table.raw_entries.emplace_back(token, depth);
            }
        }
    }
    if (table.labels.empty()) throw std::runtime_error(table.name + ": fixture lacks source line");
    return table;
}

ResolvedFixture resolve_fixture(const FixtureTable& fixture,
                                const std::vector<AllowlistItem>& allowlist,
                                const AlgebraContext& ctx) {
    ResolvedFixture out{AffineDominant(ctx, fixture.labels), fixture.horizon, {}, 0};
    out.by_depth.resize(fixture.horizon + 1);

    auto find_item = [&](const std::string& raw) -> const AllowlistItem* {
        for (const auto& item : allowlist)
            if (item.table == fixture.name && item.raw == raw) return &item;
        return nullptr;
    };

    auto add_token = [&](const std::string& token) {
        auto [w, d] = parse_display(token, ctx);
        if (d > fixture.horizon)
            throw std::runtime_error(fixture.name + ": entry beyond horizon " + token);
        out.by_depth[d].push_back(std::move(w));
    };

    for (const auto& [token, depth] : fixture.raw_entries) {
        if (const AllowlistItem* item = find_item(token); item && !item->missing) {
            out.allowlisted += 1;
            if (item->correction) add_token(*item->correction);
            continue;  // spurious entry: expected absent from the computed set
        }
        add_token(token);
    }
    // table omissions contribute extra expected entries
    for (const auto& item : allowlist) {
        if (item.table != fixture.name || !item.missing) continue;
        out.allowlisted += 1;
        if (item.correction) add_token(*item.correction);
    }
    for (auto& lst : out.by_depth) std::sort(lst.begin(), lst.end(), std::greater<>());
    return out;
}

namespace {

std::vector<std::vector<SignedWeight>> as_signed(
    const std::vector<std::vector<FiniteWeight>>& sets) {
    std::vector<std::vector<SignedWeight>> out(sets.size());
    for (std::size_t d = 0; d < sets.size(); ++d)
        for (const auto& w : sets[d]) out[d].push_back({w, 0});
    return out;
}

std::vector<std::vector<SignedWeight>> as_signed(const PermutationWeightSet& set) {
    std::vector<std::vector<SignedWeight>> out(set.horizon() + 1);
    for (Int d = 0; d <= set.horizon(); ++d)
        for (const auto& w : set.at_depth(d)) out[d].push_back({w, 0});
    return out;
}

// every dominant label vector of the given rank with level in [1, max_level]
void for_each_dominant(const AlgebraContext& ctx, Int max_level,
                       const std::function<void(const AffineDominant&)>& fn) {
    std::vector<Int> labels(ctx.dim(), 0);
    std::function<void(int, Int)> rec = [&](int i, Int remaining) {
        if (i == ctx.dim()) {
            Int level = max_level - remaining;
            if (level >= 1) fn(AffineDominant(ctx, labels));
            return;
        }
        for (Int v = 0; v <= remaining; ++v) {
            labels[i] = v;
            rec(i + 1, remaining - v);
        }
        labels[i] = 0;
    };
    rec(0, max_level);
}

std::string label_string(const AffineDominant& source) {
    std::ostringstream os;
    os << "rank " << source.rank() << " labels ";
    for (std::size_t i = 0; i < source.labels().size(); ++i) {
        if (i) os << ',';
        os << source.labels()[i];
    }
    return os.str();
}

}  // namespace

CheckResult check_fixture(const ResolvedFixture& fixture, const AlgebraContext& ctx,
                          PWeightsCache* cache) {
    CheckResult result;
    result.allowlisted = fixture.allowlisted;
    PermutationWeightSet computed = pweights(fixture.source, fixture.horizon, ctx, cache);
    std::string diff = diff_report(as_signed(fixture.by_depth), as_signed(computed), false);
    if (!diff.empty()) {
        result.ok = false;
        result.diff = diff;
    }
    return result;
}

CheckResult check_oracle_equivalence(int max_rank, Int max_level, Int horizon) {
    CheckResult result;
    result.name = "oracle";
    std::ostringstream diff;
    for (int rank = 1; rank <= max_rank; ++rank) {
        AlgebraContext ctx(rank);
        for_each_dominant(ctx, max_level, [&](const AffineDominant& source) {
            auto truth = orbit_bruteforce(source, horizon, ctx);
            auto sets = as_signed(pweights(source, horizon, ctx));
            std::string d = diff_report(truth, sets, false);
            if (!d.empty()) {
                result.ok = false;
                diff << label_string(source) << ":\n" << d;
            }
        });
    }
    result.diff = diff.str();
    return result;
}

CheckResult check_signature_oracle(int max_rank, Int level_slack, Int horizon) {
    CheckResult result;
    result.name = "signatures";
    std::ostringstream diff;
    for (int rank = 1; rank <= max_rank; ++rank) {
        AlgebraContext ctx(rank);
        for_each_dominant(ctx, rank + 1 + level_slack, [&](const AffineDominant& source) {
            if (!source.is_strictly_dominant()) return;
            auto truth = orbit_bruteforce(source, horizon, ctx);
            for (Int d = 0; d <= horizon; ++d) {
                for (const SignedWeight& sw : truth[d]) {
                    int got = signature_index(sw.weight, source.level(), ctx);
                    if (got != sw.sign) {
                        result.ok = false;
                        diff << label_string(source) << " depth " << d << " "
                             << display(sw.weight, d) << ": oracle " << sw.sign << ", index "
                             << got << "\n";
                    }
                }
            }
        });
    }
    result.diff = diff.str();
    return result;
}

bool VerifySummary::all_ok() const {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.ok; });
}

std::string VerifySummary::summary_line() const {
    // group the table checks the way the tables are organized
    static const std::vector<std::pair<std::string, std::vector<std::string>>> groups = {
        {"A.2..A.5", {"a2", "a3", "a4", "a5"}},
        {"A.6..A.8", {"a6", "a7", "a8"}},
        {"A.9..A.10", {"a9", "a10"}},
    };
    std::ostringstream os;
    bool first = true;
    auto append = [&](const std::string& label, bool ok, std::size_t allowlisted) {
        if (!first) os << "; ";
        first = false;
        os << label << ": " << (ok ? "OK" : "FAIL");
        if (ok && allowlisted > 0)
            os << " (" << allowlisted << " allowlisted misprint" << (allowlisted > 1 ? "s" : "")
               << ")";
    };
    std::set<std::string> reported;
    for (const auto& [label, members] : groups) {
        bool any = false, ok = true;
        std::size_t allow = 0;
        for (const auto& r : results) {
            if (std::find(members.begin(), members.end(), r.name) == members.end()) continue;
            any = true;
            ok = ok && r.ok;
            allow += r.allowlisted;
            reported.insert(r.name);
        }
        if (any) append(label, ok, allow);
    }
    for (const auto& r : results) {
        if (reported.count(r.name)) continue;
        append(r.name, r.ok, r.allowlisted);
    }
    return os.str();
}

VerifySummary run_verification(const VerifyOptions& options) {
    VerifySummary summary;
    auto wanted = [&](const std::string& name) {
        return options.only.empty() ||
               std::find(options.only.begin(), options.only.end(), name) != options.only.end();
    };

    std::vector<AllowlistItem> allowlist;
    auto allowlist_path = options.fixtures / "allowlist.json";
    if (std::filesystem::exists(allowlist_path)) allowlist = load_allowlist(allowlist_path);

    static const std::vector<std::string> tables = {"a2", "a3", "a4", "a5", "a6",
                                                    "a7", "a8", "a9", "a10"};
    for (const auto& name : tables) {
        if (!wanted(name)) continue;
        CheckResult result;
        result.name = name;
        try {
            FixtureTable fixture = load_fixture(options.fixtures / (name + ".txt"));
            AlgebraContext ctx(static_cast<int>(fixture.labels.size()) - 1);
            ResolvedFixture resolved = resolve_fixture(fixture, allowlist, ctx);
            result = check_fixture(resolved, ctx);
            result.name = name;
        } catch (const std::exception& e) {
            result.ok = false;
            result.diff = e.what();
        }
        summary.results.push_back(std::move(result));
    }

    if (options.run_oracle && wanted("oracle"))
        summary.results.push_back(
            check_oracle_equivalence(options.oracle_rank, options.oracle_level,
                                     options.oracle_horizon));
    if (options.run_signatures && wanted("signatures"))
        summary.results.push_back(check_signature_oracle(options.oracle_rank, 2,
                                                         options.oracle_horizon));
    return summary;
}

}  // namespace pwlie
