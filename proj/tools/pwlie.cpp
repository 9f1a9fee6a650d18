#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pwlie/oracle.hpp"
#include "pwlie/pweights.hpp"
#include "pwlie/report.hpp"
#include "pwlie/verify.hpp"
#include "pwlie/weylkac.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCache = 3;
constexpr int kExitSolver = 4;
constexpr int kExitVerify = 5;

struct CommonOptions {
    int rank = 0;
    std::string labels;
    long long max_depth = 0;
    std::string format = "table";
    std::string spec;
    std::string cache_dir;
    bool no_cache = false;
};

pwlie::AffineDominant parse_source(const CommonOptions& opt, const pwlie::AlgebraContext& ctx) {
    std::vector<pwlie::Int> labels = pwlie::parse_int_list(opt.labels);
    if (static_cast<int>(labels.size()) != ctx.dim())
        throw std::invalid_argument("expected " + std::to_string(ctx.dim()) + " labels");
    return pwlie::AffineDominant(ctx, labels);
}

pwlie::Specialization parse_spec(const CommonOptions& opt, const pwlie::AlgebraContext& ctx) {
    if (opt.spec.empty()) return pwlie::Specialization::default_for(ctx);
    std::vector<pwlie::Int> t = pwlie::parse_int_list(opt.spec);
    if (static_cast<int>(t.size()) != ctx.dim())
        throw std::invalid_argument("specialization needs N+1 exponents");
    return pwlie::Specialization(std::move(t));
}

pwlie::PWeightsCache make_cache(const CommonOptions& opt) {
    if (opt.no_cache) return pwlie::PWeightsCache();
    if (!opt.cache_dir.empty()) return pwlie::PWeightsCache(opt.cache_dir);
    return pwlie::PWeightsCache(pwlie::PWeightsCache::default_directory());
}

int cmd_pweights(const CommonOptions& opt) {
    pwlie::AlgebraContext ctx(opt.rank);
    pwlie::AffineDominant source = parse_source(opt, ctx);
    pwlie::PWeightsCache cache = make_cache(opt);

    pwlie::PermutationWeightSet set =
        pwlie::pweights(source, opt.max_depth, ctx, cache.enabled() ? &cache : nullptr);
    if (opt.format == "json")
        std::cout << pwlie::pweights_to_json(set, ctx) << "\n";
    else
        std::cout << pwlie::format_pweights_table(set);
    if (cache.had_error()) {
        std::cerr << "cache: " << cache.last_error() << "\n";
        return kExitCache;
    }
    return kExitOk;
}

int cmd_strings(const CommonOptions& opt, bool series) {
    pwlie::AlgebraContext ctx(opt.rank);
    pwlie::AffineDominant source = parse_source(opt, ctx);
    pwlie::Specialization spec = parse_spec(opt, ctx);
    pwlie::PWeightsCache cache = make_cache(opt);

    pwlie::StringSolution solution = pwlie::solve_strings(
        source, opt.max_depth, ctx, spec, cache.enabled() ? &cache : nullptr);
    const pwlie::StringFunctionTable& table = solution.table();
    if (opt.format == "json")
        std::cout << pwlie::strings_to_json(table, ctx) << "\n";
    else if (opt.format == "csv")
        std::cout << pwlie::strings_to_csv(table);
    else if (series)
        std::cout << pwlie::format_strings_series(table);
    else
        std::cout << pwlie::format_strings_table(table);
    if (cache.had_error()) {
        std::cerr << "cache: " << cache.last_error() << "\n";
        return kExitCache;
    }
    return kExitOk;
}

int cmd_verify(const pwlie::VerifyOptions& options) {
    pwlie::VerifySummary summary = pwlie::run_verification(options);
    for (const auto& result : summary.results) {
        if (!result.ok) {
            std::cout << result.name << ": FAIL\n";
            std::cout << result.diff;
        }
    }
    std::cout << summary.summary_line() << "\n";
    return summary.all_ok() ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutation-weight toolkit for untwisted affine type A"};
    app.require_subcommand(1);

    CommonOptions opt;
    bool series = false;

    auto add_common = [&](CLI::App* sub, bool with_depth) {
        sub->add_option("--rank", opt.rank, "finite rank N")->required();
        sub->add_option("--labels", opt.labels, "affine labels a0,...,aN")->required();
        if (with_depth)
            sub->add_option("--max-depth", opt.max_depth, "depth horizon K")->required();
        sub->add_option("--format", opt.format, "table, json or csv");
        sub->add_option("--cache-dir", opt.cache_dir, "cache directory (default: PWLIE_CACHE)");
        sub->add_flag("--no-cache", opt.no_cache, "disable the persistent cache");
    };

    CLI::App* pw = app.add_subcommand("pweights", "list orbit slices by depth");
    add_common(pw, true);

    CLI::App* st = app.add_subcommand("strings", "solve for string-function coefficients");
    add_common(st, true);
    st->add_option("--spec", opt.spec, "specialization exponents t1,...,tN+1 (sum 0)");
    st->add_flag("--series", series, "print power-series style");

    pwlie::VerifyOptions vopt;
    std::string fixtures_dir;
    CLI::App* ve = app.add_subcommand("verify", "run reference-table and oracle checks");
    ve->add_option("--only", vopt.only, "check only the named tables (a2..a10, oracle, signatures)");
    ve->add_option("--fixtures", fixtures_dir, "directory with the reference tables");
    ve->add_option("--oracle-rank", vopt.oracle_rank, "max rank for the oracle sweep");
    ve->add_option("--oracle-level", vopt.oracle_level, "max level for the oracle sweep");
    ve->add_option("--oracle-depth", vopt.oracle_horizon, "horizon for the oracle sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (pw->parsed()) return cmd_pweights(opt);
        if (st->parsed()) return cmd_strings(opt, series);
        if (ve->parsed()) {
            if (!fixtures_dir.empty()) vopt.fixtures = fixtures_dir;
            return cmd_verify(vopt);
        }
    } catch (const pwlie::SolveError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kExitSolver;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
