// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criteria cover the reference tables, the published coefficient
// series, the counting cross-check, the translation-oracle sweeps, the
// class offsets, and the exactness audit of the solved identities.

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pwlie/oracle.hpp"
#include "pwlie/pweights.hpp"
#include "pwlie/signatures.hpp"
#include "pwlie/verify.hpp"
#include "pwlie/weylkac.hpp"

using namespace pwlie;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << "criterion " << number << " [" << name << "]: " << (ok ? "PASS" : "FAIL")
              << "\n";
    if (!ok) {
        if (!detail.empty()) std::cout << detail << "\n";
        ++failures;
    }
}

std::filesystem::path fixtures() {
    return std::filesystem::path(PWLIE_SOURCE_DIR) / "data" / "appendix";
}

std::optional<ResolvedFixture> load(const std::string& name, const AlgebraContext& ctx,
                                    const std::vector<AllowlistItem>& allowlist) {
    return resolve_fixture(load_fixture(fixtures() / (name + ".txt")), allowlist, ctx);
}

bool sets_equal(const PermutationWeightSet& a, const PermutationWeightSet& b,
                std::string* diff) {
    bool ok = true;
    std::ostringstream os;
    for (Int d = 0; d <= std::min(a.horizon(), b.horizon()); ++d) {
        if (a.at_depth(d) != b.at_depth(d)) {
            ok = false;
            os << "depth " << d << " differs\n";
        }
    }
    if (!ok && diff) *diff = os.str();
    return ok;
}

PermutationWeightSet conjugated(const PermutationWeightSet& set, const AlgebraContext& ctx) {
    std::vector<Int> labels = set.source().labels();
    std::vector<Int> conj_labels(labels.size());
    conj_labels[0] = labels[0];
    for (std::size_t i = 1; i < labels.size(); ++i) conj_labels[i] = labels[labels.size() - i];
    std::vector<std::vector<FiniteWeight>> by_depth(set.horizon() + 1);
    for (Int d = 0; d <= set.horizon(); ++d)
        for (const FiniteWeight& w : set.at_depth(d)) by_depth[d].push_back(conjugate(w));
    return PermutationWeightSet(AffineDominant(ctx, conj_labels), set.horizon(),
                                std::move(by_depth));
}

}  // namespace

int main() {
    AlgebraContext a5(5);
    AlgebraContext a1(1);
    const auto allowlist = load_allowlist(fixtures() / "allowlist.json");
    auto t_start = std::chrono::steady_clock::now();

    // 1. fundamental tables plus the conjugation symmetry
    {
        bool ok = true;
        std::ostringstream detail;
        for (const std::string name : {"a2", "a3", "a4", "a5"}) {
            auto fixture = load(name, a5, allowlist);
            CheckResult r = check_fixture(*fixture, a5);
            if (!r.ok) {
                ok = false;
                detail << name << ":\n" << r.diff;
            }
        }
        std::size_t a2_size = pweights(AffineDominant(a5, {1, 0, 0, 0, 0, 0}), 9, a5).total_size();
        detail << "table a2 carries " << a2_size << " weights\n";

        std::string diff;
        auto set1 = pweights(AffineDominant(a5, {0, 1, 0, 0, 0, 0}), 9, a5);
        auto set2 = pweights(AffineDominant(a5, {0, 0, 1, 0, 0, 0}), 9, a5);
        auto set4 = pweights(AffineDominant(a5, {0, 0, 0, 0, 1, 0}), 9, a5);
        auto set5 = pweights(AffineDominant(a5, {0, 0, 0, 0, 0, 1}), 9, a5);
        ok = ok && sets_equal(set4, conjugated(set2, a5), &diff);
        ok = ok && sets_equal(set5, conjugated(set1, a5), &diff);
        // self-conjugate tables
        auto set0 = pweights(AffineDominant(a5, {1, 0, 0, 0, 0, 0}), 9, a5);
        auto set3 = pweights(AffineDominant(a5, {0, 0, 0, 1, 0, 0}), 9, a5);
        ok = ok && sets_equal(set0, conjugated(set0, a5), &diff);
        ok = ok && sets_equal(set3, conjugated(set3, a5), &diff);
        report(1, "fundamental tables", ok, detail.str() + diff);
    }

    // 2. composite tables
    {
        bool ok = true;
        std::ostringstream detail;
        for (const std::string name : {"a6", "a7", "a8", "a9", "a10"}) {
            auto fixture = load(name, a5, allowlist);
            CheckResult r = check_fixture(*fixture, a5);
            if (!r.ok) {
                ok = false;
                detail << name << ":\n" << r.diff;
            }
        }
        report(2, "composite tables", ok, detail.str());
    }

    // 3. string functions of the level-2 source at rank 5
    std::optional<StringSolution> a5_solution;
    {
        bool ok = true;
        std::ostringstream detail;
        try {
            a5_solution = solve_strings(AffineDominant(a5, {1, 1, 0, 0, 0, 0}), 9, a5);
            const auto& st = a5_solution->table().strings();
            const std::vector<std::vector<Int>> expected = {
                {1, 10, 70, 380, 1740, 7012, 25585, 86130, 271225, 807100},
                {2, 22, 148, 770, 3382, 13134, 46382, 151734, 465894},
                {5, 50, 315, 1550, 6506, 24320, 83140, 264460},
            };
            ok = st.size() == expected.size();
            for (std::size_t j = 0; ok && j < expected.size(); ++j) {
                if (st[j].coeffs != expected[j]) {
                    ok = false;
                    detail << "class " << j << " solved:";
                    for (Int c : st[j].coeffs) detail << " " << c;
                    detail << "\n";
                }
            }
        } catch (const std::exception& e) {
            ok = false;
            detail << e.what();
        }
        report(3, "string functions", ok, detail.str());
    }

    // 4. counting cross-check at rank 1
    std::optional<StringSolution> a1_solution;
    {
        bool ok = true;
        std::ostringstream detail;
        try {
            a1_solution = solve_strings(AffineDominant(a1, {1, 0}), 15, a1);
            const auto& st = a1_solution->table().strings();
            ok = st.size() == 1 && st[0].coeffs == string_by_counting(15);
        } catch (const std::exception& e) {
            ok = false;
            detail << e.what();
        }
        report(4, "partition cross-check", ok, detail.str());
    }

    // 5. translation-oracle equivalence sweep
    {
        CheckResult sets = check_oracle_equivalence(3, 3, 5);
        CheckResult signs = check_signature_oracle(3, 2, 5);
        report(5, "oracle equivalence", sets.ok && signs.ok, sets.diff + signs.diff);
    }

    // 6. maximal classes of the level-2 source
    {
        auto classes = maximal_classes(AffineDominant(a5, {1, 1, 0, 0, 0, 0}), a5);
        bool ok = classes.size() == 3 && classes[0].offset == 0 && classes[1].offset == 1 &&
                  classes[2].offset == 2 &&
                  classes[0].finite == FiniteWeight({1, 0, 0, 0, 0, 0}) &&
                  classes[1].finite == FiniteWeight({2, 2, 1, 1, 1, 0}) &&
                  classes[2].finite == FiniteWeight({2, 2, 2, 1, 0, 0});
        report(6, "maximal classes", ok);
    }

    // 7. exactness audit of the solved identities
    {
        bool ok = a5_solution.has_value() && a1_solution.has_value();
        std::ostringstream detail;
        if (ok) {
            for (Int J = 0; J <= 9; ++J)
                if (!a5_solution->residual(J).is_zero()) {
                    ok = false;
                    detail << "rank-5 residual at order " << J << "\n";
                }
            for (Int J = 0; J <= 15; ++J)
                if (!a1_solution->residual(J).is_zero()) {
                    ok = false;
                    detail << "rank-1 residual at order " << J << "\n";
                }
            for (const auto& solution : {&*a5_solution, &*a1_solution})
                for (const auto& sf : solution->table().strings())
                    for (Int c : sf.coeffs)
                        if (c < 0) ok = false;
        }
        report(7, "exact residuals", ok, detail.str());
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t_start)
                       .count();
    std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << " ("
              << elapsed / 1000.0 << "s)\n";
    return failures == 0 ? 0 : 1;
}
