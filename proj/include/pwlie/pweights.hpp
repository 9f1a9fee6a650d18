#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pwlie/weightlattice.hpp"

namespace pwlie {

/// One non-negative solution of the depth equation
///   Q(r; p) = sum_i r_i (r_i + p_i) - sum_i r_i r_{i+1} = k d,
/// together with the weight it generates.
struct DepthSolution {
    std::vector<Int> r;
    FiniteWeight weight;
    Int depth = 0;
};

/// All non-negative integer vectors r with Q(r; p) = k d, found by DFS with
/// an exact lower bound on the positive-definite completion.
std::vector<DepthSolution> solve_depth_equation(std::span<const Int> p, Int k, Int d);

/// Per-depth sets of dominant finite weights whose finite Weyl orbits exhaust
/// the affine Weyl orbit slice of the source at that depth.
class PermutationWeightSet {
public:
    PermutationWeightSet(AffineDominant source, Int horizon,
                         std::vector<std::vector<FiniteWeight>> by_depth);

    const AffineDominant& source() const { return source_; }
    Int horizon() const { return horizon_; }
    /// weights of one depth, sorted lexicographically descending
    const std::vector<FiniteWeight>& at_depth(Int d) const;
    std::size_t total_size() const;
    /// restriction to a smaller horizon
    PermutationWeightSet truncated(Int new_horizon) const;

    friend bool operator==(const PermutationWeightSet& a, const PermutationWeightSet& b) {
        return a.source_ == b.source_ && a.horizon_ == b.horizon_ && a.by_depth_ == b.by_depth_;
    }

private:
    AffineDominant source_;
    Int horizon_;
    std::vector<std::vector<FiniteWeight>> by_depth_;
};

/// Raised when a composition input was not built out to the requested horizon.
struct HorizonError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Level-1 set for the fundamental weight with the given node index: the
/// dominant solutions of the depth equation, depth by depth.
PermutationWeightSet pweights_fundamental(int node, Int horizon, const AlgebraContext& ctx);

/// Pairwise sums of members (iterated left to right), kept when the norm law
/// assigns them an integral depth within the horizon.  For strictly dominant
/// targets, candidates with repeated coordinates are dropped (they carry
/// signature zero and cancel).
PermutationWeightSet pweights_compose(std::span<const PermutationWeightSet> parts, Int horizon,
                                      const AlgebraContext& ctx);

/// Maximal dominant weight class: a dominant finite weight that can head a
/// string, with the depth offset of its highest occurrence.
struct MaximalClass {
    FiniteWeight finite;
    Int offset = 0;  // lowest depth at which the class occurs
};

/// All dominant finite weights of label sum <= level in the congruence class
/// of the source, each with its depth offset, sorted by offset.
std::vector<MaximalClass> maximal_classes(const AffineDominant& source, const AlgebraContext& ctx);

/// Persistent JSON cache, one file per (rank, labels).  I/O failures are
/// recorded, never fatal: computation falls back to memory.
class PWeightsCache {
public:
    PWeightsCache() = default;  // disabled
    explicit PWeightsCache(std::filesystem::path directory);

    bool enabled() const { return enabled_; }
    const std::string& last_error() const { return last_error_; }
    bool had_error() const { return !last_error_.empty(); }
    void clear_error() { last_error_.clear(); }

    std::optional<PermutationWeightSet> load(const AffineDominant& source, Int horizon,
                                             const AlgebraContext& ctx);
    void store(const PermutationWeightSet& set, const AlgebraContext& ctx);

    static std::filesystem::path default_directory();

private:
    std::filesystem::path file_for(const AffineDominant& source) const;

    std::filesystem::path dir_;
    bool enabled_ = false;
    std::string last_error_;
};

/// JSON form used for both the cache files and --format json output.
std::string pweights_to_json(const PermutationWeightSet& set, const AlgebraContext& ctx);
PermutationWeightSet pweights_from_json(const std::string& text, const AlgebraContext& ctx);

/// Dispatch: fundamental sources solve the depth equation directly, composite
/// sources compose the multiset of fundamentals given by their labels.
PermutationWeightSet pweights(const AffineDominant& source, Int horizon, const AlgebraContext& ctx,
                              PWeightsCache* cache = nullptr);

}  // namespace pwlie
