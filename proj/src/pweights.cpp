#include "pwlie/pweights.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pwlie {

namespace {

Int isqrt_floor(Int v) {
    if (v <= 0) return 0;
    Int r = static_cast<Int>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// exact minimum of a sum of `steps` squared integer jumps descending from h to 0
Int min_descent(Int h, Int steps) {
    if (steps <= 0) return h == 0 ? 0 : std::numeric_limits<Int>::max() / 4;
    Int q = h / steps, rem = h % steps;
    return (steps - rem) * q * q + rem * (q + 1) * (q + 1);
}

}  // namespace

std::vector<DepthSolution> solve_depth_equation(std::span<const Int> p, Int k, Int d) {
    if (k < 1) throw std::invalid_argument("level must be positive");
    if (d < 0) throw std::invalid_argument("depth must be non-negative");
    for (Int pi : p)
        if (pi < 0) throw std::invalid_argument("labels must be non-negative");

    const int n = static_cast<int>(p.size());
    const Int target2 = 2 * k * d;  // twice the quadratic form
    FiniteWeight source = from_dynkin(p);

    std::vector<DepthSolution> out;
    std::vector<Int> r(n, 0);

    // 2 Q(r; p) = sum of squared jumps of the path 0, r_1, ..., r_N, 0
    // plus 2 sum p_i r_i; prune on the exact minimal completion.
    std::function<void(int, Int, Int)> dfs = [&](int i, Int prev, Int acc) {
        if (i > n) {
            if (acc + prev * prev == target2) {
                std::vector<Int> coords(n + 1);
                Int before = 0;
                for (int j = 0; j < n; ++j) {
                    coords[j] = source.coord(j) + r[j] - before;
                    before = r[j];
                }
                coords[n] = source.coord(n) - before;
                out.push_back({r, FiniteWeight(std::move(coords)), d});
            }
            return;
        }
        Int headroom = target2 - acc;
        if (headroom < 0) return;
        Int vmax = prev + isqrt_floor(headroom);
        for (Int v = 0; v <= vmax; ++v) {
            Int jump = prev - v;
            Int acc2 = acc + jump * jump + 2 * p[i - 1] * v;
            if (acc2 + min_descent(v, n + 1 - i) > target2) continue;
            r[i - 1] = v;
            dfs(i + 1, v, acc2);
        }
        r[i - 1] = 0;
    };
    dfs(1, 0, 0);
    return out;
}

PermutationWeightSet::PermutationWeightSet(AffineDominant source, Int horizon,
                                           std::vector<std::vector<FiniteWeight>> by_depth)
    : source_(std::move(source)), horizon_(horizon), by_depth_(std::move(by_depth)) {
    if (horizon_ < 0) throw std::invalid_argument("horizon must be non-negative");
    by_depth_.resize(horizon_ + 1);
    for (auto& lst : by_depth_) std::sort(lst.begin(), lst.end(), std::greater<>());
}

const std::vector<FiniteWeight>& PermutationWeightSet::at_depth(Int d) const {
    if (d < 0 || d > horizon_) throw std::out_of_range("depth beyond horizon");
    return by_depth_[d];
}

std::size_t PermutationWeightSet::total_size() const {
    std::size_t n = 0;
    for (const auto& lst : by_depth_) n += lst.size();
    return n;
}

PermutationWeightSet PermutationWeightSet::truncated(Int new_horizon) const {
    if (new_horizon > horizon_) throw HorizonError("cannot extend a set by truncation");
    std::vector<std::vector<FiniteWeight>> slice(by_depth_.begin(),
                                                 by_depth_.begin() + new_horizon + 1);
    return PermutationWeightSet(source_, new_horizon, std::move(slice));
}

PermutationWeightSet pweights_fundamental(int node, Int horizon, const AlgebraContext& ctx) {
    if (node < 0 || node > ctx.rank())
        throw std::invalid_argument("fundamental node index out of range");
    std::vector<Int> labels(ctx.dim(), 0);
    labels[node] = 1;
    AffineDominant source(ctx, labels);

    std::vector<Int> p(ctx.rank(), 0);
    if (node >= 1) p[node - 1] = 1;

    std::vector<std::vector<FiniteWeight>> by_depth(horizon + 1);
    for (Int d = 0; d <= horizon; ++d)
        for (auto& sol : solve_depth_equation(p, 1, d))
            if (sol.weight.is_dominant()) by_depth[d].push_back(sol.weight);
    return PermutationWeightSet(std::move(source), horizon, std::move(by_depth));
}

namespace {

PermutationWeightSet compose_pair(const PermutationWeightSet& a, const PermutationWeightSet& b,
                                  Int horizon, const AlgebraContext& ctx) {
    AffineDominant target = a.source() + b.source();
    const Int k = target.level();
    FiniteWeight head = target.finite_part();
    const Int head_norm = inner_scaled(head, head, ctx);
    const Int denom = 2 * k * ctx.dim();
    const bool strict = target.is_strictly_dominant();

    std::vector<std::set<FiniteWeight, std::greater<FiniteWeight>>> found(horizon + 1);
    for (Int da = 0; da <= horizon; ++da) {
        for (const FiniteWeight& wa : a.at_depth(da)) {
            for (Int db = 0; db <= horizon; ++db) {
                for (const FiniteWeight& wb : b.at_depth(db)) {
                    FiniteWeight cand = wa + wb;
                    if (strict && !cand.is_strictly_dominant()) continue;
                    Int num = inner_scaled(cand, cand, ctx) - head_norm;
                    if (num < 0 || num % denom != 0) continue;
                    Int d = num / denom;
                    if (d > horizon) continue;
                    found[d].insert(std::move(cand));
                }
            }
        }
    }
    std::vector<std::vector<FiniteWeight>> by_depth(horizon + 1);
    for (Int d = 0; d <= horizon; ++d)
        by_depth[d].assign(found[d].begin(), found[d].end());
    return PermutationWeightSet(std::move(target), horizon, std::move(by_depth));
}

}  // namespace

PermutationWeightSet pweights_compose(std::span<const PermutationWeightSet> parts, Int horizon,
                                      const AlgebraContext& ctx) {
    if (parts.empty()) throw std::invalid_argument("nothing to compose");
    for (const auto& part : parts)
        if (part.horizon() < horizon)
            throw HorizonError("composition input not built out to the requested horizon");
    PermutationWeightSet acc = parts[0].truncated(horizon);
    for (std::size_t i = 1; i < parts.size(); ++i)
        acc = compose_pair(acc, parts[i], horizon, ctx);
    return acc;
}

std::vector<MaximalClass> maximal_classes(const AffineDominant& source,
                                          const AlgebraContext& ctx) {
    const Int k = source.level();
    FiniteWeight head = source.finite_part();
    const int cls = class_of(head, ctx);
    const int n = ctx.rank();

    std::vector<MaximalClass> out;
    std::vector<Int> labels(n, 0);
    std::function<void(int, Int)> enumerate = [&](int i, Int remaining) {
        if (i == n) {
            FiniteWeight cand = from_dynkin(labels);
            if (class_of(cand, ctx) != cls) return;
            // solve cand - head = sum r_i alpha_i; integral because the
            // congruence classes match
            Int diff_sum = cand.coord_sum() - head.coord_sum();
            Int shift = -diff_sum / ctx.dim();
            Int run = 0, max_r = 0;
            for (int j = 0; j < n; ++j) {
                run += cand.coord(j) - head.coord(j) + shift;
                max_r = std::max(max_r, run);
            }
            out.push_back({cand, max_r});
            return;
        }
        for (Int v = 0; v <= remaining; ++v) {
            labels[i] = v;
            enumerate(i + 1, remaining - v);
        }
        labels[i] = 0;
    };
    enumerate(0, k);

    std::sort(out.begin(), out.end(), [](const MaximalClass& a, const MaximalClass& b) {
        if (a.offset != b.offset) return a.offset < b.offset;
        return a.finite > b.finite;
    });
    return out;
}

std::string pweights_to_json(const PermutationWeightSet& set, const AlgebraContext& ctx) {
    nlohmann::json j;
    j["rank"] = ctx.rank();
    j["labels"] = set.source().labels();
    j["level"] = set.source().level();
    j["horizon"] = set.horizon();
    nlohmann::json depths = nlohmann::json::object();
    for (Int d = 0; d <= set.horizon(); ++d) {
        nlohmann::json lst = nlohmann::json::array();
        for (const FiniteWeight& w : set.at_depth(d)) lst.push_back(w.coords());
        depths[std::to_string(d)] = std::move(lst);
    }
    j["depths"] = std::move(depths);
    return j.dump(1);
}

PermutationWeightSet pweights_from_json(const std::string& text, const AlgebraContext& ctx) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("rank").get<int>() != ctx.rank())
        throw std::invalid_argument("cached set has a different rank");
    AffineDominant source(ctx, j.at("labels").get<std::vector<Int>>());
    if (j.at("level").get<Int>() != source.level())
        throw std::invalid_argument("cached level disagrees with labels");
    Int horizon = j.at("horizon").get<Int>();
    std::vector<std::vector<FiniteWeight>> by_depth(horizon + 1);
    const auto& depths = j.at("depths");
    for (Int d = 0; d <= horizon; ++d) {
        auto it = depths.find(std::to_string(d));
        if (it == depths.end()) continue;
        for (const auto& coords : *it) {
            FiniteWeight w(coords.get<std::vector<Int>>());
            if (w.dim() != ctx.dim()) throw std::invalid_argument("cached weight has wrong size");
            by_depth[d].push_back(std::move(w));
        }
    }
    return PermutationWeightSet(std::move(source), horizon, std::move(by_depth));
}

PWeightsCache::PWeightsCache(std::filesystem::path directory)
    : dir_(std::move(directory)), enabled_(true) {}

std::filesystem::path PWeightsCache::default_directory() {
    if (const char* env = std::getenv("PWLIE_CACHE")) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return std::filesystem::path(xdg) / "pwlie";
    if (const char* home = std::getenv("HOME"))
        return std::filesystem::path(home) / ".cache" / "pwlie";
    return std::filesystem::temp_directory_path() / "pwlie-cache";
}

std::filesystem::path PWeightsCache::file_for(const AffineDominant& source) const {
    std::ostringstream name;
    name << "pw_rank" << source.rank() << "_";
    for (std::size_t i = 0; i < source.labels().size(); ++i) {
        if (i) name << "-";
        name << source.labels()[i];
    }
    name << ".json";
    return dir_ / name.str();
}

std::optional<PermutationWeightSet> PWeightsCache::load(const AffineDominant& source, Int horizon,
                                                        const AlgebraContext& ctx) {
    if (!enabled_) return std::nullopt;
    auto path = file_for(source);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return std::nullopt;
    std::ifstream in(path);
    if (!in) {
        last_error_ = "cache file unreadable: " + path.string();
        return std::nullopt;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        PermutationWeightSet set = pweights_from_json(buffer.str(), ctx);
        if (!(set.source() == source) || set.horizon() < horizon) return std::nullopt;
        return set.truncated(horizon);
    } catch (const std::exception&) {
        // corrupted entries are recomputed, never trusted
        return std::nullopt;
    }
}

void PWeightsCache::store(const PermutationWeightSet& set, const AlgebraContext& ctx) {
    if (!enabled_) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    auto path = file_for(set.source());
    // keep the widest horizon computed so far
    if (std::filesystem::exists(path, ec)) {
        std::ifstream in(path);
        if (in) {
            std::stringstream buffer;
            buffer << in.rdbuf();
            try {
                PermutationWeightSet old = pweights_from_json(buffer.str(), ctx);
                if (old.source() == set.source() && old.horizon() >= set.horizon()) return;
            } catch (const std::exception&) {
            }
        }
    }
    std::ofstream outf(path, std::ios::trunc);
    if (!outf) {
        last_error_ = "cannot write cache file: " + path.string();
        return;
    }
    outf << pweights_to_json(set, ctx);
    if (!outf.good()) last_error_ = "failed writing cache file: " + path.string();
}

PermutationWeightSet pweights(const AffineDominant& source, Int horizon,
                              const AlgebraContext& ctx, PWeightsCache* cache) {
    if (cache) {
        if (auto hit = cache->load(source, horizon, ctx)) return *hit;
    }
    PermutationWeightSet result = [&]() {
        if (source.level() == 1) {
            int node = 0;
            for (int i = 0; i <= ctx.rank(); ++i)
                if (source.labels()[i] == 1) node = i;
            return pweights_fundamental(node, horizon, ctx);
        }
        std::vector<PermutationWeightSet> parts;
        std::vector<std::optional<PermutationWeightSet>> fundamentals(ctx.dim());
        for (int node = 0; node <= ctx.rank(); ++node) {
            for (Int copy = 0; copy < source.labels()[node]; ++copy) {
                if (!fundamentals[node])
                    fundamentals[node] = pweights_fundamental(node, horizon, ctx);
                parts.push_back(*fundamentals[node]);
            }
        }
        return pweights_compose(parts, horizon, ctx);
    }();
    if (cache) cache->store(result, ctx);
    return result;
}

}  // namespace pwlie
