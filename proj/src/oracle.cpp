#include "pwlie/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace pwlie {

namespace {

// minimum of k x^2 + 2 a x over the integers
Int int_parabola_min(Int k, Int a) {
    double x = -static_cast<double>(a) / k;
    Int lo = static_cast<Int>(std::floor(x)), hi = lo + 1;
    Int vlo = k * lo * lo + 2 * a * lo, vhi = k * hi * hi + 2 * a * hi;
    return std::min(vlo, vhi);
}

}  // namespace

TranslationBall translation_ball(const AffineDominant& source, Int horizon,
                                 const AlgebraContext& ctx, const OracleLimits& limits) {
    const int dim = ctx.dim();
    const Int k = source.level();
    FiniteWeight head = source.finite_part();

    // twice the depth of the translate by b is sum_I (k b_I^2 + 2 head_I b_I)
    // over zero-sum b; scan a conservative box and filter exactly
    std::vector<Int> tail_min(dim + 1, 0);
    for (int i = dim - 1; i >= 0; --i)
        tail_min[i] = tail_min[i + 1] + int_parabola_min(k, head.coord(i));

    const Int budget = 2 * horizon;
    Int nodes = 0;
    TranslationBall ball;
    std::vector<Int> b(dim, 0);

    std::function<void(int, Int, Int)> dfs = [&](int i, Int partial, Int sum) {
        if (++nodes > limits.max_search_nodes)
            throw ResourceLimitError("translation ball search exceeded the configured size limit");
        if (i == dim - 1) {
            Int last = -sum;  // zero-sum constraint fixes the final coordinate
            Int total = partial + k * last * last + 2 * head.coord(i) * last;
            if (total <= budget && total >= 0 && total % 2 == 0) {
                b[i] = last;
                ball.betas.push_back(b);
            }
            return;
        }
        // range where this coordinate alone stays within budget
        Int slack = budget - partial - (tail_min[i + 1] + int_parabola_min(k, head.coord(i)));
        if (slack < 0) return;
        double a = head.coord(i);
        double disc = std::sqrt(a * a + static_cast<double>(k) * (budget - partial -
                                                                  tail_min[i + 1]) + 1.0);
        Int lo = static_cast<Int>(std::floor((-a - disc) / k)) - 1;
        Int hi = static_cast<Int>(std::ceil((-a + disc) / k)) + 1;
        for (Int v = lo; v <= hi; ++v) {
            Int contrib = k * v * v + 2 * head.coord(i) * v;
            if (partial + contrib + tail_min[i + 1] > budget) continue;
            b[i] = v;
            dfs(i + 1, partial + contrib, sum + v);
        }
        b[i] = 0;
    };
    dfs(0, 0, 0);
    return ball;
}

std::vector<std::vector<SignedWeight>> orbit_bruteforce(const AffineDominant& source, Int horizon,
                                                        const AlgebraContext& ctx,
                                                        const OracleLimits& limits) {
    const Int k = source.level();
    FiniteWeight head = source.finite_part();
    TranslationBall ball = translation_ball(source, horizon, ctx, limits);

    std::vector<std::map<FiniteWeight, int, std::greater<FiniteWeight>>> found(horizon + 1);
    for (const auto& b : ball.betas) {
        std::vector<Int> coords(ctx.dim());
        Int depth2 = 0;
        for (int i = 0; i < ctx.dim(); ++i) {
            coords[i] = head.coord(i) + k * b[i];
            depth2 += k * b[i] * b[i] + 2 * head.coord(i) * b[i];
        }
        if (depth2 < 0 || depth2 % 2 != 0) continue;
        Int d = depth2 / 2;
        if (d > horizon) continue;
        auto [rep, parity] = dominant_representative(FiniteWeight(std::move(coords)));
        auto [it, inserted] = found[d].emplace(std::move(rep), parity);
        if (!inserted && it->second != parity) it->second = 0;  // reached with both parities
    }

    std::vector<std::vector<SignedWeight>> out(horizon + 1);
    for (Int d = 0; d <= horizon; ++d)
        for (const auto& [w, sign] : found[d]) out[d].push_back({w, sign});
    return out;
}

std::vector<Int> string_by_counting(Int horizon) {
    if (horizon < 0) throw std::invalid_argument("horizon must be non-negative");
    std::vector<Int> p(horizon + 1, 0);
    p[0] = 1;
    for (Int n = 1; n <= horizon; ++n) {
        Int sum = 0;
        for (Int j = 1;; ++j) {
            Int g1 = j * (3 * j - 1) / 2;
            Int g2 = j * (3 * j + 1) / 2;
            if (g1 > n && g2 > n) break;
            Int sign = (j % 2 == 1) ? 1 : -1;
            if (g1 <= n) sum += sign * p[n - g1];
            if (g2 <= n) sum += sign * p[n - g2];
        }
        p[n] = sum;
    }
    return p;
}

std::string diff_report(const std::vector<std::vector<SignedWeight>>& oracle_side,
                        const std::vector<std::vector<SignedWeight>>& main_side,
                        bool compare_signs) {
    std::ostringstream os;
    std::size_t depths = std::max(oracle_side.size(), main_side.size());
    for (std::size_t d = 0; d < depths; ++d) {
        auto describe = [&](const SignedWeight& sw) {
            os << display(sw.weight, static_cast<Int>(d));
            if (compare_signs) os << " sign " << sw.sign;
            os << "\n";
        };
        const auto empty = std::vector<SignedWeight>{};
        const auto& a = d < oracle_side.size() ? oracle_side[d] : empty;
        const auto& b = d < main_side.size() ? main_side[d] : empty;
        auto key = [&](const SignedWeight& sw) {
            return compare_signs ? std::make_pair(sw.weight, sw.sign)
                                 : std::make_pair(sw.weight, 0);
        };
        for (const auto& sw : a) {
            bool matched = std::any_of(b.begin(), b.end(),
                                       [&](const SignedWeight& o) { return key(o) == key(sw); });
            if (!matched) {
                os << "only in oracle: ";
                describe(sw);
            }
        }
        for (const auto& sw : b) {
            bool matched = std::any_of(a.begin(), a.end(),
                                       [&](const SignedWeight& o) { return key(o) == key(sw); });
            if (!matched) {
                os << "only in main path: ";
                describe(sw);
            }
        }
    }
    return os.str();
}

}  // namespace pwlie
