#include "pwlie/signatures.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pwlie {

namespace {

Int pos_mod(Int v, Int m) {
    Int r = v % m;
    return r < 0 ? r + m : r;
}

// sign of the permutation sorting v into strictly decreasing order,
// 0 on repeated entries
int sort_parity(std::vector<Int> v) {
    int parity = 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::size_t best = i;
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[j] > v[best]) best = j;
        if (best != i) {
            std::swap(v[i], v[best]);
            parity = -parity;
        }
    }
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] == v[i + 1]) return 0;
    return parity;
}

}  // namespace

std::optional<SignatureDecomposition> signature_decompose(const FiniteWeight& w, Int modulus,
                                                          const AlgebraContext& ctx) {
    if (w.dim() != ctx.dim()) throw std::invalid_argument("weight dimension mismatch");
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    const auto& c = w.coords();
    const Int dim = ctx.dim();
    const Int csum = w.coord_sum();

    // candidate shifts make one coordinate's residue vanish; the quotient-sum
    // condition then pins the shift completely, so at most one candidate works
    std::set<Int> candidates;
    for (Int ci : c) candidates.insert(pos_mod(-ci, modulus));
    for (Int t0 : candidates) {
        Int rsum = 0;
        for (Int ci : c) rsum += pos_mod(ci + t0, modulus);
        Int num = rsum - csum;
        if (num % dim != 0) continue;
        Int t = num / dim;
        if (pos_mod(t - t0, modulus) != 0) continue;
        SignatureDecomposition dec;
        dec.modulus = modulus;
        dec.shift = t;
        dec.s.resize(c.size());
        dec.n.resize(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            dec.s[i] = pos_mod(c[i] + t, modulus);
            dec.n[i] = (c[i] + t - dec.s[i]) / modulus;
        }
        return dec;
    }
    return std::nullopt;
}

int signature_index(const FiniteWeight& w, Int level, const AlgebraContext& ctx,
                    std::optional<Int> modulus) {
    if (level < 1) throw std::invalid_argument("level must be positive");
    if (!w.is_strictly_dominant())
        throw std::invalid_argument("signature index requires a strictly dominant weight");
    const Int m = modulus.value_or(level);

    auto dec = signature_decompose(w, m, ctx);
    if (!dec) return 0;
    int parity = sort_parity(dec->s);
    if (parity == 0) return 0;
    // product of (-1)^{n_I} is +1: the quotients sum to zero by construction
    return parity;
}

int signature_index_printed(const FiniteWeight& w, Int modulus, const AlgebraContext& ctx) {
    if (w.dim() != ctx.dim()) throw std::invalid_argument("weight dimension mismatch");
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    if (!w.is_strictly_dominant())
        throw std::invalid_argument("signature index requires a strictly dominant weight");
    std::vector<Int> s(ctx.rank()), n(ctx.rank());
    for (int i = 0; i < ctx.rank(); ++i) {
        s[i] = pos_mod(w.coord(i), modulus);
        n[i] = (w.coord(i) - s[i]) / modulus;
    }
    int parity = sort_parity(s);
    if (parity == 0) return 0;
    Int nsum = std::accumulate(n.begin(), n.end(), Int{0});
    return (nsum % 2 == 0) ? parity : -parity;
}

std::vector<std::vector<SignedWeight>> signed_pweights(const AffineDominant& source, Int horizon,
                                                       const AlgebraContext& ctx,
                                                       PWeightsCache* cache,
                                                       SignedPWeightsStats* stats) {
    if (!source.is_strictly_dominant())
        throw std::invalid_argument("signed enumeration requires a strictly dominant source");
    PermutationWeightSet set = pweights(source, horizon, ctx, cache);
    const Int k = source.level();

    std::vector<std::vector<SignedWeight>> out(horizon + 1);
    for (Int d = 0; d <= horizon; ++d) {
        for (const FiniteWeight& w : set.at_depth(d)) {
            int sign = signature_index(w, k, ctx);
            if (sign == 0) {
                if (stats) stats->zero_signatures += 1;
                continue;
            }
            out[d].push_back({w, sign});
        }
    }
    return out;
}

}  // namespace pwlie
