#pragma once

#include <optional>
#include <vector>

#include "pwlie/pweights.hpp"
#include "pwlie/weightlattice.hpp"

namespace pwlie {

/// Residue/quotient split c_I + shift = s_I + modulus * n_I of a weight's
/// coordinates, taken on the zero-sum representative: the unique all-ones
/// shift for which some residue vanishes and the quotients sum to zero.
struct SignatureDecomposition {
    std::vector<Int> s;  // residues, 0 <= s_I < modulus
    std::vector<Int> n;  // quotients, sum zero
    Int modulus = 0;
    Int shift = 0;
};

/// Decomposition for the given modulus, or nullopt when no shift satisfies
/// the normalization (possible only for moduli other than the level).
std::optional<SignatureDecomposition> signature_decompose(const FiniteWeight& w, Int modulus,
                                                          const AlgebraContext& ctx);

/// Extended signature of a strictly dominant weight at the given level: the
/// determinant of the affine Weyl element mapping its orbit's strictly
/// dominant source onto it; 0 when a coordinate pair collides modulo the
/// level (the stabilizer is nontrivial and the orbit contribution cancels).
///
/// With the default modulus (the level) this equals the parity of the
/// permutation sorting the residues of the zero-sum representative into
/// decreasing order; the quotient signs drop out because the quotients sum
/// to zero.  Other moduli are accepted for comparison runs and are not
/// guaranteed to reproduce determinants.
int signature_index(const FiniteWeight& w, Int level, const AlgebraContext& ctx,
                    std::optional<Int> modulus = std::nullopt);

/// The same residue/quotient index read directly off the first N canonical
/// coordinates, without the zero-sum normalization.  Kept for the recorded
/// comparison against the Weyl-group oracle; disagrees with determinants in
/// small cases whenever the level differs from N+1.
int signature_index_printed(const FiniteWeight& w, Int modulus, const AlgebraContext& ctx);

/// Statistics of a signed enumeration run.
struct SignedPWeightsStats {
    std::size_t zero_signatures = 0;  // members whose signature vanished
};

/// Members of the orbit slices of a strictly dominant source, each paired
/// with its signature; zero-signature members are dropped (and counted).
std::vector<std::vector<SignedWeight>> signed_pweights(const AffineDominant& source, Int horizon,
                                                       const AlgebraContext& ctx,
                                                       PWeightsCache* cache = nullptr,
                                                       SignedPWeightsStats* stats = nullptr);

}  // namespace pwlie
