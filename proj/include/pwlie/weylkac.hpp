#pragma once

#include <string>
#include <vector>

#include "pwlie/polyalg.hpp"
#include "pwlie/pweights.hpp"
#include "pwlie/signatures.hpp"
#include "pwlie/weightlattice.hpp"

namespace pwlie {

/// Hard failures of the order-by-order solve.  Every one aborts the run and
/// carries the offending order and a residual description.
struct SolveError : std::runtime_error {
    enum class Kind { Inconsistent, NonIntegral, Negative, RankDeficient };

    SolveError(Kind kind_, Int order_, const std::string& what_)
        : std::runtime_error(what_), kind(kind_), order(order_) {}

    Kind kind;
    Int order;
};

/// Specialized orbit characters, one polynomial per (maximal class, relative
/// depth): P[j][m] sums orbit_sum over the depth-m slice of class j.
struct OrbitSumCache {
    std::vector<std::vector<LaurentPoly>> P;
};

/// The orbit-sum expansion of the character: for every order J the identity
///   LEFT_J = sum_j sum_{m=0}^{J} P[j][m] * c_j(J - m),
/// a linear form in the string coefficients.  (A weight at absolute depth J
/// whose dominant representative sits in the depth-m slice of class j is
/// Weyl-equivalent to that class head at depth J - m.)
class LhsSystem {
public:
    LhsSystem(AffineDominant source, std::vector<MaximalClass> classes,
              std::vector<PermutationWeightSet> class_sets, OrbitSumCache sums, Int horizon);

    struct Term {
        std::size_t class_index;
        Int order;                // which c_j(order) this term multiplies
        const LaurentPoly* poly;  // P[j][m]
    };

    const AffineDominant& source() const { return source_; }
    Int horizon() const { return horizon_; }
    const std::vector<MaximalClass>& classes() const { return classes_; }
    const std::vector<PermutationWeightSet>& class_sets() const { return sets_; }
    const OrbitSumCache& orbit_sums() const { return sums_; }
    std::vector<Term> terms(Int J) const;

private:
    AffineDominant source_;
    std::vector<MaximalClass> classes_;
    std::vector<PermutationWeightSet> sets_;
    OrbitSumCache sums_;
    Int horizon_;
};

LhsSystem lhs_coefficient_matrix(const AffineDominant& source, Int horizon,
                                 const AlgebraContext& ctx, const Specialization& spec,
                                 PWeightsCache* cache = nullptr);

/// Truncated quotient of the signed alternant expansions for the shifted
/// source and for the Weyl vector.  The Vandermonde prefactor cancels
/// between the two and is never evaluated.
QSeries rhs_series(const AffineDominant& source, Int horizon, const AlgebraContext& ctx,
                   const Specialization& spec, PWeightsCache* cache = nullptr);

/// One solved string: the class head with its offset and the coefficients
/// c(M) for M = offset..horizon.
struct StringFunction {
    MaximalClass cls;
    std::vector<Int> coeffs;
};

class StringFunctionTable {
public:
    StringFunctionTable(AffineDominant source, Int horizon, std::vector<StringFunction> strings);

    const AffineDominant& source() const { return source_; }
    Int horizon() const { return horizon_; }
    const std::vector<StringFunction>& strings() const { return strings_; }
    /// c_j(M); zero below the offset, throws beyond the horizon
    Int coefficient(std::size_t class_index, Int M) const;

private:
    AffineDominant source_;
    Int horizon_;
    std::vector<StringFunction> strings_;
};

/// Solved table plus the machinery retained for multiplicity queries and
/// residual audits.
class StringSolution {
public:
    StringSolution(StringFunctionTable table, LhsSystem lhs, QSeries rhs);

    const StringFunctionTable& table() const { return table_; }
    const LhsSystem& lhs() const { return lhs_; }
    const QSeries& rhs() const { return rhs_; }

    /// LEFT_J rebuilt from the solved coefficients.
    LaurentPoly left_side(Int J) const;
    /// LEFT_J - RIGHT_J; identically zero for a valid solution.
    LaurentPoly residual(Int J) const;

    /// Multiplicity of an affine weight of the source's level: locate the
    /// dominant representative of its finite part in a class slice and read
    /// the string coefficient at the depth difference.
    Int multiplicity(const AffineWeight& weight, const AlgebraContext& ctx) const;

private:
    StringFunctionTable table_;
    LhsSystem lhs_;
    QSeries rhs_;
};

/// Order-by-order exact solve of LEFT_J = RIGHT_J for the string
/// coefficients; asserts consistency, integrality and non-negativity.
StringSolution solve_strings(const AffineDominant& source, Int horizon, const AlgebraContext& ctx,
                             const Specialization& spec, PWeightsCache* cache = nullptr);

/// Same, with the default specialization.
StringSolution solve_strings(const AffineDominant& source, Int horizon, const AlgebraContext& ctx,
                             PWeightsCache* cache = nullptr);

}  // namespace pwlie
