#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pwlie {

using Int = long long;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Finite algebra A_N.  Weights are written in the basis of N+1 fundamental
/// weights mu_1..mu_{N+1} which sum to zero, so coordinate vectors are only
/// defined modulo a common all-ones shift.  The finite Weyl group acts by
/// permuting coordinates.
class AlgebraContext {
public:
    explicit AlgebraContext(int rank);

    int rank() const { return rank_; }   // N
    int dim() const { return rank_ + 1; }

private:
    int rank_;
};

/// Integer coordinate vector in the mu basis, kept in canonical form:
/// min coordinate equal to zero.
class FiniteWeight {
public:
    FiniteWeight() = default;
    explicit FiniteWeight(std::vector<Int> coords);

    static FiniteWeight zero(const AlgebraContext& ctx);

    const std::vector<Int>& coords() const { return c_; }
    Int coord(std::size_t i) const { return c_[i]; }
    int dim() const { return static_cast<int>(c_.size()); }

    bool is_zero() const;
    bool is_dominant() const;           // non-increasing coordinates
    bool is_strictly_dominant() const;  // strictly decreasing coordinates
    Int coord_sum() const;

    friend bool operator==(const FiniteWeight& a, const FiniteWeight& b) { return a.c_ == b.c_; }
    friend bool operator!=(const FiniteWeight& a, const FiniteWeight& b) { return a.c_ != b.c_; }
    // lexicographic on coordinates; output listings sort with std::greater
    friend bool operator<(const FiniteWeight& a, const FiniteWeight& b) { return a.c_ < b.c_; }
    friend bool operator>(const FiniteWeight& a, const FiniteWeight& b) { return b < a; }

    friend FiniteWeight operator+(const FiniteWeight& a, const FiniteWeight& b);

private:
    std::vector<Int> c_;
};

/// Symmetric bilinear form (mu_I, mu_J) = delta_IJ - 1/(N+1).  Shift invariant
/// in both arguments.
Rational inner(const FiniteWeight& a, const FiniteWeight& b, const AlgebraContext& ctx);

/// (N+1) * inner(a, b): exact integer, handy for divisibility filters.
Int inner_scaled(const FiniteWeight& a, const FiniteWeight& b, const AlgebraContext& ctx);

/// Dynkin labels a_i = c_i - c_{i+1}, i = 1..N.
std::vector<Int> to_dynkin(const FiniteWeight& w);
FiniteWeight from_dynkin(std::span<const Int> labels);

/// Sorts coordinates into dominant (non-increasing) order.  The parity is the
/// sign of the sorting permutation, or 0 when coordinates repeat (the
/// stabilizer contains a transposition).
std::pair<FiniteWeight, int> dominant_representative(const FiniteWeight& w);

/// Congruence class (sum of coordinates) mod N+1; two weights are congruent
/// exactly when their difference lies in the root lattice.
int class_of(const FiniteWeight& w, const AlgebraContext& ctx);

/// Image under the diagram automorphism (reversed Dynkin labels).
FiniteWeight conjugate(const FiniteWeight& w);

class AffineDominant;

FiniteWeight weyl_vector(const AlgebraContext& ctx);            // (N, N-1, ..., 1, 0)
AffineDominant affine_weyl_vector(const AlgebraContext& ctx);   // all labels 1

/// Affine weight of positive level written relative to a depth-0 reference:
/// the physical weight is  level * Lambda_0 - depth * delta + finite part.
struct AffineWeight {
    Int level = 0;
    Int depth = 0;
    FiniteWeight finite;
};

/// Dominant weight of the affine algebra, stored by its labels a_0..a_N.
/// All marks of the extended diagram equal one, so the level is the label sum.
class AffineDominant {
public:
    AffineDominant(const AlgebraContext& ctx, std::vector<Int> labels);

    const std::vector<Int>& labels() const { return labels_; }
    Int level() const { return level_; }
    int rank() const { return static_cast<int>(labels_.size()) - 1; }
    FiniteWeight finite_part() const;
    bool is_strictly_dominant() const;  // every label >= 1

    friend bool operator==(const AffineDominant& a, const AffineDominant& b) {
        return a.labels_ == b.labels_;
    }
    friend AffineDominant operator+(const AffineDominant& a, const AffineDominant& b);

private:
    std::vector<Int> labels_;
    Int level_ = 0;
};

/// Strictly dominant weight paired with its signature.
struct SignedWeight {
    FiniteWeight weight;
    int sign = 0;

    friend bool operator==(const SignedWeight& a, const SignedWeight& b) {
        return a.sign == b.sign && a.weight == b.weight;
    }
    friend bool operator<(const SignedWeight& a, const SignedWeight& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.sign < b.sign;
    }
};

/// Display form "(p1,...,pN)_d": the first N canonical coordinates with the
/// depth as subscript; the trailing zero coordinate is dropped.
std::string display(const FiniteWeight& w, Int depth);

/// Parses "(p1,...,pN)_d" back into (weight, depth).  Throws
/// std::invalid_argument on malformed input.
std::pair<FiniteWeight, Int> parse_display(const std::string& text, const AlgebraContext& ctx);

/// Comma-separated integers ("1,0,0,0,0,0").
std::vector<Int> parse_int_list(const std::string& text);

}  // namespace pwlie
