#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pwlie/weightlattice.hpp"

namespace pwlie {

/// Exact Laurent polynomial in a single variable kappa with rational
/// coefficients.  No zero coefficients are stored.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly monomial(Int exponent, Rational coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    Rational coeff(Int exponent) const;
    Int min_degree() const;  // requires non-zero
    Int max_degree() const;
    const std::map<Int, Rational>& terms() const { return terms_; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    LaurentPoly& operator*=(const Rational& s);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    void add_term(Int exponent, const Rational& coeff);

    Rational eval_at_one() const;
    LaurentPoly inverted_variable() const;  // kappa -> 1/kappa
    /// Multiplicative inverse; defined only for monomials.
    LaurentPoly inverse() const;

    std::string str() const;  // e.g. "k^2 + 4 + k^-2"
    nlohmann::json to_json() const;
    static LaurentPoly from_json(const nlohmann::json& j);

private:
    std::map<Int, Rational> terms_;
};

/// Truncated power series in q with LaurentPoly coefficients, orders 0..K.
class QSeries {
public:
    explicit QSeries(Int truncation_order);

    Int order() const { return order_; }
    const LaurentPoly& coeff(Int j) const;
    void set_coeff(Int j, LaurentPoly p);

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    /// Truncated quotient; the divisor's q^0 coefficient must be an
    /// invertible Laurent polynomial (a single monomial).
    friend QSeries operator/(const QSeries& a, const QSeries& b);

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }

private:
    Int order_;
    std::vector<LaurentPoly> c_;
};

/// Exponent assignment u_I = kappa^{t_I} with sum t_I = 0, which keeps the
/// product of all u variables equal to one.
class Specialization {
public:
    explicit Specialization(std::vector<Int> exponents);
    static Specialization default_for(const AlgebraContext& ctx);  // (1,-1,0,...,0)

    int dim() const { return static_cast<int>(t_.size()); }
    Int exponent(std::size_t i) const { return t_[i]; }
    const std::vector<Int>& exponents() const { return t_; }

private:
    std::vector<Int> t_;
};

/// Character of the finite Weyl orbit of a dominant weight: the sum of
/// kappa^{sum_I t_I c_{pi(I)}} over distinct arrangements pi of the
/// coordinate multiset.  Computed by multinomial counting over the values
/// placed at the support of the specialization, never by expanding the orbit.
LaurentPoly orbit_sum(const FiniteWeight& w, const Specialization& spec);

/// Power sum K_q = sum_I u_I^q.
LaurentPoly power_sum_value(Int q, const Specialization& spec);

/// Cached specialized symmetric-function values: power-sum variables
/// x_q = K_q / q, complete homogeneous polynomials in them (classical Schur
/// values), their sign-flipped companions, and the extension valid under the
/// product-one constraint.  Caches grow on demand; build before sharing
/// across threads.
class SchurContext {
public:
    SchurContext(const AlgebraContext& ctx, Specialization spec);

    int rank() const { return rank_; }
    const Specialization& specialization() const { return spec_; }

    const LaurentPoly& power_sum_x(Int q);   // x_q, q >= 1
    const LaurentPoly& classical(Int q);     // S_q, q >= 0
    const LaurentPoly& starred(Int q);       // S*_q = S_q with x -> -x, q <= N+1
    const LaurentPoly& degenerated(Int q);   // S_q under prod(u) = 1

    /// Specialized character of the irreducible with the given partition
    /// (at most N+1 parts): det[ S_{q_i - i + j} ] over degenerated values.
    LaurentPoly schur(std::span<const Int> partition);

private:
    int rank_;
    Specialization spec_;
    std::vector<LaurentPoly> x_;       // x_[q], index 0 unused
    std::vector<LaurentPoly> cls_;     // classical S_q
    std::vector<LaurentPoly> star_;    // S*_q, q = 0..N+1
    std::vector<LaurentPoly> deg_;     // degenerated S_q
};

/// prod_{j > i} (kappa^{t_i} - kappa^{t_j}); identically zero when two
/// exponents coincide.
LaurentPoly vandermonde(const Specialization& spec);

}  // namespace pwlie
