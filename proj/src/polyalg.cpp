#include "pwlie/polyalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace pwlie {

LaurentPoly LaurentPoly::monomial(Int exponent, Rational coeff) {
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
}

Rational LaurentPoly::coeff(Int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

Int LaurentPoly::min_degree() const {
    if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
    return terms_.begin()->first;
}

Int LaurentPoly::max_degree() const {
    if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(Int exponent, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Rational LaurentPoly::eval_at_one() const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

LaurentPoly LaurentPoly::inverted_variable() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
}

LaurentPoly LaurentPoly::inverse() const {
    if (!is_monomial()) throw std::domain_error("only monomials are invertible");
    const auto& [e, c] = *terms_.begin();
    return monomial(-e, Rational(1) / c);
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "k";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

nlohmann::json LaurentPoly::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, c] : terms_) j[std::to_string(e)] = c.str();
    return j;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
    LaurentPoly p;
    for (auto it = j.begin(); it != j.end(); ++it)
        p.add_term(std::stoll(it.key()), Rational(it.value().get<std::string>()));
    return p;
}

QSeries::QSeries(Int truncation_order) : order_(truncation_order) {
    if (order_ < 0) throw std::invalid_argument("truncation order must be non-negative");
    c_.resize(order_ + 1);
}

const LaurentPoly& QSeries::coeff(Int j) const {
    if (j < 0 || j > order_) throw std::out_of_range("series order out of range");
    return c_[j];
}

void QSeries::set_coeff(Int j, LaurentPoly p) {
    if (j < 0 || j > order_) throw std::out_of_range("series order out of range");
    c_[j] = std::move(p);
}

static void check_orders(const QSeries& a, const QSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series truncation mismatch");
}

QSeries& QSeries::operator+=(const QSeries& o) {
    check_orders(*this, o);
    for (Int j = 0; j <= order_; ++j) c_[j] += o.c_[j];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    check_orders(*this, o);
    for (Int j = 0; j <= order_; ++j) c_[j] -= o.c_[j];
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    check_orders(a, b);
    QSeries out(a.order_);
    for (Int i = 0; i <= a.order_; ++i)
        for (Int j = 0; i + j <= a.order_; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    return out;
}

QSeries operator/(const QSeries& a, const QSeries& b) {
    check_orders(a, b);
    LaurentPoly lead_inv = b.c_[0].inverse();  // throws unless invertible
    QSeries out(a.order_);
    for (Int j = 0; j <= a.order_; ++j) {
        LaurentPoly acc = a.c_[j];
        for (Int i = 0; i < j; ++i) acc -= out.c_[i] * b.c_[j - i];
        out.c_[j] = acc * lead_inv;
    }
    return out;
}

Specialization::Specialization(std::vector<Int> exponents) : t_(std::move(exponents)) {
    if (t_.size() < 2) throw std::invalid_argument("specialization needs at least two exponents");
    if (std::accumulate(t_.begin(), t_.end(), Int{0}) != 0)
        throw std::invalid_argument("specialization exponents must sum to zero");
}

Specialization Specialization::default_for(const AlgebraContext& ctx) {
    std::vector<Int> t(ctx.dim(), 0);
    t[0] = 1;
    t[1] = -1;
    return Specialization(std::move(t));
}

namespace {

Int factorial(Int n) {
    Int f = 1;
    for (Int i = 2; i <= n; ++i) f *= i;
    return f;
}

// number of distinct arrangements of the multiset with the given multiplicities
Rational arrangements(Int total, const std::vector<Int>& mult) {
    Rational r = factorial(total);
    for (Int m : mult) r /= factorial(m);
    return r;
}

}  // namespace

LaurentPoly orbit_sum(const FiniteWeight& w, const Specialization& spec) {
    if (w.dim() != spec.dim()) throw std::invalid_argument("weight/specialization size mismatch");
    if (!w.is_dominant()) throw std::invalid_argument("orbit sums take the dominant representative");

    // distinct coordinate values and multiplicities
    std::vector<Int> values;
    std::vector<Int> mult;
    for (Int c : w.coords()) {
        auto it = std::find(values.begin(), values.end(), c);
        if (it == values.end()) {
            values.push_back(c);
            mult.push_back(1);
        } else {
            mult[it - values.begin()] += 1;
        }
    }

    std::vector<std::size_t> support;
    for (int i = 0; i < spec.dim(); ++i)
        if (spec.exponent(i) != 0) support.push_back(i);

    Int free_slots = spec.dim() - static_cast<Int>(support.size());
    LaurentPoly out;
    std::vector<Int> rem = mult;

    // assign a value to each support position, then count the arrangements of
    // what is left over the unconstrained positions
    std::function<void(std::size_t, Int)> place = [&](std::size_t pos, Int exp) {
        if (pos == support.size()) {
            out.add_term(exp, arrangements(free_slots, rem));
            return;
        }
        for (std::size_t v = 0; v < values.size(); ++v) {
            if (rem[v] == 0) continue;
            rem[v] -= 1;
            place(pos + 1, exp + spec.exponent(support[pos]) * values[v]);
            rem[v] += 1;
        }
    };
    place(0, 0);
    return out;
}

LaurentPoly power_sum_value(Int q, const Specialization& spec) {
    if (q < 1) throw std::invalid_argument("power sum index must be positive");
    LaurentPoly out;
    for (int i = 0; i < spec.dim(); ++i) out.add_term(q * spec.exponent(i), 1);
    return out;
}

SchurContext::SchurContext(const AlgebraContext& ctx, Specialization spec)
    : rank_(ctx.rank()), spec_(std::move(spec)) {
    if (spec_.dim() != ctx.dim())
        throw std::invalid_argument("specialization size must be N+1");
    x_.resize(1);  // index 0 unused
    cls_.push_back(LaurentPoly::one());
    deg_.push_back(LaurentPoly::one());
    star_.push_back(LaurentPoly::one());
}

const LaurentPoly& SchurContext::power_sum_x(Int q) {
    if (q < 1) throw std::invalid_argument("power sum index must be positive");
    while (static_cast<Int>(x_.size()) <= q) {
        Int n = static_cast<Int>(x_.size());
        LaurentPoly xq = power_sum_value(n, spec_);
        xq *= Rational(1, n);
        x_.push_back(std::move(xq));
    }
    return x_[q];
}

const LaurentPoly& SchurContext::classical(Int q) {
    if (q < 0) throw std::invalid_argument("negative Schur index");
    while (static_cast<Int>(cls_.size()) <= q) {
        Int n = static_cast<Int>(cls_.size());
        // Newton: n S_n = sum_{r=1}^{n} r x_r S_{n-r}
        LaurentPoly acc;
        for (Int r = 1; r <= n; ++r) {
            LaurentPoly term = power_sum_x(r) * cls_[n - r];
            term *= Rational(r);
            acc += term;
        }
        acc *= Rational(1, n);
        cls_.push_back(std::move(acc));
    }
    return cls_[q];
}

const LaurentPoly& SchurContext::starred(Int q) {
    if (q < 0 || q > rank_ + 1)
        throw std::invalid_argument("starred Schur index must lie in 0..N+1");
    while (static_cast<Int>(star_.size()) <= q) {
        Int n = static_cast<Int>(star_.size());
        // same Newton recursion with every x_r negated
        LaurentPoly acc;
        for (Int r = 1; r <= n; ++r) {
            LaurentPoly term = power_sum_x(r) * star_[n - r];
            term *= Rational(-r);
            acc += term;
        }
        acc *= Rational(1, n);
        star_.push_back(std::move(acc));
    }
    return star_[q];
}

const LaurentPoly& SchurContext::degenerated(Int q) {
    if (q < 0) throw std::invalid_argument("negative Schur index");
    while (static_cast<Int>(deg_.size()) <= q) {
        Int n = static_cast<Int>(deg_.size());
        if (n <= rank_) {
            deg_.push_back(classical(n));
            continue;
        }
        // extension under prod(u) = 1:
        //   S_n = (-1)^N S_{n-N-1} - sum_{r=1}^{N} S*_r S_{n-r}
        LaurentPoly acc = deg_[n - rank_ - 1];
        if (rank_ % 2 != 0) acc *= Rational(-1);
        for (Int r = 1; r <= rank_; ++r) acc -= starred(r) * deg_[n - r];
        deg_.push_back(std::move(acc));
    }
    return deg_[q];
}

LaurentPoly SchurContext::schur(std::span<const Int> partition) {
    std::vector<Int> parts;
    for (Int p : partition) {
        if (p < 0) throw std::invalid_argument("partition parts must be non-negative");
        if (p > 0) parts.push_back(p);
    }
    if (!std::is_sorted(parts.rbegin(), parts.rend()))
        throw std::invalid_argument("partition must be non-increasing");
    if (static_cast<Int>(parts.size()) > rank_ + 1)
        throw std::invalid_argument("partition has more than N+1 parts");
    std::size_t s = parts.size();
    if (s == 0) return LaurentPoly::one();

    // warm the cache so the recursion below only reads
    Int top = parts[0] + static_cast<Int>(s) - 1;
    degenerated(top);

    auto entry = [&](std::size_t i, std::size_t j) -> LaurentPoly {
        Int idx = parts[i] - static_cast<Int>(i) + static_cast<Int>(j);
        if (idx < 0) return LaurentPoly::zero();
        return deg_[idx];
    };

    // Laplace expansion over column subsets, memoized: minor(i, mask) is the
    // determinant of rows i..s-1 against the columns in mask.
    std::vector<std::vector<char>> seen(s + 1, std::vector<char>(1u << s, 0));
    std::vector<std::vector<LaurentPoly>> memo(s + 1, std::vector<LaurentPoly>(1u << s));
    std::function<const LaurentPoly&(std::size_t, unsigned)> minor =
        [&](std::size_t i, unsigned mask) -> const LaurentPoly& {
        if (seen[i][mask]) return memo[i][mask];
        LaurentPoly det;
        if (i == s) {
            det = LaurentPoly::one();
        } else {
            int sign = 1;  // alternates over the columns still present
            for (std::size_t j = 0; j < s; ++j) {
                if (!(mask & (1u << j))) continue;
                LaurentPoly e = entry(i, j);
                if (!e.is_zero()) {
                    LaurentPoly term = e * minor(i + 1, mask & ~(1u << j));
                    if (sign < 0) term *= Rational(-1);
                    det += term;
                }
                sign = -sign;
            }
        }
        memo[i][mask] = std::move(det);
        seen[i][mask] = 1;
        return memo[i][mask];
    };
    return minor(0, (1u << s) - 1);
}

LaurentPoly vandermonde(const Specialization& spec) {
    LaurentPoly out = LaurentPoly::one();
    for (int i = 0; i < spec.dim(); ++i)
        for (int j = i + 1; j < spec.dim(); ++j) {
            LaurentPoly factor = LaurentPoly::monomial(spec.exponent(i), 1);
            factor -= LaurentPoly::monomial(spec.exponent(j), 1);
            out = out * factor;
            if (out.is_zero()) return out;
        }
    return out;
}

}  // namespace pwlie
