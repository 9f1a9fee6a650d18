#include "pwlie/weylkac.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pwlie {

LhsSystem::LhsSystem(AffineDominant source, std::vector<MaximalClass> classes,
                     std::vector<PermutationWeightSet> class_sets, OrbitSumCache sums,
                     Int horizon)
    : source_(std::move(source)),
      classes_(std::move(classes)),
      sets_(std::move(class_sets)),
      sums_(std::move(sums)),
      horizon_(horizon) {}

std::vector<LhsSystem::Term> LhsSystem::terms(Int J) const {
    std::vector<Term> out;
    for (std::size_t j = 0; j < classes_.size(); ++j) {
        for (Int m = 0; m <= J; ++m) {
            if (J - m < classes_[j].offset) continue;  // coefficient is zero there
            if (sums_.P[j][m].is_zero()) continue;
            out.push_back({j, J - m, &sums_.P[j][m]});
        }
    }
    return out;
}

LhsSystem lhs_coefficient_matrix(const AffineDominant& source, Int horizon,
                                 const AlgebraContext& ctx, const Specialization& spec,
                                 PWeightsCache* cache) {
    std::vector<MaximalClass> classes = maximal_classes(source, ctx);
    const Int level = source.level();

    std::vector<PermutationWeightSet> sets;
    OrbitSumCache sums;
    sets.reserve(classes.size());
    sums.P.resize(classes.size());
    for (std::size_t j = 0; j < classes.size(); ++j) {
        std::vector<Int> labels(ctx.dim(), 0);
        std::vector<Int> dynkin = to_dynkin(classes[j].finite);
        Int finite_sum = 0;
        for (int i = 0; i < ctx.rank(); ++i) {
            labels[i + 1] = dynkin[i];
            finite_sum += dynkin[i];
        }
        labels[0] = level - finite_sum;
        AffineDominant head(ctx, labels);
        sets.push_back(pweights(head, horizon, ctx, cache));
        sums.P[j].resize(horizon + 1);
        for (Int m = 0; m <= horizon; ++m) {
            LaurentPoly acc;
            for (const FiniteWeight& w : sets[j].at_depth(m)) acc += orbit_sum(w, spec);
            sums.P[j][m] = std::move(acc);
        }
    }
    return LhsSystem(source, std::move(classes), std::move(sets), std::move(sums), horizon);
}

QSeries rhs_series(const AffineDominant& source, Int horizon, const AlgebraContext& ctx,
                   const Specialization& spec, PWeightsCache* cache) {
    AffineDominant rho = affine_weyl_vector(ctx);
    AffineDominant shifted = rho + source;
    auto numerator_slices = signed_pweights(shifted, horizon, ctx, cache);
    auto denominator_slices = signed_pweights(rho, horizon, ctx, cache);

    SchurContext schur_ctx(ctx, spec);
    FiniteWeight rho_bar = weyl_vector(ctx);

    auto alternant = [&](const std::vector<std::vector<SignedWeight>>& slices) {
        QSeries series(horizon);
        for (Int d = 0; d <= horizon; ++d) {
            LaurentPoly acc;
            for (const SignedWeight& sw : slices[d]) {
                std::vector<Int> parts(ctx.dim());
                for (int i = 0; i < ctx.dim(); ++i)
                    parts[i] = sw.weight.coord(i) - rho_bar.coord(i);
                LaurentPoly s = schur_ctx.schur(parts);
                if (sw.sign < 0) s *= Rational(-1);
                acc += s;
            }
            series.set_coeff(d, std::move(acc));
        }
        return series;
    };

    QSeries numerator = alternant(numerator_slices);
    QSeries denominator = alternant(denominator_slices);
    return numerator / denominator;
}

StringFunctionTable::StringFunctionTable(AffineDominant source, Int horizon,
                                         std::vector<StringFunction> strings)
    : source_(std::move(source)), horizon_(horizon), strings_(std::move(strings)) {}

Int StringFunctionTable::coefficient(std::size_t class_index, Int M) const {
    const StringFunction& sf = strings_.at(class_index);
    if (M < sf.cls.offset) return 0;
    if (M > horizon_) throw HorizonError("string coefficient beyond the solved horizon");
    return sf.coeffs[M - sf.cls.offset];
}

StringSolution::StringSolution(StringFunctionTable table, LhsSystem lhs, QSeries rhs)
    : table_(std::move(table)), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

LaurentPoly StringSolution::left_side(Int J) const {
    LaurentPoly acc;
    for (const auto& term : lhs_.terms(J)) {
        Int c = table_.coefficient(term.class_index, term.order);
        if (c == 0) continue;
        LaurentPoly contrib = *term.poly;
        contrib *= Rational(c);
        acc += contrib;
    }
    return acc;
}

LaurentPoly StringSolution::residual(Int J) const { return left_side(J) - rhs_.coeff(J); }

Int StringSolution::multiplicity(const AffineWeight& weight, const AlgebraContext& ctx) const {
    if (weight.level != lhs_.source().level())
        throw std::invalid_argument("weight level differs from the source level");
    if (weight.depth < 0) throw std::invalid_argument("depth must be non-negative");
    if (weight.depth > table_.horizon())
        throw HorizonError("weight depth beyond the solved horizon");

    FiniteWeight rep = dominant_representative(weight.finite).first;
    if (class_of(rep, ctx) != class_of(lhs_.source().finite_part(), ctx)) return 0;

    const Int k = weight.level;
    for (std::size_t j = 0; j < lhs_.classes().size(); ++j) {
        const FiniteWeight& head = lhs_.classes()[j].finite;
        Int num = inner_scaled(rep, rep, ctx) - inner_scaled(head, head, ctx);
        Int denom = 2 * k * ctx.dim();
        if (num < 0 || num % denom != 0) continue;
        Int m = num / denom;
        if (m > table_.horizon()) continue;
        const auto& slice = lhs_.class_sets()[j].at_depth(m);
        if (!std::binary_search(slice.begin(), slice.end(), rep, std::greater<>())) continue;
        Int order = weight.depth - m;
        if (order < lhs_.classes()[j].offset) return 0;
        return table_.coefficient(j, order);
    }
    return 0;
}

namespace {

std::string poly_brief(const LaurentPoly& p) {
    std::ostringstream os;
    os << p.str();
    return os.str();
}

}  // namespace

StringSolution solve_strings(const AffineDominant& source, Int horizon, const AlgebraContext& ctx,
                             const Specialization& spec, PWeightsCache* cache) {
    LhsSystem lhs = lhs_coefficient_matrix(source, horizon, ctx, spec, cache);
    QSeries rhs = rhs_series(source, horizon, ctx, spec, cache);

    const auto& classes = lhs.classes();
    std::vector<std::vector<Int>> coeffs(classes.size());  // c_j(offset..horizon)
    auto coefficient = [&](std::size_t j, Int M) -> Int {
        if (M < classes[j].offset) return 0;
        return coeffs[j][M - classes[j].offset];
    };

    for (Int J = 0; J <= horizon; ++J) {
        // move the known lower orders to the right-hand side
        LaurentPoly b = rhs.coeff(J);
        for (const auto& term : lhs.terms(J)) {
            if (term.order == J) continue;
            Int c = coefficient(term.class_index, term.order);
            if (c == 0) continue;
            LaurentPoly contrib = *term.poly;
            contrib *= Rational(c);
            b -= contrib;
        }

        std::vector<std::size_t> active;
        for (std::size_t j = 0; j < classes.size(); ++j)
            if (classes[j].offset <= J) active.push_back(j);

        // one equation per kappa exponent
        std::set<Int> exponents;
        for (std::size_t j : active)
            for (const auto& [e, c] : lhs.orbit_sums().P[j][0].terms()) exponents.insert(e);
        for (const auto& [e, c] : b.terms()) exponents.insert(e);

        std::vector<Int> expo(exponents.begin(), exponents.end());
        std::vector<std::vector<Rational>> rows(expo.size(),
                                                std::vector<Rational>(active.size() + 1));
        for (std::size_t r = 0; r < expo.size(); ++r) {
            for (std::size_t a = 0; a < active.size(); ++a)
                rows[r][a] = lhs.orbit_sums().P[active[a]][0].coeff(expo[r]);
            rows[r][active.size()] = b.coeff(expo[r]);
        }

        // Gauss-Jordan over the rationals; the system is overdetermined and
        // every equation must be satisfied exactly
        std::size_t pivot_row = 0;
        std::vector<std::size_t> pivot_of_col(active.size());
        for (std::size_t col = 0; col < active.size(); ++col) {
            std::size_t sel = pivot_row;
            while (sel < rows.size() && rows[sel][col] == 0) ++sel;
            if (sel == rows.size()) {
                std::ostringstream os;
                os << "order " << J << ": no pivot for class "
                   << display(classes[active[col]].finite, classes[active[col]].offset)
                   << "; try another specialization (--spec)";
                throw SolveError(SolveError::Kind::RankDeficient, J, os.str());
            }
            std::swap(rows[sel], rows[pivot_row]);
            Rational inv = Rational(1) / rows[pivot_row][col];
            for (auto& v : rows[pivot_row]) v *= inv;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == pivot_row || rows[r][col] == 0) continue;
                Rational f = rows[r][col];
                for (std::size_t cidx = 0; cidx <= active.size(); ++cidx)
                    rows[r][cidx] -= f * rows[pivot_row][cidx];
            }
            pivot_of_col[col] = pivot_row;
            ++pivot_row;
        }
        for (std::size_t r = pivot_row; r < rows.size(); ++r) {
            if (rows[r][active.size()] != 0) {
                std::ostringstream os;
                os << "order " << J << ": inconsistent system, residual "
                   << rows[r][active.size()].str() << " (likely at kappa exponent " << expo[r]
                   << ")";
                throw SolveError(SolveError::Kind::Inconsistent, J, os.str());
            }
        }

        for (std::size_t a = 0; a < active.size(); ++a) {
            Rational value = rows[pivot_of_col[a]][active.size()];
            if (boost::multiprecision::denominator(value) != 1) {
                std::ostringstream os;
                os << "order " << J << ": non-integral coefficient " << value.str()
                   << " for class " << display(classes[active[a]].finite, classes[active[a]].offset);
                throw SolveError(SolveError::Kind::NonIntegral, J, os.str());
            }
            BigInt nval = boost::multiprecision::numerator(value);
            if (nval < 0) {
                std::ostringstream os;
                os << "order " << J << ": negative coefficient " << value.str() << " for class "
                   << display(classes[active[a]].finite, classes[active[a]].offset);
                throw SolveError(SolveError::Kind::Negative, J, os.str());
            }
            coeffs[active[a]].push_back(static_cast<Int>(nval));
        }
    }

    std::vector<StringFunction> strings;
    for (std::size_t j = 0; j < classes.size(); ++j) strings.push_back({classes[j], coeffs[j]});
    StringSolution solution(StringFunctionTable(source, horizon, std::move(strings)),
                            std::move(lhs), std::move(rhs));

    // full residual audit: the solved identity must hold exactly
    for (Int J = 0; J <= horizon; ++J) {
        LaurentPoly res = solution.residual(J);
        if (!res.is_zero())
            throw SolveError(SolveError::Kind::Inconsistent, J,
                             "order " + std::to_string(J) + ": nonzero residual " +
                                 poly_brief(res));
    }
    return solution;
}

StringSolution solve_strings(const AffineDominant& source, Int horizon, const AlgebraContext& ctx,
                             PWeightsCache* cache) {
    return solve_strings(source, horizon, ctx, Specialization::default_for(ctx), cache);
}

}  // namespace pwlie
