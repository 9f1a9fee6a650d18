#include "pwlie/weightlattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pwlie {

AlgebraContext::AlgebraContext(int rank) : rank_(rank) {
    if (rank < 1) throw std::invalid_argument("algebra rank must be at least 1");
}

FiniteWeight::FiniteWeight(std::vector<Int> coords) : c_(std::move(coords)) {
    if (c_.empty()) throw std::invalid_argument("weight needs at least one coordinate");
    Int m = *std::min_element(c_.begin(), c_.end());
    if (m != 0)
        for (Int& x : c_) x -= m;
}

FiniteWeight FiniteWeight::zero(const AlgebraContext& ctx) {
    return FiniteWeight(std::vector<Int>(ctx.dim(), 0));
}

bool FiniteWeight::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](Int x) { return x == 0; });
}

bool FiniteWeight::is_dominant() const {
    return std::is_sorted(c_.rbegin(), c_.rend());
}

bool FiniteWeight::is_strictly_dominant() const {
    for (std::size_t i = 0; i + 1 < c_.size(); ++i)
        if (c_[i] <= c_[i + 1]) return false;
    return true;
}

Int FiniteWeight::coord_sum() const {
    return std::accumulate(c_.begin(), c_.end(), Int{0});
}

FiniteWeight operator+(const FiniteWeight& a, const FiniteWeight& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("weight dimension mismatch");
    std::vector<Int> s(a.c_.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = a.c_[i] + b.c_[i];
    return FiniteWeight(std::move(s));
}

static void check_dims(const FiniteWeight& a, const FiniteWeight& b, const AlgebraContext& ctx) {
    if (a.dim() != ctx.dim() || b.dim() != ctx.dim())
        throw std::invalid_argument("weight dimension mismatch");
}

Int inner_scaled(const FiniteWeight& a, const FiniteWeight& b, const AlgebraContext& ctx) {
    check_dims(a, b, ctx);
    Int dot = 0;
    for (int i = 0; i < ctx.dim(); ++i) dot += a.coord(i) * b.coord(i);
    return static_cast<Int>(ctx.dim()) * dot - a.coord_sum() * b.coord_sum();
}

Rational inner(const FiniteWeight& a, const FiniteWeight& b, const AlgebraContext& ctx) {
    return Rational(inner_scaled(a, b, ctx), ctx.dim());
}

std::vector<Int> to_dynkin(const FiniteWeight& w) {
    std::vector<Int> labels(w.dim() - 1);
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(w.dim()); ++i)
        labels[i] = w.coord(i) - w.coord(i + 1);
    return labels;
}

FiniteWeight from_dynkin(std::span<const Int> labels) {
    std::vector<Int> c(labels.size() + 1, 0);
    for (std::size_t i = labels.size(); i-- > 0;) c[i] = c[i + 1] + labels[i];
    return FiniteWeight(std::move(c));
}

std::pair<FiniteWeight, int> dominant_representative(const FiniteWeight& w) {
    std::vector<Int> c = w.coords();
    // selection sort into non-increasing order, tracking swap parity
    int parity = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::size_t best = i;
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (c[j] > c[best]) best = j;
        if (best != i) {
            std::swap(c[i], c[best]);
            parity = -parity;
        }
    }
    bool repeats = false;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i] == c[i + 1]) repeats = true;
    return {FiniteWeight(std::move(c)), repeats ? 0 : parity};
}

int class_of(const FiniteWeight& w, const AlgebraContext& ctx) {
    if (w.dim() != ctx.dim()) throw std::invalid_argument("weight dimension mismatch");
    Int m = w.coord_sum() % ctx.dim();
    if (m < 0) m += ctx.dim();
    return static_cast<int>(m);
}

FiniteWeight conjugate(const FiniteWeight& w) {
    std::vector<Int> c(w.coords().rbegin(), w.coords().rend());
    for (Int& x : c) x = -x;
    return FiniteWeight(std::move(c));
}

FiniteWeight weyl_vector(const AlgebraContext& ctx) {
    std::vector<Int> c(ctx.dim());
    for (int i = 0; i < ctx.dim(); ++i) c[i] = ctx.rank() - i;
    return FiniteWeight(std::move(c));
}

AffineDominant affine_weyl_vector(const AlgebraContext& ctx) {
    return AffineDominant(ctx, std::vector<Int>(ctx.dim(), 1));
}

AffineDominant::AffineDominant(const AlgebraContext& ctx, std::vector<Int> labels)
    : labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) != ctx.dim())
        throw std::invalid_argument("expected N+1 affine labels");
    for (Int a : labels_)
        if (a < 0) throw std::invalid_argument("affine labels must be non-negative");
    level_ = std::accumulate(labels_.begin(), labels_.end(), Int{0});
    if (level_ < 1) throw std::invalid_argument("affine weight must have positive level");
}

FiniteWeight AffineDominant::finite_part() const {
    // coordinate I of sum a_i lambda_i is the tail sum a_I + ... + a_N
    std::vector<Int> coords(labels_.size(), 0);
    for (std::size_t i = labels_.size() - 1; i-- > 0;)
        coords[i] = coords[i + 1] + labels_[i + 1];
    return FiniteWeight(std::move(coords));
}

bool AffineDominant::is_strictly_dominant() const {
    return std::all_of(labels_.begin(), labels_.end(), [](Int a) { return a >= 1; });
}

AffineDominant operator+(const AffineDominant& a, const AffineDominant& b) {
    if (a.labels_.size() != b.labels_.size())
        throw std::invalid_argument("affine label length mismatch");
    std::vector<Int> s(a.labels_.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = a.labels_[i] + b.labels_[i];
    AlgebraContext ctx(static_cast<int>(s.size()) - 1);
    return AffineDominant(ctx, std::move(s));
}

std::string display(const FiniteWeight& w, Int depth) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i + 1 < w.dim(); ++i) {
        if (i) os << ',';
        os << w.coord(i);
    }
    os << ")_" << depth;
    return os.str();
}

std::pair<FiniteWeight, Int> parse_display(const std::string& text, const AlgebraContext& ctx) {
    auto fail = [&]() { throw std::invalid_argument("malformed weight entry: " + text); };
    std::size_t close = text.find(')');
    if (text.empty() || text.front() != '(' || close == std::string::npos) fail();
    std::string body = text.substr(1, close - 1);
    std::string tail = text.substr(close + 1);
    if (tail.size() < 2 || tail[0] != '_') fail();
    Int depth = 0;
    try {
        std::size_t used = 0;
        depth = std::stoll(tail.substr(1), &used);
        if (used != tail.size() - 1) fail();
    } catch (const std::invalid_argument&) {
        fail();
    }
    std::vector<Int> coords;
    std::string token;
    std::istringstream is(body);
    while (std::getline(is, token, ',')) {
        if (token.empty()) fail();
        std::size_t used = 0;
        coords.push_back(std::stoll(token, &used));
        if (used != token.size()) fail();
    }
    if (static_cast<int>(coords.size()) != ctx.rank()) fail();
    coords.push_back(0);
    if (depth < 0) fail();
    return {FiniteWeight(std::move(coords)), depth};
}

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        if (token.empty()) throw std::invalid_argument("empty entry in integer list");
        std::size_t used = 0;
        out.push_back(std::stoll(token, &used));
        if (used != token.size())
            throw std::invalid_argument("malformed integer list entry: " + token);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

}  // namespace pwlie
