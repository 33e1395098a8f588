#pragma once

// Exact rational scalars, vectors and the linear-algebra kernels used by the
// rest of the library: matrix rank, affine rank and convex-hull feasibility.
// Nothing in here touches floating point.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace graphgames {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

/// Parses `-?digits` or `-?digits/digits` into a canonical rational.
inline Rational rat_parse(std::string_view text)
{
    auto digits_only = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    const std::string original(text);
    bool negative = false;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den))
        throw std::invalid_argument("malformed rational: \"" + original + "\"");
    BigInt n{std::string(num)};
    BigInt d{std::string(den)};
    if (d == 0)
        throw std::invalid_argument("zero denominator: \"" + original + "\"");
    if (negative)
        n = -n;
    return Rational(n, d);
}

/// Canonical text form; integers omit the "/1".
inline std::string to_string(const Rational& r)
{
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

/// Display-only decimal rendering; never feed this back into a computation.
inline std::string to_decimal(const Rational& r, int digits = 6)
{
    BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    std::string out = num < 0 ? "-" : "";
    num = abs(num);
    out += BigInt(num / den).str();
    BigInt rem = num % den;
    if (digits > 0)
        out += '.';
    for (int i = 0; i < digits; ++i) {
        rem *= 10;
        out += static_cast<char>('0' + static_cast<int>(BigInt(rem / den)));
        rem %= den;
    }
    return out;
}

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: dimension mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero())
            acc += a[i] * b[i];
    return acc;
}

inline BigInt lcm_of_denominators(std::span<const Rational> row)
{
    BigInt l = 1;
    for (const auto& x : row)
        l = boost::multiprecision::lcm(l, BigInt(boost::multiprecision::denominator(x)));
    return l;
}

/// Row scaled to integers by the lcm of its denominators.
inline std::vector<BigInt> integer_row(std::span<const Rational> row)
{
    const BigInt l = lcm_of_denominators(row);
    std::vector<BigInt> out;
    out.reserve(row.size());
    for (const auto& x : row)
        out.push_back(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x)));
    return out;
}

/// Matrix rank by fraction-free (Bareiss) elimination on the integer-scaled rows.
inline std::size_t rank(const RatMatrix& m)
{
    if (m.empty())
        return 0;
    const std::size_t cols = m.front().size();
    std::vector<std::vector<BigInt>> a;
    a.reserve(m.size());
    for (const auto& row : m) {
        if (row.size() != cols)
            throw std::invalid_argument("rank: matrix is not rectangular");
        a.push_back(integer_row(row));
    }
    const std::size_t rows = a.size();
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && a[p][col] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = (a[r][col] * a[i][j] - a[i][col] * a[r][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[r][col];
        ++r;
    }
    return r;
}

/// Dimension of the affine hull of `points`.
inline std::size_t affine_rank(std::span<const RatVector> points)
{
    if (points.empty())
        throw std::invalid_argument("affine_rank: empty point set");
    const std::size_t dim = points.front().size();
    RatMatrix diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].size() != dim)
            throw std::invalid_argument("affine_rank: mixed dimensions");
        RatVector row(dim);
        for (std::size_t j = 0; j < dim; ++j)
            row[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(row));
    }
    return rank(diffs);
}

/// Affine rank maintained point by point over integer vectors. Rows are kept in
/// fraction-free echelon form and divided by their content after every update.
class IncrementalAffineRank {
public:
    explicit IncrementalAffineRank(std::size_t dimension) : dim_(dimension) {}

    /// Returns true iff the point raised the affine rank.
    bool add(std::span<const std::int64_t> point)
    {
        if (point.size() != dim_)
            throw std::invalid_argument("IncrementalAffineRank: dimension mismatch");
        if (!origin_) {
            origin_.emplace(point.begin(), point.end());
            return false;
        }
        std::vector<BigInt> v(dim_);
        for (std::size_t j = 0; j < dim_; ++j)
            v[j] = point[j] - (*origin_)[j];
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            const std::size_t c = pivots_[k];
            if (v[c] == 0)
                continue;
            const BigInt a = basis_[k][c];
            const BigInt b = v[c];
            for (std::size_t j = 0; j < dim_; ++j)
                v[j] = a * v[j] - b * basis_[k][j];
            normalize(v);
        }
        const auto it = std::find_if(v.begin(), v.end(), [](const BigInt& x) { return x != 0; });
        if (it == v.end())
            return false;
        pivots_.push_back(static_cast<std::size_t>(it - v.begin()));
        basis_.push_back(std::move(v));
        return true;
    }

    std::size_t rank() const { return basis_.size(); }
    std::size_t dimension() const { return dim_; }

private:
    static void normalize(std::vector<BigInt>& v)
    {
        BigInt g = 0;
        for (const auto& x : v)
            if (x != 0)
                g = boost::multiprecision::gcd(g, BigInt(abs(x)));
        if (g > 1)
            for (auto& x : v)
                x /= g;
    }

    std::size_t dim_;
    std::optional<std::vector<std::int64_t>> origin_;
    std::vector<std::vector<BigInt>> basis_;
    std::vector<std::size_t> pivots_;
};

/// Convex weights expressing `point` over `generators`, if any exist.
///
/// Phase-one revised simplex on  sum_i l_i g_i = point,  sum_i l_i = 1,  l >= 0
/// with one artificial per row and an explicit basis inverse. The most negative
/// reduced cost enters until a run of degenerate pivots appears; from then on
/// Bland's rule (lowest eligible index enters, ties in the ratio test leave by
/// lowest basic index) takes over for good, so the method terminates. All
/// arithmetic is exact.
inline std::optional<RatVector> hull_combination(const RatVector& point, std::span<const RatVector> generators)
{
    const std::size_t dim = point.size();
    for (const auto& g : generators)
        if (g.size() != dim)
            throw std::invalid_argument("hull_feasible: dimension mismatch");
    if (generators.empty())
        return std::nullopt;

    const std::size_t rows = dim + 1;
    const std::size_t nvars = generators.size();
    RatVector rhs(rows);
    std::vector<bool> flip(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const Rational b = i < dim ? point[i] : Rational(1);
        flip[i] = b < 0;
        rhs[i] = flip[i] ? Rational(-b) : b;
    }
    // sparse structural columns with the row signs applied; artificials are unit columns
    std::vector<std::vector<std::pair<std::size_t, Rational>>> sparse(nvars);
    for (std::size_t j = 0; j < nvars; ++j)
        for (std::size_t i = 0; i < rows; ++i) {
            const Rational a = i < dim ? generators[j][i] : Rational(1);
            if (!a.is_zero())
                sparse[j].emplace_back(i, flip[i] ? Rational(-a) : a);
        }
    auto column = [&](std::size_t j) {
        if (j < nvars)
            return sparse[j];
        return std::vector<std::pair<std::size_t, Rational>>{{j - nvars, Rational(1)}};
    };

    RatMatrix binv(rows, RatVector(rows));
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        binv[i][i] = 1;
        basis[i] = nvars + i;
    }
    RatVector x = rhs;
    const std::size_t cols = nvars + rows;
    bool bland = false;
    std::size_t degenerate_run = 0;

    for (;;) {
        // duals y = c_B B^-1 with cost 1 on artificials
        RatVector y(rows);
        for (std::size_t k = 0; k < rows; ++k)
            if (basis[k] >= nvars)
                for (std::size_t i = 0; i < rows; ++i)
                    if (!binv[k][i].is_zero())
                        y[i] += binv[k][i];

        std::size_t enter = cols;
        Rational reduced, most_negative;
        for (std::size_t j = 0; j < nvars; ++j) {
            reduced = 0;
            for (const auto& [i, a] : sparse[j])
                if (!y[i].is_zero())
                    reduced -= y[i] * a;
            if (reduced < 0 && (enter == cols || reduced < most_negative)) {
                enter = j;
                most_negative = reduced;
                if (bland)
                    break;
            }
        }
        for (std::size_t i = 0; i < rows && enter == cols; ++i)
            if (y[i] > 1)
                enter = nvars + i;
        if (enter == cols)
            break;

        RatVector col(rows);
        for (const auto& [i, a] : column(enter))
            for (std::size_t k = 0; k < rows; ++k)
                if (!binv[k][i].is_zero())
                    col[k] += binv[k][i] * a;

        std::size_t leave = rows;
        Rational best;
        for (std::size_t k = 0; k < rows; ++k) {
            if (col[k] <= 0)
                continue;
            Rational ratio = x[k] / col[k];
            if (leave == rows || ratio < best || (ratio == best && basis[k] < basis[leave])) {
                leave = k;
                best = std::move(ratio);
            }
        }
        if (leave == rows)
            break; // cannot happen: phase one is bounded below by zero

        degenerate_run = best.is_zero() ? degenerate_run + 1 : 0;
        if (degenerate_run > 2 * rows)
            bland = true;

        const Rational piv = col[leave];
        for (auto& v : binv[leave])
            if (!v.is_zero())
                v /= piv;
        x[leave] /= piv;
        for (std::size_t k = 0; k < rows; ++k) {
            if (k == leave || col[k].is_zero())
                continue;
            const Rational f = col[k];
            for (std::size_t i = 0; i < rows; ++i)
                if (!binv[leave][i].is_zero())
                    binv[k][i] -= f * binv[leave][i];
            x[k] -= f * x[leave];
        }
        basis[leave] = enter;
    }

    RatVector lambda(nvars);
    for (std::size_t k = 0; k < rows; ++k) {
        if (basis[k] < nvars)
            lambda[basis[k]] = x[k];
        else if (!x[k].is_zero())
            return std::nullopt;
    }
    return lambda;
}

inline bool hull_feasible(const RatVector& point, std::span<const RatVector> generators)
{
    return hull_combination(point, generators).has_value();
}

} // namespace graphgames
