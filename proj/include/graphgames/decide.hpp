#pragma once

// Membership in the weak source-digraph polytope and in the set of weakly
// causal correlations, in O(n^2) rational operations.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "graphgames/correlations.hpp"
#include "graphgames/digraphs.hpp"
#include "graphgames/inequalities.hpp"
#include "graphgames/ratlin.hpp"

namespace graphgames {

/// An entry outside [0, 1]. `coordinate` indexes q, or (p0, p1) concatenated.
struct TrivialWitness {
    std::size_t coordinate = 0;
    Arc arc;
    bool upper = false;
    Rational value;
    bool operator==(const TrivialWitness&) const = default;
};

/// The in-weight maximizers f(r) = argmax_s q_{s,r}; alpha(kappa_f) . q > n - 1.
struct KefalopodaWitness {
    VertexMap f;
    bool operator==(const KefalopodaWitness&) const = default;
};

using Witness = std::variant<std::monostate, TrivialWitness, KefalopodaWitness>;

struct Decision {
    bool accepted = false;
    /// Sum of the per-receiver maxima; 0 when a trivial inequality rejected first.
    Rational score;
    Witness witness;
};

/// The inequality a rejection points at, in digraph space.
inline std::optional<DigraphInequality> violated_inequality(int n, const Decision& d)
{
    if (const auto* t = std::get_if<TrivialWitness>(&d.witness))
        return t->upper ? trivial_upper_inequality(n, t->arc) : trivial_lower_inequality(n, t->arc);
    if (const auto* k = std::get_if<KefalopodaWitness>(&d.witness))
        return kefalopoda_inequality(n, k->f);
    return std::nullopt;
}

namespace detail {

inline std::optional<TrivialWitness> first_out_of_range(int n, const RatVector& v)
{
    const ArcIndexing idx(n);
    const std::size_t d = idx.dimension();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0)
            return TrivialWitness{i, idx.arc(i % d), false, v[i]};
        if (v[i] > 1)
            return TrivialWitness{i, idx.arc(i % d), true, v[i]};
    }
    return std::nullopt;
}

} // namespace detail

inline Decision weak_source_digraph(int n, const RatVector& q)
{
    if (n < 2)
        throw std::invalid_argument("weak_source_digraph: need n >= 2");
    const ArcIndexing idx(n);
    if (q.size() != idx.dimension())
        throw std::invalid_argument("weak_source_digraph: expected a vector of length " + std::to_string(idx.dimension()));
    if (auto t = detail::first_out_of_range(n, q))
        return {false, Rational(0), *t};

    Decision out;
    VertexMap f(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        int best = r == 0 ? 1 : 0;
        for (int s = best + 1; s < n; ++s)
            if (s != r && q[idx.index(s, r)] > q[idx.index(best, r)])
                best = s;
        f[static_cast<std::size_t>(r)] = best;
        out.score += q[idx.index(best, r)];
    }
    out.accepted = out.score <= n - 1;
    if (!out.accepted)
        out.witness = KefalopodaWitness{std::move(f)};
    return out;
}

/// Entries outside [0, 1] reject on the first offending coordinate of (p0, p1).
inline Decision weakly_causal_correlations(int n, const RatVector& p0, const RatVector& p1)
{
    if (n < 2)
        throw std::invalid_argument("weakly_causal_correlations: need n >= 2");
    const std::size_t d = ArcIndexing(n).dimension();
    if (p0.size() != d || p1.size() != d)
        throw std::invalid_argument("weakly_causal_correlations: expected vectors of length " + std::to_string(d));
    RatVector flat = p0;
    flat.insert(flat.end(), p1.begin(), p1.end());
    if (auto t = detail::first_out_of_range(n, flat))
        return {false, Rational(0), *t};
    return weak_source_digraph(n, project_abs_diff(CorrelationVector(n, p0, p1)));
}

inline Decision weakly_causal_correlations(const CorrelationVector& p)
{
    return weak_source_digraph(p.order(), project_abs_diff(p));
}

} // namespace graphgames
