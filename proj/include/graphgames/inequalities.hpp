#pragma once

// Linear inequalities (w, c) over digraph space R^d and their lifts
// ((phi w, -phi w), c) to correlation space R^2d.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphgames/correlations.hpp"
#include "graphgames/digraphs.hpp"
#include "graphgames/ratlin.hpp"

namespace graphgames {

/// n with n(n-1) == d.
inline int order_from_dimension(std::size_t d)
{
    for (int n = 1; n <= kMaxOrder; ++n)
        if (static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) == d)
            return n;
    throw std::invalid_argument("dimension " + std::to_string(d) + " is not of the form n(n-1)");
}

struct DigraphInequality {
    RatVector weights;
    Rational bound;

    int order() const { return order_from_dimension(weights.size()); }
    std::size_t dimension() const { return weights.size(); }

    bool is_non_negative() const
    {
        for (const auto& w : weights)
            if (w < 0)
                return false;
        return true;
    }

    /// Two or more nonzero weights.
    bool is_nontrivial() const
    {
        std::size_t nz = 0;
        for (const auto& w : weights)
            nz += w.is_zero() ? 0 : 1;
        return nz >= 2;
    }

    bool operator==(const DigraphInequality&) const = default;
};

using SignVector = std::vector<int>;

struct LiftedInequality {
    /// (phi w, -phi w), length 2d.
    RatVector weights;
    Rational bound;
    DigraphInequality source;
    SignVector phi;

    std::size_t dimension() const { return weights.size(); }
    int order() const { return source.order(); }

    bool operator==(const LiftedInequality&) const = default;
};

inline Rational evaluate(const DigraphInequality& ineq, const RatVector& q)
{
    if (q.size() != ineq.weights.size())
        throw std::invalid_argument("evaluate: dimension mismatch");
    return dot(ineq.weights, q);
}

inline Rational evaluate(const LiftedInequality& ineq, const RatVector& p)
{
    if (p.size() != ineq.weights.size())
        throw std::invalid_argument("evaluate: dimension mismatch");
    return dot(ineq.weights, p);
}

inline Rational evaluate(const LiftedInequality& ineq, const CorrelationVector& p) { return evaluate(ineq, p.flat()); }

/// Strict: a point saturating the bound is not a violation.
template <class Ineq, class Point>
bool is_violated(const Ineq& ineq, const Point& p)
{
    return evaluate(ineq, p) > ineq.bound;
}

// ---------------------------------------------------------------------------
// Named families

/// (alpha(game), bound).
inline DigraphInequality game_inequality(const Digraph& game, Rational bound)
{
    return {adjacency_vector(game), std::move(bound)};
}

inline DigraphInequality cycle_inequality(int n, int k) { return game_inequality(make_cycle(n, k), Rational(k - 1)); }

inline DigraphInequality fence_inequality(int n, int k)
{
    return game_inequality(make_fence(n, k), Rational(k * k - k + 1));
}

inline DigraphInequality mobius_inequality(int n, int k)
{
    return game_inequality(make_mobius(n, k), Rational(5 * k - 1, 2));
}

inline DigraphInequality kefalopoda_inequality(int n, const VertexMap& f)
{
    return game_inequality(make_kefalopoda(n, f), Rational(n - 1));
}

/// (alpha(G), |A(G)| - 1); G must be minimally strong.
inline DigraphInequality minimally_strong_inequality(const Digraph& g)
{
    if (!is_minimally_strong(g))
        throw std::invalid_argument("minimally_strong_inequality: digraph is not minimally strong");
    return game_inequality(g, Rational(static_cast<long>(g.arc_count()) - 1));
}

inline DigraphInequality twisted_cylinder_inequality() { return game_inequality(make_twisted_cylinder(), Rational(6)); }

/// (alpha(C_n^n), n - 1).
inline DigraphInequality hamiltonian_inequality(int n) { return cycle_inequality(n, n); }

/// (-1_{i,j}, 0).
inline DigraphInequality trivial_lower_inequality(int n, Arc a)
{
    const ArcIndexing idx(n);
    RatVector w(idx.dimension());
    w[idx.index(a.from, a.to)] = -1;
    return {std::move(w), Rational(0)};
}

/// (1_{i,j}, 1).
inline DigraphInequality trivial_upper_inequality(int n, Arc a)
{
    const ArcIndexing idx(n);
    RatVector w(idx.dimension());
    w[idx.index(a.from, a.to)] = 1;
    return {std::move(w), Rational(1)};
}

enum class Family { Cycle, Fence, Mobius, Kefalopoda, MinimallyStrong, TwistedCylinder, Hamiltonian, TrivialLower, TrivialUpper };

inline std::string to_string(Family f)
{
    switch (f) {
    case Family::Cycle: return "cycle";
    case Family::Fence: return "fence";
    case Family::Mobius: return "mobius";
    case Family::Kefalopoda: return "kefalopoda";
    case Family::MinimallyStrong: return "minstrong";
    case Family::TwistedCylinder: return "twisted-cylinder";
    case Family::Hamiltonian: return "hamiltonian";
    case Family::TrivialLower: return "trivial-lower";
    case Family::TrivialUpper: return "trivial-upper";
    }
    return "?";
}

inline Family parse_family(std::string_view s)
{
    for (Family f : {Family::Cycle, Family::Fence, Family::Mobius, Family::Kefalopoda, Family::MinimallyStrong,
                     Family::TwistedCylinder, Family::Hamiltonian, Family::TrivialLower, Family::TrivialUpper})
        if (to_string(f) == s)
            return f;
    throw std::invalid_argument("unknown family: " + std::string(s));
}

struct FamilyParams {
    int n = 0;
    int k = 0;
    VertexMap f;
    Arc arc;
    std::optional<Digraph> game;
};

inline DigraphInequality family_inequality(Family family, const FamilyParams& p)
{
    switch (family) {
    case Family::Cycle: return cycle_inequality(p.n, p.k);
    case Family::Fence: return fence_inequality(p.n, p.k);
    case Family::Mobius: return mobius_inequality(p.n, p.k);
    case Family::Kefalopoda: return kefalopoda_inequality(p.n, p.f);
    case Family::MinimallyStrong:
        if (!p.game)
            throw std::invalid_argument("family_inequality: minstrong needs a digraph");
        return minimally_strong_inequality(*p.game);
    case Family::TwistedCylinder: return twisted_cylinder_inequality();
    case Family::Hamiltonian: return hamiltonian_inequality(p.n);
    case Family::TrivialLower: return trivial_lower_inequality(p.n, p.arc);
    case Family::TrivialUpper: return trivial_upper_inequality(p.n, p.arc);
    }
    throw std::invalid_argument("family_inequality: unknown family");
}

/// The same inequality on relabeled vertices: weight of (i, j) moves to (perm[i], perm[j]).
inline DigraphInequality relabel(const DigraphInequality& ineq, std::span<const int> perm)
{
    const int n = ineq.order();
    if (perm.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("relabel: permutation size mismatch");
    // validates perm
    (void)Digraph(n).relabeled(perm);
    const ArcIndexing idx(n);
    RatVector w(ineq.weights.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
        const Arc a = idx.arc(k);
        w[idx.index(perm[static_cast<std::size_t>(a.from)], perm[static_cast<std::size_t>(a.to)])] = ineq.weights[k];
    }
    return {std::move(w), ineq.bound};
}

// ---------------------------------------------------------------------------
// Lifting and rotation

inline LiftedInequality lift(const DigraphInequality& ineq)
{
    RatVector w = ineq.weights;
    for (const auto& x : ineq.weights)
        w.push_back(-x);
    return {std::move(w), ineq.bound, ineq, SignVector(ineq.weights.size(), 1)};
}

inline void check_signs(const SignVector& phi, std::size_t d)
{
    if (phi.size() != d)
        throw std::invalid_argument("sign vector has wrong length");
    for (int s : phi)
        if (s != 1 && s != -1)
            throw std::invalid_argument("sign vector entries must be +1 or -1");
}

/// Weights become (phi w, -phi w) on top of any earlier rotation.
inline LiftedInequality rotate(const LiftedInequality& lifted, const SignVector& phi)
{
    const std::size_t d = lifted.source.weights.size();
    check_signs(phi, d);
    LiftedInequality out = lifted;
    for (std::size_t i = 0; i < d; ++i) {
        out.phi[i] *= phi[i];
        const Rational w = lifted.source.weights[i] * out.phi[i];
        out.weights[i] = w;
        out.weights[d + i] = -w;
    }
    return out;
}

/// Applies flip(p, s, r) at every coordinate where phi is -1.
inline CorrelationVector flip_block(const CorrelationVector& p, const SignVector& phi)
{
    check_signs(phi, p.dimension());
    RatVector p0 = p.p0();
    RatVector p1 = p.p1();
    for (std::size_t i = 0; i < phi.size(); ++i)
        if (phi[i] == -1) {
            p0[i] = 1 - p0[i];
            p1[i] = 1 - p1[i];
        }
    return {p.order(), std::move(p0), std::move(p1)};
}

/// 1/2 + c / (2 |A|).
inline Rational test_bound(const Rational& c, std::size_t arc_count)
{
    if (arc_count == 0)
        throw std::invalid_argument("test_bound: no arcs");
    return Rational(1, 2) + c / Rational(2 * static_cast<long>(arc_count));
}

/// Xi(support(w), 1/2 + c / (2 |A|)); weights must be 0/1 with at least two ones.
inline GraphicalTest test_from_inequality(const DigraphInequality& ineq)
{
    const int n = ineq.order();
    const ArcIndexing idx(n);
    Digraph g(n);
    for (std::size_t k = 0; k < ineq.weights.size(); ++k) {
        const auto& w = ineq.weights[k];
        if (w == 1)
            g = g.with_arc(idx.arc(k));
        else if (w != 0)
            throw std::invalid_argument("test_from_inequality: weights must be 0/1");
    }
    if (g.arc_count() < 2)
        throw std::invalid_argument("test_from_inequality: inequality is trivial");
    Rational t = test_bound(ineq.bound, g.arc_count());
    return {std::move(g), std::move(t)};
}

} // namespace graphgames
