#pragma once

// Desk-scale ground truth by exhaustive enumeration: extremal points of the
// class polytopes, validity and facet certificates, tightness, hull membership,
// the brute-force weak-polytope test and the Hamiltonian vertex check.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphgames/correlations.hpp"
#include "graphgames/digraphs.hpp"
#include "graphgames/inequalities.hpp"
#include "graphgames/ratlin.hpp"

namespace graphgames {

inline constexpr int kMaxCorrelationEnumOrder = 4;
inline constexpr int kMaxWeakBruteForceOrder = 8;
inline constexpr int kMaxHamiltonianOrder = 5;
inline constexpr int kMaxCorrelationHullOrder = 3;
inline constexpr int kMaxDigraphHullOrder = 4;

/// A 0/1 correlation point as two arc masks.
struct CorrelationMask {
    ArcMask p0 = 0;
    ArcMask p1 = 0;
    auto operator<=>(const CorrelationMask&) const = default;
};

inline CorrelationVector to_correlation_vector(int n, CorrelationMask m)
{
    const std::size_t d = ArcIndexing(n).dimension();
    RatVector p0(d), p1(d);
    for (std::size_t i = 0; i < d; ++i) {
        p0[i] = (m.p0 >> i) & 1U;
        p1[i] = (m.p1 >> i) & 1U;
    }
    return {n, std::move(p0), std::move(p1)};
}

namespace detail {

/// Inequality scaled by the lcm of all denominators to  sum w_i x_i <= cap  over integers.
struct IntegerInequality {
    std::vector<std::int64_t> weights;
    std::int64_t cap = 0;
    BigInt scale = 1;

    IntegerInequality(const RatVector& w, const Rational& c)
    {
        RatVector all = w;
        all.push_back(c);
        const BigInt l = lcm_of_denominators(all);
        scale = l;
        BigInt total = 0;
        for (const auto& x : w) {
            const BigInt v = boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x));
            total += abs(v);
            weights.push_back(to_int64(v));
        }
        to_int64(total);
        cap = to_int64(boost::multiprecision::numerator(c) * (l / boost::multiprecision::denominator(c)));
    }

    std::int64_t value(std::uint64_t mask) const
    {
        std::int64_t v = 0;
        while (mask) {
            v += weights[static_cast<std::size_t>(std::countr_zero(mask))];
            mask &= mask - 1;
        }
        return v;
    }

    bool violated(std::int64_t v) const { return v > cap; }
    bool saturated(std::int64_t v) const { return v == cap; }

    static std::int64_t to_int64(const BigInt& v)
    {
        if (v > std::numeric_limits<std::int64_t>::max() / 4 || v < std::numeric_limits<std::int64_t>::min() / 4)
            throw std::overflow_error("inequality weights too large for enumeration");
        return v.convert_to<std::int64_t>();
    }
};

inline std::vector<std::int64_t> mask_bits(std::uint64_t mask, std::size_t dim)
{
    std::vector<std::int64_t> v(dim);
    for (std::size_t i = 0; i < dim; ++i)
        v[i] = static_cast<std::int64_t>((mask >> i) & 1U);
    return v;
}

inline RatVector mask_vector(std::uint64_t mask, std::size_t dim)
{
    RatVector v(dim);
    for (std::size_t i = 0; i < dim; ++i)
        v[i] = (mask >> i) & 1U;
    return v;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Extremal correlations

/// Visits every 0/1 point (p0, p1) whose signaling digraph p0 xor p1 lies in the class.
template <class Visitor>
void enumerate_extremal_correlation_masks(int n, PolytopeClass c, Visitor&& visit)
{
    check_cap(n, kMaxCorrelationEnumOrder, "enumerate_extremal_correlations");
    const std::size_t d = ArcIndexing(n).dimension();
    const ArcMask end = ArcMask{1} << d;
    enumerate_class_masks(n, c, [&](ArcMask g) {
        for (ArcMask r = 0; r < end; ++r)
            visit(CorrelationMask{r ^ g, r});
    });
}

template <class Visitor>
void enumerate_extremal_correlations(int n, PolytopeClass c, Visitor&& visit)
{
    enumerate_extremal_correlation_masks(n, c, [&](CorrelationMask m) { visit(to_correlation_vector(n, m)); });
}

inline std::vector<CorrelationVector> collect_extremal_correlations(int n, PolytopeClass c)
{
    check_cap(n, 3, "collect_extremal_correlations");
    std::vector<CorrelationVector> out;
    enumerate_extremal_correlations(n, c, [&](CorrelationVector p) { out.push_back(std::move(p)); });
    return out;
}

/// Deterministic strategies read off the causal definitions themselves, without
/// going through digraphs: a strict partial order (static), a first party
/// (definite), or a nonempty proper "future" set F that nobody outside F can
/// signal into (bi-causal). On each sender/receiver pair the receiver's bit is
/// either one of the four functions of x (signaling allowed) or one of the two
/// constants.
inline std::set<CorrelationMask> operational_extremal_points(int n, PolytopeClass c)
{
    check_cap(n, 3, "operational_extremal_points");
    const ArcIndexing idx(n);
    const std::size_t d = idx.dimension();

    // allowed[k] = set of coordinates on which signaling is permitted, one entry per deterministic causal structure
    std::vector<ArcMask> allowed;
    switch (c) {
    case PolytopeClass::Dag: {
        // strict partial orders = transitively closed DAGs
        enumerate_class_masks_by_filter(n, PolytopeClass::Dag, [&](ArcMask m) {
            const Digraph g = Digraph::from_mask(n, m);
            for (const auto& a : g.arcs())
                for (const auto& b : g.arcs())
                    if (a.to == b.from && a.from != b.to && !g.has_arc(a.from, b.to))
                        return;
            allowed.push_back(m);
        });
        break;
    }
    case PolytopeClass::Source:
        for (int first = 0; first < n; ++first) {
            ArcMask m = 0;
            for (std::size_t k = 0; k < d; ++k)
                if (idx.arc(k).to != first)
                    m |= ArcMask{1} << k;
            allowed.push_back(m);
        }
        break;
    case PolytopeClass::NotStrong:
        for (VertexSet f = 1; f + 1 < (VertexSet{1} << n); ++f) {
            ArcMask m = 0;
            for (std::size_t k = 0; k < d; ++k) {
                const Arc a = idx.arc(k);
                const bool blocked = !((f >> a.from) & 1U) && ((f >> a.to) & 1U);
                if (!blocked)
                    m |= ArcMask{1} << k;
            }
            allowed.push_back(m);
        }
        break;
    }

    std::set<CorrelationMask> points;
    const ArcMask end = ArcMask{1} << d;
    for (ArcMask free : allowed) {
        // Each coordinate picks (p0, p1); outside `free` the two must agree.
        for (ArcMask p0 = 0; p0 < end; ++p0)
            for (ArcMask diff = free;; diff = (diff - 1) & free) {
                points.insert({p0, p0 ^ diff});
                if (diff == 0)
                    break;
            }
    }
    return points;
}

// ---------------------------------------------------------------------------
// Certificates

struct FacetCertificate {
    DigraphInequality inequality;
    PolytopeClass polytope = PolytopeClass::Dag;
    int n = 0;
    /// d for digraph space, 2d for correlation space.
    std::size_t ambient_dim = 0;
    bool lifted = false;
    /// Rotation of a lifted inequality; empty otherwise.
    SignVector phi;
    bool valid = false;
    std::size_t members = 0;
    std::size_t saturating_count = 0;
    std::size_t affine_rank_of_saturators = 0;
    /// max over members of w . x; equals the bound exactly when the inequality is tight.
    Rational max_value;
    bool is_facet = false;
    /// Affinely independent saturating points (up to ambient_dim of them).
    std::vector<RatVector> evidence;
};

namespace detail {

template <class Enumerate>
void certify(const IntegerInequality& ineq, std::size_t dim, Enumerate&& enumerate,
             FacetCertificate& cert)
{
    IncrementalAffineRank inc(dim);
    std::vector<std::uint64_t> independent;
    bool has_origin = false;
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    cert.valid = true;
    enumerate([&](std::uint64_t mask) {
        ++cert.members;
        const std::int64_t v = ineq.value(mask);
        best = std::max(best, v);
        if (ineq.violated(v)) {
            cert.valid = false;
            return;
        }
        if (!ineq.saturated(v))
            return;
        ++cert.saturating_count;
        // rank can reach at most dim - 1 inside a hyperplane; stop doing work there
        if (has_origin && inc.rank() + 1 >= dim)
            return;
        const bool raised = inc.add(mask_bits(mask, dim));
        if (!has_origin || raised)
            independent.push_back(mask);
        has_origin = true;
    });
    if (cert.members > 0)
        cert.max_value = Rational(BigInt(best), ineq.scale);
    cert.evidence.clear();
    for (auto m : independent)
        cert.evidence.push_back(mask_vector(m, dim));
    cert.affine_rank_of_saturators = cert.evidence.empty() ? 0 : affine_rank(cert.evidence);
    if (cert.affine_rank_of_saturators != inc.rank())
        throw std::logic_error("certify: incremental and Bareiss ranks disagree");
    cert.is_facet = cert.valid && dim >= 1 && cert.affine_rank_of_saturators == dim - 1;
}

} // namespace detail

inline void check_inequality_order(const DigraphInequality& ineq, int n)
{
    if (ineq.order() != n)
        throw std::invalid_argument("inequality dimension does not match n = " + std::to_string(n));
}

/// True iff no class member violates the inequality.
inline bool verify_validity(const DigraphInequality& ineq, PolytopeClass c, int n)
{
    check_inequality_order(ineq, n);
    check_cap(n, enumeration_cap(c), "verify_validity");
    const detail::IntegerInequality I(ineq.weights, ineq.bound);
    bool valid = true;
    enumerate_class_masks(n, c, [&](ArcMask m) {
        if (valid && I.violated(I.value(m)))
            valid = false;
    });
    return valid;
}

/// Facet certificate over the class digraph polytope conv(alpha(class)).
inline FacetCertificate verify_facet(const DigraphInequality& ineq, PolytopeClass c, int n)
{
    check_inequality_order(ineq, n);
    check_cap(n, enumeration_cap(c), "verify_facet");
    FacetCertificate cert;
    cert.inequality = ineq;
    cert.polytope = c;
    cert.n = n;
    cert.ambient_dim = ineq.dimension();
    const detail::IntegerInequality I(ineq.weights, ineq.bound);
    detail::certify(I, cert.ambient_dim,
                    [&](auto&& sink) { enumerate_class_masks(n, c, [&](ArcMask m) { sink(m); }); }, cert);
    return cert;
}

inline constexpr int kMaxLiftedCertifyOrder = 4;

/// Facet certificate for a lifted (possibly rotated) inequality over the
/// extremal correlations of the class, ambient dimension 2d.
inline FacetCertificate verify_lifted_facet(const LiftedInequality& lifted, PolytopeClass c, int n)
{
    if (!lifted.source.is_nontrivial() || !lifted.source.is_non_negative())
        throw std::invalid_argument("verify_lifted_facet: source inequality must be non-negative and nontrivial");
    check_inequality_order(lifted.source, n);
    check_cap(n, kMaxLiftedCertifyOrder, "verify_lifted_facet");
    FacetCertificate cert;
    cert.inequality = lifted.source;
    cert.polytope = c;
    cert.n = n;
    cert.lifted = true;
    cert.phi = lifted.phi;
    cert.ambient_dim = lifted.weights.size();
    const std::size_t d = cert.ambient_dim / 2;
    const detail::IntegerInequality I(lifted.weights, lifted.bound);
    detail::certify(I, cert.ambient_dim,
                    [&](auto&& sink) {
                        enumerate_extremal_correlation_masks(n, c, [&](CorrelationMask m) { sink(m.p0 | (m.p1 << d)); });
                    },
                    cert);
    return cert;
}

/// Best deterministic score: max over class members D of alpha(D) . alpha(game).
inline std::size_t max_overlap(PolytopeClass c, int n, const Digraph& game)
{
    if (game.order() != n)
        throw std::invalid_argument("max_overlap: game order differs from n");
    check_cap(n, enumeration_cap(c), "max_overlap");
    const ArcMask g = game.adjacency_mask();
    int best = 0;
    enumerate_class_masks(n, c, [&](ArcMask m) { best = std::max(best, std::popcount(m & g)); });
    return static_cast<std::size_t>(best);
}

// ---------------------------------------------------------------------------
// Weak source-digraph polytope, by listing every inequality

namespace detail {

template <class Int>
bool weak_membership_scan(int n, const std::vector<Int>& scaled, const Int& cap)
{
    const ArcIndexing idx(n);
    bool inside = true;
    for_each_fixed_point_free_map(n, [&](const VertexMap& f) {
        if (!inside)
            return;
        Int s = 0;
        for (int r = 0; r < n; ++r)
            s += scaled[idx.index(f[static_cast<std::size_t>(r)], r)];
        if (s > cap)
            inside = false;
    });
    return inside;
}

} // namespace detail

/// 0 <= q <= 1 and alpha(kappa_f) . q <= n - 1 for all (n-1)^n fixed-point-free f.
inline bool brute_force_weak_membership(int n, const RatVector& q)
{
    check_cap(n, kMaxWeakBruteForceOrder, "brute_force_weak_membership");
    if (q.size() != ArcIndexing(n).dimension())
        throw std::invalid_argument("brute_force_weak_membership: dimension mismatch");
    for (const auto& x : q)
        if (x < 0 || x > 1)
            return false;
    const BigInt l = lcm_of_denominators(q);
    std::vector<BigInt> scaled;
    for (const auto& x : q)
        scaled.push_back(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x)));
    const BigInt cap = BigInt(n - 1) * l;
    if (l * n < BigInt(std::numeric_limits<std::int64_t>::max())) {
        std::vector<std::int64_t> small;
        for (const auto& x : scaled)
            small.push_back(x.convert_to<std::int64_t>());
        return detail::weak_membership_scan<std::int64_t>(n, small, cap.convert_to<std::int64_t>());
    }
    return detail::weak_membership_scan<BigInt>(n, scaled, cap);
}

// ---------------------------------------------------------------------------
// Hull membership

/// Convex hull of the class's extremal points, in digraph space (alpha vectors)
/// or in correlation space (deterministic points).
class ClassHull {
public:
    enum class Space { Digraph, Correlation };

    ClassHull(int n, PolytopeClass c, Space space) : n_(n), space_(space)
    {
        if (space == Space::Digraph) {
            check_cap(n, kMaxDigraphHullOrder, "hull_membership (digraph space)");
            const std::size_t d = ArcIndexing(n).dimension();
            enumerate_class_masks(n, c, [&](ArcMask m) { generators_.push_back(detail::mask_vector(m, d)); });
        } else {
            check_cap(n, kMaxCorrelationHullOrder, "hull_membership (correlation space)");
            enumerate_extremal_correlations(n, c, [&](const CorrelationVector& p) { generators_.push_back(p.flat()); });
        }
    }

    std::size_t generator_count() const { return generators_.size(); }

    std::optional<RatVector> combination(const RatVector& point) const
    {
        if (point.size() != generators_.front().size())
            throw std::invalid_argument("hull_membership: dimension mismatch");
        return hull_combination(point, generators_);
    }

    bool contains(const RatVector& point) const { return combination(point).has_value(); }

    const std::vector<RatVector>& generators() const { return generators_; }

private:
    int n_;
    Space space_;
    std::vector<RatVector> generators_;
};

inline bool hull_membership(const CorrelationVector& p, PolytopeClass c)
{
    return ClassHull(p.order(), c, ClassHull::Space::Correlation).contains(p.flat());
}

inline bool digraph_hull_membership(const RatVector& q, PolytopeClass c, int n)
{
    return ClassHull(n, c, ClassHull::Space::Digraph).contains(q);
}

// ---------------------------------------------------------------------------
// Hamiltonian digraph polytope

/// All Hamiltonian cycles 0 -> pi_1 -> ... -> pi_{n-1} -> 0, (n-1)! of them.
inline std::vector<Digraph> hamiltonian_cycles(int n)
{
    check_cap(n, kMaxHamiltonianOrder, "hamiltonian_cycles");
    std::vector<int> rest(static_cast<std::size_t>(n - 1));
    std::iota(rest.begin(), rest.end(), 1);
    std::vector<Digraph> out;
    do {
        Digraph g(n);
        int prev = 0;
        for (int v : rest) {
            g = g.with_arc({prev, v});
            prev = v;
        }
        out.push_back(g.with_arc({prev, 0}));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

struct HamiltonianVertexReport {
    bool feasible = false;
    Rational max_cycle_value;
    std::size_t active_constraints = 0;
    std::size_t active_rank = 0;
    bool is_vertex = false;
};

/// Checks q against the trivial and Hamiltonian-cycle inequalities and whether
/// the constraints tight at q have full rank d (q is a vertex).
inline HamiltonianVertexReport hamiltonian_vertex_report(int n, const RatVector& q)
{
    check_cap(n, kMaxHamiltonianOrder, "hamiltonian_vertex_check");
    const std::size_t d = ArcIndexing(n).dimension();
    if (q.size() != d)
        throw std::invalid_argument("hamiltonian_vertex_check: dimension mismatch");
    HamiltonianVertexReport rep;
    rep.feasible = true;
    RatMatrix active;
    for (std::size_t i = 0; i < d; ++i) {
        RatVector e(d);
        e[i] = 1;
        if (q[i] < 0 || q[i] > 1)
            rep.feasible = false;
        if (q[i] == 0 || q[i] == 1)
            active.push_back(std::move(e));
    }
    bool first = true;
    for (const auto& h : hamiltonian_cycles(n)) {
        RatVector a = adjacency_vector(h);
        const Rational v = dot(a, q);
        if (first || v > rep.max_cycle_value)
            rep.max_cycle_value = v;
        first = false;
        if (v > n - 1)
            rep.feasible = false;
        else if (v == n - 1)
            active.push_back(std::move(a));
    }
    rep.active_constraints = active.size();
    rep.active_rank = rank(active);
    rep.is_vertex = rep.feasible && rep.active_rank == d;
    return rep;
}

inline bool hamiltonian_vertex_check(int n, const RatVector& q) { return hamiltonian_vertex_report(n, q).is_vertex; }

/// Fractional vertex of the 4-party Hamiltonian polytope: centre 0 joined to
/// 1, 2, 3 by weight-1 arcs both ways, outer cycle 1 -> 2 -> 3 -> 1 at weight 1/2.
inline RatVector fractional_hamiltonian_vertex()
{
    const ArcIndexing idx(4);
    RatVector q(idx.dimension());
    for (int v = 1; v <= 3; ++v) {
        q[idx.index(0, v)] = 1;
        q[idx.index(v, 0)] = 1;
    }
    q[idx.index(1, 2)] = Rational(1, 2);
    q[idx.index(2, 3)] = Rational(1, 2);
    q[idx.index(3, 1)] = Rational(1, 2);
    return q;
}

/// Two further fractional points read off a drawing rather than a coordinate
/// list; unverified transcriptions. Variant 'b' adds a weight-1 arc 1 -> 3,
/// variant 'c' puts weight 1/2 on all six outer arcs.
inline RatVector fractional_hamiltonian_vertex_unverified(char variant)
{
    const ArcIndexing idx(4);
    RatVector q = fractional_hamiltonian_vertex();
    if (variant == 'b') {
        q[idx.index(1, 3)] = 1;
    } else if (variant == 'c') {
        q[idx.index(2, 1)] = Rational(1, 2);
        q[idx.index(3, 2)] = Rational(1, 2);
        q[idx.index(1, 3)] = Rational(1, 2);
    } else {
        throw std::invalid_argument("fractional_hamiltonian_vertex_unverified: variant must be 'b' or 'c'");
    }
    return q;
}

} // namespace graphgames
