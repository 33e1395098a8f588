#pragma once

// Simple digraphs on [n], the named game families, connectivity and the
// class enumerators (acyclic / has a source / not strongly connected).

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphgames/ratlin.hpp"

namespace graphgames {

inline constexpr int kMaxOrder = 64;
/// Largest order whose arc set fits one 64-bit mask (8 * 7 = 56 bits).
inline constexpr int kMaxMaskOrder = 8;

using VertexSet = std::uint64_t;
using ArcMask = std::uint64_t;
/// A map [n] -> [n] given by its values, e.g. a predecessor function.
using VertexMap = std::vector<int>;

struct Arc {
    int from = 0;
    int to = 0;
    auto operator<=>(const Arc&) const = default;
};

/// Lexicographic bijection between ordered pairs (i, j), i != j, and 0..d-1.
class ArcIndexing {
public:
    explicit ArcIndexing(int n) : n_(n)
    {
        if (n < 1 || n > kMaxOrder)
            throw std::invalid_argument("ArcIndexing: order out of range");
    }

    int order() const { return n_; }
    std::size_t dimension() const { return static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1); }

    std::size_t index(int i, int j) const
    {
        if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j)
            throw std::out_of_range("ArcIndexing: invalid pair");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ - 1) + static_cast<std::size_t>(j < i ? j : j - 1);
    }

    Arc arc(std::size_t idx) const
    {
        if (idx >= dimension())
            throw std::out_of_range("ArcIndexing: index out of range");
        const int i = static_cast<int>(idx / static_cast<std::size_t>(n_ - 1));
        const int r = static_cast<int>(idx % static_cast<std::size_t>(n_ - 1));
        return {i, r < i ? r : r + 1};
    }

private:
    int n_;
};

class Digraph {
public:
    explicit Digraph(int n) : n_(n), out_(check_order(n), 0) {}

    Digraph(int n, std::span<const Arc> arcs) : Digraph(n)
    {
        for (const auto& a : arcs)
            set(a);
    }

    Digraph(int n, std::initializer_list<Arc> arcs) : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}

    /// Bit k of `mask` is the arc with lexicographic index k.
    static Digraph from_mask(int n, ArcMask mask)
    {
        if (n > kMaxMaskOrder)
            throw std::out_of_range("Digraph::from_mask: order above mask capacity");
        Digraph d(n);
        const ArcIndexing idx(n);
        while (mask) {
            const auto k = static_cast<std::size_t>(std::countr_zero(mask));
            mask &= mask - 1;
            if (k >= idx.dimension())
                throw std::out_of_range("Digraph::from_mask: bit beyond dimension");
            d.set(idx.arc(k));
        }
        return d;
    }

    int order() const { return n_; }

    bool has_arc(int i, int j) const
    {
        check_vertex(i);
        check_vertex(j);
        return (out_[static_cast<std::size_t>(i)] >> j) & 1U;
    }

    VertexSet out_neighbours(int v) const
    {
        check_vertex(v);
        return out_[static_cast<std::size_t>(v)];
    }

    VertexSet in_neighbours(int v) const
    {
        check_vertex(v);
        VertexSet s = 0;
        for (int u = 0; u < n_; ++u)
            if ((out_[static_cast<std::size_t>(u)] >> v) & 1U)
                s |= VertexSet{1} << u;
        return s;
    }

    int in_degree(int v) const { return std::popcount(in_neighbours(v)); }
    int out_degree(int v) const { return std::popcount(out_neighbours(v)); }

    std::size_t arc_count() const
    {
        std::size_t c = 0;
        for (auto row : out_)
            c += static_cast<std::size_t>(std::popcount(row));
        return c;
    }

    /// Arcs in lexicographic order.
    std::vector<Arc> arcs() const
    {
        std::vector<Arc> a;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if ((out_[static_cast<std::size_t>(i)] >> j) & 1U)
                    a.push_back({i, j});
        return a;
    }

    Digraph with_arc(Arc a) const
    {
        Digraph d = *this;
        d.set(a);
        return d;
    }

    Digraph without_arc(Arc a) const
    {
        check_vertex(a.from);
        check_vertex(a.to);
        Digraph d = *this;
        d.out_[static_cast<std::size_t>(a.from)] &= ~(VertexSet{1} << a.to);
        return d;
    }

    /// Vertex v becomes perm[v].
    Digraph relabeled(std::span<const int> perm) const
    {
        if (perm.size() != static_cast<std::size_t>(n_))
            throw std::invalid_argument("relabeled: permutation size mismatch");
        std::vector<int> seen(static_cast<std::size_t>(n_), 0);
        for (int p : perm) {
            check_vertex(p);
            if (seen[static_cast<std::size_t>(p)]++)
                throw std::invalid_argument("relabeled: not a permutation");
        }
        Digraph d(n_);
        for (const auto& a : arcs())
            d.set({perm[static_cast<std::size_t>(a.from)], perm[static_cast<std::size_t>(a.to)]});
        return d;
    }

    ArcMask adjacency_mask() const
    {
        if (n_ > kMaxMaskOrder)
            throw std::out_of_range("adjacency_mask: order above mask capacity");
        const ArcIndexing idx(n_);
        ArcMask m = 0;
        for (const auto& a : arcs())
            m |= ArcMask{1} << idx.index(a.from, a.to);
        return m;
    }

    bool operator==(const Digraph&) const = default;

private:
    static std::size_t check_order(int n)
    {
        if (n < 1 || n > kMaxOrder)
            throw std::invalid_argument("Digraph: order must be in [1, 64], got " + std::to_string(n));
        return static_cast<std::size_t>(n);
    }

    void check_vertex(int v) const
    {
        if (v < 0 || v >= n_)
            throw std::out_of_range("Digraph: vertex " + std::to_string(v) + " out of range");
    }

    void set(Arc a)
    {
        check_vertex(a.from);
        check_vertex(a.to);
        if (a.from == a.to)
            throw std::invalid_argument("Digraph: self-loop at " + std::to_string(a.from));
        out_[static_cast<std::size_t>(a.from)] |= VertexSet{1} << a.to;
    }

    int n_;
    std::vector<VertexSet> out_;
};

/// 0/1 vector with entry 1 at the lexicographic index of each arc.
inline RatVector adjacency_vector(const Digraph& d)
{
    const ArcIndexing idx(d.order());
    RatVector v(idx.dimension());
    for (const auto& a : d.arcs())
        v[idx.index(a.from, a.to)] = 1;
    return v;
}

// ---------------------------------------------------------------------------
// Families

inline Digraph make_cycle(int n, int k)
{
    if (!(n >= k && k >= 2))
        throw std::invalid_argument("make_cycle: need n >= k >= 2");
    Digraph d(n);
    for (int i = 0; i < k; ++i)
        d = d.with_arc({i, (i + 1) % k});
    return d;
}

/// Posts 2i -> 2i+1 and rails 2i+1 -> 2j for distinct i, j in [k].
inline Digraph make_fence(int n, int k)
{
    if (!(k >= 2 && n >= 2 * k))
        throw std::invalid_argument("make_fence: need n >= 2k >= 4");
    Digraph d(n);
    for (int i = 0; i < k; ++i)
        d = d.with_arc({2 * i, 2 * i + 1});
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j)
                d = d.with_arc({2 * i + 1, 2 * j});
    return d;
}

/// Arcs of the k-Moebius digraph on vertices 0 .. 2k-1: the cycle i -> i+1 and
/// chords 2i+3 -> 2i (mod 2k). Independent of any vertex cap.
inline std::vector<Arc> mobius_arcs(int k)
{
    if (!(k >= 3 && k % 2 == 1))
        throw std::invalid_argument("mobius: k must be odd and at least 3");
    const int m = 2 * k;
    std::vector<Arc> arcs;
    for (int i = 0; i < m; ++i)
        arcs.push_back({i, (i + 1) % m});
    for (int i = 0; i < k; ++i)
        arcs.push_back({(2 * i + 3) % m, 2 * i});
    return arcs;
}

inline Digraph make_mobius(int n, int k)
{
    if (!(k >= 3 && k % 2 == 1 && n >= 2 * k))
        throw std::invalid_argument("make_mobius: need odd k and n >= 2k >= 6");
    const auto arcs = mobius_arcs(k);
    return Digraph(n, arcs);
}

/// Arcs f(i) -> i for a fixed-point-free f.
inline Digraph make_kefalopoda(int n, const VertexMap& f)
{
    if (f.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("make_kefalopoda: map size must equal n");
    Digraph d(n);
    for (int i = 0; i < n; ++i) {
        const int p = f[static_cast<std::size_t>(i)];
        if (p < 0 || p >= n)
            throw std::invalid_argument("make_kefalopoda: map value out of range");
        if (p == i)
            throw std::invalid_argument("make_kefalopoda: fixed point at " + std::to_string(i));
        d = d.with_arc({p, i});
    }
    return d;
}

/// Four vertices: 0 top-left, 1 bottom-left, 2 top-right, 3 bottom-right.
inline Digraph make_twisted_cylinder()
{
    return Digraph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {0, 2}, {1, 3}, {3, 0}, {2, 1}});
}

/// Visits every fixed-point-free map [n] -> [n] in odometer order.
template <class Visitor>
void for_each_fixed_point_free_map(int n, Visitor&& visit)
{
    if (n < 2)
        return;
    VertexMap f(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        f[static_cast<std::size_t>(i)] = i == 0 ? 1 : 0;
    for (;;) {
        visit(std::as_const(f));
        int pos = 0;
        for (; pos < n; ++pos) {
            auto& x = f[static_cast<std::size_t>(pos)];
            ++x;
            if (x == pos)
                ++x;
            if (x < n)
                break;
            x = pos == 0 ? 1 : 0;
        }
        if (pos == n)
            return;
    }
}

// ---------------------------------------------------------------------------
// Structure

namespace detail {

inline VertexSet all_vertices(int n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

inline VertexSet reach(std::span<const VertexSet> out, int start)
{
    VertexSet seen = VertexSet{1} << start;
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet f = frontier; f; f &= f - 1)
            next |= out[static_cast<std::size_t>(std::countr_zero(f))];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

inline std::vector<VertexSet> out_rows(const Digraph& d)
{
    std::vector<VertexSet> rows(static_cast<std::size_t>(d.order()));
    for (int v = 0; v < d.order(); ++v)
        rows[static_cast<std::size_t>(v)] = d.out_neighbours(v);
    return rows;
}

inline std::vector<VertexSet> in_rows(std::span<const VertexSet> out)
{
    std::vector<VertexSet> in(out.size(), 0);
    for (std::size_t u = 0; u < out.size(); ++u)
        for (VertexSet f = out[u]; f; f &= f - 1)
            in[static_cast<std::size_t>(std::countr_zero(f))] |= VertexSet{1} << u;
    return in;
}

inline bool rows_strong(std::span<const VertexSet> out)
{
    const int n = static_cast<int>(out.size());
    const VertexSet all = all_vertices(n);
    if (reach(out, 0) != all)
        return false;
    const auto in = in_rows(out);
    return reach(in, 0) == all;
}

inline bool rows_acyclic(std::span<const VertexSet> out)
{
    // Repeatedly strip vertices with no in-arcs from the remaining set.
    const int n = static_cast<int>(out.size());
    const auto in = in_rows(out);
    VertexSet remaining = all_vertices(n);
    for (bool progress = true; remaining && progress;) {
        progress = false;
        for (VertexSet r = remaining; r; r &= r - 1) {
            const int v = std::countr_zero(r);
            if ((in[static_cast<std::size_t>(v)] & remaining) == 0) {
                remaining &= ~(VertexSet{1} << v);
                progress = true;
            }
        }
    }
    return remaining == 0;
}

inline bool rows_have_source(std::span<const VertexSet> out)
{
    VertexSet targets = 0;
    for (auto row : out)
        targets |= row;
    return targets != all_vertices(static_cast<int>(out.size()));
}

/// Per-order table mapping a lexicographic arc bit to (from, to).
struct MaskTable {
    int n;
    std::vector<Arc> arcs;
    explicit MaskTable(int order) : n(order)
    {
        const ArcIndexing idx(order);
        for (std::size_t k = 0; k < idx.dimension(); ++k)
            arcs.push_back(idx.arc(k));
    }
    void rows(ArcMask mask, std::span<VertexSet> out) const
    {
        std::fill(out.begin(), out.end(), 0);
        while (mask) {
            const auto& a = arcs[static_cast<std::size_t>(std::countr_zero(mask))];
            mask &= mask - 1;
            out[static_cast<std::size_t>(a.from)] |= VertexSet{1} << a.to;
        }
    }
};

} // namespace detail

inline bool is_acyclic(const Digraph& d) { return detail::rows_acyclic(detail::out_rows(d)); }

inline bool is_strong(const Digraph& d) { return detail::rows_strong(detail::out_rows(d)); }

inline VertexSet sources(const Digraph& d)
{
    VertexSet s = 0;
    for (int v = 0; v < d.order(); ++v)
        if (d.in_degree(v) == 0)
            s |= VertexSet{1} << v;
    return s;
}

inline bool is_minimally_strong(const Digraph& d)
{
    if (!is_strong(d))
        return false;
    for (const auto& a : d.arcs())
        if (is_strong(d.without_arc(a)))
            return false;
    return true;
}

/// Components ordered by their smallest vertex; each component lists its
/// vertices in increasing order.
inline std::vector<std::vector<int>> strongly_connected_components(const Digraph& d)
{
    const auto out = detail::out_rows(d);
    const auto in = detail::in_rows(out);
    std::vector<std::vector<int>> comps;
    VertexSet assigned = 0;
    for (int v = 0; v < d.order(); ++v) {
        if ((assigned >> v) & 1U)
            continue;
        const VertexSet comp = detail::reach(out, v) & detail::reach(in, v);
        assigned |= comp;
        std::vector<int> members;
        for (VertexSet c = comp; c; c &= c - 1)
            members.push_back(std::countr_zero(c));
        comps.push_back(std::move(members));
    }
    return comps;
}

/// Digraph over component indices as returned by strongly_connected_components.
inline Digraph condensation(const Digraph& d)
{
    const auto comps = strongly_connected_components(d);
    std::vector<int> comp_of(static_cast<std::size_t>(d.order()));
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c])
            comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    Digraph c(static_cast<int>(comps.size()));
    for (const auto& a : d.arcs()) {
        const int x = comp_of[static_cast<std::size_t>(a.from)];
        const int y = comp_of[static_cast<std::size_t>(a.to)];
        if (x != y)
            c = c.with_arc({x, y});
    }
    return c;
}

/// The predecessor map when every vertex has in-degree exactly one.
inline std::optional<VertexMap> is_kefalopoda(const Digraph& d)
{
    VertexMap f(static_cast<std::size_t>(d.order()));
    for (int v = 0; v < d.order(); ++v) {
        const VertexSet in = d.in_neighbours(v);
        if (std::popcount(in) != 1)
            return std::nullopt;
        f[static_cast<std::size_t>(v)] = std::countr_zero(in);
    }
    return f;
}

// ---------------------------------------------------------------------------
// Classes and enumeration

enum class PolytopeClass { Dag, Source, NotStrong };

inline std::string to_string(PolytopeClass c)
{
    switch (c) {
    case PolytopeClass::Dag: return "dag";
    case PolytopeClass::Source: return "source";
    case PolytopeClass::NotStrong: return "notstrong";
    }
    return "?";
}

inline PolytopeClass parse_polytope_class(std::string_view s)
{
    if (s == "dag" || s == "static")
        return PolytopeClass::Dag;
    if (s == "source" || s == "causal")
        return PolytopeClass::Source;
    if (s == "notstrong" || s == "bi")
        return PolytopeClass::NotStrong;
    throw std::invalid_argument("unknown polytope class: " + std::string(s));
}

inline bool in_class(const Digraph& d, PolytopeClass c)
{
    const auto rows = detail::out_rows(d);
    switch (c) {
    case PolytopeClass::Dag: return detail::rows_acyclic(rows);
    case PolytopeClass::Source: return detail::rows_have_source(rows);
    case PolytopeClass::NotStrong: return !detail::rows_strong(rows);
    }
    return false;
}

/// Enumeration caps: recursive DAG generation up to 6 vertices, filtering of
/// all 2^(n(n-1)) digraphs up to 5.
inline constexpr int kMaxDagEnumOrder = 6;
inline constexpr int kMaxFilterEnumOrder = 5;

class CapExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

inline int enumeration_cap(PolytopeClass c) { return c == PolytopeClass::Dag ? kMaxDagEnumOrder : kMaxFilterEnumOrder; }

inline void check_cap(int n, int cap, const char* what)
{
    if (n < 2 || n > cap)
        throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) + " outside [2, " + std::to_string(cap) + "]");
}

/// Every labeled digraph on [n] in the class, as adjacency masks, by scanning
/// all 2^d masks.
template <class Visitor>
void enumerate_class_masks_by_filter(int n, PolytopeClass c, Visitor&& visit)
{
    check_cap(n, kMaxFilterEnumOrder, "enumerate_class (filter)");
    const detail::MaskTable table(n);
    const ArcMask end = ArcMask{1} << table.arcs.size();
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    for (ArcMask m = 0; m < end; ++m) {
        table.rows(m, rows);
        bool keep = false;
        switch (c) {
        case PolytopeClass::Dag: keep = detail::rows_acyclic(rows); break;
        case PolytopeClass::Source: keep = detail::rows_have_source(rows); break;
        case PolytopeClass::NotStrong: keep = !detail::rows_strong(rows); break;
        }
        if (keep)
            visit(m);
    }
}

/// Every labeled DAG on [n] as adjacency masks, generated layer by layer.
template <class Visitor>
void enumerate_dag_masks(int n, Visitor&& visit)
{
    check_cap(n, kMaxDagEnumOrder, "enumerate_class (dag)");
    const ArcIndexing idx(n);
    std::vector<ArcMask> bit(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                bit[static_cast<std::size_t>(i * n + j)] = ArcMask{1} << idx.index(i, j);

    // Layered generation: the first layer is the source set; every vertex of a
    // later layer has at least one in-arc from the layer right before it and
    // any in-arcs from earlier layers. The layering of a DAG is unique, so each
    // DAG is produced exactly once.
    std::function<void(VertexSet, VertexSet, VertexSet, ArcMask)> layer;
    std::function<void(const std::vector<int>&, std::size_t, VertexSet, VertexSet, VertexSet, ArcMask)> assign;

    layer = [&](VertexSet remaining, VertexSet prev, VertexSet placed, ArcMask mask) {
        if (remaining == 0) {
            visit(mask);
            return;
        }
        for (VertexSet s = remaining; s; s = (s - 1) & remaining) {
            if (prev == 0) {
                layer(remaining & ~s, s, s, mask);
                continue;
            }
            std::vector<int> members;
            for (VertexSet t = s; t; t &= t - 1)
                members.push_back(std::countr_zero(t));
            assign(members, 0, prev, placed, remaining & ~s, mask);
        }
    };

    assign = [&](const std::vector<int>& members, std::size_t k, VertexSet prev, VertexSet placed, VertexSet rest,
                 ArcMask mask) {
        if (k == members.size()) {
            VertexSet s = 0;
            for (int v : members)
                s |= VertexSet{1} << v;
            layer(rest, s, placed | s, mask);
            return;
        }
        const int v = members[k];
        for (VertexSet t = placed; t; t = (t - 1) & placed) {
            if ((t & prev) == 0)
                continue;
            ArcMask m = mask;
            for (VertexSet u = t; u; u &= u - 1)
                m |= bit[static_cast<std::size_t>(std::countr_zero(u) * n + v)];
            assign(members, k + 1, prev, placed, rest, m);
        }
    };

    layer(detail::all_vertices(n), 0, 0, 0);
}

/// Every labeled digraph on [n] in the class, as adjacency masks.
template <class Visitor>
void enumerate_class_masks(int n, PolytopeClass c, Visitor&& visit)
{
    if (c == PolytopeClass::Dag)
        enumerate_dag_masks(n, visit);
    else
        enumerate_class_masks_by_filter(n, c, visit);
}

/// Streams every labeled digraph on [n] in the class exactly once.
template <class Visitor>
void enumerate_class(int n, PolytopeClass c, Visitor&& visit)
{
    enumerate_class_masks(n, c, [&](ArcMask m) { visit(Digraph::from_mask(n, m)); });
}

inline std::vector<Digraph> collect_class(int n, PolytopeClass c)
{
    std::vector<Digraph> out;
    enumerate_class(n, c, [&](const Digraph& d) { out.push_back(d); });
    return out;
}

inline std::size_t count_class(int n, PolytopeClass c)
{
    std::size_t k = 0;
    enumerate_class_masks(n, c, [&](ArcMask) { ++k; });
    return k;
}

/// All labeled minimally strong digraphs on [n] (filtering all digraphs).
inline std::vector<Digraph> minimally_strong_digraphs(int n)
{
    check_cap(n, kMaxFilterEnumOrder, "minimally_strong_digraphs");
    std::vector<Digraph> out;
    const detail::MaskTable table(n);
    const ArcMask end = ArcMask{1} << table.arcs.size();
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    for (ArcMask m = 0; m < end; ++m) {
        table.rows(m, rows);
        if (!detail::rows_strong(rows))
            continue;
        bool minimal = true;
        for (ArcMask r = m; r && minimal; r &= r - 1) {
            table.rows(m & ~(r & -r), rows);
            minimal = !detail::rows_strong(rows);
        }
        if (minimal)
            out.push_back(Digraph::from_mask(n, m));
    }
    return out;
}

inline constexpr int kMaxIsomorphismOrder = 8;

/// A permutation `perm` with d.relabeled(perm) == e, by brute force.
inline std::optional<std::vector<int>> are_isomorphic(const Digraph& d, const Digraph& e)
{
    if (d.order() != e.order())
        return std::nullopt;
    const int n = d.order();
    if (n > kMaxIsomorphismOrder)
        throw CapExceeded("are_isomorphic: n above " + std::to_string(kMaxIsomorphismOrder));
    if (d.arc_count() != e.arc_count())
        return std::nullopt;
    std::vector<int> ind(static_cast<std::size_t>(n)), outd(ind), ine(ind), oute(ind);
    for (int v = 0; v < n; ++v) {
        ind[static_cast<std::size_t>(v)] = d.in_degree(v);
        outd[static_cast<std::size_t>(v)] = d.out_degree(v);
        ine[static_cast<std::size_t>(v)] = e.in_degree(v);
        oute[static_cast<std::size_t>(v)] = e.out_degree(v);
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    const auto arcs = d.arcs();
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            const auto p = static_cast<std::size_t>(perm[static_cast<std::size_t>(v)]);
            ok = ind[static_cast<std::size_t>(v)] == ine[p] && outd[static_cast<std::size_t>(v)] == oute[p];
        }
        for (std::size_t k = 0; k < arcs.size() && ok; ++k)
            ok = e.has_arc(perm[static_cast<std::size_t>(arcs[k].from)], perm[static_cast<std::size_t>(arcs[k].to)]);
        if (ok)
            return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

/// Every distinct relabeling of d, in order of first appearance over
/// lexicographically ordered permutations.
inline std::vector<Digraph> labeled_copies(const Digraph& d)
{
    const int n = d.order();
    if (n > kMaxIsomorphismOrder)
        throw CapExceeded("labeled_copies: n above " + std::to_string(kMaxIsomorphismOrder));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Digraph> out;
    std::set<std::vector<VertexSet>> seen;
    do {
        Digraph e = d.relabeled(perm);
        std::vector<VertexSet> key;
        for (int v = 0; v < n; ++v)
            key.push_back(e.out_neighbours(v));
        if (seen.insert(std::move(key)).second)
            out.push_back(std::move(e));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Groups digraphs into isomorphism classes; returns one representative each,
/// in order of first appearance.
inline std::vector<Digraph> isomorphism_representatives(std::span<const Digraph> ds)
{
    std::vector<Digraph> reps;
    for (const auto& d : ds) {
        const bool known = std::any_of(reps.begin(), reps.end(), [&](const Digraph& r) { return are_isomorphic(r, d).has_value(); });
        if (!known)
            reps.push_back(d);
    }
    return reps;
}

} // namespace graphgames
