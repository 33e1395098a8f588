#pragma once

// Single-output correlations P(A | S, R, X), stored as the two vectors
// p0 = p(0|s,r,0) and p1 = p(0|s,r,1) in lexicographic (s, r) order.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "graphgames/digraphs.hpp"
#include "graphgames/ratlin.hpp"

namespace graphgames {

class CorrelationVector {
public:
    /// Throws unless both vectors have length n(n-1) and every entry lies in [0, 1].
    CorrelationVector(int n, RatVector p0, RatVector p1) : n_(n), p0_(std::move(p0)), p1_(std::move(p1))
    {
        const std::size_t d = ArcIndexing(n).dimension();
        if (n < 2)
            throw std::invalid_argument("CorrelationVector: need n >= 2");
        if (p0_.size() != d || p1_.size() != d)
            throw std::invalid_argument("CorrelationVector: expected vectors of length " + std::to_string(d));
        for (const RatVector* v : {&p0_, &p1_})
            for (const auto& x : *v)
                if (x < 0 || x > 1)
                    throw std::domain_error("CorrelationVector: probability " + to_string(x) + " outside [0, 1]");
    }

    /// All entries equal to `value`.
    static CorrelationVector constant(int n, const Rational& value)
    {
        const std::size_t d = ArcIndexing(n).dimension();
        return {n, RatVector(d, value), RatVector(d, value)};
    }

    int order() const { return n_; }
    std::size_t dimension() const { return p0_.size(); }
    const RatVector& p0() const { return p0_; }
    const RatVector& p1() const { return p1_; }

    /// p(0 | s, r, x).
    const Rational& prob_zero(int s, int r, int x) const
    {
        const std::size_t i = ArcIndexing(n_).index(s, r);
        return x == 0 ? p0_[i] : p1_[i];
    }

    /// (p0, p1) concatenated, length 2d.
    RatVector flat() const
    {
        RatVector v = p0_;
        v.insert(v.end(), p1_.begin(), p1_.end());
        return v;
    }

    bool operator==(const CorrelationVector&) const = default;

private:
    int n_;
    RatVector p0_;
    RatVector p1_;
};

struct GraphicalTest {
    Digraph game;
    Rational bound;

    GraphicalTest(Digraph g, Rational t) : game(std::move(g)), bound(std::move(t))
    {
        if (game.arc_count() == 0)
            throw std::invalid_argument("GraphicalTest: game has no arcs");
        if (bound < 0 || bound > 1)
            throw std::domain_error("GraphicalTest: bound outside [0, 1]");
    }
};

enum class Verdict { Pass, Fail };

struct TestOutcome {
    Verdict verdict;
    Rational win_probability;
    /// win_probability - bound; positive means the test is violated.
    Rational margin;
};

/// Arc i -> j wherever p(0|i,j,0) and p(0|i,j,1) differ; inputs must be 0/1.
inline Digraph signaling_digraph(const CorrelationVector& p)
{
    const ArcIndexing idx(p.order());
    Digraph d(p.order());
    for (std::size_t i = 0; i < p.dimension(); ++i) {
        const auto& a = p.p0()[i];
        const auto& b = p.p1()[i];
        if ((a != 0 && a != 1) || (b != 0 && b != 1))
            throw std::domain_error("signaling_digraph: correlation vector is not deterministic");
        if (a != b)
            d = d.with_arc(idx.arc(i));
    }
    return d;
}

/// |p0 - p1| element-wise.
inline RatVector project_abs_diff(const CorrelationVector& p)
{
    RatVector q(p.dimension());
    for (std::size_t i = 0; i < q.size(); ++i)
        q[i] = abs(Rational(p.p0()[i] - p.p1()[i]));
    return q;
}

/// The receiver r relabels its output whenever s is the sender.
inline CorrelationVector flip(const CorrelationVector& p, int s, int r)
{
    if (s == r)
        throw std::invalid_argument("flip: sender equals receiver");
    const std::size_t i = ArcIndexing(p.order()).index(s, r);
    RatVector p0 = p.p0();
    RatVector p1 = p.p1();
    p0[i] = 1 - p0[i];
    p1[i] = 1 - p1[i];
    return {p.order(), std::move(p0), std::move(p1)};
}

/// p(0|s,r,x) = 1 - x on arcs of d, 1 elsewhere.
inline CorrelationVector deterministic_point_from_digraph(const Digraph& d)
{
    const ArcIndexing idx(d.order());
    RatVector p0(idx.dimension(), Rational(1));
    RatVector p1(idx.dimension(), Rational(1));
    for (const auto& a : d.arcs())
        p1[idx.index(a.from, a.to)] = 0;
    return {d.order(), std::move(p0), std::move(p1)};
}

/// Probability that the receiver outputs the sender's bit when the referee
/// draws an arc of `game` and the bit uniformly.
inline Rational win_probability(const CorrelationVector& p, const Digraph& game)
{
    if (game.order() != p.order())
        throw std::invalid_argument("win_probability: game and correlations differ in n");
    const auto arcs = game.arcs();
    if (arcs.empty())
        throw std::invalid_argument("win_probability: empty game");
    const ArcIndexing idx(p.order());
    Rational sum = 0;
    for (const auto& a : arcs) {
        const std::size_t i = idx.index(a.from, a.to);
        sum += p.p0()[i] + (1 - p.p1()[i]);
    }
    return sum / Rational(2 * static_cast<long>(arcs.size()));
}

/// Saturating the bound passes; only strict excess fails.
inline TestOutcome run_test(const CorrelationVector& p, const GraphicalTest& test)
{
    Rational w = win_probability(p, test.game);
    Rational margin = w - test.bound;
    return {margin > 0 ? Verdict::Fail : Verdict::Pass, std::move(w), std::move(margin)};
}

inline std::string to_string(Verdict v) { return v == Verdict::Pass ? "pass" : "fail"; }

} // namespace graphgames
