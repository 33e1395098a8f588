#include <gtest/gtest.h>

#include <random>

#include "graphgames/correlations.hpp"

using namespace graphgames;

namespace {

Rational unit(std::mt19937_64& rng)
{
    const long den = std::uniform_int_distribution<long>(1, 10)(rng);
    return {std::uniform_int_distribution<long>(0, den)(rng), den};
}

CorrelationVector random_point(int n, std::mt19937_64& rng)
{
    const std::size_t d = ArcIndexing(n).dimension();
    RatVector p0(d), p1(d);
    for (std::size_t i = 0; i < d; ++i) {
        p0[i] = unit(rng);
        p1[i] = unit(rng);
    }
    return {n, p0, p1};
}

CorrelationVector random_01_point(int n, std::mt19937_64& rng)
{
    const std::size_t d = ArcIndexing(n).dimension();
    RatVector p0(d), p1(d);
    for (std::size_t i = 0; i < d; ++i) {
        p0[i] = std::uniform_int_distribution<int>(0, 1)(rng);
        p1[i] = std::uniform_int_distribution<int>(0, 1)(rng);
    }
    return {n, p0, p1};
}

} // namespace

TEST(CorrelationVector, Validation)
{
    EXPECT_THROW(CorrelationVector(2, {1, 0}, {1}), std::invalid_argument);
    EXPECT_THROW(CorrelationVector(2, {1, 2}, {1, 0}), std::domain_error);
    EXPECT_THROW(CorrelationVector(2, {1, 0}, {Rational(-1, 3), 0}), std::domain_error);
    const CorrelationVector p(2, {1, Rational(1, 2)}, {0, 1});
    EXPECT_EQ(p.prob_zero(1, 0, 0), Rational(1, 2));
    EXPECT_EQ(p.prob_zero(0, 1, 1), 0);
    EXPECT_EQ(p.flat(), (RatVector{1, Rational(1, 2), 0, 1}));
}

TEST(GraphicalTest, Validation)
{
    EXPECT_THROW(GraphicalTest(Digraph(2), Rational(1, 2)), std::invalid_argument);
    EXPECT_THROW(GraphicalTest(make_cycle(2, 2), Rational(3, 2)), std::domain_error);
    EXPECT_NO_THROW(GraphicalTest(make_cycle(2, 2), Rational(1)));
}

TEST(SignalingDigraph, Examples)
{
    EXPECT_EQ(signaling_digraph(CorrelationVector(3, {1, 0, 1, 1, 0, 0}, {1, 0, 1, 1, 0, 0})), Digraph(3));
    EXPECT_EQ(signaling_digraph(CorrelationVector(2, {1, 1}, {0, 1})), Digraph(2, {{0, 1}}));
    EXPECT_THROW(signaling_digraph(CorrelationVector(2, {Rational(1, 2), 1}, {0, 1})), std::domain_error);
}

TEST(SignalingDigraph, RoundTripsDeterministicPoints)
{
    for (int n = 2; n <= 4; ++n)
        for (ArcMask m = 0; m < (ArcMask{1} << (n * (n - 1))); ++m) {
            const Digraph d = Digraph::from_mask(n, m);
            ASSERT_EQ(signaling_digraph(deterministic_point_from_digraph(d)), d);
        }
}

TEST(ProjectAbsDiff, Examples)
{
    EXPECT_EQ(project_abs_diff(CorrelationVector(2, {Rational(1, 3), 1}, {Rational(1, 3), 1})), (RatVector{0, 0}));
    EXPECT_EQ(project_abs_diff(CorrelationVector(2, {1, Rational(1, 4)}, {0, Rational(3, 4)})),
              (RatVector{1, Rational(1, 2)}));
}

TEST(ProjectAbsDiff, EqualsSignalingAdjacencyOnDeterministicPoints)
{
    std::mt19937_64 rng(21);
    for (int t = 0; t < 500; ++t) {
        const CorrelationVector p = random_01_point(std::uniform_int_distribution<int>(2, 5)(rng), rng);
        EXPECT_EQ(project_abs_diff(p), adjacency_vector(signaling_digraph(p)));
    }
}

TEST(Flip, Examples)
{
    const CorrelationVector p(3, {1, 0, 1, 1, 0, 1}, {0, 0, 1, 1, 1, 0});
    EXPECT_EQ(flip(flip(p, 1, 2), 1, 2), p);
    EXPECT_EQ(signaling_digraph(flip(p, 0, 1)), signaling_digraph(p));
    // the receiver that copied x now outputs x xor 1
    const std::size_t i = ArcIndexing(3).index(0, 1);
    ASSERT_EQ(p.p0()[i], 1);
    ASSERT_EQ(p.p1()[i], 0);
    const auto q = flip(p, 0, 1);
    EXPECT_EQ(q.p0()[i], 0);
    EXPECT_EQ(q.p1()[i], 1);
    EXPECT_THROW(flip(p, 2, 2), std::invalid_argument);
}

TEST(Flip, ChangesWinProbabilityOnlyOnGameArcs)
{
    std::mt19937_64 rng(22);
    for (int t = 0; t < 300; ++t) {
        const int n = std::uniform_int_distribution<int>(2, 4)(rng);
        const CorrelationVector p = random_01_point(n, rng);
        const Digraph g = make_cycle(n, std::uniform_int_distribution<int>(2, n)(rng));
        const ArcIndexing idx(n);
        const Arc a = idx.arc(std::uniform_int_distribution<std::size_t>(0, idx.dimension() - 1)(rng));
        const CorrelationVector q = flip(p, a.from, a.to);
        if (!g.has_arc(a.from, a.to)) {
            EXPECT_EQ(win_probability(q, g), win_probability(p, g));
        } else {
            const std::size_t i = idx.index(a.from, a.to);
            const Rational before = p.p0()[i] + (1 - p.p1()[i]);
            const Rational after = q.p0()[i] + (1 - q.p1()[i]);
            EXPECT_EQ(after, 2 - before); // per-arc contribution v -> 1 - v, scaled by 2
            EXPECT_EQ(win_probability(q, g) - win_probability(p, g), (after - before) / (2 * static_cast<long>(g.arc_count())));
        }
    }
}

TEST(DeterministicPoint, Examples)
{
    const auto empty = deterministic_point_from_digraph(Digraph(3));
    EXPECT_EQ(empty.p0(), RatVector(6, 1));
    EXPECT_EQ(empty.p1(), RatVector(6, 1));
    const auto two = deterministic_point_from_digraph(make_cycle(2, 2));
    EXPECT_EQ(two.p0(), (RatVector{1, 1}));
    EXPECT_EQ(two.p1(), (RatVector{0, 0}));
}

TEST(WinProbability, Examples)
{
    for (int n = 2; n <= 5; ++n) {
        const Digraph g = make_cycle(n, n);
        EXPECT_EQ(win_probability(deterministic_point_from_digraph(g), g), 1);
        EXPECT_EQ(win_probability(CorrelationVector::constant(n, Rational(1, 2)), g), Rational(1, 2));
        EXPECT_EQ(win_probability(CorrelationVector::constant(n, 1), g), Rational(1, 2));
    }
    EXPECT_THROW(win_probability(CorrelationVector::constant(3, 1), Digraph(3)), std::invalid_argument);
    EXPECT_THROW(win_probability(CorrelationVector::constant(3, 1), make_cycle(2, 2)), std::invalid_argument);
}

TEST(WinProbability, StaysInUnitInterval)
{
    std::mt19937_64 rng(23);
    for (int t = 0; t < 500; ++t) {
        const int n = std::uniform_int_distribution<int>(2, 5)(rng);
        const Rational w = win_probability(random_point(n, rng), make_cycle(n, std::uniform_int_distribution<int>(2, n)(rng)));
        EXPECT_GE(w, 0);
        EXPECT_LE(w, 1);
    }
}

TEST(RunTest, Examples)
{
    const GraphicalTest two_cycle(make_cycle(2, 2), Rational(3, 4));
    const auto o = run_test(deterministic_point_from_digraph(make_cycle(2, 2)), two_cycle);
    EXPECT_EQ(o.verdict, Verdict::Fail);
    EXPECT_EQ(o.margin, Rational(1, 4));
    EXPECT_EQ(o.win_probability, 1);

    EXPECT_EQ(run_test(CorrelationVector::constant(2, Rational(1, 2)), two_cycle).verdict, Verdict::Pass);

    // one arc copied, the other answered with a constant: exactly 3/4
    const CorrelationVector saturating(2, {1, 1}, {0, 1});
    const auto s = run_test(saturating, two_cycle);
    EXPECT_EQ(s.win_probability, Rational(3, 4));
    EXPECT_EQ(s.margin, 0);
    EXPECT_EQ(s.verdict, Verdict::Pass);
}
