#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "graphgames/decide.hpp"
#include "graphgames/oracle.hpp"

using namespace graphgames;

namespace {

RatVector random_unit_vector(std::size_t d, std::mt19937_64& rng)
{
    RatVector v(d);
    for (auto& x : v) {
        const long den = std::uniform_int_distribution<long>(1, 8)(rng);
        x = Rational(std::uniform_int_distribution<long>(0, den)(rng), den);
    }
    return v;
}

// Rescaled so the score lands on, just under or just over n - 1.
RatVector near_boundary(int n, std::mt19937_64& rng)
{
    RatVector q = random_unit_vector(ArcIndexing(n).dimension(), rng);
    const Rational s = weak_source_digraph(n, q).score;
    if (s == 0)
        return q;
    Rational factor = (Rational(n - 1) + Rational(std::uniform_int_distribution<int>(-1, 1)(rng), 11)) / s;
    if (factor > 1)
        factor = 1;
    for (auto& x : q)
        x *= factor;
    return q;
}

double seconds_for(int n, int reps)
{
    const std::size_t d = ArcIndexing(n).dimension();
    const RatVector q(d, Rational(1, 3));
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i)
        (void)weak_source_digraph(n, q);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

TEST(WeakSourceDigraph, Examples)
{
    EXPECT_TRUE(weak_source_digraph(2, {1, 0}).accepted);
    EXPECT_FALSE(weak_source_digraph(2, {1, 1}).accepted);
    EXPECT_EQ(weak_source_digraph(2, {1, 1}).score, 2);

    const auto zero = weak_source_digraph(4, RatVector(12, 0));
    EXPECT_TRUE(zero.accepted);
    EXPECT_EQ(zero.score, 0);
    EXPECT_TRUE(std::holds_alternative<std::monostate>(zero.witness));

    // every vertex of a kefalopoda digraph has an in-arc
    const auto k = weak_source_digraph(4, adjacency_vector(make_kefalopoda(4, {1, 0, 0, 0})));
    EXPECT_FALSE(k.accepted);
    EXPECT_EQ(k.score, 4);
    const auto drop = weak_source_digraph(4, adjacency_vector(make_kefalopoda(4, {1, 0, 0, 0}).without_arc({1, 0})));
    EXPECT_TRUE(drop.accepted);
    EXPECT_EQ(drop.score, 3);

    const auto frac = weak_source_digraph(4, fractional_hamiltonian_vertex());
    EXPECT_FALSE(frac.accepted);
    EXPECT_EQ(frac.score, 4);
}

TEST(WeakSourceDigraph, TieBreakPicksSmallestSender)
{
    const auto d = weak_source_digraph(3, RatVector(6, 1));
    ASSERT_TRUE(std::holds_alternative<KefalopodaWitness>(d.witness));
    EXPECT_EQ(std::get<KefalopodaWitness>(d.witness).f, (VertexMap{1, 0, 0}));
}

TEST(WeakSourceDigraph, FirstOutOfRangeCoordinateRejects)
{
    RatVector q(6, Rational(1, 2));
    q[2] = Rational(-1, 5);
    q[4] = 2;
    const auto d = weak_source_digraph(3, q);
    EXPECT_FALSE(d.accepted);
    EXPECT_EQ(d.score, 0);
    ASSERT_TRUE(std::holds_alternative<TrivialWitness>(d.witness));
    const auto& t = std::get<TrivialWitness>(d.witness);
    EXPECT_EQ(t.coordinate, 2U);
    EXPECT_FALSE(t.upper);
    EXPECT_EQ(t.value, Rational(-1, 5));
    EXPECT_EQ(t.arc, ArcIndexing(3).arc(2));
}

TEST(WeakSourceDigraph, DimensionErrors)
{
    EXPECT_THROW(weak_source_digraph(3, RatVector(5)), std::invalid_argument);
    EXPECT_THROW(weak_source_digraph(1, RatVector{}), std::invalid_argument);
    EXPECT_THROW(weakly_causal_correlations(3, RatVector(6), RatVector(5)), std::invalid_argument);
    EXPECT_THROW(weakly_causal_correlations(0, RatVector{}, RatVector{}), std::invalid_argument);
}

TEST(WeakSourceDigraph, AgreesWithBruteForce)
{
    std::mt19937_64 rng(51);
    for (int n = 2; n <= 6; ++n) {
        int accepted = 0;
        for (int t = 0; t < 200; ++t) {
            const RatVector q = near_boundary(n, rng);
            const auto d = weak_source_digraph(n, q);
            EXPECT_EQ(d.accepted, brute_force_weak_membership(n, q));
            accepted += d.accepted ? 1 : 0;
        }
        EXPECT_GT(accepted, 0) << n;
        EXPECT_LT(accepted, 200) << n;
    }
}

TEST(WeakSourceDigraph, WitnessInequalityIsViolated)
{
    std::mt19937_64 rng(52);
    for (int t = 0; t < 300; ++t) {
        const int n = std::uniform_int_distribution<int>(2, 8)(rng);
        RatVector q = near_boundary(n, rng);
        if (t % 5 == 0)
            q[std::uniform_int_distribution<std::size_t>(0, q.size() - 1)(rng)] = Rational(3, 2);
        const auto d = weak_source_digraph(n, q);
        const auto ineq = violated_inequality(n, d);
        EXPECT_EQ(ineq.has_value(), !d.accepted);
        if (ineq) {
            EXPECT_TRUE(is_violated(*ineq, q));
        }
        if (const auto* k = std::get_if<KefalopodaWitness>(&d.witness)) {
            EXPECT_EQ(evaluate(kefalopoda_inequality(n, k->f), q), d.score);
        }
    }
}

TEST(WeakSourceDigraph, MonotoneUnderDecrease)
{
    std::mt19937_64 rng(53);
    for (int t = 0; t < 300; ++t) {
        const int n = std::uniform_int_distribution<int>(2, 7)(rng);
        RatVector q = near_boundary(n, rng);
        if (!weak_source_digraph(n, q).accepted)
            continue;
        for (auto& x : q)
            if (std::uniform_int_distribution<int>(0, 2)(rng) == 0)
                x *= Rational(1, 2);
        EXPECT_TRUE(weak_source_digraph(n, q).accepted);
    }
}

TEST(WeakSourceDigraph, RoughlyLinearInDimension)
{
    // 4x the dimension; allow a wide margin for noisy machines
    (void)seconds_for(30, 20);
    const double small = seconds_for(30, 200);
    const double large = seconds_for(60, 200);
    EXPECT_LT(large, 20 * small + 0.05);
}

TEST(WeaklyCausalCorrelations, Examples)
{
    EXPECT_TRUE(weakly_causal_correlations(CorrelationVector::constant(3, Rational(1, 2))).accepted);
    EXPECT_FALSE(weakly_causal_correlations(deterministic_point_from_digraph(make_cycle(3, 3))).accepted);
    EXPECT_TRUE(weakly_causal_correlations(deterministic_point_from_digraph(make_cycle(3, 2))).accepted);
    EXPECT_FALSE(weakly_causal_correlations(deterministic_point_from_digraph(make_cycle(2, 2))).accepted);

    const auto bad = weakly_causal_correlations(2, {1, 0}, {Rational(1, 2), Rational(3, 2)});
    EXPECT_FALSE(bad.accepted);
    const auto& t = std::get<TrivialWitness>(bad.witness);
    EXPECT_EQ(t.coordinate, 3U);
    EXPECT_TRUE(t.upper);
    EXPECT_EQ(t.arc, (Arc{1, 0}));
}

TEST(WeaklyCausalCorrelations, MatchesSourceHullAtTwoAndThreeParties)
{
    std::mt19937_64 rng(54);
    for (int n = 2; n <= 3; ++n) {
        const ClassHull hull(n, PolytopeClass::Source, ClassHull::Space::Correlation);
        const std::size_t d = ArcIndexing(n).dimension();
        const int trials = n == 2 ? 200 : 25;
        for (int t = 0; t < trials; ++t) {
            const CorrelationVector p(n, random_unit_vector(d, rng), random_unit_vector(d, rng));
            EXPECT_EQ(weakly_causal_correlations(p).accepted, hull.contains(p.flat()));
        }
    }
}
