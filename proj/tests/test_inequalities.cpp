#include <gtest/gtest.h>

#include <random>

#include "graphgames/inequalities.hpp"

using namespace graphgames;

namespace {

CorrelationVector random_point(int n, std::mt19937_64& rng)
{
    const std::size_t d = ArcIndexing(n).dimension();
    RatVector p0(d), p1(d);
    for (std::size_t i = 0; i < d; ++i) {
        const long den = std::uniform_int_distribution<long>(1, 8)(rng);
        p0[i] = Rational(std::uniform_int_distribution<long>(0, den)(rng), den);
        p1[i] = Rational(std::uniform_int_distribution<long>(0, den)(rng), den);
    }
    return {n, p0, p1};
}

SignVector random_signs(std::size_t d, std::mt19937_64& rng)
{
    SignVector phi(d);
    for (auto& s : phi)
        s = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
    return phi;
}

} // namespace

TEST(OrderFromDimension, Examples)
{
    EXPECT_EQ(order_from_dimension(2), 2);
    EXPECT_EQ(order_from_dimension(12), 4);
    EXPECT_EQ(order_from_dimension(0), 1);
    EXPECT_THROW(order_from_dimension(5), std::invalid_argument);
}

TEST(Families, Bounds)
{
    EXPECT_EQ(cycle_inequality(4, 3).bound, 2);
    EXPECT_EQ(fence_inequality(4, 2).bound, 3);
    EXPECT_EQ(fence_inequality(6, 3).bound, 7);
    EXPECT_EQ(mobius_inequality(6, 3).bound, 7);
    EXPECT_EQ(mobius_inequality(10, 5).bound, 12);
    EXPECT_EQ(kefalopoda_inequality(4, {1, 0, 0, 0}).bound, 3);
    EXPECT_EQ(twisted_cylinder_inequality().bound, 6);
    EXPECT_EQ(hamiltonian_inequality(5).bound, 4);
    EXPECT_EQ(minimally_strong_inequality(make_cycle(3, 3)).bound, 2);
    EXPECT_THROW(minimally_strong_inequality(make_cycle(4, 3)), std::invalid_argument);
}

TEST(Families, TrivialInequalities)
{
    const auto lo = trivial_lower_inequality(3, {1, 2});
    const auto hi = trivial_upper_inequality(3, {1, 2});
    const std::size_t i = ArcIndexing(3).index(1, 2);
    EXPECT_EQ(lo.weights[i], -1);
    EXPECT_EQ(lo.bound, 0);
    EXPECT_EQ(hi.weights[i], 1);
    EXPECT_EQ(hi.bound, 1);
    EXPECT_FALSE(lo.is_non_negative());
    EXPECT_FALSE(hi.is_nontrivial());
    EXPECT_TRUE(cycle_inequality(3, 2).is_nontrivial());
}

TEST(Families, ParseAndDispatch)
{
    for (Family f : {Family::Cycle, Family::Fence, Family::Mobius, Family::Kefalopoda, Family::MinimallyStrong,
                     Family::TwistedCylinder, Family::Hamiltonian, Family::TrivialLower, Family::TrivialUpper})
        EXPECT_EQ(parse_family(to_string(f)), f);
    EXPECT_THROW(parse_family("pentagon"), std::invalid_argument);

    FamilyParams p;
    p.n = 4;
    p.k = 3;
    EXPECT_EQ(family_inequality(Family::Cycle, p), cycle_inequality(4, 3));
    EXPECT_THROW(family_inequality(Family::MinimallyStrong, p), std::invalid_argument);
    p.f = {1, 2, 3, 0};
    EXPECT_EQ(family_inequality(Family::Kefalopoda, p), kefalopoda_inequality(4, p.f));
}

TEST(TestBound, Examples)
{
    EXPECT_EQ(test_from_inequality(cycle_inequality(2, 2)).bound, Rational(3, 4));
    EXPECT_EQ(test_from_inequality(kefalopoda_inequality(4, {1, 0, 0, 0})).bound, Rational(7, 8));
    EXPECT_EQ(test_from_inequality(mobius_inequality(6, 3)).bound, Rational(8, 9));
    EXPECT_EQ(test_from_inequality(twisted_cylinder_inequality()).bound, Rational(7, 8));
    EXPECT_THROW(test_bound(1, 0), std::invalid_argument);
    EXPECT_THROW(test_from_inequality(trivial_upper_inequality(3, {0, 1})), std::invalid_argument);
    EXPECT_THROW(test_from_inequality(trivial_lower_inequality(3, {0, 1})), std::invalid_argument);
}

TEST(TestBound, ClosedFormsUpToTwelve)
{
    for (int n = 2; n <= 12; ++n) {
        for (int k = 2; k <= n; ++k)
            EXPECT_EQ(test_from_inequality(cycle_inequality(n, k)).bound, 1 - Rational(1, 2 * k));
        for (int k = 2; 2 * k <= n; ++k)
            EXPECT_EQ(test_from_inequality(fence_inequality(n, k)).bound,
                      Rational(1, 2) + Rational(k * k - k + 1, 2 * k * k));
        for (int k = 3; 2 * k <= n; k += 2)
            EXPECT_EQ(test_from_inequality(mobius_inequality(n, k)).bound, Rational(11 * k - 1, 12 * k));
        VertexMap f(static_cast<std::size_t>(n), 0);
        f[0] = 1;
        EXPECT_EQ(test_from_inequality(kefalopoda_inequality(n, f)).bound, 1 - Rational(1, 2 * n));
    }
}

TEST(TestBound, MobiusIncreasesWithK)
{
    Rational prev = 0;
    for (int k = 3; k <= 99; k += 2) {
        const Rational t = test_bound(Rational(5 * k - 1, 2), mobius_arcs(k).size());
        EXPECT_GT(t, prev);
        EXPECT_LT(t, Rational(11, 12));
        prev = t;
    }
}

TEST(Relabel, Examples)
{
    const auto c = cycle_inequality(3, 2);
    const std::vector<int> perm{2, 0, 1};
    const auto r = relabel(c, perm);
    EXPECT_EQ(r, game_inequality(make_cycle(3, 2).relabeled(perm), 1));
    EXPECT_THROW(relabel(c, std::vector<int>{0, 1}), std::invalid_argument);
    EXPECT_THROW(relabel(c, std::vector<int>{0, 0, 1}), std::invalid_argument);
}

TEST(Relabel, PreservesValueUnderSimultaneousRelabeling)
{
    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; ++t) {
        const int n = 4;
        std::vector<int> perm{0, 1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto ineq = kefalopoda_inequality(n, {1, 2, 3, 0});
        const Digraph d = Digraph::from_mask(n, std::uniform_int_distribution<ArcMask>(0, (1U << 12) - 1)(rng));
        EXPECT_EQ(evaluate(relabel(ineq, perm), adjacency_vector(d.relabeled(perm))), evaluate(ineq, adjacency_vector(d)));
    }
}

TEST(Lift, Examples)
{
    const auto l = lift(cycle_inequality(2, 2));
    EXPECT_EQ(l.weights, (RatVector{1, 1, -1, -1}));
    EXPECT_EQ(l.bound, 1);
    EXPECT_EQ(l.phi, (SignVector{1, 1}));
    const auto r = rotate(l, {1, -1});
    EXPECT_EQ(r.weights, (RatVector{1, -1, -1, 1}));
    EXPECT_EQ(r.phi, (SignVector{1, -1}));
    EXPECT_THROW(rotate(l, {1}), std::invalid_argument);
    EXPECT_THROW(rotate(l, {1, 0}), std::invalid_argument);
}

TEST(Lift, ValueOnDeterministicPointsMatchesDigraphValue)
{
    const auto ineq = kefalopoda_inequality(3, {1, 2, 0});
    const auto l = lift(ineq);
    for (ArcMask m = 0; m < 64; ++m) {
        const Digraph d = Digraph::from_mask(3, m);
        EXPECT_EQ(evaluate(l, deterministic_point_from_digraph(d)), evaluate(ineq, adjacency_vector(d)));
    }
}

TEST(Lift, BoundedByProjectedValueForNonNegativeWeights)
{
    std::mt19937_64 rng(32);
    const auto ineq = cycle_inequality(4, 4);
    const auto l = lift(ineq);
    for (int t = 0; t < 300; ++t) {
        const auto p = random_point(4, rng);
        EXPECT_LE(evaluate(l, p), evaluate(ineq, project_abs_diff(p)));
    }
}

TEST(Rotate, IsAnInvolution)
{
    std::mt19937_64 rng(33);
    const auto l = lift(fence_inequality(4, 2));
    for (int t = 0; t < 50; ++t) {
        const auto phi = random_signs(l.source.dimension(), rng);
        EXPECT_EQ(rotate(rotate(l, phi), phi), l);
    }
}

TEST(Rotate, MatchesFlipBlock)
{
    std::mt19937_64 rng(34);
    for (int t = 0; t < 200; ++t) {
        const int n = std::uniform_int_distribution<int>(2, 4)(rng);
        const auto l = lift(hamiltonian_inequality(n));
        const auto phi = random_signs(l.source.dimension(), rng);
        const auto p = random_point(n, rng);
        EXPECT_EQ(evaluate(rotate(l, phi), p), evaluate(l, flip_block(p, phi)));
        EXPECT_EQ(flip_block(flip_block(p, phi), phi), p);
    }
}

TEST(Hamiltonian, IsKefalopodaAndMinimallyStrong)
{
    for (int n = 2; n <= 8; ++n) {
        const Digraph h = make_cycle(n, n);
        EXPECT_TRUE(is_kefalopoda(h).has_value());
        EXPECT_TRUE(is_minimally_strong(h));
        EXPECT_EQ(hamiltonian_inequality(n), minimally_strong_inequality(h));
        EXPECT_EQ(hamiltonian_inequality(n), kefalopoda_inequality(n, *is_kefalopoda(h)));
    }
}

TEST(Evaluate, Errors)
{
    EXPECT_THROW(evaluate(cycle_inequality(3, 2), RatVector(2)), std::invalid_argument);
    EXPECT_THROW(evaluate(lift(cycle_inequality(3, 2)), RatVector(6)), std::invalid_argument);
    EXPECT_FALSE(is_violated(cycle_inequality(2, 2), RatVector{1, 0}));
    EXPECT_TRUE(is_violated(cycle_inequality(2, 2), RatVector{1, Rational(1, 100)}));
}
