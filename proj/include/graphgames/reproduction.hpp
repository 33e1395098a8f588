#pragma once

// The acceptance checks, shared by the acceptance test binary and the
// `reproduce` subcommand. Every check is exact and seeded.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "graphgames/correlations.hpp"
#include "graphgames/decide.hpp"
#include "graphgames/digraphs.hpp"
#include "graphgames/inequalities.hpp"
#include "graphgames/oracle.hpp"
#include "graphgames/ratlin.hpp"

namespace graphgames::reproduction {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct Options {
    std::uint64_t seed = kDefaultSeed;
    /// Negative control: raises every kefalopoda bound by one.
    bool tamper = false;
};

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    std::size_t certificates = 0;
};

namespace detail {

using Rng = std::mt19937_64;

inline Rational random_unit(Rng& rng, int max_den = 12)
{
    const long den = std::uniform_int_distribution<long>(1, max_den)(rng);
    const long num = std::uniform_int_distribution<long>(0, den)(rng);
    return {num, den};
}

inline Rational random_between(Rng& rng, const Rational& lo, const Rational& hi, int max_den = 12)
{
    return lo + (hi - lo) * random_unit(rng, max_den);
}

/// Plain per-receiver maximum sum, written out here so that generators do not lean on the decider.
inline Rational max_in_weight_sum(int n, const RatVector& q)
{
    const ArcIndexing idx(n);
    Rational total = 0;
    for (int r = 0; r < n; ++r) {
        Rational best = 0;
        for (int s = 0; s < n; ++s)
            if (s != r && q[idx.index(s, r)] > best)
                best = q[idx.index(s, r)];
        total += best;
    }
    return total;
}

enum class Kind { InRange, Boundary, NearBoundary, OutOfRange, ZeroOne };

/// Random digraph-space vector of the requested kind.
inline RatVector random_vector(int n, Kind kind, Rng& rng)
{
    const std::size_t d = ArcIndexing(n).dimension();
    RatVector q(d);
    switch (kind) {
    case Kind::InRange:
        for (auto& x : q)
            x = random_unit(rng);
        break;
    case Kind::ZeroOne:
        for (auto& x : q)
            x = std::uniform_int_distribution<int>(0, 3)(rng) == 0 ? 1 : 0;
        break;
    case Kind::Boundary:
    case Kind::NearBoundary: {
        // entries high enough that the in-weight maxima sum to at least n - 1, then scale onto the boundary
        for (auto& x : q)
            x = random_between(rng, Rational(n - 1, n), Rational(1));
        const Rational s = max_in_weight_sum(n, q);
        Rational factor = Rational(n - 1) / s;
        if (kind == Kind::NearBoundary) {
            const Rational eps(1, std::uniform_int_distribution<long>(50, 5000)(rng));
            factor *= std::uniform_int_distribution<int>(0, 1)(rng) ? 1 + eps : 1 - eps;
        }
        for (auto& x : q)
            x = std::min(Rational(1), x * factor);
        break;
    }
    case Kind::OutOfRange: {
        for (auto& x : q)
            x = random_unit(rng);
        const auto i = std::uniform_int_distribution<std::size_t>(0, d - 1)(rng);
        const Rational excess = random_between(rng, Rational(1, 100), Rational(1));
        q[i] = std::uniform_int_distribution<int>(0, 1)(rng) ? Rational(1) + excess : Rational(-excess);
        break;
    }
    }
    return q;
}

inline Kind kind_for(std::size_t i)
{
    static const Kind cycle[] = {Kind::InRange,  Kind::Boundary, Kind::InRange,    Kind::NearBoundary, Kind::OutOfRange,
                                 Kind::ZeroOne,  Kind::Boundary, Kind::NearBoundary, Kind::InRange,    Kind::ZeroOne};
    return cycle[i % std::size(cycle)];
}

inline std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (const auto& p : parts)
        out += (out.empty() ? "" : "; ") + p;
    return out;
}

inline std::string rational_set(const std::set<Rational>& s)
{
    std::string out = "{";
    for (const auto& x : s)
        out += (out.size() > 1 ? ", " : "") + to_string(x);
    return out + "}";
}

inline DigraphInequality kefalopoda(int n, const VertexMap& f, const Options& opt)
{
    auto ineq = kefalopoda_inequality(n, f);
    if (opt.tamper)
        ineq.bound += 1;
    return ineq;
}

inline std::vector<VertexMap> fixed_point_free_maps(int n)
{
    std::vector<VertexMap> out;
    for_each_fixed_point_free_map(n, [&](const VertexMap& f) { out.push_back(f); });
    return out;
}

/// All labeled copies of the minimally strong digraphs on [n].
inline std::vector<Digraph> minimally_strong(int n) { return minimally_strong_digraphs(n); }

// Independent class predicates, straight from the definitions.

inline bool has_topological_order(const Digraph& g)
{
    const int n = g.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> pos(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
        bool ok = true;
        for (const auto& a : g.arcs())
            ok = ok && pos[static_cast<std::size_t>(a.from)] < pos[static_cast<std::size_t>(a.to)];
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline bool has_vertex_without_in_arcs(const Digraph& g)
{
    for (int v = 0; v < g.order(); ++v) {
        bool none = true;
        for (int u = 0; u < g.order(); ++u)
            none = none && (u == v || !g.has_arc(u, v));
        if (none)
            return true;
    }
    return false;
}

inline bool has_closed_future(const Digraph& g)
{
    const int n = g.order();
    for (unsigned f = 1; f + 1 < (1U << n); ++f) {
        bool closed = true;
        for (const auto& a : g.arcs())
            closed = closed && !(!((f >> a.from) & 1U) && ((f >> a.to) & 1U));
        if (closed)
            return true;
    }
    return false;
}

inline bool independent_in_class(const Digraph& g, PolytopeClass c)
{
    switch (c) {
    case PolytopeClass::Dag: return has_topological_order(g);
    case PolytopeClass::Source: return has_vertex_without_in_arcs(g);
    case PolytopeClass::NotStrong: return has_closed_future(g);
    }
    return false;
}

} // namespace detail

// ---------------------------------------------------------------------------
// 1. Bound table

inline CheckResult check_bounds(const Options& opt)
{
    CheckResult res{1, "bound table", true, "", 0, 0};
    std::vector<std::string> notes;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) {
            res.passed = false;
            notes.push_back("MISMATCH " + what);
        }
    };

    const Rational two_cycle = test_from_inequality(cycle_inequality(2, 2)).bound;
    expect(two_cycle == Rational(3, 4), "2-cycle bound " + to_string(two_cycle));

    for (int n : {3, 4}) {
        std::set<Rational> bounds;
        for (const auto& f : detail::fixed_point_free_maps(n))
            bounds.insert(test_from_inequality(detail::kefalopoda(n, f, opt)).bound);
        const std::set<Rational> want{n == 3 ? Rational(5, 6) : Rational(7, 8)};
        expect(bounds == want, "kefalopoda n=" + std::to_string(n) + " " + detail::rational_set(bounds));
    }

    for (int n : {3, 4}) {
        std::set<Rational> bounds;
        for (const auto& g : detail::minimally_strong(n))
            bounds.insert(test_from_inequality(minimally_strong_inequality(g)).bound);
        const std::set<Rational> want = n == 3 ? std::set<Rational>{Rational(5, 6), Rational(7, 8)}
                                               : std::set<Rational>{Rational(7, 8), Rational(9, 10), Rational(11, 12)};
        expect(bounds == want, "minimally strong n=" + std::to_string(n) + " " + detail::rational_set(bounds));
    }

    const Rational twisted = test_from_inequality(twisted_cylinder_inequality()).bound;
    expect(twisted == Rational(7, 8), "twisted cylinder " + to_string(twisted));

    Rational prev = 0;
    for (int k = 3; k <= 99; k += 2) {
        const Rational t = test_bound(Rational(5 * k - 1, 2), mobius_arcs(k).size());
        expect(t < Rational(11, 12) && t > prev, "mobius k=" + std::to_string(k) + " " + to_string(t));
        prev = t;
    }

    if (res.passed)
        notes.push_back("2-cycle 3/4; kefalopoda 5/6, 7/8; minimally strong {5/6, 7/8}, {7/8, 9/10, 11/12}; "
                        "twisted cylinder 7/8; mobius increasing, max " + to_string(prev) + " < 11/12 up to k = 99");
    res.detail = detail::join(notes);
    return res;
}

// ---------------------------------------------------------------------------
// 2 and 3. Facet certificates and tightness

struct CertificateJob {
    std::string label;
    DigraphInequality inequality;
    PolytopeClass polytope;
    int n;
    bool expect_facet;
    /// Set for game inequalities (alpha(G), c); tightness is then also checked through max_overlap.
    std::optional<Digraph> game;
};

inline std::vector<CertificateJob> certificate_jobs(const Options& opt)
{
    std::vector<CertificateJob> jobs;
    for (int n : {3, 4})
        for (const auto& f : detail::fixed_point_free_maps(n))
            jobs.push_back({"kefalopoda", detail::kefalopoda(n, f, opt), PolytopeClass::Source, n, true, make_kefalopoda(n, f)});

    for (int n : {2, 3, 4}) {
        const ArcIndexing idx(n);
        for (std::size_t i = 0; i < idx.dimension(); ++i) {
            const Arc a = idx.arc(i);
            jobs.push_back({"trivial lower", trivial_lower_inequality(n, a), PolytopeClass::Dag, n, true, {}});
            for (auto c : {PolytopeClass::Source, PolytopeClass::NotStrong}) {
                jobs.push_back({"trivial lower", trivial_lower_inequality(n, a), c, n, true, {}});
                jobs.push_back({n == 2 ? "trivial upper (n = 2, not a facet)" : "trivial upper", trivial_upper_inequality(n, a), c,
                                n, n >= 3, {}});
            }
        }
    }

    for (int n : {3, 4})
        for (const auto& g : detail::minimally_strong(n))
            jobs.push_back({"minimally strong", minimally_strong_inequality(g), PolytopeClass::NotStrong, n, true, g});

    jobs.push_back({"twisted cylinder", twisted_cylinder_inequality(), PolytopeClass::NotStrong, 4, true, make_twisted_cylinder()});

    for (int n : {3, 4, 5})
        for (int k = 2; k <= n; ++k)
            for (const auto& g : labeled_copies(make_cycle(n, k)))
                jobs.push_back({"cycle k=" + std::to_string(k), game_inequality(g, Rational(k - 1)), PolytopeClass::Dag, n, true, g});

    jobs.push_back({"2-fence", fence_inequality(4, 2), PolytopeClass::Dag, 4, true, make_fence(4, 2)});
    jobs.push_back({"3-mobius", mobius_inequality(6, 3), PolytopeClass::Dag, 6, true, make_mobius(6, 3)});
    return jobs;
}

struct CertificateRun {
    std::vector<CertificateJob> jobs;
    std::vector<FacetCertificate> certificates;
};

inline CertificateRun run_certificates(const Options& opt)
{
    CertificateRun run;
    run.jobs = certificate_jobs(opt);
    for (const auto& job : run.jobs)
        run.certificates.push_back(verify_facet(job.inequality, job.polytope, job.n));
    return run;
}

inline CheckResult check_facets(const CertificateRun& run)
{
    CheckResult res{2, "facet certificates", true, "", 0, run.certificates.size()};
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally; // label -> (matching, total)
    std::vector<std::string> notes;
    for (std::size_t i = 0; i < run.jobs.size(); ++i) {
        const auto& job = run.jobs[i];
        const auto& cert = run.certificates[i];
        const bool ok = cert.is_facet == job.expect_facet && (job.expect_facet || cert.valid);
        auto& t = tally[job.label];
        ++t.second;
        t.first += ok ? 1 : 0;
        if (!ok) {
            res.passed = false;
            if (notes.size() < 5)
                notes.push_back("FAILED " + job.label + " n=" + std::to_string(job.n) + " over " + to_string(job.polytope) +
                                ": valid=" + std::to_string(cert.valid) + " rank=" +
                                std::to_string(cert.affine_rank_of_saturators) + "/" + std::to_string(cert.ambient_dim - 1));
        }
        if (job.label == "3-mobius" && cert.members != 3781503) {
            res.passed = false;
            notes.push_back("DAG count at n=6 is " + std::to_string(cert.members) + ", expected 3781503");
        }
    }
    std::string summary;
    for (const auto& [label, t] : tally)
        summary += (summary.empty() ? "" : ", ") + label + " " + std::to_string(t.first) + "/" + std::to_string(t.second);
    notes.insert(notes.begin(), std::to_string(run.certificates.size()) + " certificates: " + summary +
                                    "; DAG count n=6 = 3781503");
    res.detail = detail::join(notes);
    return res;
}

inline CheckResult check_tightness(const CertificateRun& run)
{
    CheckResult res{3, "tightness", true, "", 0, 0};
    std::size_t overlaps = 0;
    std::vector<std::string> notes;
    for (std::size_t i = 0; i < run.jobs.size(); ++i) {
        const auto& job = run.jobs[i];
        const auto& cert = run.certificates[i];
        bool ok = cert.max_value == job.inequality.bound;
        if (job.game) {
            ++overlaps;
            ok = ok && Rational(static_cast<long>(max_overlap(job.polytope, job.n, *job.game))) == job.inequality.bound;
        }
        if (!ok) {
            res.passed = false;
            if (notes.size() < 5)
                notes.push_back("FAILED " + job.label + " n=" + std::to_string(job.n) + ": max " + to_string(cert.max_value) +
                                " vs bound " + to_string(job.inequality.bound));
        }
    }
    notes.insert(notes.begin(), "max over class equals the bound for " + std::to_string(run.jobs.size()) +
                                    " inequalities (" + std::to_string(overlaps) + " via max_overlap)");
    res.detail = detail::join(notes);
    return res;
}

// ---------------------------------------------------------------------------
// 4. Decider vs brute force

inline CheckResult check_oracle_equivalence(const Options& opt)
{
    CheckResult res{4, "oracle equivalence", true, "", 0, 0};
    detail::Rng rng(opt.seed ^ 0x4);
    std::vector<std::string> notes;
    for (int n = 3; n <= 6; ++n) {
        std::size_t accepted = 0, boundary = 0, out_of_range = 0, disagreements = 0;
        const std::size_t samples = 1000;
        for (std::size_t i = 0; i < samples; ++i) {
            const RatVector q = detail::random_vector(n, detail::kind_for(i), rng);
            const Decision dec = weak_source_digraph(n, q);
            const bool oracle = brute_force_weak_membership(n, q);
            disagreements += dec.accepted != oracle ? 1 : 0;
            accepted += oracle ? 1 : 0;
            if (std::holds_alternative<TrivialWitness>(dec.witness))
                ++out_of_range;
            else if (dec.score == n - 1)
                ++boundary;
        }
        notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(samples) + " vectors, " + std::to_string(accepted) +
                        " accepted, " + std::to_string(boundary) + " at score n-1, " + std::to_string(out_of_range) +
                        " out of range, " + std::to_string(disagreements) + " disagreements");
        if (disagreements != 0 || boundary == 0 || out_of_range == 0 || accepted == 0 || accepted == samples)
            res.passed = false;
    }
    res.detail = detail::join(notes);
    return res;
}

// ---------------------------------------------------------------------------
// 5. Projection lemma

/// Every (f, phi) rotated lift of a kefalopoda inequality at order n, deduplicated.
inline std::vector<LiftedInequality> rotated_lifted_kefalopoda(int n, std::size_t* pairs_seen = nullptr)
{
    const std::size_t d = ArcIndexing(n).dimension();
    std::vector<LiftedInequality> out;
    std::set<RatVector> seen;
    std::size_t pairs = 0;
    for (const auto& f : detail::fixed_point_free_maps(n)) {
        const LiftedInequality base = lift(kefalopoda_inequality(n, f));
        for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << d); ++signs) {
            SignVector phi(d);
            for (std::size_t i = 0; i < d; ++i)
                phi[i] = ((signs >> i) & 1U) ? -1 : 1;
            LiftedInequality r = rotate(base, phi);
            ++pairs;
            if (seen.insert(r.weights).second)
                out.push_back(std::move(r));
        }
    }
    if (pairs_seen)
        *pairs_seen = pairs;
    return out;
}

inline CheckResult check_projection_lemma(const Options& opt)
{
    CheckResult res{5, "projection lemma", true, "", 0, 0};
    const int n = 3;
    const std::size_t d = ArcIndexing(n).dimension();
    std::size_t pairs = 0;
    const auto facets = rotated_lifted_kefalopoda(n, &pairs);
    const std::size_t expected_distinct = 64; // (2(n-1))^n
    detail::Rng rng(opt.seed ^ 0x5);
    std::size_t accepted = 0, disagreements = 0;
    const std::size_t samples = 500;
    for (std::size_t i = 0; i < samples; ++i) {
        RatVector p0(d), p1(d);
        const int mode = static_cast<int>(i % 4);
        for (std::size_t j = 0; j < d; ++j) {
            if (mode == 0) {
                p0[j] = detail::random_unit(rng);
                p1[j] = detail::random_unit(rng);
            } else {
                // push the two blocks apart so that many points leave the weak set
                const Rational a = detail::random_between(rng, Rational(0), Rational(mode, 8));
                const Rational b = detail::random_between(rng, Rational(8 - mode, 8), Rational(1));
                const bool swap = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
                p0[j] = swap ? b : a;
                p1[j] = swap ? a : b;
            }
        }
        const CorrelationVector p(n, p0, p1);
        const RatVector flat = p.flat();
        bool direct = std::all_of(flat.begin(), flat.end(), [](const Rational& x) { return x >= 0 && x <= 1; });
        for (const auto& ineq : facets)
            direct = direct && !is_violated(ineq, flat);
        const bool decided = weakly_causal_correlations(p).accepted;
        disagreements += decided != direct ? 1 : 0;
        accepted += direct ? 1 : 0;
    }
    res.passed = disagreements == 0 && facets.size() == expected_distinct && accepted > 0 && accepted < samples;
    res.detail = std::to_string(samples) + " points at n=3 vs " + std::to_string(2 * d) + " trivial + " +
                 std::to_string(facets.size()) + " distinct rotated lifted kefalopoda inequalities (from " +
                 std::to_string(pairs) + " (f, phi) pairs); " + std::to_string(accepted) + " accepted, " +
                 std::to_string(disagreements) + " disagreements";
    return res;
}

// ---------------------------------------------------------------------------
// 6. Lifted and rotated facets

inline CheckResult check_lifted_facets(const Options& opt)
{
    CheckResult res{6, "lifted and rotated facets", true, "", 0, 0};
    const int n = 3;
    const std::size_t d = ArcIndexing(n).dimension();
    const auto maps = detail::fixed_point_free_maps(n);
    std::vector<LiftedInequality> todo;
    for (const auto& f : maps)
        todo.push_back(lift(detail::kefalopoda(n, f, opt)));
    detail::Rng rng(opt.seed ^ 0x6);
    for (int i = 0; i < 20; ++i) {
        const auto& f = maps[std::uniform_int_distribution<std::size_t>(0, maps.size() - 1)(rng)];
        SignVector phi(d);
        for (auto& s : phi)
            s = std::uniform_int_distribution<int>(0, 1)(rng) ? -1 : 1;
        todo.push_back(rotate(lift(detail::kefalopoda(n, f, opt)), phi));
    }
    std::size_t facets = 0;
    for (const auto& ineq : todo) {
        const auto cert = verify_lifted_facet(ineq, PolytopeClass::Source, n);
        facets += cert.is_facet && cert.affine_rank_of_saturators == 2 * d - 1 ? 1 : 0;
    }
    res.certificates = todo.size();
    res.passed = facets == todo.size();
    res.detail = std::to_string(facets) + "/" + std::to_string(todo.size()) +
                 " lifted kefalopoda inequalities (8 unrotated, 20 random rotations) facet-defining at n=3, saturating rank " +
                 std::to_string(2 * d - 1);
    return res;
}

// ---------------------------------------------------------------------------
// 7. Fractional Hamiltonian vertex

inline CheckResult check_hamiltonian_vertex(const Options&)
{
    CheckResult res{7, "fractional Hamiltonian vertex", true, "", 0, 0};
    const int n = 4;
    const RatVector q = fractional_hamiltonian_vertex();
    const auto rep = hamiltonian_vertex_report(n, q);

    struct Violation {
        std::string name;
        DigraphInequality ineq;
        Rational expected;
    };
    const Digraph star(4, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {0, 3}, {3, 0}});
    const std::vector<Violation> violations{
        {"2-cycle", cycle_inequality(n, 2), Rational(2)},
        {"kefalopoda", kefalopoda_inequality(n, {1, 0, 0, 0}), Rational(4)},
        {"minimally strong", minimally_strong_inequality(star), Rational(6)},
    };
    std::vector<std::string> notes{"feasible=" + std::to_string(rep.feasible) + ", max Hamiltonian cycle value " +
                                   to_string(rep.max_cycle_value) + ", " + std::to_string(rep.active_constraints) +
                                   " active constraints of rank " + std::to_string(rep.active_rank)};
    res.passed = rep.feasible && rep.is_vertex && rep.max_cycle_value == 3 && rep.active_rank == 12;
    for (const auto& v : violations) {
        const Rational value = evaluate(v.ineq, q);
        Rational total = 0;
        for (const auto& w : v.ineq.weights)
            total += w;
        const bool ok = value == v.expected && value > v.ineq.bound && value == total;
        res.passed = res.passed && ok;
        notes.push_back(v.name + " " + to_string(value) + " > " + to_string(v.ineq.bound) + (ok ? " (maximal)" : " MISMATCH"));
    }
    res.detail = detail::join(notes);
    return res;
}

// ---------------------------------------------------------------------------
// 8. Signaling digraphs of the extremal points

inline CheckResult check_gamma_sets(const Options&)
{
    CheckResult res{8, "signaling digraph sets", true, "", 0, 0};
    const int n = 3;
    const std::size_t d = ArcIndexing(n).dimension();
    std::vector<std::string> notes;
    for (auto c : {PolytopeClass::Dag, PolytopeClass::Source, PolytopeClass::NotStrong}) {
        std::set<ArcMask> expected;
        for (ArcMask m = 0; m < (ArcMask{1} << d); ++m)
            if (detail::independent_in_class(Digraph::from_mask(n, m), c))
                expected.insert(m);

        std::set<ArcMask> enumerated;
        std::set<CorrelationMask> enumerated_points;
        enumerate_extremal_correlations(n, c, [&](const CorrelationVector& p) {
            enumerated.insert(signaling_digraph(p).adjacency_mask());
        });
        enumerate_extremal_correlation_masks(n, c, [&](CorrelationMask m) { enumerated_points.insert(m); });

        const auto operational = operational_extremal_points(n, c);
        std::set<ArcMask> operational_digraphs;
        for (const auto& m : operational)
            operational_digraphs.insert(signaling_digraph(to_correlation_vector(n, m)).adjacency_mask());

        const bool ok = enumerated == expected && operational_digraphs == expected && operational == enumerated_points;
        res.passed = res.passed && ok;
        notes.push_back(to_string(c) + ": " + std::to_string(expected.size()) + " digraphs, " +
                        std::to_string(enumerated_points.size()) + " extremal points" + (ok ? "" : " MISMATCH"));
    }
    res.detail = detail::join(notes);
    return res;
}

// ---------------------------------------------------------------------------
// 9. Weak polytope vs convex hull

inline CheckResult check_weak_equals_hull(const Options& opt)
{
    CheckResult res{9, "weak polytope equals source-digraph polytope", true, "", 0, 0};
    detail::Rng rng(opt.seed ^ 0x9);
    std::vector<std::string> notes;
    for (int n : {3, 4}) {
        const ClassHull hull(n, PolytopeClass::Source, ClassHull::Space::Digraph);
        std::size_t accepted = 0, disagreements = 0, boundary = 0;
        const std::size_t samples = 200;
        for (std::size_t i = 0; i < samples; ++i) {
            detail::Kind kind = detail::kind_for(i);
            if (kind == detail::Kind::OutOfRange)
                kind = detail::Kind::InRange;
            const RatVector q = detail::random_vector(n, kind, rng);
            const Decision dec = weak_source_digraph(n, q);
            const bool inside = hull.contains(q);
            disagreements += dec.accepted != inside ? 1 : 0;
            accepted += inside ? 1 : 0;
            boundary += dec.score == n - 1 ? 1 : 0;
        }
        notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(samples) + " vectors, " + std::to_string(accepted) +
                        " accepted, " + std::to_string(boundary) + " at score n-1, " + std::to_string(disagreements) +
                        " disagreements");
        if (disagreements != 0 || accepted == 0 || accepted == samples)
            res.passed = false;
    }
    res.detail = detail::join(notes);
    return res;
}

// ---------------------------------------------------------------------------

template <class F>
CheckResult timed(F&& f)
{
    const auto start = std::chrono::steady_clock::now();
    CheckResult r = f();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline constexpr int kCheckCount = 9;

/// Runs the checks with the given ids (all when empty), calling `report` after each.
inline std::vector<CheckResult> run(const Options& opt, const std::vector<int>& ids = {},
                                    const std::function<void(const CheckResult&)>& report = {})
{
    auto wanted = [&](int id) { return ids.empty() || std::find(ids.begin(), ids.end(), id) != ids.end(); };
    std::vector<CheckResult> out;
    auto push = [&](CheckResult r) {
        if (report)
            report(r);
        out.push_back(std::move(r));
    };
    if (wanted(1))
        push(timed([&] { return check_bounds(opt); }));
    if (wanted(2) || wanted(3)) {
        const auto start = std::chrono::steady_clock::now();
        const CertificateRun certs = run_certificates(opt);
        const double cert_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (wanted(2)) {
            CheckResult r = check_facets(certs);
            r.seconds = cert_seconds;
            push(std::move(r));
        }
        if (wanted(3))
            push(timed([&] { return check_tightness(certs); }));
    }
    if (wanted(4))
        push(timed([&] { return check_oracle_equivalence(opt); }));
    if (wanted(5))
        push(timed([&] { return check_projection_lemma(opt); }));
    if (wanted(6))
        push(timed([&] { return check_lifted_facets(opt); }));
    if (wanted(7))
        push(timed([&] { return check_hamiltonian_vertex(opt); }));
    if (wanted(8))
        push(timed([&] { return check_gamma_sets(opt); }));
    if (wanted(9))
        push(timed([&] { return check_weak_equals_hull(opt); }));
    return out;
}

} // namespace graphgames::reproduction
