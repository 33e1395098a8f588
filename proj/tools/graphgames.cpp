// graphgames: command-line front end.
//
// Exit codes: 0 success / accepted / pass, 1 semantic negative (rejected,
// failed test, non-facet, failed check), 2 usage or parse error.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "graphgames/correlations.hpp"
#include "graphgames/decide.hpp"
#include "graphgames/digraphs.hpp"
#include "graphgames/inequalities.hpp"
#include "graphgames/io.hpp"
#include "graphgames/oracle.hpp"
#include "graphgames/reproduction.hpp"

namespace gg = graphgames;
namespace io = graphgames::io;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string approx(const gg::Rational& r) { return gg::to_decimal(r, 6) + " (approx, display only)"; }

std::vector<gg::Arc> parse_arc_list(const std::string& text)
{
    std::vector<gg::Arc> arcs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto sep = item.find_first_of(":>-");
        if (sep == std::string::npos)
            throw UsageError("arc \"" + item + "\" is not of the form i:j");
        try {
            arcs.push_back({std::stoi(item.substr(0, sep)), std::stoi(item.substr(sep + 1))});
        } catch (const std::exception&) {
            throw UsageError("arc \"" + item + "\" is not of the form i:j");
        }
    }
    return arcs;
}

// ---------------------------------------------------------------------------
// gen-game

struct GenGameArgs {
    std::string family;
    int n = 0;
    int k = 0;
    std::vector<int> f;
    std::string arcs;
    std::string digraph_file;
    std::string out;
    bool approx = false;
};

int cmd_gen_game(const GenGameArgs& a)
{
    gg::Family family;
    try {
        family = gg::parse_family(a.family);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (family == gg::Family::TrivialLower || family == gg::Family::TrivialUpper)
        throw UsageError("trivial inequalities do not define a game");

    gg::FamilyParams p;
    p.n = family == gg::Family::TwistedCylinder && a.n == 0 ? 4 : a.n;
    p.k = a.k;
    p.f = a.f;
    if (family == gg::Family::MinimallyStrong) {
        if (!a.digraph_file.empty())
            p.game = io::digraph_from_json(io::read_json_file(a.digraph_file));
        else if (!a.arcs.empty())
            p.game = gg::Digraph(p.n, parse_arc_list(a.arcs));
        else
            throw UsageError("minstrong needs --arcs or --digraph");
    }
    if (family == gg::Family::TwistedCylinder && p.n != 4)
        throw UsageError("the twisted cylinder has exactly 4 vertices");

    gg::DigraphInequality ineq;
    try {
        ineq = gg::family_inequality(family, p);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const gg::GraphicalTest test = gg::test_from_inequality(ineq);

    std::cout << "family " << gg::to_string(family) << "\n";
    std::cout << "n " << test.game.order() << "\n";
    std::cout << "arcs " << test.game.arc_count() << "\n";
    std::cout << "inequality bound " << gg::to_string(ineq.bound) << "\n";
    std::cout << "test bound " << gg::to_string(test.bound) << "\n";
    if (a.approx)
        std::cout << "test bound approx " << approx(test.bound) << "\n";
    if (!a.out.empty()) {
        const std::string files[] = {a.out + ".digraph.json", a.out + ".test.json", a.out + ".ineq.json"};
        io::write_file(files[0], io::dump(io::to_json(test.game)));
        io::write_file(files[1], io::dump(io::to_json(test)));
        io::write_file(files[2], io::dump(io::to_json(ineq)));
        for (const auto& f : files)
            std::cout << "wrote " << f << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
    std::string correlations;
    std::string test;
    bool json = false;
    bool approx = false;
};

int cmd_eval(const EvalArgs& a)
{
    const gg::CorrelationVector p = io::correlations_from_json(io::read_json_file(a.correlations));
    const gg::GraphicalTest t = io::test_from_json(io::read_json_file(a.test));
    if (p.order() != t.game.order())
        throw io::ParseError("correlations have n = " + std::to_string(p.order()) + " but the test game has n = " +
                             std::to_string(t.game.order()));
    const gg::TestOutcome o = gg::run_test(p, t);
    if (a.json) {
        auto j = io::to_json(o);
        j["bound"] = gg::to_string(t.bound);
        std::cout << io::dump(j);
    } else {
        std::cout << "verdict " << gg::to_string(o.verdict) << "\n";
        std::cout << "win_probability " << gg::to_string(o.win_probability) << "\n";
        std::cout << "bound " << gg::to_string(t.bound) << "\n";
        std::cout << "margin " << gg::to_string(o.margin) << "\n";
        if (a.approx) {
            std::cout << "win_probability approx " << approx(o.win_probability) << "\n";
            std::cout << "margin approx " << approx(o.margin) << "\n";
        }
    }
    return o.verdict == gg::Verdict::Pass ? kOk : kNegative;
}

// ---------------------------------------------------------------------------
// decide

struct DecideArgs {
    std::string input;
    bool approx = false;
};

int cmd_decide(const DecideArgs& a)
{
    const io::Json j = io::read_json_file(a.input);
    gg::Decision d;
    if (j.is_object() && j.contains("q")) {
        const auto v = io::digraph_vector_from_json(j);
        d = gg::weak_source_digraph(v.n, v.q);
    } else if (j.is_object() && j.contains("p0")) {
        const auto r = io::raw_correlations_from_json(j);
        d = gg::weakly_causal_correlations(r.n, r.p0, r.p1);
    } else {
        throw io::ParseError(a.input + ": expected a digraph vector {\"n\", \"q\"} or correlations {\"n\", \"p0\", \"p1\"}");
    }
    auto out = io::to_json(d);
    if (a.approx)
        out["score_approx"] = approx(d.score);
    std::cout << io::dump(out);
    return d.accepted ? kOk : kNegative;
}

// ---------------------------------------------------------------------------
// verify-facets

struct VerifyArgs {
    std::string polytope;
    int n = 0;
    bool all_kefalopoda = false;
    bool all_minstrong = false;
    bool twisted_cylinder = false;
    bool trivial = false;
    bool hamiltonian = false;
    bool all = false;
    bool lifted = false;
    std::optional<int> mobius_k;
    std::optional<int> cycle_k;
    std::optional<int> fence_k;
    std::string inequality_file;
    bool json = false;
    int jobs = 1;
};

struct Job {
    std::string label;
    gg::DigraphInequality inequality;
};

std::vector<Job> collect_jobs(const VerifyArgs& a, gg::PolytopeClass c)
{
    std::vector<Job> jobs;
    const int n = a.n;
    auto add_cycles = [&](int k) {
        for (const auto& g : gg::labeled_copies(gg::make_cycle(n, k)))
            jobs.push_back({"cycle k=" + std::to_string(k), gg::game_inequality(g, gg::Rational(k - 1))});
    };
    auto add_kefalopoda = [&] {
        gg::for_each_fixed_point_free_map(n, [&](const gg::VertexMap& f) {
            std::string label = "kefalopoda f=";
            for (std::size_t i = 0; i < f.size(); ++i)
                label += (i ? "," : "") + std::to_string(f[i]);
            jobs.push_back({label, gg::kefalopoda_inequality(n, f)});
        });
    };
    auto add_minstrong = [&] {
        for (const auto& g : gg::minimally_strong_digraphs(n))
            jobs.push_back({"minstrong |A|=" + std::to_string(g.arc_count()), gg::minimally_strong_inequality(g)});
    };
    auto add_trivial = [&] {
        const gg::ArcIndexing idx(n);
        for (std::size_t i = 0; i < idx.dimension(); ++i) {
            const auto arc = idx.arc(i);
            const std::string at = " " + std::to_string(arc.from) + "->" + std::to_string(arc.to);
            jobs.push_back({"trivial-lower" + at, gg::trivial_lower_inequality(n, arc)});
            jobs.push_back({"trivial-upper" + at, gg::trivial_upper_inequality(n, arc)});
        }
    };

    if (a.all_kefalopoda)
        add_kefalopoda();
    if (a.all_minstrong)
        add_minstrong();
    if (a.twisted_cylinder)
        jobs.push_back({"twisted-cylinder", gg::twisted_cylinder_inequality()});
    if (a.trivial)
        add_trivial();
    if (a.hamiltonian)
        jobs.push_back({"hamiltonian", gg::hamiltonian_inequality(n)});
    if (a.cycle_k)
        add_cycles(*a.cycle_k);
    if (a.fence_k)
        jobs.push_back({"fence k=" + std::to_string(*a.fence_k), gg::fence_inequality(n, *a.fence_k)});
    if (a.mobius_k)
        jobs.push_back({"mobius k=" + std::to_string(*a.mobius_k), gg::mobius_inequality(n, *a.mobius_k)});
    if (!a.inequality_file.empty())
        jobs.push_back({a.inequality_file, io::inequality_from_json(io::read_json_file(a.inequality_file))});
    if (a.all) {
        add_trivial();
        switch (c) {
        case gg::PolytopeClass::Dag:
            for (int k = 2; k <= n; ++k)
                add_cycles(k);
            for (int k = 3; 2 * k <= n; ++k)
                jobs.push_back({"fence k=" + std::to_string(k), gg::fence_inequality(n, k)});
            for (int k = 3; 2 * k <= n; k += 2)
                jobs.push_back({"mobius k=" + std::to_string(k), gg::mobius_inequality(n, k)});
            break;
        case gg::PolytopeClass::Source: add_kefalopoda(); break;
        case gg::PolytopeClass::NotStrong:
            add_minstrong();
            if (n == 4)
                jobs.push_back({"twisted-cylinder", gg::twisted_cylinder_inequality()});
            break;
        }
    }
    return jobs;
}

int cmd_verify_facets(const VerifyArgs& a)
{
    gg::PolytopeClass c;
    try {
        c = gg::parse_polytope_class(a.polytope);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::vector<Job> jobs;
    try {
        jobs = collect_jobs(a, c);
    } catch (const gg::CapExceeded&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (jobs.empty())
        throw UsageError("nothing to verify; pick a family flag or --all");
    if (a.lifted)
        for (const auto& j : jobs)
            if (!j.inequality.is_nontrivial() || !j.inequality.is_non_negative())
                throw UsageError("--lifted needs non-negative nontrivial inequalities (" + j.label + ")");
    for (const auto& j : jobs)
        if (j.inequality.order() != a.n)
            throw UsageError(j.label + ": inequality is for n = " + std::to_string(j.inequality.order()));

    std::vector<gg::FacetCertificate> certs(jobs.size());
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                certs[i] = a.lifted ? gg::verify_lifted_facet(gg::lift(jobs[i].inequality), c, a.n)
                                    : gg::verify_facet(jobs[i].inequality, c, a.n);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    const int workers = std::max(1, std::min<int>(a.jobs, static_cast<int>(jobs.size())));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);

    const auto facets = static_cast<std::size_t>(
        std::count_if(certs.begin(), certs.end(), [](const gg::FacetCertificate& x) { return x.is_facet; }));
    if (a.json) {
        io::Json arr = io::Json::array();
        for (std::size_t i = 0; i < certs.size(); ++i) {
            auto j = io::to_json(certs[i]);
            j["label"] = jobs[i].label;
            arr.push_back(std::move(j));
        }
        std::cout << io::dump(io::Json{{"certificates", std::move(arr)}, {"count", certs.size()}, {"facets", facets}});
    } else {
        std::printf("%-28s %-6s %-9s %-10s %-6s %s\n", "inequality", "valid", "members", "saturating", "rank", "facet");
        for (std::size_t i = 0; i < certs.size(); ++i) {
            const auto& x = certs[i];
            const std::string rank = std::to_string(x.affine_rank_of_saturators) + "/" + std::to_string(x.ambient_dim - 1);
            std::printf("%-28s %-6s %-9zu %-10zu %-6s %s\n", jobs[i].label.c_str(), x.valid ? "yes" : "no", x.members,
                        x.saturating_count, rank.c_str(), x.is_facet ? "yes" : "no");
        }
        std::printf("%zu certificates over %s, n = %d%s: %zu facet-defining\n", certs.size(), gg::to_string(c).c_str(), a.n,
                    a.lifted ? " (lifted)" : "", facets);
    }
    return facets == certs.size() ? kOk : kNegative;
}

// ---------------------------------------------------------------------------
// reproduce

struct ReproduceArgs {
    std::uint64_t seed = gg::reproduction::kDefaultSeed;
    bool json = false;
    bool tamper = false;
    std::vector<int> only;
};

int cmd_reproduce(const ReproduceArgs& a)
{
    gg::reproduction::Options opt;
    opt.seed = a.seed;
    opt.tamper = a.tamper;
    for (int id : a.only)
        if (id < 1 || id > gg::reproduction::kCheckCount)
            throw UsageError("--only: no check " + std::to_string(id));
    auto print = [&](const gg::reproduction::CheckResult& r) {
        if (!a.json)
            std::printf("[%s] %d %s (%.2fs): %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                        r.detail.c_str());
        std::fflush(stdout);
    };
    const auto results = gg::reproduction::run(opt, a.only, print);
    std::size_t passed = 0, certificates = 0;
    for (const auto& r : results) {
        passed += r.passed ? 1 : 0;
        certificates += r.certificates;
    }
    if (a.json) {
        io::Json arr = io::Json::array();
        for (const auto& r : results)
            arr.push_back(io::Json{{"id", r.id},
                                   {"name", r.name},
                                   {"passed", r.passed},
                                   {"seconds", r.seconds},
                                   {"certificates", r.certificates},
                                   {"detail", r.detail}});
        std::cout << io::dump(io::Json{{"seed", a.seed},
                                       {"tampered", a.tamper},
                                       {"checks", std::move(arr)},
                                       {"passed", passed},
                                       {"total", results.size()},
                                       {"certificates", certificates}});
    } else {
        std::printf("%zu/%zu checks passed, %zu certificates\n", passed, results.size(), certificates);
    }
    return passed == results.size() ? kOk : kNegative;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Graphical causal-order games: tests, facet certificates and membership decisions"};
    app.require_subcommand(1);

    GenGameArgs gen;
    auto* g = app.add_subcommand("gen-game", "Write a graphical game, its test and its inequality");
    g->add_option("family", gen.family, "cycle | fence | mobius | kefalopoda | minstrong | twisted-cylinder | hamiltonian")
        ->required();
    g->add_option("--n", gen.n, "Number of parties");
    g->add_option("--k", gen.k, "Family size parameter");
    g->add_option("--f", gen.f, "Predecessor map f(0),...,f(n-1) for kefalopoda")->delimiter(',');
    g->add_option("--arcs", gen.arcs, "Arc list i:j,... for minstrong");
    g->add_option("--digraph", gen.digraph_file, "Digraph JSON for minstrong");
    g->add_option("--out", gen.out, "Output prefix; writes PREFIX.digraph.json, .test.json, .ineq.json");
    g->add_flag("--approx", gen.approx, "Also print decimal approximations");

    EvalArgs ev;
    auto* e = app.add_subcommand("eval", "Run a graphical test on correlations");
    e->add_option("--correlations", ev.correlations, "Correlations JSON")->required();
    e->add_option("--test", ev.test, "Test JSON")->required();
    e->add_flag("--json", ev.json, "Machine-readable report");
    e->add_flag("--approx", ev.approx, "Also print decimal approximations");

    DecideArgs dc;
    auto* d = app.add_subcommand("decide", "Weak source-digraph / weakly causal membership");
    d->add_option("input", dc.input, "Digraph vector {n, q} or correlations {n, p0, p1}")->required();
    d->add_flag("--approx", dc.approx, "Also print a decimal score");

    VerifyArgs vf;
    auto* v = app.add_subcommand("verify-facets", "Facet certificates by exhaustive enumeration");
    v->add_option("--class", vf.polytope, "dag | source | notstrong (aliases static, causal, bi)")->required();
    v->add_option("--n", vf.n, "Number of parties")->required();
    v->add_flag("--all-kefalopoda", vf.all_kefalopoda, "Every kefalopoda inequality");
    v->add_flag("--all-minstrong", vf.all_minstrong, "Every labeled minimally strong inequality");
    v->add_flag("--twisted-cylinder", vf.twisted_cylinder, "The twisted cylinder (n = 4)");
    v->add_flag("--trivial", vf.trivial, "Both trivial inequalities for every arc");
    v->add_flag("--hamiltonian", vf.hamiltonian, "The Hamiltonian-cycle inequality");
    v->add_option("--mobius-k", vf.mobius_k, "k-Moebius inequality");
    v->add_option("--cycle-k", vf.cycle_k, "Every labeled k-cycle inequality");
    v->add_option("--fence-k", vf.fence_k, "k-fence inequality");
    v->add_option("--inequality", vf.inequality_file, "Inequality JSON");
    v->add_flag("--all", vf.all, "Trivial inequalities plus the families known for the class");
    v->add_flag("--lifted", vf.lifted, "Certify the lifted inequalities over extremal correlations (n <= 4)");
    v->add_flag("--json", vf.json, "Machine-readable certificates");
    v->add_option("--jobs", vf.jobs, "Worker threads")->check(CLI::PositiveNumber);

    ReproduceArgs rp;
    auto* r = app.add_subcommand("reproduce", "Run every acceptance check");
    r->add_option("--seed", rp.seed, "Seed for the randomized checks");
    r->add_flag("--json", rp.json, "Machine-readable report");
    r->add_flag("--tamper", rp.tamper, "Negative control: corrupt the kefalopoda bound");
    r->add_option("--only", rp.only, "Run only these check ids")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*g)
            return cmd_gen_game(gen);
        if (*e)
            return cmd_eval(ev);
        if (*d)
            return cmd_decide(dc);
        if (*v)
            return cmd_verify_facets(vf);
        if (*r)
            return cmd_reproduce(rp);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
