#pragma once

// JSON file formats. Rationals travel as strings ("3/4", "-1", "0").

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphgames/correlations.hpp"
#include "graphgames/decide.hpp"
#include "graphgames/digraphs.hpp"
#include "graphgames/inequalities.hpp"
#include "graphgames/oracle.hpp"
#include "graphgames/ratlin.hpp"

namespace graphgames::io {

using Json = nlohmann::ordered_json;

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two-space indent, trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

namespace detail {

inline const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline int int_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number_integer())
        throw ParseError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

inline Rational rational(const Json& v)
{
    if (v.is_number_integer())
        return Rational(v.get<long long>());
    if (!v.is_string())
        throw ParseError("expected a rational string, got " + v.dump());
    try {
        return rat_parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline RatVector rational_vector(const Json& v)
{
    if (!v.is_array())
        throw ParseError("expected an array of rationals");
    RatVector out;
    for (const auto& x : v)
        out.push_back(rational(x));
    return out;
}

inline Json rational_array(const RatVector& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_string(x));
    return a;
}

inline Json arc_json(Arc a) { return Json::array({a.from, a.to}); }

template <class F>
auto wrap(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    } catch (const std::domain_error& e) {
        throw ParseError(e.what());
    } catch (const std::out_of_range& e) {
        throw ParseError(e.what());
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// Digraph  {"n": int, "arcs": [[i, j], ...]}

inline Json to_json(const Digraph& d)
{
    Json arcs = Json::array();
    for (const auto& a : d.arcs())
        arcs.push_back(detail::arc_json(a));
    return Json{{"n", d.order()}, {"arcs", std::move(arcs)}};
}

inline Digraph digraph_from_json(const Json& j)
{
    return detail::wrap([&] {
        const int n = detail::int_field(j, "n");
        std::vector<Arc> arcs;
        for (const auto& a : detail::field(j, "arcs")) {
            if (!a.is_array() || a.size() != 2)
                throw ParseError("arcs must be [i, j] pairs");
            arcs.push_back({a[0].get<int>(), a[1].get<int>()});
        }
        return Digraph(n, arcs);
    });
}

// ---------------------------------------------------------------------------
// Correlations  {"n": int, "p0": [...], "p1": [...]}

inline Json to_json(const CorrelationVector& p)
{
    return Json{{"n", p.order()}, {"p0", detail::rational_array(p.p0())}, {"p1", detail::rational_array(p.p1())}};
}

/// Unvalidated entries, for inputs where out-of-range values are a verdict rather than an error.
struct RawCorrelations {
    int n = 0;
    RatVector p0;
    RatVector p1;
};

inline RawCorrelations raw_correlations_from_json(const Json& j)
{
    return detail::wrap([&] {
        RawCorrelations r{detail::int_field(j, "n"), detail::rational_vector(detail::field(j, "p0")),
                          detail::rational_vector(detail::field(j, "p1"))};
        const std::size_t d = ArcIndexing(r.n).dimension();
        if (r.n < 2 || r.p0.size() != d || r.p1.size() != d)
            throw ParseError("correlations: p0 and p1 must have length n(n-1)");
        return r;
    });
}

inline CorrelationVector correlations_from_json(const Json& j)
{
    return detail::wrap([&] {
        auto r = raw_correlations_from_json(j);
        return CorrelationVector(r.n, std::move(r.p0), std::move(r.p1));
    });
}

// ---------------------------------------------------------------------------
// Digraph vector  {"n": int, "q": [...]}

struct DigraphVector {
    int n = 0;
    RatVector q;
};

inline Json to_json(const DigraphVector& v) { return Json{{"n", v.n}, {"q", detail::rational_array(v.q)}}; }

inline DigraphVector digraph_vector_from_json(const Json& j)
{
    return detail::wrap([&] {
        DigraphVector v{detail::int_field(j, "n"), detail::rational_vector(detail::field(j, "q"))};
        if (v.n < 2 || v.q.size() != ArcIndexing(v.n).dimension())
            throw ParseError("digraph vector: q must have length n(n-1)");
        return v;
    });
}

// ---------------------------------------------------------------------------
// Inequalities  {"dim", "weights", "bound", "lifted", "phi"?}

inline Json to_json(const DigraphInequality& ineq)
{
    return Json{{"dim", ineq.dimension()},
                {"weights", detail::rational_array(ineq.weights)},
                {"bound", to_string(ineq.bound)},
                {"lifted", false}};
}

inline Json to_json(const LiftedInequality& ineq)
{
    return Json{{"dim", ineq.dimension()},
                {"weights", detail::rational_array(ineq.weights)},
                {"bound", to_string(ineq.bound)},
                {"lifted", true},
                {"phi", ineq.phi}};
}

inline DigraphInequality inequality_from_json(const Json& j)
{
    return detail::wrap([&] {
        if (detail::field(j, "lifted").get<bool>())
            throw ParseError("expected a digraph-space inequality, got a lifted one");
        DigraphInequality ineq{detail::rational_vector(detail::field(j, "weights")), detail::rational(detail::field(j, "bound"))};
        if (static_cast<std::size_t>(detail::int_field(j, "dim")) != ineq.weights.size())
            throw ParseError("inequality: dim does not match the number of weights");
        (void)ineq.order();
        return ineq;
    });
}

inline LiftedInequality lifted_inequality_from_json(const Json& j)
{
    return detail::wrap([&] {
        if (!detail::field(j, "lifted").get<bool>())
            throw ParseError("expected a lifted inequality");
        const RatVector w = detail::rational_vector(detail::field(j, "weights"));
        const Rational c = detail::rational(detail::field(j, "bound"));
        if (static_cast<std::size_t>(detail::int_field(j, "dim")) != w.size() || w.size() % 2 != 0)
            throw ParseError("lifted inequality: dim must equal the (even) number of weights");
        const std::size_t d = w.size() / 2;
        SignVector phi(d, 1);
        if (j.contains("phi"))
            phi = j.at("phi").get<SignVector>();
        check_signs(phi, d);
        DigraphInequality source{RatVector(d), c};
        for (std::size_t i = 0; i < d; ++i) {
            if (w[d + i] != -w[i])
                throw ParseError("lifted inequality: weights must have the form (v, -v)");
            source.weights[i] = w[i] * phi[i];
        }
        (void)source.order();
        auto out = lift(source);
        return rotate(out, phi);
    });
}

// ---------------------------------------------------------------------------
// Graphical tests  {"game": digraph, "bound": "a/b"}

inline Json to_json(const GraphicalTest& t) { return Json{{"game", to_json(t.game)}, {"bound", to_string(t.bound)}}; }

inline GraphicalTest test_from_json(const Json& j)
{
    return detail::wrap(
        [&] { return GraphicalTest(digraph_from_json(detail::field(j, "game")), detail::rational(detail::field(j, "bound"))); });
}

// ---------------------------------------------------------------------------
// Reports

inline Json to_json(const Decision& d)
{
    Json witness = nullptr;
    if (const auto* t = std::get_if<TrivialWitness>(&d.witness)) {
        witness = Json{{"kind", "trivial"},
                       {"coordinate", t->coordinate},
                       {"arc", detail::arc_json(t->arc)},
                       {"side", t->upper ? "upper" : "lower"},
                       {"value", to_string(t->value)}};
    } else if (const auto* k = std::get_if<KefalopodaWitness>(&d.witness)) {
        witness = Json{{"kind", "kefalopoda"}, {"f", k->f}};
    }
    return Json{{"accepted", d.accepted}, {"score", to_string(d.score)}, {"witness", std::move(witness)}};
}

inline Json to_json(const TestOutcome& o)
{
    return Json{{"verdict", to_string(o.verdict)},
                {"win_probability", to_string(o.win_probability)},
                {"margin", to_string(o.margin)}};
}

inline Json to_json(const FacetCertificate& c)
{
    Json j{{"class", to_string(c.polytope)},
           {"n", c.n},
           {"lifted", c.lifted},
           {"ambient_dim", c.ambient_dim},
           {"valid", c.valid},
           {"members", c.members},
           {"saturating_count", c.saturating_count},
           {"affine_rank_of_saturators", c.affine_rank_of_saturators},
           {"max_value", to_string(c.max_value)},
           {"evidence_points", c.evidence.size()},
           {"is_facet", c.is_facet},
           {"inequality", c.lifted ? to_json(rotate(lift(c.inequality), c.phi)) : to_json(c.inequality)}};
    return j;
}

} // namespace graphgames::io
