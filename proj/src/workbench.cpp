#include "pmv/workbench.hpp"

#include "pmv/ideal.hpp"
#include "pmv/jordan.hpp"
#include "pmv/lp.hpp"
#include "pmv/metric.hpp"
#include "pmv/state.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace pmv::workbench {

namespace {

const std::set<std::string> kAnalyses = {"axioms", "ideals",  "states", "morphisms",
                                         "jordan", "metric", "simplex"};

struct JobError : std::invalid_argument {
    JobError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field(std::move(field)) {}
    std::string field;
};

Rat rat_from_json(const Json& v, const std::string& field) {
    try {
        if (v.is_number_integer()) return Rat(static_cast<long long>(v.get<long long>()));
        if (v.is_string()) return parse_rat(v.get<std::string>());
    } catch (const std::exception& e) {
        throw JobError(field, e.what());
    }
    throw JobError(field, "expected an integer or a rational string \"p/q\"");
}

Json rat_to_json(const Rat& r) { return Json(rat_str(r)); }

Json vec_to_json(const Vec& v) {
    Json arr = Json::array();
    for (const Rat& c : v) arr.push_back(rat_to_json(c));
    return arr;
}

// ---- algebra (de)serialization ---------------------------------------------

Vec unit_from_json(const Json& arr, const std::string& field) {
    if (!arr.is_array() || arr.empty()) throw JobError(field, "expected a nonempty array");
    Vec unit;
    for (std::size_t i = 0; i < arr.size(); ++i)
        unit.push_back(rat_from_json(arr[i], field + "[" + std::to_string(i) + "]"));
    return unit;
}

}  // namespace

AlgebraPtr algebra_from_json(const Json& spec) {
    if (!spec.is_object()) throw JobError("algebra", "expected an object");
    const std::string kind = spec.value("kind", "");
    if (kind == "chain") {
        if (!spec.contains("k") || !spec["k"].is_number_integer())
            throw JobError("algebra.k", "chain needs an integer k >= 1");
        return make_chain(spec["k"].get<int>());
    }
    if (kind == "gamma") {
        const std::string group = spec.value("group", "");
        if (group == "zn") {
            if (!spec.contains("n") || !spec["n"].is_number_integer())
                throw JobError("algebra.n", "gamma/zn needs an integer dimension");
            const Vec unit = unit_from_json(spec.value("unit", Json::array()), "algebra.unit");
            try {
                return make_gamma(UnitalGroup::zn(spec["n"].get<int>(), unit));
            } catch (const std::invalid_argument& e) {
                throw JobError("algebra.unit", e.what());
            }
        }
        if (group == "z2lex") {
            Vec unit{Rat(1), Rat(0)};
            if (spec.contains("unit")) unit = unit_from_json(spec["unit"], "algebra.unit");
            try {
                return make_gamma(UnitalGroup::z2lex(unit));
            } catch (const std::invalid_argument& e) {
                throw JobError("algebra.unit", e.what());
            }
        }
        throw JobError("algebra.group", "expected \"zn\" or \"z2lex\"");
    }
    if (kind == "product") {
        if (!spec.contains("factors") || !spec["factors"].is_array() || spec["factors"].empty())
            throw JobError("algebra.factors", "product needs a nonempty factor array");
        std::vector<AlgebraPtr> factors;
        for (const Json& f : spec["factors"]) factors.push_back(algebra_from_json(f));
        return make_product(std::move(factors));
    }
    if (kind == "table") {
        if (!spec.contains("carrier") || !spec["carrier"].is_array() || spec["carrier"].empty())
            throw JobError("algebra.carrier", "table needs a nonempty carrier array");
        std::vector<std::string> names;
        std::map<std::string, int> by_name;
        for (const Json& c : spec["carrier"]) {
            if (!c.is_string()) throw JobError("algebra.carrier", "names must be strings");
            if (by_name.count(c.get<std::string>()))
                throw JobError("algebra.carrier", "duplicate name " + c.get<std::string>());
            by_name[c.get<std::string>()] = static_cast<int>(names.size());
            names.push_back(c.get<std::string>());
        }
        const int n = static_cast<int>(names.size());
        const auto lookup = [&](const Json& v, const std::string& field) {
            if (!v.is_string() || !by_name.count(v.get<std::string>()))
                throw JobError(field, "not a carrier name");
            return by_name[v.get<std::string>()];
        };
        if (!spec.contains("oplus") || !spec["oplus"].is_array() ||
            spec["oplus"].size() != static_cast<std::size_t>(n))
            throw JobError("algebra.oplus", "expected a " + std::to_string(n) + "x" +
                                                std::to_string(n) + " table");
        std::vector<std::vector<int>> oplus(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i) {
            const Json& row = spec["oplus"][i];
            if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
                throw JobError("algebra.oplus[" + std::to_string(i) + "]",
                               "row must have " + std::to_string(n) + " entries");
            for (int j = 0; j < n; ++j)
                oplus[i][j] = lookup(row[j], "algebra.oplus[" + std::to_string(i) + "][" +
                                                 std::to_string(j) + "]");
        }
        const auto unary = [&](const char* key) {
            const std::string field = std::string("algebra.") + key;
            if (!spec.contains(key) || !spec[key].is_array() ||
                spec[key].size() != static_cast<std::size_t>(n))
                throw JobError(field, "expected " + std::to_string(n) + " entries");
            std::vector<int> out(n);
            for (int i = 0; i < n; ++i)
                out[i] = lookup(spec[key][i], field + "[" + std::to_string(i) + "]");
            return out;
        };
        std::vector<int> negm = unary("neg_minus");
        std::vector<int> negt = unary("neg_tilde");
        if (!spec.contains("zero")) throw JobError("algebra.zero", "missing");
        if (!spec.contains("one")) throw JobError("algebra.one", "missing");
        const int zero = lookup(spec["zero"], "algebra.zero");
        const int one = lookup(spec["one"], "algebra.one");
        try {
            return make_table(std::move(names), std::move(oplus), std::move(negm),
                              std::move(negt), zero, one);
        } catch (const std::invalid_argument& e) {
            throw JobError("algebra", e.what());
        }
    }
    throw JobError("algebra.kind", "expected chain | gamma | product | table");
}

Json algebra_to_json(const Algebra& algebra) {
    if (const auto* g = dynamic_cast<const GammaAlgebra*>(&algebra)) {
        Json out;
        if (g->group().kind() == GroupKind::z2_lex) {
            out["kind"] = "gamma";
            out["group"] = "z2lex";
            out["unit"] = vec_to_json(g->group().unit());
            return out;
        }
        if (g->group().dim() == 1) {
            out["kind"] = "chain";
            out["k"] = static_cast<long long>(numerator(g->group().unit()[0]).convert_to<long long>());
            return out;
        }
        out["kind"] = "gamma";
        out["group"] = "zn";
        out["n"] = g->group().dim();
        out["unit"] = vec_to_json(g->group().unit());
        return out;
    }
    if (const auto* p = dynamic_cast<const ProductAlgebra*>(&algebra)) {
        Json out;
        out["kind"] = "product";
        out["factors"] = Json::array();
        for (const auto& f : p->factors()) out["factors"].push_back(algebra_to_json(*f));
        return out;
    }
    const auto* t = dynamic_cast<const TableAlgebra*>(&algebra);
    if (t == nullptr) throw std::logic_error("algebra_to_json: unknown backend");
    Json out;
    out["kind"] = "table";
    out["carrier"] = t->names();
    const DenseTables& d = t->dense();
    Json oplus = Json::array();
    for (int i = 0; i < d.n; ++i) {
        Json row = Json::array();
        for (int j = 0; j < d.n; ++j) row.push_back(t->names()[d.op(d.oplus, i, j)]);
        oplus.push_back(std::move(row));
    }
    out["oplus"] = std::move(oplus);
    Json negm = Json::array(), negt = Json::array();
    for (int i = 0; i < d.n; ++i) {
        negm.push_back(t->names()[d.negm[i]]);
        negt.push_back(t->names()[d.negt[i]]);
    }
    out["neg_minus"] = std::move(negm);
    out["neg_tilde"] = std::move(negt);
    out["zero"] = t->names()[d.zero];
    out["one"] = t->names()[d.one];
    return out;
}

namespace {

// ---- parsed job -------------------------------------------------------------

struct ParsedJob {
    AlgebraPtr algebra;
    bool riesz_is_qn = true;
    int riesz_dim = 1;
    std::vector<std::string> analyses;
    Caps caps;
    std::optional<Rat> family_b;
    std::vector<int> state_components;
    std::string out_json, out_csv;
};

std::size_t predicted_size(const Algebra& a) {
    if (const auto* g = dynamic_cast<const GammaAlgebra*>(&a)) {
        std::size_t total = 1;
        for (const Rat& u : g->group().unit())
            total *= static_cast<std::size_t>(numerator(u).convert_to<long long>()) + 1;
        return total;
    }
    if (const auto* p = dynamic_cast<const ProductAlgebra*>(&a)) {
        std::size_t total = 1;
        for (const auto& f : p->factors()) total *= predicted_size(*f);
        return total;
    }
    return dynamic_cast<const TableAlgebra&>(a).names().size();
}

ParsedJob parse_job(const Json& job) {
    if (!job.is_object()) throw JobError("job", "expected an object");
    for (const char* key : {"algebra", "riesz", "analyses"})
        if (!job.contains(key)) throw JobError(key, "missing");

    ParsedJob out;
    out.algebra = algebra_from_json(job["algebra"]);

    const Json& riesz = job["riesz"];
    if (riesz.is_object() && riesz.contains("qn")) {
        if (!riesz["qn"].is_number_integer() || riesz["qn"].get<int>() < 1)
            throw JobError("riesz.qn", "expected an integer >= 1");
        out.riesz_is_qn = true;
        out.riesz_dim = riesz["qn"].get<int>();
    } else if (riesz.is_object() && riesz.contains("lexq2")) {
        if (!riesz["lexq2"].is_boolean() || !riesz["lexq2"].get<bool>())
            throw JobError("riesz.lexq2", "expected true");
        out.riesz_is_qn = false;
        out.riesz_dim = 2;
    } else {
        throw JobError("riesz", "expected {\"qn\": n} or {\"lexq2\": true}");
    }

    if (!job["analyses"].is_array() || job["analyses"].empty())
        throw JobError("analyses", "expected a nonempty array");
    for (const Json& a : job["analyses"]) {
        if (!a.is_string() || !kAnalyses.count(a.get<std::string>()))
            throw JobError("analyses", "unknown analysis " + a.dump());
        const std::string name = a.get<std::string>();
        if (std::find(out.analyses.begin(), out.analyses.end(), name) == out.analyses.end())
            out.analyses.push_back(name);
    }

    if (job.contains("caps")) {
        const Json& caps = job["caps"];
        if (!caps.is_object()) throw JobError("caps", "expected an object");
        const auto cap = [&](const char* key, auto current) {
            if (!caps.contains(key)) return current;
            const std::string field = std::string("caps.") + key;
            if (!caps[key].is_number_integer() || caps[key].get<long long>() < 1)
                throw JobError(field, "expected a positive integer");
            return static_cast<decltype(current)>(caps[key].get<long long>());
        };
        out.caps.max_carrier = cap("max_carrier", out.caps.max_carrier);
        out.caps.max_dim = cap("max_dim", out.caps.max_dim);
        out.caps.sample_bound = cap("sample_bound", out.caps.sample_bound);
    }

    if (job.contains("family")) {
        if (!job["family"].is_object() || !job["family"].contains("b"))
            throw JobError("family", "expected {\"b\": rational}");
        Rat b = rat_from_json(job["family"]["b"], "family.b");
        if (b < 0) throw JobError("family.b", "must be >= 0");
        out.family_b = std::move(b);
    }

    if (job.contains("state_components")) {
        if (!job["state_components"].is_array())
            throw JobError("state_components", "expected an array of vertex indices");
        for (const Json& v : job["state_components"]) {
            if (!v.is_number_integer() || v.get<int>() < 0)
                throw JobError("state_components", "indices must be nonnegative integers");
            out.state_components.push_back(v.get<int>());
        }
    }

    if (job.contains("output")) {
        const Json& o = job["output"];
        if (!o.is_object()) throw JobError("output", "expected an object");
        out.out_json = o.value("json", "");
        out.out_csv = o.value("csv", "");
    }

    // Analysis / backend compatibility.
    const bool finite = out.algebra->finite();
    for (const std::string& a : out.analyses) {
        if (!finite && a != "axioms" && a != "states")
            throw JobError("analyses", a + " requires a finite carrier");
        if ((a == "morphisms" || a == "jordan" || a == "simplex" || a == "metric") &&
            !out.riesz_is_qn)
            throw JobError("riesz", a + " requires a Q^n target");
        if (a == "metric") {
            const auto* g = dynamic_cast<const GammaAlgebra*>(out.algebra.get());
            if (g == nullptr || g->group().kind() != GroupKind::zn_componentwise)
                throw JobError("analyses", "metric requires a gamma algebra over Z^n");
        }
        if (a == "states" && !finite) {
            if (out.riesz_is_qn)
                throw JobError("riesz", "states on the lex interval needs {\"lexq2\": true}");
            if (!out.family_b)
                throw JobError("family", "states on the lex interval needs the family parameter b");
        }
    }
    return out;
}

// ---- analyses ----------------------------------------------------------------

struct AnalysisOut {
    Json section;
    std::vector<std::string> failures;
};

Json axiom_report_json(const AxiomReport& report, std::vector<std::string>& failures) {
    Json out;
    out["sampled"] = report.sampled;
    out["all_passed"] = report.all_passed;
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        Json j;
        j["axiom"] = e.axiom;
        j["passed"] = e.passed;
        if (!e.passed) {
            j["witness"] = e.witness_names;
            failures.push_back("axioms: " + e.axiom + " fails at (" + e.witness_names + ")");
        }
        entries.push_back(std::move(j));
    }
    out["checks"] = std::move(entries);
    return out;
}

AnalysisOut run_axioms(const ParsedJob& job) {
    AnalysisOut out;
    if (job.algebra->finite()) {
        out.section = axiom_report_json(check_axioms(*job.algebra), out.failures);
    } else {
        const auto& gamma = dynamic_cast<const GammaAlgebra&>(*job.algebra);
        const auto report = sampled_axiom_check(*job.algebra, lex_sample(gamma, job.caps.sample_bound));
        out.section = axiom_report_json(report, out.failures);
    }
    return out;
}

AnalysisOut run_ideals(const ParsedJob& job) {
    AnalysisOut out;
    const auto maximal = all_maximal_ideals(job.algebra);
    out.section["maximal_count"] = maximal.size();
    Json list = Json::array();
    for (const auto& m : maximal) {
        Json j;
        Json members = Json::array();
        for (const Elem& e : m.ideal.members) members.push_back(job.algebra->elem_name(e));
        j["members"] = std::move(members);
        j["normal"] = m.normal;
        list.push_back(std::move(j));
    }
    out.section["maximal_ideals"] = std::move(list);
    return out;
}

Json classification_json(const Algebra& algebra, const StateClassification& cls,
                         int sample_bound) {
    Json out;
    out["is_state"] = cls.is_state;
    out["is_morphism"] = verdict_str(cls.is_morphism);
    out["is_extremal"] = verdict_str(cls.is_extremal);
    out["bounded"] = cls.bounded;
    if (!cls.note.empty()) out["note"] = cls.note;
    Json kernel = Json::array();
    if (cls.kernel.lazy) {
        const auto& gamma = dynamic_cast<const GammaAlgebra&>(algebra);
        for (const Elem& e : lex_sample(gamma, sample_bound))
            if (cls.kernel.contains(e)) kernel.push_back(algebra.elem_name(e));
    } else {
        for (const Elem& e : cls.kernel.members) kernel.push_back(algebra.elem_name(e));
    }
    out["kernel"] = std::move(kernel);
    out["kernel_is_ideal"] = cls.kernel_class.is_ideal;
    out["kernel_is_normal"] = cls.kernel_class.is_normal;
    out["kernel_maximal"] = verdict_str(cls.kernel_maximal);
    return out;
}

AnalysisOut run_states(const ParsedJob& job) {
    AnalysisOut out;
    if (!job.algebra->finite()) {
        const RState s = RState::lex_family(job.algebra, *job.family_b);
        const auto cls = classify_r_state(s, job.caps.sample_bound);
        out.section["family_b"] = rat_str(*job.family_b);
        out.section["classification"] = classification_json(*job.algebra, cls, job.caps.sample_bound);
        if (!cls.is_state) out.failures.push_back("states: family member fails the state laws");
        // Empirical commutativity of s((+)) on the sample (the target order is
        // not Archimedean, so this is reported, not assumed).
        const auto& gamma = dynamic_cast<const GammaAlgebra&>(*job.algebra);
        bool commutes = true;
        const auto sample = lex_sample(gamma, job.caps.sample_bound);
        for (const Elem& x : sample)
            for (const Elem& y : sample)
                if (s(job.algebra->oplus(x, y)) != s(job.algebra->oplus(y, x))) commutes = false;
        out.section["oplus_commutative_on_sample"] = commutes;
        return out;
    }
    const StatePolytope poly = state_polytope(job.algebra);
    const auto vertices = enumerate_vertices(poly, job.caps.max_dim);
    Json carrier = Json::array();
    for (const Elem& e : job.algebra->carrier()) carrier.push_back(job.algebra->elem_name(e));
    out.section["carrier"] = std::move(carrier);
    out.section["dimension"] = poly.dimension;
    out.section["stateless"] = vertices.empty();
    Json verts = Json::array();
    for (const Vec& v : vertices) verts.push_back(vec_to_json(v));
    out.section["vertices"] = std::move(verts);
    return out;
}

AnalysisOut run_morphisms(const ParsedJob& job) {
    AnalysisOut out;
    const RieszRep target = RieszRep::qn(job.riesz_dim);
    const auto morphisms = enumerate_r_morphisms(job.algebra, target);
    out.section["count"] = morphisms.size();
    Json list = Json::array();
    for (const RState& s : morphisms) {
        const auto cls = classify_r_state(s);
        Json j;
        Json values = Json::array();
        for (const Vec& v : s.values()) values.push_back(vec_to_json(v));
        j["values"] = std::move(values);
        Json kernel = Json::array();
        for (const Elem& e : cls.kernel.members) kernel.push_back(job.algebra->elem_name(e));
        j["kernel"] = std::move(kernel);
        j["kernel_maximal"] = cls.kernel_maximal == Verdict::yes;
        j["extremal"] = cls.is_extremal == Verdict::yes;
        list.push_back(std::move(j));
        if (cls.is_morphism != Verdict::yes)
            out.failures.push_back("morphisms: enumerated map fails the morphism criterion");
    }
    out.section["morphisms"] = std::move(list);
    return out;
}

AnalysisOut run_jordan(const ParsedJob& job) {
    AnalysisOut out;
    const RieszRep target = RieszRep::qn(job.riesz_dim);
    const auto vertices = enumerate_vertices(state_polytope(job.algebra));
    if (vertices.empty()) {
        out.section["note"] = "stateless algebra; no demonstration measures";
        return out;
    }
    const auto state_from_vertex = [&](std::size_t i) {
        return RState::from_components(job.algebra,
                                       std::vector<Vec>(job.riesz_dim, vertices[i % vertices.size()]));
    };
    const SignedMeasure s0 = SignedMeasure::from_state(state_from_vertex(0));
    const SignedMeasure s1 = SignedMeasure::from_state(state_from_vertex(1));
    const SignedMeasure m1 = s0.scale(Rat(2)) - s1;
    const SignedMeasure m2 = s1.scale(Rat(2)) - s0;

    const SignedMeasure sup = lattice_sup(m1, m2);
    const SignedMeasure inf = lattice_inf(m1, m2);
    const SignedMeasure oracle = lub_oracle(m1, m2);
    const auto [plus, minus] = jordan_decompose(m1 - m2);

    const auto values_json = [&](const SignedMeasure& m) {
        Json arr = Json::array();
        for (const Vec& v : m.values()) arr.push_back(vec_to_json(v));
        return arr;
    };
    out.section["m1"] = values_json(m1);
    out.section["m2"] = values_json(m2);
    out.section["sup"] = values_json(sup);
    out.section["inf"] = values_json(inf);
    out.section["oracle_agrees"] = sup == oracle;
    out.section["jordan_plus"] = values_json(plus);
    out.section["jordan_minus"] = values_json(minus);
    out.section["plus_meet_minus_zero"] =
        lattice_inf(plus, minus) == SignedMeasure::zero(job.algebra, target);
    if (sup != oracle) out.failures.push_back("jordan: lattice sup disagrees with the LP oracle");
    return out;
}

AnalysisOut run_metric(const ParsedJob& job) {
    AnalysisOut out;
    const auto& gamma = dynamic_cast<const GammaAlgebra&>(*job.algebra);
    const auto vertices = enumerate_vertices(state_polytope(job.algebra));
    if (vertices.empty()) {
        out.section["note"] = "stateless algebra; no metric context";
        return out;
    }
    // Component states: selected vertices, or the barycenter replicated.
    std::vector<Vec> columns;
    if (!job.state_components.empty()) {
        if (static_cast<int>(job.state_components.size()) != job.riesz_dim)
            throw JobError("state_components", "need one vertex index per target coordinate");
        for (int idx : job.state_components) {
            if (idx >= static_cast<int>(vertices.size()))
                throw JobError("state_components", "vertex index out of range");
            columns.push_back(vertices[idx]);
        }
    } else {
        Vec bary(job.algebra->size(), Rat(0));
        for (const Vec& v : vertices)
            for (std::size_t i = 0; i < bary.size(); ++i) bary[i] += v[i];
        for (Rat& c : bary) c /= Rat(static_cast<long long>(vertices.size()));
        columns.assign(job.riesz_dim, bary);
    }
    const MetricContext ctx = extend_state(RState::from_components(job.algebra, columns));

    // Sample grid: coordinates in [-2u_i, 2u_i], each axis capped.
    const Vec& unit = gamma.group().unit();
    const int d = gamma.group().dim();
    std::vector<long long> lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
        const long long u = numerator(unit[i]).convert_to<long long>();
        hi[i] = std::min<long long>(2 * u, job.caps.sample_bound);
        lo[i] = -hi[i];
    }
    std::vector<Vec> grid;
    Vec cur(d);
    for (int i = 0; i < d; ++i) cur[i] = Rat(lo[i]);
    for (;;) {
        grid.push_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[i] == Rat(hi[i])) {
            cur[i] = Rat(lo[i]);
            --i;
        }
        if (i < 0) break;
        cur[i] += 1;
    }

    const NormPropertyReport norms = check_norm_properties(ctx, grid);
    Json props = Json::array();
    for (const auto& p : norms.properties) {
        Json j;
        j["name"] = p.name;
        j["checked"] = p.checked;
        j["passed"] = p.passed;
        if (!p.passed) {
            j["counterexample"] = p.counterexample;
            out.failures.push_back("metric: norm property " + p.name + " fails");
        }
        props.push_back(std::move(j));
    }
    out.section["grid_points"] = grid.size();
    out.section["norm_properties"] = std::move(props);

    const auto kernel = norm_kernel(ctx);
    Json basis = Json::array();
    for (const auto& row : kernel) {
        Json r = Json::array();
        for (const Int& c : row) r.push_back(c.str());
        basis.push_back(std::move(r));
    }
    out.section["kernel_basis"] = std::move(basis);
    out.section["is_metric"] = kernel.empty();

    // Deterministic interpolation quadruples inside the image subgroup.
    std::mt19937 rng(0xC0FFEE);
    std::uniform_int_distribution<long long> coord(-4, 4);
    std::uniform_int_distribution<long long> pos(0, 3);
    const auto random_group_elem = [&](bool nonneg) {
        Vec g(d);
        for (int i = 0; i < d; ++i) g[i] = Rat(nonneg ? pos(rng) : coord(rng));
        return g;
    };
    std::vector<InterpolationCase> quads;
    for (int i = 0; i < 100; ++i) {
        const Vec g1 = random_group_elem(false), g2 = random_group_elem(false);
        const Vec top = gamma.group().join(g1, g2);
        InterpolationCase q;
        q.x1 = extended_value(ctx, g1);
        q.x2 = extended_value(ctx, g2);
        q.y1 = extended_value(ctx, gamma.group().add(top, random_group_elem(true)));
        q.y2 = extended_value(ctx, gamma.group().add(top, random_group_elem(true)));
        quads.push_back(std::move(q));
    }
    const InterpolationReport interp = check_interpolation(ctx, quads);
    out.section["interpolation_checked"] = interp.checked;
    out.section["interpolation_passed"] = interp.passed;
    if (!interp.all_passed)
        out.failures.push_back("metric: interpolation candidate failed on a sampled quadruple");
    return out;
}

AnalysisOut run_simplex(const ParsedJob& job) {
    AnalysisOut out;
    const auto rep = simplex_report(job.algebra, RieszRep::qn(job.riesz_dim));
    out.section["empty"] = rep.empty;
    out.section["vertex_count"] = rep.vertex_count;
    out.section["affine_dimension"] = rep.affine_dimension;
    out.section["is_simplex"] = rep.is_simplex;
    out.section["is_bauer"] = rep.is_bauer;
    out.section["components"] = rep.components;
    if (rep.dependency_witness) {
        out.section["dependency_witness"] = vec_to_json(*rep.dependency_witness);
        out.failures.push_back("simplex: state-space vertices are affinely dependent");
    }
    return out;
}

AnalysisOut run_analysis(const std::string& name, const ParsedJob& job) {
    if (name == "axioms") return run_axioms(job);
    if (name == "ideals") return run_ideals(job);
    if (name == "states") return run_states(job);
    if (name == "morphisms") return run_morphisms(job);
    if (name == "jordan") return run_jordan(job);
    if (name == "metric") return run_metric(job);
    if (name == "simplex") return run_simplex(job);
    throw std::logic_error("unknown analysis " + name);
}

unsigned thread_budget(std::size_t work_items) {
    unsigned budget = std::thread::hardware_concurrency();
    if (budget == 0) budget = 1;
    if (const char* env = std::getenv("PMV_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1) budget = static_cast<unsigned>(parsed);
    }
    return std::min<unsigned>(budget, static_cast<unsigned>(std::max<std::size_t>(work_items, 1)));
}

// CSV table of morphism counts for (products of) chains.
void write_morphism_csv(const std::string& dir, const ParsedJob& job, const Json& section) {
    std::filesystem::create_directories(dir);
    std::ofstream csv(std::filesystem::path(dir) / "morphism_counts.csv", std::ios::binary);
    csv << "n,m,k,count\n";
    std::string n = "1", k = "";
    if (const auto* p = dynamic_cast<const ProductAlgebra*>(job.algebra.get())) {
        n = std::to_string(p->factors().size());
        std::set<std::string> ks;
        for (const auto& f : p->factors()) {
            const auto* g = dynamic_cast<const GammaAlgebra*>(f.get());
            if (g && g->group().dim() == 1) ks.insert(rat_str(g->group().unit()[0]));
        }
        k = ks.size() == 1 ? *ks.begin() : "mixed";
    } else if (const auto* g = dynamic_cast<const GammaAlgebra*>(job.algebra.get());
               g && g->group().kind() == GroupKind::zn_componentwise && g->group().dim() == 1) {
        k = rat_str(g->group().unit()[0]);
    }
    csv << n << ',' << job.riesz_dim << ',' << k << ',' << section["count"].get<std::size_t>()
        << '\n';
}

}  // namespace

std::vector<Diagnostic> validate(const Json& job) {
    std::vector<Diagnostic> out;
    ParsedJob parsed;
    try {
        parsed = parse_job(job);
    } catch (const JobError& e) {
        out.push_back({e.field, e.what()});
        return out;
    } catch (const std::exception& e) {
        out.push_back({"job", e.what()});
        return out;
    }
    if (parsed.algebra->finite()) {
        const std::size_t size = predicted_size(*parsed.algebra);
        if (size > parsed.caps.max_carrier) {
            out.push_back({"caps.max_carrier",
                           "carrier has " + std::to_string(size) + " elements, cap is " +
                               std::to_string(parsed.caps.max_carrier)});
            return out;
        }
        const AxiomReport report = check_axioms(*parsed.algebra);
        for (const auto& e : report.entries)
            if (!e.passed)
                out.push_back({"algebra", "axiom " + e.axiom + " fails at (" +
                                              e.witness_names + ")"});
    }
    return out;
}

RunResult run(const Json& job) {
    RunResult result;
    ParsedJob parsed;
    try {
        parsed = parse_job(job);
    } catch (const std::exception& e) {
        result.exit_code = 1;
        result.error = e.what();
        return result;
    }

    Json report;
    report["schema_version"] = kSchemaVersion;
    report["tool"] = "pmv";
    report["algebra"] = parsed.algebra->describe();
    report["riesz"] =
        parsed.riesz_is_qn ? "Q^" + std::to_string(parsed.riesz_dim) : std::string("Q^2 lex");

    std::vector<std::string> failures;
    try {
        if (parsed.algebra->finite()) {
            const std::size_t size = predicted_size(*parsed.algebra);
            if (size > parsed.caps.max_carrier)
                throw CapExceeded("carrier has " + std::to_string(size) +
                                  " elements, cap is " + std::to_string(parsed.caps.max_carrier));
            report["carrier_size"] = size;
        } else {
            report["carrier_size"] = "infinite";
        }

        // Fan analyses out in waves no wider than the thread budget; assembly
        // stays in the job's declared order so reports are deterministic.
        const unsigned budget = thread_budget(parsed.analyses.size());
        std::vector<AnalysisOut> outs(parsed.analyses.size());
        std::size_t next = 0;
        while (next < parsed.analyses.size()) {
            const std::size_t batch = std::min<std::size_t>(budget, parsed.analyses.size() - next);
            std::vector<std::future<AnalysisOut>> wave(batch);
            for (std::size_t i = 0; i < batch; ++i) {
                const std::string name = parsed.analyses[next + i];
                wave[i] = std::async(std::launch::async,
                                     [name, &parsed] { return run_analysis(name, parsed); });
            }
            for (std::size_t i = 0; i < batch; ++i) outs[next + i] = wave[i].get();
            next += batch;
        }
        Json results;
        for (std::size_t i = 0; i < parsed.analyses.size(); ++i) {
            results[parsed.analyses[i]] = std::move(outs[i].section);
            for (std::string& f : outs[i].failures) failures.push_back(std::move(f));
        }
        report["results"] = std::move(results);
    } catch (const CapExceeded& e) {
        result.exit_code = 3;
        result.error = e.what();
        report["cap_error"] = e.what();
        result.report = std::move(report);
        return result;
    } catch (const std::exception& e) {
        result.exit_code = 1;
        result.error = e.what();
        return result;
    }

    report["property_failures"] = failures;
    result.exit_code = failures.empty() ? 0 : 2;
    result.report = std::move(report);
    return result;
}

namespace {

Json load_job(const std::string& path, std::string& message) {
    std::ifstream in(path);
    if (!in) {
        message = "cannot open job file " + path;
        return Json();
    }
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        message = std::string("job file is not valid JSON: ") + e.what();
        return Json();
    }
}

}  // namespace

int run_files(const std::string& job_path, const std::string& out_path, const std::string& csv_dir,
              std::string& message) {
    Json job = load_job(job_path, message);
    if (!message.empty()) return 1;

    RunResult res = run(job);
    if (res.exit_code == 1) {
        message = res.error;
        return 1;
    }

    std::string json_out = out_path;
    std::string csv_out = csv_dir;
    if (job.contains("output") && job["output"].is_object()) {
        if (json_out.empty()) json_out = job["output"].value("json", "");
        if (csv_out.empty()) csv_out = job["output"].value("csv", "");
    }
    const std::string rendered = res.report.dump(2) + "\n";
    if (json_out.empty()) {
        message = rendered;
    } else {
        std::ofstream out(json_out, std::ios::binary);
        out << rendered;
    }
    if (!csv_out.empty() && res.report.contains("results") &&
        res.report["results"].contains("morphisms")) {
        ParsedJob parsed = parse_job(job);
        write_morphism_csv(csv_out, parsed, res.report["results"]["morphisms"]);
    }
    if (res.exit_code == 3 && !res.error.empty()) message = "cap exceeded: " + res.error;
    return res.exit_code;
}

int validate_file(const std::string& job_path, std::string& message) {
    Json job = load_job(job_path, message);
    if (!message.empty()) return 1;
    const auto diags = validate(job);
    if (diags.empty()) {
        message = "ok";
        return 0;
    }
    std::ostringstream out;
    for (const auto& d : diags) out << d.field << ": " << d.message << "\n";
    message = out.str();
    return 1;
}

}  // namespace pmv::workbench
