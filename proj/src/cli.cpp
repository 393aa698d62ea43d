#include "noether/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "noether/characters.hpp"
#include "noether/dual.hpp"
#include "noether/finiteness.hpp"
#include "noether/matgroup.hpp"
#include "noether/suites.hpp"

namespace noether::cli {

namespace {

/// What a command hands back to the dispatcher.
struct Report {
    Json body;
    bool ok = true;
};

using Handler = std::function<Report()>;

std::size_t as_size(const Json& j, const char* key) {
    if (!j[key].is_number_unsigned() || j[key].get<std::uint64_t>() == 0)
        throw ParseError(std::string("caps: ") + key + " must be a positive integer");
    return j[key].get<std::size_t>();
}

void flatten(const Json& j, const std::string& path, std::ostringstream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], path + "[" + std::to_string(k) + "]", os);
    } else {
        os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

std::shared_ptr<const QuotientContext> make_quotient(unsigned mod, const std::string& quotient_file) {
    if (!quotient_file.empty()) return std::make_shared<QuotientContext>(ideal_from_json(read_json_file(quotient_file)));
    if (mod < 2) throw ParseError("need --mod N (N >= 2) or --quotient FILE");
    return std::make_shared<QuotientContext>(QuotientContext::integers_mod(mod));
}

Json parse_inline_or_file(const std::string& text) {
    if (!text.empty() && (text.front() == '[' || text.front() == '{')) {
        try {
            return Json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("inline JSON: ") + e.what());
        }
    }
    return read_json_file(text);
}

FMat fmatrix_from_json(const FiniteRing& R, const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
    FMat m{j.size(), {}};
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != m.d) throw ParseError("matrix must be square");
        for (const auto& e : row) {
            if (e.is_number_integer()) m.a.push_back(R.from_integer(e.get<long>()));
            else if (e.is_string()) m.a.push_back(R.q().parse(e.get<std::string>()));
            else throw ParseError("matrix entries must be integers or residue strings");
        }
    }
    return m;
}

Json matrix_to_json_any(const IntegerRing&, const ZMat& m) { return matrix_to_json(m); }
Json matrix_to_json_any(const FiniteRing& R, const FMat& m) { return matrix_to_json(R, m); }

template <class Ring>
Json normal_form_to_json(const Ring& R, const NormalForm<Ring>& nf) {
    Json out;
    out["conjugator"] = word_to_json(R, nf.conjugator);
    out["conjugated"] = matrix_to_json_any(R, nf.conjugated);
    out["h"] = word_to_json(R, nf.h);
    out["v"] = word_to_json(R, nf.v);
    out["h_prime"] = word_to_json(R, nf.h_prime);
    out["v_prime"] = word_to_json(R, nf.v_prime);
    out["n"] = matrix_to_json_any(R, nf.n);
    out["verified"] = nf.verified;
    return out;
}

std::vector<FiniteRing::Elem> parse_residues(const QuotientContext& q, const std::vector<std::string>& items) {
    std::vector<FiniteRing::Elem> out;
    for (const auto& s : items) out.push_back(q.parse(s));
    return out;
}

}  // namespace

void apply_caps_file(RunConfig& cfg, const std::string& path) {
    const Json j = read_json_file(path);
    if (!j.is_object()) throw ParseError("caps file must hold a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        if (k == "max_gb_pairs") cfg.limits.max_gb_pairs = as_size(j, "max_gb_pairs");
        else if (k == "max_gb_degree") cfg.limits.max_gb_degree = as_size(j, "max_gb_degree");
        else if (k == "max_elements") cfg.limits.max_elements = as_size(j, "max_elements");
        else if (k == "seed") cfg.seed = it.value().get<std::uint64_t>();
        else if (k == "tol") cfg.tolerance = it.value().get<double>();
        else if (k == "format") cfg.format = it.value().get<std::string>();
        else throw ParseError("caps file: unknown key \"" + k + "\"");
    }
}

std::string render(const Json& report, const std::string& format) {
    if (format == "text") {
        std::ostringstream os;
        flatten(report, "", os);
        return os.str();
    }
    return report.dump(2) + "\n";
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    if (const char* env = std::getenv("NOETHER_EL_CAPS"); env && *env) {
        try {
            apply_caps_file(cfg, env);
        } catch (const std::exception& e) {
            err << "noether-el: NOETHER_EL_CAPS: " << e.what() << "\n";
            return kError;
        }
    }

    CLI::App app{"Exact ideal, matrix-group, measure and character computations", "noether-el"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<std::size_t> max_pairs, max_elements;
    std::optional<std::uint64_t> seed;
    std::optional<double> tol;
    std::optional<std::string> format;
    unsigned bound = 4;
    app.add_option("--max-gb-pairs", max_pairs, "critical pair cap per Groebner basis")->check(CLI::PositiveNumber);
    app.add_option("--max-elements", max_elements, "cap on enumerated group elements")->check(CLI::PositiveNumber);
    app.add_option("--bound", bound, "degree bound for depth candidates")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "seed for every randomized path");
    app.add_option("--tol", tol, "override the numeric tolerances")->check(CLI::PositiveNumber);
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", cfg.out, "write the report to this file instead of stdout");

    Handler handler;
    std::string command;
    auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help) {
        CLI::App* s = parent->add_subcommand(name, help);
        s->fallthrough();
        return s;
    };
    auto bind = [&](CLI::App* s, Handler h) {
        s->callback([&, s, h] {
            command = s->get_parent() == &app ? s->get_name() : s->get_parent()->get_name() + " " + s->get_name();
            handler = h;
        });
    };

    // ---- ring -----------------------------------------------------------------------
    CLI::App* ring = sub(&app, "ring", "polynomial arithmetic in Z[x1..xk]");
    ring->require_subcommand(1);
    std::vector<std::string> names{"x"};
    std::vector<std::string> polys;
    std::string ring_op = "mul";
    {
        CLI::App* s = sub(ring, "normalize", "parse and print polynomials in normal form");
        s->add_option("--names", names, "variable names")->delimiter(',');
        s->add_option("polys", polys, "polynomials")->required();
        bind(s, [&] {
            auto r = RingPresentation::polynomial_ring(names.size(), names);
            Json list = Json::array();
            for (const auto& p : polys) list.push_back(to_string(r.parse(p), r.variable_names()));
            return Report{Json{{"ring", ring_to_json(r)}, {"polynomials", list}}};
        });
        CLI::App* o = sub(ring, "op", "combine polynomials left to right");
        o->add_option("--names", names, "variable names")->delimiter(',');
        o->add_option("--op", ring_op, "operation")->check(CLI::IsMember({"add", "sub", "mul"}));
        o->add_option("polys", polys, "operands")->required()->expected(2, -1);
        bind(o, [&] {
            auto r = RingPresentation::polynomial_ring(names.size(), names);
            Polynomial acc = r.parse(polys.front());
            for (std::size_t k = 1; k < polys.size(); ++k) {
                const Polynomial g = r.parse(polys[k]);
                if (ring_op == "add") acc += g;
                else if (ring_op == "sub") acc -= g;
                else acc = acc * g;
            }
            return Report{Json{{"op", ring_op}, {"result", to_string(acc, r.variable_names())}}};
        });
    }

    // ---- ideal ----------------------------------------------------------------------
    CLI::App* ideal = sub(&app, "ideal", "ideal arithmetic over Z");
    ideal->require_subcommand(1);
    std::string ideal_file, a_file, b_file, ideal_op = "intersect";
    {
        CLI::App* s = sub(ideal, "gb", "strong Groebner basis of an ideal");
        s->add_option("--ideal", ideal_file, "ideal JSON file")->required();
        bind(s, [&] {
            const Ideal i = ideal_from_json(read_json_file(ideal_file));
            Json basis = Json::array();
            for (const auto& g : i.gb().elements) basis.push_back(to_string(g, i.ring().variable_names()));
            return Report{Json{{"ideal", i.to_string()}, {"groebner_basis", basis}, {"unit", i.is_unit()}}};
        });
        CLI::App* c = sub(ideal, "contains", "membership test");
        c->add_option("--ideal", ideal_file, "ideal JSON file")->required();
        c->add_option("polys", polys, "polynomials to test")->required();
        bind(c, [&] {
            const Ideal i = ideal_from_json(read_json_file(ideal_file));
            Json list = Json::array();
            for (const auto& p : polys) {
                const Polynomial f = i.ring().parse(p);
                list.push_back(Json{{"polynomial", to_string(f, i.ring().variable_names())},
                                    {"member", i.contains(f)},
                                    {"normal_form", to_string(i.reduce(f), i.ring().variable_names())}});
            }
            return Report{Json{{"ideal", i.to_string()}, {"membership", list}}};
        });
        CLI::App* o = sub(ideal, "op", "sum, product, intersection, quotient or saturation of two ideals");
        o->add_option("--op", ideal_op, "operation")
            ->check(CLI::IsMember({"sum", "product", "intersect", "quotient", "saturate"}));
        o->add_option("--a", a_file, "first ideal (the dividend for quotient)")->required();
        o->add_option("--b", b_file, "second ideal")->required();
        bind(o, [&] {
            const Ideal a = ideal_from_json(read_json_file(a_file));
            const Ideal b = ideal_from_json(read_json_file(b_file));
            require_same_ring(a, b);
            Ideal r;
            if (ideal_op == "sum") r = ideal_sum(a, b);
            else if (ideal_op == "product") r = ideal_product(a, b);
            else if (ideal_op == "intersect") r = ideal_intersect(a, b);
            else if (ideal_op == "quotient") r = ideal_quotient(a, b);
            else r = saturate(a, b);
            Json body{{"op", ideal_op}, {"result", ideal_to_json(r)}};
            body["result_text"] = r.to_string();
            return Report{body};
        });
        CLI::App* e = sub(ideal, "equal", "ideal equality");
        e->add_option("--a", a_file, "first ideal")->required();
        e->add_option("--b", b_file, "second ideal")->required();
        bind(e, [&] {
            const Ideal a = ideal_from_json(read_json_file(a_file));
            const Ideal b = ideal_from_json(read_json_file(b_file));
            return Report{Json{{"a", a.to_string()}, {"b", b.to_string()}, {"equal", ideal_equal(a, b)}}};
        });
        CLI::App* f = sub(ideal, "finite", "is R/I finite? with cardinality and certificates");
        f->add_option("--ideal", ideal_file, "ideal JSON file")->required();
        bind(f, [&] {
            const Ideal i = ideal_from_json(read_json_file(ideal_file));
            Json body{{"ideal", i.to_string()}, {"verdict", verdict_to_json(finite_index_test(i))}};
            return Report{body};
        });
    }

    // ---- depth ----------------------------------------------------------------------
    CLI::App* depth = sub(&app, "depth", "depth ideals and commensurability");
    depth->require_subcommand(1);
    unsigned coeff_bound = 6;
    {
        CLI::App* s = sub(depth, "compute", "largest finite-index extension of an ideal");
        s->add_option("--ideal", ideal_file, "ideal JSON file")->required();
        s->add_option("--coeff", coeff_bound, "coefficient bound for depth candidates");
        bind(s, [&] {
            const Ideal i = ideal_from_json(read_json_file(ideal_file));
            return Report{depth_to_json(compute_depth(i, {bound, coeff_bound}))};
        });
        CLI::App* t = sub(depth, "test", "is the ideal a depth ideal?");
        t->add_option("--ideal", ideal_file, "ideal JSON file")->required();
        t->add_option("--coeff", coeff_bound, "coefficient bound for depth candidates");
        bind(t, [&] {
            const Ideal i = ideal_from_json(read_json_file(ideal_file));
            const auto r = is_depth(i, {bound, coeff_bound});
            Json body{{"ideal", i.to_string()}, {"answer", to_string(r.answer)}};
            body["witness"] = r.witness ? Json(to_string(*r.witness, i.ring().variable_names())) : Json(nullptr);
            return Report{body};
        });
        CLI::App* c = sub(depth, "commensurable", "do two ideals have a common depth?");
        c->add_option("--a", a_file, "first ideal")->required();
        c->add_option("--b", b_file, "second ideal")->required();
        bind(c, [&] {
            const Ideal a = ideal_from_json(read_json_file(a_file));
            const Ideal b = ideal_from_json(read_json_file(b_file));
            require_same_ring(a, b);
            return Report{Json{{"a", a.to_string()}, {"b", b.to_string()}, {"commensurable", commensurable(a, b)}}};
        });
    }

    // ---- mat ------------------------------------------------------------------------
    CLI::App* mat = sub(&app, "mat", "elementary matrix machinery");
    mat->require_subcommand(1);
    std::string matrix_text, quotient_file, unit_text;
    unsigned mod = 0;
    std::size_t d = 3;
    {
        CLI::App* s = sub(mat, "normal-form", "conjugate into the form h v h' v' n");
        s->add_option("--matrix", matrix_text, "row-major JSON matrix, inline or a file")->required();
        s->add_option("--mod", mod, "work over Z/N instead of Z");
        s->add_option("--quotient", quotient_file, "work over R/I given by an ideal file");
        bind(s, [&] {
            const Json j = parse_inline_or_file(matrix_text);
            if (mod == 0 && quotient_file.empty()) {
                IntegerRing Z;
                const auto nf = normal_form_conjugate(Z, zmatrix_from_json(j));
                return Report{normal_form_to_json(Z, nf), nf.verified};
            }
            FiniteRing R(make_quotient(mod, quotient_file));
            const auto nf = normal_form_conjugate(R, fmatrix_from_json(R, j));
            return Report{normal_form_to_json(R, nf), nf.verified};
        });
        CLI::App* c = sub(mat, "center-word", "elementary word for a central scalar u*Id");
        c->add_option("--mod", mod, "Q = Z/N");
        c->add_option("--quotient", quotient_file, "Q = R/I given by an ideal file");
        c->add_option("--d", d, "dimension (>= 3)")->required();
        c->add_option("--unit", unit_text, "unit u with u^d = 1")->required();
        bind(c, [&] {
            FiniteRing R(make_quotient(mod, quotient_file));
            const auto u = R.q().parse(unit_text);
            const FWord w = center_word(R, u, d);
            const bool exact = mat_equal(R, word_product(R, d, w), scalar(R, d, u));
            Json body{{"unit", R.str(u)}, {"d", d}, {"letters", w.size()}, {"word", word_to_json(R, w)},
                      {"product_is_scalar", exact}};
            return Report{body, exact};
        });
        CLI::App* l = sub(mat, "level", "level ideals of an integer matrix");
        l->add_option("--matrix", matrix_text, "row-major JSON matrix, inline or a file")->required();
        bind(l, [&] {
            const ZMat g = zmatrix_from_json(parse_inline_or_file(matrix_text));
            return Report{Json{{"sl_level", sl_level(g).to_string()}, {"sltil_level", sltil_level(g).to_string()}}};
        });
    }

    // ---- group ----------------------------------------------------------------------
    CLI::App* group = sub(&app, "group", "finite matrix groups by enumeration");
    group->require_subcommand(1);
    std::string gens_kind = "elementary";
    std::vector<std::string> level_items;
    bool with_classes = false;
    {
        CLI::App* s = sub(group, "generate", "enumerate a subgroup of SL_d(Q)");
        s->add_option("--mod", mod, "Q = Z/N");
        s->add_option("--quotient", quotient_file, "Q = R/I given by an ideal file");
        s->add_option("--d", d, "dimension")->required();
        s->add_option("--gens", gens_kind, "elementary: EL_d(Q); level: E_ij(x) for x in --level")
            ->check(CLI::IsMember({"elementary", "level"}));
        s->add_option("--level", level_items, "generators of the level ideal")->delimiter(',');
        s->add_flag("--classes", with_classes, "also count conjugacy classes");
        bind(s, [&] {
            FiniteRing R(make_quotient(mod, quotient_file));
            std::vector<FMat> gens;
            if (gens_kind == "elementary") {
                gens = el_generators(R, d);
            } else {
                if (level_items.empty()) throw ParseError("--gens level needs --level");
                gens = elementary_generators(R, d, R.q().ideal_closure(parse_residues(R.q(), level_items)));
            }
            MatrixSet g = generate_subgroup(R, d, gens);
            g.canonicalize();
            std::size_t central = 0;
            for (const auto& m : g.elements()) {
                bool is_scalar = true;
                for (std::size_t i = 0; i < d && is_scalar; ++i)
                    for (std::size_t j = 0; j < d && is_scalar; ++j)
                        is_scalar = (i == j) ? m(i, j) == m(0, 0) : m(i, j) == 0;
                central += is_scalar;
            }
            Json body{{"ring_size", R.q().size()}, {"d", d}, {"generators", gens_kind}, {"order", g.size()},
                      {"scalar_elements", central}};
            if (with_classes) body["classes"] = FiniteGroup(R, d, g, gens).classes().size();
            return Report{body};
        });
    }

    // ---- measures -------------------------------------------------------------------
    CLI::App* measures = sub(&app, "measures", "EL-invariant measures on the dual of Q^d");
    measures->require_subcommand(1);
    {
        CLI::App* s = sub(measures, "classify", "parametric list versus orbit decomposition");
        s->add_option("--mod", mod, "Q = Z/N");
        s->add_option("--quotient", quotient_file, "Q = R/I given by an ideal file");
        s->add_option("--d", d, "dimension")->required();
        bind(s, [&] {
            const FiniteModel m(make_quotient(mod, quotient_file), d);
            const Classification c = classify_measures(m);
            Json body = classification_to_json(m, c);
            return Report{body, c.bijection && c.all_invariant};
        });
    }

    // ---- char -----------------------------------------------------------------------
    CLI::App* chr = sub(&app, "char", "character triples (level, kernel, orbit)");
    chr->require_subcommand(1);
    std::string triple_file;
    unsigned ball_radius = 4;
    std::size_t sample_size = 40;
    {
        CLI::App* v = sub(chr, "validate", "check the defining conditions of a triple");
        v->add_option("--triple", triple_file, "triple JSON file")->required();
        bind(v, [&] {
            const LoadedTriple lt = triple_from_json(read_json_file(triple_file), cfg.seed);
            const TripleReport r = validate_triple(lt.triple, lt.model);
            Json body{{"group_order", lt.model.a.group->order()},
                      {"classes", lt.model.a.group->classes().size()},
                      {"depth", r.computed_depth},
                      {"depth_status", r.depth_status},
                      {"depth_matches", r.depth_matches},
                      {"orbit_size", r.orbit_size},
                      {"orbit_closed", r.orbit_closed},
                      {"orbit_single", r.orbit_single},
                      {"essential", r.essential},
                      {"characters_irreducible", r.characters_irreducible},
                      {"valid", r.pass()}};
            return Report{body, r.pass()};
        });
        CLI::App* x = sub(chr, "export", "write the triple with explicit class data");
        x->add_option("--triple", triple_file, "triple JSON file")->required();
        bind(x, [&] {
            const LoadedTriple lt = triple_from_json(read_json_file(triple_file), cfg.seed);
            return Report{triple_to_json(lt.triple, lt.model)};
        });
        CLI::App* i = sub(chr, "induce", "trace checks of the induced function on a ball of SL_d(Z)");
        i->add_option("--triple", triple_file, "triple JSON file")->required();
        i->add_option("--ball", ball_radius, "word radius of the ball")->check(CLI::Range(0u, 6u));
        i->add_option("--sample", sample_size, "sampled ball elements")->check(CLI::PositiveNumber);
        bind(i, [&] {
            const LoadedTriple lt = triple_from_json(read_json_file(triple_file), cfg.seed);
            if (!lt.triple.ring.same_ring(RingPresentation::integers()))
                throw PreconditionError("char induce evaluates on SL_d(Z); the triple ring must be Z");
            const InducedTrace phi(lt.triple, lt.model);
            std::function<Complex(const ZMat&)> f = [&](const ZMat& g) { return phi(g); };
            std::function<Complex(const ZMat&)> f2 = [&](const ZMat& g) { return Complex(std::norm(phi(g)), 0); };
            const auto ball = integer_ball(lt.triple.d, ball_radius);
            std::mt19937_64 rng(cfg.seed);
            std::vector<ZMat> sample;
            for (std::size_t k = 0; k < sample_size; ++k) sample.push_back(ball[rng() % ball.size()]);
            for (const auto& g : ball)
                if (lt.triple.kernel.contains(sltil_level(g)) && sample.size() < sample_size + 4) sample.push_back(g);
            const double gram_tol = cfg.tolerance.value_or(tolerance::kGramEigenvalue);
            const double conj_tol = cfg.tolerance.value_or(tolerance::kConjugation);
            const double id_tol = cfg.tolerance.value_or(tolerance::kIdentity);
            const double schur_tol = cfg.tolerance.value_or(tolerance::kSchur);
            const TraceCheckReport c = trace_checks(f, sample, lt.triple.kernel);
            const TraceCheckReport c2 = trace_checks(f2, sample, lt.triple.kernel);
            const Ideal ker = kernel_level(f, ball, lt.triple.ring);
            const Ideal support = support_level(f, ball, lt.triple.ring);
            const bool ok = c.psd(gram_tol) && c.conjugation_defect <= conj_tol && c.identity_defect <= id_tol &&
                            c.schur_defect <= schur_tol && c2.psd(gram_tol) && c2.conjugation_defect <= conj_tol &&
                            c.kernel_inside_k;
            Json body{{"ball_radius", ball_radius},
                      {"ball_size", ball.size()},
                      {"sample_size", sample.size()},
                      {"gram_psd", c.psd(gram_tol)},
                      {"conjugation_ok", c.conjugation_defect <= conj_tol},
                      {"identity_ok", c.identity_defect <= id_tol},
                      {"schur_ok", c.schur_defect <= schur_tol},
                      {"central_samples", c.central_samples},
                      {"square_gram_psd", c2.psd(gram_tol)},
                      {"square_conjugation_ok", c2.conjugation_defect <= conj_tol},
                      {"sample_kernel", c.kernel_ideal},
                      {"sample_kernel_inside_k", c.kernel_inside_k},
                      {"recovered_kernel", ker.to_string()},
                      {"recovered_level", support.to_string()},
                      {"kernel_matches", ideal_equal(ker, lt.triple.kernel)},
                      {"level_matches", ideal_equal(support, lt.triple.level)},
                      {"checks_pass", ok}};
            return Report{body, ok};
        });
    }

    // ---- selftest -------------------------------------------------------------------
    std::string suite_name = "paper-examples";
    {
        CLI::App* s = sub(&app, "selftest", "run built-in acceptance suites");
        s->add_option("--suite", suite_name, "paper-examples, all, or a criterion number 1-12");
        bind(s, [&] {
            // The worked examples; "all" adds the randomized identity suite.
            std::vector<int> wanted;
            if (suite_name == "paper-examples") wanted = {1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
            else if (suite_name == "all") wanted = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
            else {
                try {
                    wanted = {std::stoi(suite_name)};
                } catch (const std::exception&) {
                    throw ParseError("unknown suite \"" + suite_name + "\"");
                }
            }
            SuiteConfig sc;
            sc.seed = cfg.seed;
            Json results = Json::array();
            bool all = true;
            std::size_t ran = 0;
            for (const auto& suite : acceptance_suites()) {
                if (std::find(wanted.begin(), wanted.end(), suite.id) == wanted.end()) continue;
                const SuiteOutcome o = suite.run(sc);
                all = all && o.pass;
                ++ran;
                results.push_back(Json{{"criterion", o.id}, {"name", o.name}, {"pass", o.pass}, {"report", o.report}});
            }
            if (ran == 0) throw ParseError("unknown suite \"" + suite_name + "\"");
            return Report{Json{{"suite", suite_name}, {"pass", all}, {"results", results}}, all};
        });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "noether-el: " << e.what() << "\n";
        err << app.help();
        return kError;
    }

    if (max_pairs) cfg.limits.max_gb_pairs = *max_pairs;
    if (max_elements) cfg.limits.max_elements = *max_elements;
    if (seed) cfg.seed = *seed;
    if (tol) cfg.tolerance = tol;
    if (format) cfg.format = *format;
    if (cfg.format != "json" && cfg.format != "text") {
        err << "noether-el: format must be json or text\n";
        return kError;
    }
    if (!handler) {
        err << app.help();
        return kError;
    }

    ScopedLimits guard(cfg.limits);
    Json doc{{"schema", kSchemaVersion}, {"command", command}};
    int code = kOk;
    try {
        Report r = handler();
        for (auto it = r.body.begin(); it != r.body.end(); ++it) doc[it.key()] = it.value();
        if (!r.ok) code = kValidationFailure;
    } catch (const ResourceLimitError& e) {
        doc["error"] = {{"kind", "resource"}, {"message", e.what()}};
        code = kError;
    } catch (const std::exception& e) {
        doc["error"] = {{"kind", "input"}, {"message", e.what()}};
        code = kError;
    }
    if (code == kError) err << "noether-el: " << doc["error"]["message"].get<std::string>() << "\n";

    const std::string text = render(doc, cfg.format);
    if (cfg.out.empty()) {
        out << text;
    } else {
        std::ofstream f(cfg.out);
        if (!f) {
            err << "noether-el: cannot write " << cfg.out << "\n";
            return kError;
        }
        f << text;
    }
    return code;
}

}  // namespace noether::cli
