#include "noether/suites.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "noether/limits.hpp"

namespace noether {

namespace {

RingPresentation univariate() { return RingPresentation::polynomial_ring(1, {"x"}); }
RingPresentation bivariate() { return RingPresentation::polynomial_ring(2, {"x", "y"}); }

SuiteOutcome outcome(int id, const char* name, bool pass, Json report) {
    SuiteOutcome o;
    o.id = id;
    o.name = name;
    o.pass = pass;
    report["pass"] = pass;
    o.report = std::move(report);
    return o;
}

std::string ideal_text(const Ideal& i) { return i.to_string(); }

Ideal random_ideal(std::mt19937_64& rng, const RingPresentation& ring) {
    const unsigned ngens = 1 + static_cast<unsigned>(rng() % 2);
    std::vector<Polynomial> gens;
    while (gens.size() < ngens) {
        Polynomial f = random_polynomial(rng, ring, 3, 3, 5);
        if (!f.is_zero()) gens.push_back(std::move(f));
    }
    return Ideal(ring, std::move(gens));
}

bool in_column_subgroup(const FiniteRing&, const FMat& m, std::size_t col) {
    // Identity except possibly for the off-diagonal entries of one column.
    for (std::size_t r = 0; r < m.d; ++r)
        for (std::size_t c = 0; c < m.d; ++c) {
            if (r == c) {
                if (m(r, c) != 1) return false;
            } else if (c != col && m(r, c) != 0) {
                return false;
            }
        }
    return true;
}

FMat transpose(const FMat& m) {
    FMat t = m;
    for (std::size_t r = 0; r < m.d; ++r)
        for (std::size_t c = 0; c < m.d; ++c) t(r, c) = m(c, r);
    return t;
}

template <class Ring>
bool first_row_shape(const Ring& R, const Mat<Ring>& m) {
    // Identity outside the first row.
    for (std::size_t r = 1; r < m.d; ++r)
        for (std::size_t c = 0; c < m.d; ++c)
            if (!R.eq(m(r, c), r == c ? R.one() : R.zero())) return false;
    return R.eq(m(0, 0), R.one());
}

template <class Ring>
bool first_column_shape(const Ring& R, const Mat<Ring>& m) {
    for (std::size_t r = 0; r < m.d; ++r)
        for (std::size_t c = 1; c < m.d; ++c)
            if (!R.eq(m(r, c), r == c ? R.one() : R.zero())) return false;
    return R.eq(m(0, 0), R.one());
}

template <class Ring>
bool embedded_shape(const Ring& R, const Mat<Ring>& m) {
    for (std::size_t k = 1; k < m.d; ++k)
        if (!R.is_zero(m(0, k)) || !R.is_zero(m(k, 0))) return false;
    return R.eq(m(0, 0), R.one()) && R.eq(det(R, m), R.one());
}

}  // namespace

Polynomial random_polynomial(std::mt19937_64& rng, const RingPresentation& ring, unsigned terms, unsigned deg,
                             long coeff) {
    Polynomial f = ring.zero();
    const unsigned n = 1 + static_cast<unsigned>(rng() % terms);
    for (unsigned t = 0; t < n; ++t) {
        long c = static_cast<long>(rng() % static_cast<unsigned long>(2 * coeff + 1)) - coeff;
        if (c == 0) c = 1;
        Polynomial m = ring.constant(c);
        unsigned budget = static_cast<unsigned>(rng() % (deg + 1));
        for (unsigned e = 0; e < budget; ++e) m = m * ring.var(rng() % ring.nvars);
        f = f + m;
    }
    return f;
}

ZWord random_word(std::mt19937_64& rng, std::size_t d, std::size_t letters, long bound) {
    ZWord w;
    const std::size_t n = 1 + rng() % letters;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t i = rng() % d, j = rng() % (d - 1);
        if (j >= i) ++j;
        long r = static_cast<long>(rng() % static_cast<unsigned long>(2 * bound)) - bound;
        if (r >= 0) ++r;  // nonzero in [-bound, bound]
        w.push_back({i, j, BigInt(r)});
    }
    return w;
}

// ---- 1. depth ideal examples ---------------------------------------------------------

SuiteOutcome suite_depth_examples(const SuiteConfig&) {
    bool pass = true;
    Json cases = Json::array();
    const auto zx = univariate();
    for (int n = 1; n <= 3; ++n) {
        Ideal i = Ideal::parse(zx, {"x^" + std::to_string(n)});
        DepthResult r = compute_depth(i);
        bool ok = ideal_equal(r.depth, i) && r.status == DepthStatus::Certified;
        pass = pass && ok;
        cases.push_back({{"ideal", i.to_string()}, {"depth", r.depth.to_string()}, {"status", to_string(r.status)},
                         {"ok", ok}});
    }
    const auto z = RingPresentation::integers();
    for (int m : {2, 6, 12}) {
        Ideal i = Ideal::parse(z, {std::to_string(m)});
        DepthResult r = compute_depth(i);
        bool ok = r.depth.is_unit() && r.status == DepthStatus::Certified;
        pass = pass && ok;
        cases.push_back({{"ideal", i.to_string()}, {"depth", r.depth.to_string()}, {"status", to_string(r.status)},
                         {"ok", ok}});
    }
    bool comm = commensurable(Ideal::parse(zx, {"2"}), Ideal::parse(zx, {"x"}));
    pass = pass && !comm;
    Json report;
    report["cases"] = cases;
    report["commensurable_2_x"] = comm;
    return outcome(1, "depth-ideal examples", pass, report);
}

// ---- 2. colon identities -------------------------------------------------------------

SuiteOutcome suite_colon_identities(const SuiteConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    constexpr std::size_t kTrials = 120;
    constexpr std::size_t kPairCap = 3000;  // per Groebner basis; capped trials are reported as skipped
    Limits capped = limits();
    capped.max_gb_pairs = std::min(capped.max_gb_pairs, kPairCap);
    ScopedLimits guard(capped);
    std::size_t completed = 0, skipped = 0, finite_checked = 0, enumerated = 0;
    Json failures = Json::array();
    std::map<std::string, std::size_t> checks;
    for (std::size_t t = 0; t < kTrials; ++t) {
        const auto ring = t % 2 == 0 ? univariate() : bivariate();
        Ideal i = random_ideal(rng, ring), j = random_ideal(rng, ring), l = random_ideal(rng, ring);
        std::vector<Polynomial> probes;
        for (int k = 0; k < 3; ++k) probes.push_back(random_polynomial(rng, ring, 3, 2, 5));
        auto fail = [&](const char* what) {
            failures.push_back({{"trial", t}, {"check", what}, {"I", ideal_text(i)}, {"J", ideal_text(j)},
                                {"L", ideal_text(l)}});
        };
        try {
            const Ideal ji = ideal_quotient(j, i);
            // I (J:I) in J in J:I
            if (!j.contains(ideal_product(i, ji))) fail("product inside J");
            if (!ji.contains(j)) fail("J inside J:I");
            // (I cap J) : I = J : I
            const Ideal meet = ideal_intersect(i, j);
            if (!ideal_equal(ideal_quotient(meet, i), ji)) fail("intersection colon");
            // (L:I):(J:I) inside L:((J:I) I)
            const Ideal li = ideal_quotient(l, i);
            if (!ideal_quotient(l, ideal_product(ji, i)).contains(ideal_quotient(li, ji))) fail("cancellation");
            // J' = I cap J inside I gives J':L inside I:L
            if (!ideal_quotient(i, l).contains(ideal_quotient(meet, l))) fail("colon monotone");
            // Membership in the intersection.
            for (const auto& p : probes) {
                std::vector<Polynomial> tests{p, p * i.generators()[0] * j.generators()[0], p * i.generators()[0]};
                for (const auto& f : tests)
                    if (meet.contains(f) != (i.contains(f) && j.contains(f))) fail("intersection membership");
            }
            // |I / J'| finite iff J':I has finite index.
            const Ideal colon = ideal_quotient(meet, i);
            const FinitenessVerdict v = finite_index_test(colon);
            if (v.status == FiniteStatus::Finite) {
                ++finite_checked;
                const Polynomial n = ring.constant(v.integer_part);
                for (const auto& g : i.generators()) {
                    if (!meet.contains(n * g)) fail("integer witness");
                    for (std::size_t x = 0; x < v.witnesses.size(); ++x) {
                        auto [lo, hi] = v.witnesses[x];
                        Polynomial px = ring.one(), qx = ring.one();
                        for (std::uint32_t e = 0; e < hi; ++e) px = px * ring.var(x);
                        for (std::uint32_t e = 0; e < lo; ++e) qx = qx * ring.var(x);
                        if (!meet.contains((px - qx) * g)) fail("power witness");
                    }
                }
            }
            const FinitenessVerdict vm = finite_index_test(meet);
            if (vm.status == FiniteStatus::Finite) {
                if (v.status != FiniteStatus::Finite) fail("finite module with infinite colon");
                if (vm.cardinality <= 1024) {
                    QuotientContext q(meet);
                    std::size_t inside = 0;
                    for (std::size_t e = 0; e < q.size(); ++e)
                        if (i.contains(q.element(static_cast<QuotientContext::Elem>(e)))) ++inside;
                    const BigInt quotient_order = vm.cardinality / finite_index_test(i).cardinality;
                    if (BigInt(static_cast<unsigned long>(inside)) != quotient_order) fail("enumerated order");
                    ++enumerated;
                }
            }
            ++completed;
        } catch (const ResourceLimitError&) {
            ++skipped;
        }
    }
    checks["completed"] = completed;
    checks["skipped_resource"] = skipped;
    checks["pair_cap"] = kPairCap;
    checks["finite_quotients_certified"] = finite_checked;
    checks["enumerated"] = enumerated;
    Json report;
    for (const auto& [k, n] : checks) report[k] = n;
    report["failures"] = failures;
    return outcome(2, "colon identities", failures.empty() && completed >= 100, report);
}

// ---- 3. depth lattice -------------------------------------------------------------------

SuiteOutcome suite_depth_lattice(const SuiteConfig&) {
    const auto zx = univariate();
    const auto z = RingPresentation::integers();
    std::vector<Ideal> corpus_x, corpus_z;
    for (const auto& gens : std::vector<std::vector<std::string>>{
             {"4*x", "x^2"}, {"x"}, {"x^2"}, {"x^3"}, {"2*x", "x^2"}, {"x^2+x"}, {"6*x", "x^3"}, {"x^2+1"}})
        corpus_x.push_back(Ideal::parse(zx, gens));
    for (const char* m : {"2", "4", "6", "12"}) corpus_z.push_back(Ideal::parse(z, {m}));

    bool pass = true;
    std::size_t certified_pairs = 0;
    bool saw_example = false;
    Json pairs = Json::array();
    auto run = [&](const std::vector<Ideal>& corpus) {
        std::vector<DepthResult> depths;
        for (const auto& i : corpus) depths.push_back(compute_depth(i));
        for (std::size_t a = 0; a < corpus.size(); ++a)
            for (std::size_t b = a + 1; b < corpus.size(); ++b) {
                if (depths[a].status != DepthStatus::Certified || depths[b].status != DepthStatus::Certified) continue;
                DepthResult meet = compute_depth(ideal_intersect(corpus[a], corpus[b]));
                if (meet.status != DepthStatus::Certified) continue;
                const Ideal expect = ideal_intersect(depths[a].depth, depths[b].depth);
                bool ok = ideal_equal(meet.depth, expect);
                pass = pass && ok;
                ++certified_pairs;
                pairs.push_back({{"I", corpus[a].to_string()}, {"J", corpus[b].to_string()},
                                 {"depth_meet", meet.depth.to_string()}, {"meet_of_depths", expect.to_string()},
                                 {"ok", ok}});
            }
        const Ideal example = Ideal::parse(zx, {"4*x", "x^2"});
        for (std::size_t a = 0; a < corpus.size(); ++a)
            if (corpus[a].ring().same_ring(zx) && ideal_equal(corpus[a], example)) {
                saw_example = ideal_equal(depths[a].depth, Ideal::parse(zx, {"x"})) &&
                              depths[a].status == DepthStatus::Certified;
                pass = pass && saw_example;
            }
    };
    run(corpus_x);
    run(corpus_z);
    pass = pass && certified_pairs >= 10 && saw_example;
    Json report;
    report["certified_pairs"] = certified_pairs;
    report["depth_of_4x_x2_is_x"] = saw_example;
    report["pairs"] = pairs;
    return outcome(3, "depth lattice", pass, report);
}

// ---- 4. measure classification ----------------------------------------------------------

SuiteOutcome suite_measure_classification(const SuiteConfig&) {
    bool pass = true;
    Json models = Json::array();
    struct Spec {
        const char* name;
        std::shared_ptr<const QuotientContext> q;
    };
    std::vector<Spec> specs{
        {"Z/4", std::make_shared<QuotientContext>(QuotientContext::integers_mod(4))},
        {"Z/6", std::make_shared<QuotientContext>(QuotientContext::integers_mod(6))},
        {"F2[t]/(t^2)", std::make_shared<QuotientContext>(QuotientContext::presented({"t"}, {"2", "t^2"}))},
    };
    std::vector<std::size_t> z4_sizes;
    for (const auto& s : specs)
        for (std::size_t d : {2, 3}) {
            FiniteModel m(s.q, d);
            Classification c = classify_measures(m);
            pass = pass && c.bijection && c.all_invariant;
            std::vector<std::size_t> sizes;
            for (const auto& o : c.dual_orbits) sizes.push_back(o.size());
            std::sort(sizes.begin(), sizes.end());
            if (std::string(s.name) == "Z/4" && d == 2) z4_sizes = sizes;
            models.push_back({{"ring", s.name}, {"d", d}, {"orbit_sizes", sizes}, {"parametric", c.parametric.size()},
                              {"collisions", c.collisions}, {"bijection", c.bijection},
                              {"all_invariant", c.all_invariant}});
        }
    const bool sizes_ok = z4_sizes == std::vector<std::size_t>{1, 3, 12};
    pass = pass && sizes_ok;
    Json report;
    report["models"] = models;
    report["z4_squared_orbit_sizes"] = z4_sizes;
    return outcome(4, "measure classification", pass, report);
}

// ---- 5. invariant subgroups -------------------------------------------------------------

SuiteOutcome suite_invariant_subgroups(const SuiteConfig&) {
    bool pass = true;
    Json models = Json::array();
    std::vector<std::pair<unsigned, std::size_t>> specs{{4, 2}, {2, 3}};
    for (auto [n, d] : specs) {
        auto q = std::make_shared<QuotientContext>(QuotientContext::integers_mod(n));
        FiniteModel m(q, d);
        auto all = all_subgroups(m);
        auto inv = all_invariant_subgroups(m);
        std::size_t matched = 0;
        for (const auto& h : inv)
            if (invariant_subgroup_check(m, h).equals_ideal_power) ++matched;
        // Every ideal power is itself invariant, and distinct ideals give distinct powers.
        std::set<std::vector<std::size_t>> powers;
        for (const auto& ideal : q->all_ideals()) {
            auto p = m.ideal_power(ideal);
            std::sort(p.begin(), p.end());
            powers.insert(p);
        }
        const bool ok = matched == inv.size() && powers.size() == inv.size();
        pass = pass && ok;
        models.push_back({{"ring", "Z/" + std::to_string(n)}, {"d", d}, {"subgroups", all.size()},
                          {"invariant", inv.size()}, {"equal_to_ideal_power", matched},
                          {"ideal_powers", powers.size()}, {"ok", ok}});
    }
    Json report;
    report["models"] = models;
    return outcome(5, "invariant subgroups", pass, report);
}

// ---- 6. Fourier transform of translated Haar measures ------------------------------------

SuiteOutcome suite_fourier_haar(const SuiteConfig&) {
    double worst = 0;
    std::size_t evaluations = 0;
    Json models = Json::array();
    for (unsigned n : {4u, 6u}) {
        auto q = std::make_shared<QuotientContext>(QuotientContext::integers_mod(n));
        FiniteModel m(q, 2);
        for (const auto& ideal : q->all_ideals()) {
            auto subgroup = m.annihilator_in_dual(m.ideal_power(ideal));
            auto ann = m.annihilator_in_group(subgroup);
            std::vector<char> in_ann(m.size(), 0);
            for (auto g : ann) in_ann[g] = 1;
            const Measure h = haar(subgroup);
            for (std::size_t t = 0; t < m.size(); ++t) {
                const Measure mu = translate(m, h, t);
                for (std::size_t g = 0; g < m.size(); ++g) {
                    Complex expect = in_ann[g] ? character_value(m, t, g) : Complex(0, 0);
                    worst = std::max(worst, std::abs(fourier(m, mu, g) - expect));
                    ++evaluations;
                }
            }
        }
        models.push_back({{"ring", "Z/" + std::to_string(n)}, {"d", 2}, {"ideals", q->all_ideals().size()}});
    }
    const bool pass = worst <= tolerance::kFourier;
    Json report;
    report["models"] = models;
    report["evaluations"] = evaluations;
    report["within_tolerance"] = pass;
    report["tolerance"] = tolerance::kFourier;
    return outcome(6, "Fourier transform of Haar translates", pass, report);
}

// ---- 7. center words ----------------------------------------------------------------------

SuiteOutcome suite_center_words(const SuiteConfig&) {
    bool pass = true;
    Json cases = Json::array();
    for (unsigned n : {5u, 7u, 8u, 9u}) {
        auto q = std::make_shared<QuotientContext>(QuotientContext::integers_mod(n));
        FiniteRing R(q);
        for (std::size_t d : {3, 4}) {
            for (auto u : units_order_dividing(*q, static_cast<unsigned>(d))) {
                FWord w = center_word(R, u, d);
                bool ok = word_product(R, d, w) == scalar(R, d, u);
                pass = pass && ok;
                cases.push_back({{"modulus", n}, {"d", d}, {"unit", R.str(u)}, {"letters", w.size()}, {"ok", ok}});
            }
        }
    }
    Json report;
    report["cases"] = cases;
    return outcome(7, "center words", pass, report);
}

// ---- 8. Tits containment ------------------------------------------------------------------

SuiteOutcome suite_tits(const SuiteConfig&) {
    auto q = std::make_shared<QuotientContext>(QuotientContext::integers_mod(8));
    FiniteRing R(q);
    const std::size_t d = 3;
    std::vector<FiniteRing::Elem> twice, four;
    for (std::size_t t = 0; t < q->size(); ++t) {
        auto e = static_cast<FiniteRing::Elem>(t);
        auto a = R.mul(R.from_integer(2), e), b = R.mul(R.from_integer(4), e);
        if (a != 0 && std::find(twice.begin(), twice.end(), a) == twice.end()) twice.push_back(a);
        if (b != 0 && std::find(four.begin(), four.end(), b) == four.end()) four.push_back(b);
    }
    MatrixSet f = generate_subgroup(R, d, elementary_generators(R, d, twice));
    MatrixSet el = normal_closure(R, d, elementary_generators(R, d, four), el_generators(R, d));
    const bool contained = el.subset_of(f);
    Json report;
    report["generated_by_level_2"] = f.size();
    report["normal_closure_level_4"] = el.size();
    report["contained"] = contained;
    return outcome(8, "Tits containment", contained, report);
}

// ---- 9. center of EL / EL(I) ----------------------------------------------------------------

SuiteOutcome suite_center_of_quotient(const SuiteConfig&) {
    auto q = std::make_shared<QuotientContext>(QuotientContext::integers_mod(4));
    FiniteRing R(q);
    const std::size_t d = 3;
    const auto gens = el_generators(R, d);
    MatrixSet g = generate_subgroup(R, d, gens);
    const std::vector<FiniteRing::Elem> ideal = q->ideal_closure({R.from_integer(2)});
    std::vector<FiniteRing::Elem> nonzero;
    for (auto e : ideal)
        if (e != 0) nonzero.push_back(e);
    MatrixSet n = normal_closure(R, d, elementary_generators(R, d, nonzero), gens);
    MatrixSet center, scalar_part;
    for (const auto& x : g.elements()) {
        bool central = std::all_of(gens.begin(), gens.end(),
                                   [&](const FMat& s) { return n.contains(commutator(R, x, s)); });
        if (central) center.insert(x);
        if (scalar_modulo(R, x, ideal)) scalar_part.insert(x);
    }
    const bool equal = center == scalar_part;
    Json report;
    report["group_order"] = g.size();
    report["normal_closure"] = n.size();
    report["center_preimage"] = center.size();
    report["scalar_mod_ideal"] = scalar_part.size();
    report["equal"] = equal;
    return outcome(9, "center of EL modulo EL(I)", equal, report);
}

// ---- 10. normal form ----------------------------------------------------------------------

SuiteOutcome suite_normal_form(const SuiteConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    IntegerRing Z;
    const std::size_t d = 3;
    constexpr std::size_t kSamples = 500;
    std::size_t failures = 0;
    Json failed = Json::array();
    const ZMat h_prime_expected = elementary(Z, d, 0, 1, BigInt(-1));
    BigInt max_entry = 0;
    for (std::size_t k = 0; k < kSamples; ++k) {
        const ZWord w = random_word(rng, d, 12, 5);
        const ZMat g = word_product(Z, d, w);
        bool ok = false;
        try {
            auto nf = normal_form_conjugate(Z, g);
            const ZMat c = word_product(Z, d, nf.conjugator);
            const ZMat conj = multiply(Z, multiply(Z, inverse_sl(Z, c), g), c);
            const ZMat h = word_product(Z, d, nf.h), v = word_product(Z, d, nf.v);
            const ZMat hp = word_product(Z, d, nf.h_prime), vp = word_product(Z, d, nf.v_prime);
            const ZMat rebuilt = multiply(Z, multiply(Z, multiply(Z, multiply(Z, h, v), hp), vp), nf.n);
            ok = conj == rebuilt && hp == h_prime_expected && first_row_shape(Z, h) && first_column_shape(Z, v) &&
                 first_column_shape(Z, vp) && embedded_shape(Z, nf.n) && nf.verified;
            for (const auto& e : g.a) max_entry = std::max<BigInt>(max_entry, abs(e));
        } catch (const std::exception& e) {
            ok = false;
        }
        if (!ok) {
            ++failures;
            if (failed.size() < 5) failed.push_back(word_to_json(Z, w));
        }
    }
    Json report;
    report["samples"] = kSamples;
    report["failures"] = failures;
    report["failed_words"] = failed;
    report["max_abs_entry"] = max_entry.get_str();
    return outcome(10, "normal form of conjugates", failures == 0, report);
}

// ---- 11. commutators, normalizers, centralizers --------------------------------------------

SuiteOutcome suite_commutators(const SuiteConfig&) {
    bool pass = true;
    Json symbolic = Json::array();
    for (std::size_t d : {3, 4}) {
        // Variables a, b and h_1..h_d.
        std::vector<std::string> names{"a", "b"};
        for (std::size_t k = 0; k < d; ++k) names.push_back("h" + std::to_string(k + 1));
        PolyRing P(RingPresentation::polynomial_ring(names.size(), names));
        const auto& ring = P.ring();
        const Polynomial a = ring.var(0), b = ring.var(1);
        std::size_t checked = 0, bad = 0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                if (i == j) continue;
                const PMat x = elementary(P, d, i, j, a);
                for (std::size_t k = 0; k < d; ++k)
                    for (std::size_t l = 0; l < d; ++l) {
                        if (k == l) continue;
                        const PMat y = elementary(P, d, k, l, b);
                        PMat expect = identity(P, d);
                        if (j == k && i != l) expect = elementary(P, d, i, l, a * b);
                        else if (i == l && j != k) expect = elementary(P, d, k, j, -(a * b));
                        else if (j == k && i == l) continue;  // same pair reversed: not a single elementary
                        ++checked;
                        if (!mat_equal(P, commutator(P, x, y), expect)) ++bad;
                    }
                // Horizontal row k and vertical column k for k outside {i, j}.
                for (std::size_t k = 0; k < d; ++k) {
                    if (k == i || k == j) continue;
                    PMat hk = identity(P, d), vk = identity(P, d);
                    for (std::size_t l = 0; l < d; ++l)
                        if (l != k) {
                            hk(k, l) = ring.var(2 + l);
                            vk(l, k) = ring.var(2 + l);
                        }
                    ++checked;
                    if (!mat_equal(P, commutator(P, x, hk), elementary(P, d, k, j, -(a * ring.var(2 + i))))) ++bad;
                    ++checked;
                    if (!mat_equal(P, commutator(P, x, vk), elementary(P, d, i, k, a * ring.var(2 + j))))
                        ++bad;
                }
            }
        pass = pass && bad == 0;
        symbolic.push_back({{"d", d}, {"identities", checked}, {"failures", bad}});
    }

    auto q = std::make_shared<QuotientContext>(QuotientContext::integers_mod(3));
    FiniteRing R(q);
    const std::size_t d = 3;
    MatrixSet g = generate_subgroup(R, d, el_generators(R, d));
    std::size_t mismatches = 0, evaluations = 0;
    for (const auto& x : g.elements()) {
        const FMat x_inv = inverse_sl(R, x);
        for (std::size_t i = 0; i < d; ++i) {
            bool norm_v = true, norm_h = true, cent_v = true;
            for (std::size_t l = 0; l < d; ++l) {
                if (l == i) continue;
                const FMat ev = elementary(R, d, l, i, R.one());
                const FMat eh = elementary(R, d, i, l, R.one());
                if (!in_column_subgroup(R, multiply(R, multiply(R, x, ev), x_inv), i)) norm_v = false;
                if (!in_column_subgroup(R, transpose(multiply(R, multiply(R, x, eh), x_inv)), i)) norm_h = false;
                if (!commutes(R, x, ev)) cent_v = false;
            }
            evaluations += 3;
            if (norm_v != normalizes_vertical(R, x, i)) ++mismatches;
            if (norm_h != normalizes_horizontal(R, x, i)) ++mismatches;
            if (cent_v != centralizes_vertical(R, x, i)) ++mismatches;
            for (std::size_t j = 0; j < d; ++j) {
                if (j == i) continue;
                for (std::size_t e = 0; e < q->size(); ++e) {
                    auto r = static_cast<FiniteRing::Elem>(e);
                    ++evaluations;
                    if (commutes(R, x, elementary(R, d, i, j, r)) != centralizes_elementary(R, x, i, j, r))
                        ++mismatches;
                }
            }
        }
    }
    pass = pass && mismatches == 0;
    Json report;
    report["symbolic"] = symbolic;
    report["group_order"] = g.size();
    report["predicate_evaluations"] = evaluations;
    report["mismatches"] = mismatches;
    return outcome(11, "commutators and centralizers", pass, report);
}

// ---- 12. character data round trip ----------------------------------------------------------

SuiteOutcome suite_character_round_trip(const SuiteConfig& cfg) {
    const auto z = RingPresentation::integers();
    CharacterTriple t{z, 3, Ideal::unit(z), Ideal::parse(z, {"2"}), {}};
    TripleModel model = build_triple_model(t, cfg.seed);
    t.orbit = orbit_by_degree(model, 7);
    Json report;

    std::vector<long> degrees;
    long square_sum = 0;
    for (const auto& chi : model.irreducibles) {
        degrees.push_back(degree_of(chi));
        square_sum += degree_of(chi) * degree_of(chi);
    }
    const auto orth = check_orthogonality(*model.a.group, model.irreducibles);
    const bool degrees_ok = degrees == std::vector<long>{1, 3, 3, 6, 7, 8} && square_sum == 168 &&
                            orth.first <= tolerance::kOrthogonality && orth.second <= tolerance::kOrthogonality;
    report["degrees"] = degrees;
    report["degree_square_sum"] = square_sum;
    report["orthogonality_ok"] = orth.first <= tolerance::kOrthogonality && orth.second <= tolerance::kOrthogonality;

    const TripleReport tr = validate_triple(t, model);
    report["triple"] = {{"depth", tr.computed_depth}, {"status", tr.depth_status}, {"depth_matches", tr.depth_matches},
                        {"orbit_closed", tr.orbit_closed}, {"orbit_single", tr.orbit_single},
                        {"essential", tr.essential}, {"orbit_size", tr.orbit_size}};

    InducedTrace phi(t, model);
    std::function<Complex(const ZMat&)> f = [&](const ZMat& g) { return phi(g); };
    std::function<Complex(const ZMat&)> f2 = [&](const ZMat& g) { return Complex(std::norm(phi(g)), 0); };
    const auto ball = integer_ball(3, 4);
    BigInt max_entry = 0;
    for (const auto& g : ball)
        for (const auto& e : g.a) max_entry = std::max<BigInt>(max_entry, abs(e));
    std::mt19937_64 rng(cfg.seed);
    std::vector<ZMat> sample;
    for (int k = 0; k < 40; ++k) sample.push_back(ball[rng() % ball.size()]);
    // Include a few congruence elements so that the central check is not vacuous.
    std::vector<ZMat> congruence;
    for (const auto& g : ball)
        if (t.kernel.contains(sltil_level(g)) && congruence.size() < 4) congruence.push_back(g);

    const TraceCheckReport c = trace_checks(f, sample, t.kernel);
    const TraceCheckReport c2 = trace_checks(f2, sample, t.kernel);
    std::vector<ZMat> with_center = sample;
    with_center.insert(with_center.end(), congruence.begin(), congruence.end());
    const TraceCheckReport cz = trace_checks(f, with_center, t.kernel);

    // Corrupted function: the value at the identity is negated.
    IntegerRing Z;
    const ZMat id = identity(Z, 3);
    std::function<Complex(const ZMat&)> bad = [&](const ZMat& g) { return g == id ? -phi(g) : phi(g); };
    const TraceCheckReport cb = trace_checks(bad, sample, t.kernel);

    const Ideal ker = kernel_level(f, ball, z);
    const Ideal support = support_level(f, ball, z);
    ClassFunction restriction;
    for (std::size_t k = 0; k < model.a.group->classes().size(); ++k) restriction.values.push_back(phi.on_class(k));
    const auto parts = constituents(model, restriction);
    bool orbit_recovered = parts.size() == t.orbit.size();
    for (auto p : parts)
        orbit_recovered = orbit_recovered && std::any_of(t.orbit.begin(), t.orbit.end(), [&](const ClassFunction& o) {
                              return same_class_function(o, model.irreducibles[p]);
                          });

    const bool checks_ok = c.psd(tolerance::kGramEigenvalue) && c.conjugation_defect <= tolerance::kConjugation &&
                           c.identity_defect <= tolerance::kIdentity && cz.schur_defect <= tolerance::kSchur &&
                           cz.central_samples > 1 && c2.psd(tolerance::kGramEigenvalue) &&
                           c2.conjugation_defect <= tolerance::kConjugation &&
                           c2.identity_defect <= tolerance::kIdentity && c.kernel_inside_k;
    const bool corrupted_detected = !cb.psd(tolerance::kGramEigenvalue);
    const bool round_trip = ideal_equal(ker, t.kernel) && ideal_equal(support, t.level) && orbit_recovered;

    report["ball_size"] = ball.size();
    report["ball_max_entry"] = max_entry.get_str();
    report["entries_bounded"] = max_entry <= BigInt(1000000000);
    report["trace"] = {{"gram_psd", c.psd(tolerance::kGramEigenvalue)},
                       {"conjugation_ok", c.conjugation_defect <= tolerance::kConjugation},
                       {"identity_ok", c.identity_defect <= tolerance::kIdentity},
                       {"schur_ok", cz.schur_defect <= tolerance::kSchur},
                       {"central_samples", cz.central_samples},
                       {"square_gram_psd", c2.psd(tolerance::kGramEigenvalue)},
                       {"square_conjugation_ok", c2.conjugation_defect <= tolerance::kConjugation},
                       {"sample_kernel", c.kernel_ideal},
                       {"sample_kernel_inside_k", c.kernel_inside_k}};
    report["corrupted_detected"] = corrupted_detected;
    report["recovered_kernel"] = ker.to_string();
    report["recovered_level"] = support.to_string();
    report["recovered_orbit_size"] = parts.size();
    report["round_trip"] = round_trip;
    const bool pass = degrees_ok && tr.pass() && checks_ok && corrupted_detected && round_trip &&
                      max_entry <= BigInt(1000000000);
    return outcome(12, "character data round trip", pass, report);
}

const std::vector<Suite>& acceptance_suites() {
    static const std::vector<Suite> suites{
        {1, "depth-ideal examples", 10, suite_depth_examples},
        {2, "colon identities", 120, suite_colon_identities},
        {3, "depth lattice", 30, suite_depth_lattice},
        {4, "measure classification", 60, suite_measure_classification},
        {5, "invariant subgroups", 60, suite_invariant_subgroups},
        {6, "Fourier transform of Haar translates", 30, suite_fourier_haar},
        {7, "center words", 10, suite_center_words},
        {8, "Tits containment", 120, suite_tits},
        {9, "center of EL modulo EL(I)", 120, suite_center_of_quotient},
        {10, "normal form of conjugates", 60, suite_normal_form},
        {11, "commutators and centralizers", 60, suite_commutators},
        {12, "character data round trip", 180, suite_character_round_trip},
    };
    return suites;
}

}  // namespace noether
