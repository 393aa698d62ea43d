#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>

#include "generators.hpp"
#include "noether/characters.hpp"

using namespace noether;

namespace {

FiniteRing mod(unsigned n) { return FiniteRing(std::make_shared<QuotientContext>(QuotientContext::integers_mod(n))); }

FiniteGroup full_group(const FiniteRing& R, std::size_t d) {
    const auto gens = el_generators(R, d);
    MatrixSet g = generate_subgroup(R, d, gens);
    g.canonicalize();
    return FiniteGroup(R, d, g, gens);
}

std::vector<long> degrees(const std::vector<ClassFunction>& chars) {
    std::vector<long> out;
    for (const auto& c : chars) out.push_back(degree_of(c));
    return out;
}

CharacterTriple sl3_triple(long degree, TripleModel& model) {
    const auto z = RingPresentation::integers();
    CharacterTriple t{z, 3, Ideal::unit(z), Ideal::parse(z, {"2"}), {}};
    model = build_triple_model(t, 7);
    t.orbit = orbit_by_degree(model, degree);
    return t;
}

}  // namespace

TEST_CASE("conjugacy classes") {
    const FiniteGroup sl3 = full_group(mod(2), 3);
    CHECK(sl3.order() == 168);
    CHECK(sl3.classes().size() == 6);
    std::size_t total = 0;
    for (const auto& c : sl3.classes()) total += c.size();
    CHECK(total == 168);
    CHECK(sl3.classes().front() == std::vector<std::size_t>{sl3.identity()});
    CHECK(full_group(mod(2), 2).classes().size() == 3);
}

TEST_CASE("abelian groups have one class per element") {
    // Upper unitriangular 2x2 matrices over Z/4: a cyclic group of order 4.
    const FiniteRing R = mod(4);
    const std::vector<FMat> gens{elementary(R, 2, 0, 1, R.one())};
    MatrixSet g = generate_subgroup(R, 2, gens);
    g.canonicalize();
    const FiniteGroup c4(R, 2, g, gens);
    CHECK(c4.order() == 4);
    CHECK(c4.classes().size() == 4);
    const auto chars = irreducible_characters(c4, 1);
    CHECK(degrees(chars) == std::vector<long>{1, 1, 1, 1});
    // Every value is a fourth root of unity.
    for (const auto& chi : chars)
        for (const auto& v : chi.values) CHECK(std::abs(std::pow(v, 4) - Complex(1, 0)) < 1e-9);
}

TEST_CASE("character degrees") {
    CHECK(degrees(irreducible_characters(full_group(mod(2), 2), 7)) == std::vector<long>{1, 1, 2});
    const auto chars = irreducible_characters(full_group(mod(2), 3), 7);
    CHECK(degrees(chars) == std::vector<long>{1, 3, 3, 6, 7, 8});
    long sum = 0;
    for (long d : degrees(chars)) sum += d * d;
    CHECK(sum == 168);
}

TEST_CASE("property: orthogonality relations on several groups and seeds") {
    for (auto [n, d] : std::vector<std::pair<unsigned, std::size_t>>{{2, 2}, {3, 2}, {4, 2}, {5, 2}, {2, 3}}) {
        const FiniteGroup g = full_group(mod(n), d);
        for (std::uint64_t seed : {1u, 7u, 99u}) {
            const auto chars = irreducible_characters(g, seed);
            CHECK(chars.size() == g.classes().size());
            const auto r = check_orthogonality(g, chars);
            CHECK(r.first < 1e-6);
            CHECK(r.second < 1e-6);
            CHECK(r.degree_sum < 1e-6);
            for (const auto& chi : chars) CHECK(std::abs(inner_product(g, chi, chi) - Complex(1, 0)) < 1e-6);
        }
    }
}

TEST_CASE("subquotient examples") {
    auto q2 = std::make_shared<QuotientContext>(QuotientContext::integers_mod(2));
    const Subquotient trivial = subquotient_A(q2, 3, {0}, {0});
    CHECK(trivial.group->order() == 1);
    CHECK(trivial.center_index == 1);
    auto q4 = std::make_shared<QuotientContext>(QuotientContext::integers_mod(4));
    const auto two = q4->ideal_closure({q4->from_integer(2)});
    const Subquotient a = subquotient_A(q4, 3, two, {0});
    // SLtil_3((2)) in SL_3(Z/4) is the congruence kernel: 2^8 elements.
    CHECK(a.group->order() == 256);
    CHECK(a.center_index >= 1);
}

TEST_CASE("triple validation") {
    TripleModel model;
    const CharacterTriple t = sl3_triple(7, model);
    const TripleReport r = validate_triple(t, model);
    CHECK(r.pass());
    CHECK(r.orbit_size == 1);

    // Two characters from different orbits are not a single orbit.
    CharacterTriple two = t;
    two.orbit.push_back(orbit_by_degree(model, 8).front());
    CHECK_FALSE(validate_triple(two, model).orbit_single);

    // The trivial character is not essential.
    CharacterTriple trivial = t;
    trivial.orbit = orbit_by_degree(model, 1);
    CHECK_FALSE(validate_triple(trivial, model).essential);

    // (2) is not the depth of (2) in Z, so level (2) with kernel (2) is rejected.
    const auto z = RingPresentation::integers();
    CharacterTriple wrong{z, 3, Ideal::parse(z, {"2"}), Ideal::parse(z, {"2"}), {}};
    const TripleModel wrong_model = build_triple_model(wrong, 7);
    wrong.orbit = {wrong_model.irreducibles.front()};
    CHECK_FALSE(validate_triple(wrong, wrong_model).depth_matches);
}

TEST_CASE("induced trace values") {
    TripleModel model;
    const CharacterTriple t = sl3_triple(7, model);
    const InducedTrace phi(t, model);
    IntegerRing Z;
    CHECK(std::abs(phi(identity(Z, 3)) - Complex(1, 0)) < 1e-12);
    // Transvections of SL3(F2) carry the value -1 in the degree-7 character.
    CHECK(std::abs(phi(elementary(Z, 3, 0, 1, BigInt(1))) - Complex(-1.0 / 7, 0)) < 1e-9);
    // Congruence elements map to the identity of A.
    CHECK(std::abs(phi(elementary(Z, 3, 0, 1, BigInt(2))) - Complex(1, 0)) < 1e-12);
}

TEST_CASE("trace checks accept a trace and reject a corrupted one") {
    TripleModel model;
    const CharacterTriple t = sl3_triple(7, model);
    const InducedTrace phi(t, model);
    const auto ball = integer_ball(3, 3);
    gen::Gen g(601);
    std::vector<ZMat> sample;
    for (int k = 0; k < 30; ++k) sample.push_back(ball[g.index(ball.size())]);
    std::function<Complex(const ZMat&)> f = [&](const ZMat& m) { return phi(m); };
    const TraceCheckReport r = trace_checks(f, sample, t.kernel);
    CHECK(r.psd(1e-8));
    CHECK(r.conjugation_defect <= 1e-12);
    CHECK(r.identity_defect <= 1e-12);
    CHECK(r.kernel_inside_k);

    std::function<Complex(const ZMat&)> one = [](const ZMat&) { return Complex(1, 0); };
    const TraceCheckReport ones = trace_checks(one, sample, t.kernel);
    CHECK(ones.psd(1e-8));
    CHECK(ones.conjugation_defect == 0);

    IntegerRing Z;
    const ZMat id = identity(Z, 3);
    std::function<Complex(const ZMat&)> bad = [&](const ZMat& m) { return m == id ? -phi(m) : phi(m); };
    CHECK_FALSE(trace_checks(bad, sample, t.kernel).psd(1e-8));
}

TEST_CASE("property: every irreducible induces a positive definite conjugation-invariant function") {
    TripleModel model;
    sl3_triple(7, model);
    const auto ball = integer_ball(3, 3);
    gen::Gen g(602);
    for (const auto& chi : model.irreducibles) {
        const auto z = RingPresentation::integers();
        CharacterTriple t{z, 3, Ideal::unit(z), Ideal::parse(z, {"2"}), ambient_orbit(model, chi)};
        const InducedTrace phi(t, model);
        std::function<Complex(const ZMat&)> f = [&](const ZMat& m) { return phi(m); };
        std::vector<ZMat> sample;
        for (int k = 0; k < 20; ++k) sample.push_back(ball[g.index(ball.size())]);
        const TraceCheckReport r = trace_checks(f, sample, t.kernel);
        CHECK(r.psd(1e-8));
        CHECK(r.conjugation_defect <= 1e-12);
        CHECK(r.identity_defect <= 1e-12);
        for (const auto& m : sample) CHECK(std::abs(phi(m)) <= 1 + 1e-12);
    }
}

TEST_CASE("round trip: kernel, level and orbit are recovered from the trace") {
    TripleModel model;
    const CharacterTriple t = sl3_triple(7, model);
    const InducedTrace phi(t, model);
    std::function<Complex(const ZMat&)> f = [&](const ZMat& m) { return phi(m); };
    const auto ball = integer_ball(3, 3);
    CHECK(ideal_equal(kernel_level(f, ball, t.ring), t.kernel));
    CHECK(ideal_equal(support_level(f, ball, t.ring), t.level));
    ClassFunction restriction;
    for (std::size_t k = 0; k < model.a.group->classes().size(); ++k) restriction.values.push_back(phi.on_class(k));
    const auto parts = constituents(model, restriction);
    REQUIRE(parts.size() == 1);
    CHECK(same_class_function(model.irreducibles[parts.front()], t.orbit.front()));
}

TEST_CASE("integer balls") {
    CHECK(integer_ball(3, 0).size() == 1);
    CHECK(integer_ball(3, 1).size() == 13);
    const auto ball = integer_ball(3, 2);
    IntegerRing Z;
    for (const auto& m : ball) CHECK(det(Z, m) == 1);
}
