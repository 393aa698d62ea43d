#include <doctest.h>

#include "generators.hpp"
#include "noether/ideal.hpp"
#include "noether/limits.hpp"

using namespace noether;

namespace {

const RingPresentation kZ = RingPresentation::integers();
const RingPresentation kZx = RingPresentation::polynomial_ring(1, {"x"});
const RingPresentation kZxy = RingPresentation::polynomial_ring(2, {"x", "y"});

Ideal I(const RingPresentation& r, std::vector<std::string> gens) { return Ideal::parse(r, gens); }
Ideal ix(std::vector<std::string> gens) { return Ideal::parse(kZx, gens); }

bool contained(const Ideal& small, const Ideal& big) { return big.contains(small); }

}  // namespace

TEST_CASE("strong Groebner basis examples") {
    CHECK(I(kZ, {"4", "6"}).to_string() == "(2)");
    CHECK(ideal_equal(ix({"x", "2"}), ix({"2", "x"})));
    // x (2x+2) - 2 x^2 = 2x, so 2 lies in the ideal and the basis is {2, x^2}.
    const Ideal i = ix({"2*x+2", "x^2"});
    bool has_x2 = false;
    for (const auto& g : i.gb().elements) has_x2 = has_x2 || g.leading_monomial() == Monomial(std::vector<std::uint32_t>{2});
    CHECK(has_x2);
    CHECK(i.contains(kZx.parse("2*x+2")));
    CHECK(ideal_equal(i, ix({"2", "x^2"})));
    CHECK(i.contains(kZx.parse("2*x^2+2*x")));
}

TEST_CASE("membership examples") {
    CHECK(ix({"x^2"}).contains(kZx.parse("x^3")));
    CHECK_FALSE(ix({"2", "x"}).contains(kZx.parse("1")));
    CHECK(ix({"x^2+x"}).contains(kZx.parse("x^4+x")));
    CHECK_FALSE(ix({"x^2+x"}).contains(kZx.parse("x^4+2*x")));
}

TEST_CASE("sum, product and intersection examples") {
    CHECK(ideal_equal(ideal_sum(I(kZ, {"2"}), I(kZ, {"3"})), Ideal::unit(kZ)));
    CHECK(ideal_equal(ideal_sum(ix({"2"}), ix({"x"})), ix({"2", "x"})));
    CHECK(ideal_equal(ideal_product(ix({"x"}), ix({"x"})), ix({"x^2"})));
    CHECK(ideal_equal(ideal_product(ix({"2", "x"}), ix({"2", "x"})), ix({"4", "2*x", "x^2"})));
    CHECK(ideal_equal(ideal_intersect(I(kZ, {"2"}), I(kZ, {"3"})), I(kZ, {"6"})));
    CHECK(ideal_equal(ideal_intersect(ix({"x"}), ix({"2", "x"})), ix({"x"})));
    CHECK(ideal_equal(ideal_intersect(ix({"2"}), ix({"x"})), ix({"2*x"})));
}

TEST_CASE("quotient and saturation examples") {
    CHECK(ideal_equal(ideal_quotient(ix({"x^2"}), ix({"x"})), ix({"x"})));
    CHECK(ideal_equal(ideal_quotient(I(kZ, {"6"}), I(kZ, {"2"})), I(kZ, {"3"})));
    CHECK(ideal_equal(ideal_quotient(ix({"4", "2*x", "x^2"}), ix({"2", "x"})), ix({"2", "x"})));
    CHECK(saturate(ix({"x^2"}), ix({"x"})).is_unit());
    CHECK(ideal_equal(saturate(ix({"4*x", "x^2"}), ix({"2", "x"})), ix({"x"})));
    CHECK(ideal_equal(saturate(ix({"3*x+1"}), Ideal::unit(kZx)), ix({"3*x+1"})));
}

TEST_CASE("integer part examples") {
    CHECK(integer_part(ix({"2", "x"})) == 2);
    CHECK(integer_part(ix({"x"})) == 0);
    CHECK(integer_part(ix({"2*x-2", "3*x"})) == 6);
}

TEST_CASE("equality examples") {
    CHECK(ideal_equal(ix({"2", "x"}), ix({"x", "2"})));
    CHECK_FALSE(ideal_equal(ix({"x"}), ix({"x^2"})));
    CHECK(ideal_equal(ix({"2*x+2", "x^2"}), ix({"x^2", "2*x+2", "2*x^3"})));
}

TEST_CASE("presented rings carry their relations") {
    auto r = RingPresentation::polynomial_ring(1, {"i"});
    r.relations.push_back(r.parse("i^2+1"));
    const Ideal two(r, {r.parse("2")});
    // In Z[i], 2 = -i (1+i)^2, so (2) : (1+i) = (1+i).
    CHECK(ideal_equal(ideal_quotient(two, r.parse("1+i")), Ideal(r, {r.parse("1+i")})));
    CHECK(Ideal::zero(r).contains(r.parse("i^2+1")));
    CHECK(Ideal(r, {r.parse("i")}).is_unit());
}

TEST_CASE("different rings are rejected") {
    CHECK_THROWS(ideal_sum(ix({"x"}), I(kZxy, {"x"})));
}

TEST_CASE("the critical pair cap fails loudly") {
    Limits tight = limits();
    tight.max_gb_pairs = 2;
    ScopedLimits guard(tight);
    const Ideal i = I(kZxy, {"3*x^3*y+2*x*y^2-5", "4*x^2*y^3-x+y", "5*y^4+x^3-2*x*y"});
    CHECK_THROWS_AS(i.gb(), ResourceLimitError);
}

TEST_CASE("property: colon axioms, intersection and cancellation on random ideals") {
    gen::Gen g(201);
    Limits capped = limits();
    capped.max_gb_pairs = 3000;
    ScopedLimits guard(capped);
    int completed = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const RingPresentation& r = trial % 2 ? kZxy : kZx;
        const Ideal i = g.ideal(r), j = g.ideal(r), l = g.ideal(r);
        try {
            const Ideal ji = ideal_quotient(j, i);
            // I (J : I) is inside J, which is inside J : I.
            CHECK(contained(ideal_product(i, ji), j));
            CHECK(contained(j, ji));
            // (I n J) : I = J : I.
            CHECK(ideal_equal(ideal_quotient(ideal_intersect(i, j), i), ji));
            // (L : I) : (J : I) is inside L : ((J : I) I).
            const Ideal li = ideal_quotient(l, i);
            CHECK(contained(ideal_quotient(li, ji), ideal_quotient(l, ideal_product(ji, i))));
            // J inside J + L gives J : I inside (J + L) : I.
            CHECK(contained(ji, ideal_quotient(ideal_sum(j, l), i)));
            // Membership in I n J agrees with membership in both.
            const Ideal meet = ideal_intersect(i, j);
            for (int k = 0; k < 4; ++k) {
                Polynomial f = g.polynomial(r, 3, 2, 5);
                if (k == 0) f = f * i.generators().front() * j.generators().front();
                CHECK(meet.contains(f) == (i.contains(f) && j.contains(f)));
            }
            ++completed;
        } catch (const ResourceLimitError&) {
        }
    }
    CHECK(completed >= 50);
}

TEST_CASE("property: quotient by a generator set equals the intersection of elementwise quotients") {
    gen::Gen g(202);
    for (int trial = 0; trial < 40; ++trial) {
        const Ideal j = g.ideal(kZx, 3), i = g.ideal(kZx, 2);
        Ideal expected = Ideal::unit(kZx);
        for (const auto& f : i.generators()) expected = ideal_intersect(expected, ideal_quotient(j, f));
        CHECK(ideal_equal(ideal_quotient(j, i), expected));
        // x in J : f exactly when x f in J.
        for (const auto& f : i.generators()) {
            const Ideal q = ideal_quotient(j, f);
            for (const auto& x : q.generators()) CHECK(j.contains(x * f));
        }
    }
}
