#include <doctest.h>

#include "generators.hpp"
#include "noether/groebner.hpp"
#include "noether/polynomial.hpp"

using namespace noether;

namespace {

const RingPresentation kZx = RingPresentation::polynomial_ring(1, {"x"});
const RingPresentation kZxy = RingPresentation::polynomial_ring(2, {"x", "y"});

Polynomial px(const char* s) { return kZx.parse(s); }
Polynomial pxy(const char* s) { return kZxy.parse(s); }

}  // namespace

TEST_CASE("addition examples") {
    CHECK(px("x+1") + px("x-1") == px("2*x"));
    CHECK(px("3*x^2 - 7") + kZx.zero() == px("3*x^2 - 7"));
    CHECK(pxy("2*x^2+3") + pxy("-2*x^2+y") == pxy("y+3"));
    CHECK((px("x") - px("x")).is_zero());
}

TEST_CASE("multiplication examples") {
    CHECK(px("x-1") * px("x+1") == px("x^2-1"));
    CHECK(pxy("5*x*y - y") * kZxy.one() == pxy("5*x*y - y"));
    CHECK(pxy("x+y").pow(2) == pxy("x^2 + 2*x*y + y^2"));
}

TEST_CASE("exact division") {
    CHECK(poly_divexact(px("x^2-1"), px("x-1")) == px("x+1"));
    CHECK(poly_divexact(px("6*x"), px("2")) == px("3*x"));
    CHECK_THROWS_AS(poly_divexact(px("x^2+1"), px("x")), InexactDivision);
}

TEST_CASE("normal form examples") {
    auto nf = [](const char* f, std::vector<const char*> basis) {
        std::vector<Polynomial> g;
        for (auto b : basis) g.push_back(px(b));
        return normal_form(px(f), strong_groebner(g, 1, {}));
    };
    CHECK(nf("x^2", {"x"}).is_zero());
    CHECK(nf("x+1", {"2", "x"}) == px("1"));
    CHECK(nf("3", {"2"}) == px("1"));
}

TEST_CASE("parser and printer") {
    auto r = RingPresentation::polynomial_ring(2);
    const Polynomial f = r.parse("2*x1^2*x2 - 3");
    CHECK(to_string(f, r.variable_names()) == "2*x1^2*x2 - 3");
    CHECK(r.parse("  x1 *x2 ") == r.parse("x1^1*x2*1"));
    CHECK(to_string(r.parse("-x2 + x1^3 - 1"), r.variable_names()) == "x1^3 - x2 - 1");
    CHECK_THROWS_AS(r.parse("x3 + 1"), ParseError);
    CHECK_THROWS_AS(r.parse("2*x1^"), ParseError);
}

TEST_CASE("mismatched variable counts are rejected") {
    CHECK_THROWS_AS(px("x") + pxy("x"), VariableMismatch);
}

TEST_CASE("graded reverse lex orders by degree first") {
    const Polynomial f = pxy("y^3 + x^2*y + x*y^2 + x^3");
    CHECK(f.leading_monomial() == Monomial(std::vector<std::uint32_t>{3, 0}));
    CHECK(compare(Monomial(std::vector<std::uint32_t>{1, 1}), Monomial(std::vector<std::uint32_t>{0, 3}),
                  TermOrder::grevlex()) < 0);
    CHECK(compare(Monomial(std::vector<std::uint32_t>{1, 0}), Monomial(std::vector<std::uint32_t>{0, 3}),
                  TermOrder::lex()) > 0);
}

TEST_CASE("property: canonical arithmetic is commutative, associative and distributive") {
    gen::Gen g(101);
    auto r = RingPresentation::polynomial_ring(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial a = g.polynomial(r, 4, 4, 9), b = g.polynomial(r, 4, 4, 9), c = g.polynomial(r, 4, 4, 9);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b).total_degree() <= std::max(a.total_degree(), b.total_degree()));
        if (!b.is_zero()) CHECK(poly_divexact(a * b, b) == a);
    }
}

TEST_CASE("property: terms are strictly descending with nonzero coefficients") {
    gen::Gen g(102);
    auto r = RingPresentation::polynomial_ring(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial f = g.polynomial(r, 5, 4, 9) * g.polynomial(r, 3, 2, 9);
        for (std::size_t k = 0; k < f.size(); ++k) {
            CHECK(f.terms()[k].coeff != 0);
            if (k > 0) CHECK(compare(f.terms()[k - 1].mono, f.terms()[k].mono, f.order()) > 0);
        }
        CHECK(r.parse(to_string(f, r.variable_names())) == f);
    }
}

TEST_CASE("property: normal form is sound and fully reduced") {
    gen::Gen g(103);
    for (int trial = 0; trial < 80; ++trial) {
        const Ideal i = g.ideal(kZxy);
        const StrongGB& gb = i.gb();
        const Polynomial f = g.polynomial(kZxy, 4, 4, 20);
        const Polynomial r = normal_form(f, gb);
        CHECK(normal_form(f - r, gb).is_zero());
        for (const auto& t : r.terms())
            for (const auto& b : gb.elements) {
                const bool reducible = b.leading_monomial().divides(t.mono) &&
                                       mpz_divisible_p(t.coeff.get_mpz_t(), b.leading_coeff().get_mpz_t());
                CHECK_FALSE(reducible);
            }
    }
}
