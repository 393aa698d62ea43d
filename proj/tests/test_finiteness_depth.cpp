#include <doctest.h>

#include "generators.hpp"
#include "noether/finiteness.hpp"
#include "noether/snf.hpp"

using namespace noether;

namespace {

const RingPresentation kZ = RingPresentation::integers();
const RingPresentation kZx = RingPresentation::polynomial_ring(1, {"x"});
const RingPresentation kZxy = RingPresentation::polynomial_ring(2, {"x", "y"});

Ideal ix(std::vector<std::string> gens) { return Ideal::parse(kZx, gens); }
Ideal iz(std::vector<std::string> gens) { return Ideal::parse(kZ, gens); }

std::vector<BigInt> factors(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("finite index test examples") {
    const auto a = finite_index_test(ix({"x"}));
    CHECK(a.status == FiniteStatus::Infinite);
    CHECK(a.integer_part == 0);
    const auto b = finite_index_test(ix({"2", "x"}));
    CHECK(b.status == FiniteStatus::Finite);
    CHECK(b.cardinality == 2);
    const auto c = finite_index_test(ix({"2", "x^2+x"}));
    CHECK(c.status == FiniteStatus::Finite);
    CHECK(c.cardinality == 4);
    // Modulo 2 the ideal becomes (x), modulo 3 it vanishes: Z/3[x] is infinite.
    const auto d = finite_index_test(ix({"6", "3*x"}));
    CHECK(d.status == FiniteStatus::Infinite);
    CHECK(d.bad_prime == 3);
}

TEST_CASE("finite certificates re-verify by membership") {
    for (const auto& gens : std::vector<std::vector<std::string>>{{"4", "2*x", "x^2"}, {"2", "x^2+x"}, {"6", "x^3-1"}}) {
        const Ideal i = ix(gens);
        const auto v = finite_index_test(i);
        REQUIRE(v.status == FiniteStatus::Finite);
        CHECK(i.contains(kZx.constant(v.integer_part)));
        for (auto [n, m] : v.witnesses) CHECK(i.contains(kZx.var(0).pow(m) - kZx.var(0).pow(n)));
        CHECK(cardinality_and_structure(i).order_of_group() == v.cardinality);
    }
}

TEST_CASE("additive structure examples") {
    CHECK(cardinality_and_structure(ix({"4", "2*x", "x^2"})).invariant_factors == factors({2, 4}));
    CHECK(cardinality_and_structure(iz({"5"})).invariant_factors == factors({5}));
    CHECK(cardinality_and_structure(ix({"2", "x"})).invariant_factors == factors({2}));
}

TEST_CASE("Smith normal form") {
    IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    CHECK(invariant_factors(a, 3) == factors({2, 6, 12}));
    IntMatrix b{{4, 0}, {0, 6}};
    CHECK(invariant_factors(b, 2) == factors({2, 12}));
}

TEST_CASE("depth membership examples") {
    CHECK(depth_membership(kZx.parse("x"), ix({"4*x", "x^2"})));
    CHECK_FALSE(depth_membership(kZx.parse("1"), ix({"x"})));
    CHECK_FALSE(depth_membership(kZx.parse("x"), ix({"x^2"})));
}

TEST_CASE("is_depth examples") {
    CHECK(is_depth(ix({"x^2"}), {3, 6}).answer == DepthAnswer::Yes);
    const auto no = is_depth(ix({"4*x", "x^2"}), {2, 6});
    CHECK(no.answer == DepthAnswer::No);
    REQUIRE(no.witness);
    CHECK(ideal_equal(ix({"4*x", "x^2", to_string(*no.witness, std::vector<std::string>{"x"})}), ix({"x"})));
    CHECK(is_depth(ix({"2", "x"})).answer == DepthAnswer::CertifiedNo);
}

TEST_CASE("compute_depth examples") {
    for (const char* g : {"x", "x^2", "x^3"}) {
        const auto r = compute_depth(ix({g}));
        CHECK(ideal_equal(r.depth, ix({g})));
        CHECK(r.status == DepthStatus::Certified);
    }
    for (const char* m : {"2", "6", "12"}) {
        const auto r = compute_depth(iz({m}));
        CHECK(r.depth.is_unit());
        CHECK(r.status == DepthStatus::Certified);
    }
    const auto r = compute_depth(ix({"4*x", "x^2"}));
    CHECK(ideal_equal(r.depth, ix({"x"})));
    CHECK(finite_index_test(ideal_quotient(ix({"4*x", "x^2"}), r.depth)).status == FiniteStatus::Finite);
}

TEST_CASE("commensurability examples") {
    CHECK_FALSE(commensurable(ix({"2"}), ix({"x"})));
    CHECK(commensurable(iz({"4"}), iz({"6"})));
    CHECK(commensurable(ix({"x"}), ix({"2*x", "x^2"})));
}

TEST_CASE("property: depth is monotone and matches commensurability on certified cases") {
    const std::vector<std::vector<std::string>> corpus{{"x"},      {"x^2"},       {"2*x", "x^2"}, {"4*x", "x^2"},
                                                       {"x^2+x"},  {"6*x", "x^3"}, {"x^3"},        {"x^2+1"}};
    std::vector<Ideal> ideals;
    std::vector<DepthResult> depths;
    for (const auto& g : corpus) {
        ideals.push_back(ix(g));
        depths.push_back(compute_depth(ideals.back()));
    }
    for (std::size_t a = 0; a < ideals.size(); ++a)
        for (std::size_t b = 0; b < ideals.size(); ++b) {
            if (depths[a].status != DepthStatus::Certified || depths[b].status != DepthStatus::Certified) continue;
            if (ideals[b].contains(ideals[a])) CHECK(depths[b].depth.contains(depths[a].depth));
            CHECK(commensurable(ideals[a], ideals[b]) == ideal_equal(depths[a].depth, depths[b].depth));
        }
}

TEST_CASE("property: (x^m - x^n) divides (x^M - x^N) under the divisibility lemma") {
    // n <= N and (m - n) | (M - N) with M - N >= m - n >= 1 and N >= n.
    gen::Gen g(301);
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned n = g.integer(0, 4), step = g.integer(1, 4);
        const unsigned m = n + step;
        const unsigned big_n = n + g.integer(0, 4);
        const unsigned big_m = big_n + step * static_cast<unsigned>(g.integer(1, 4));
        const Polynomial small = kZx.var(0).pow(m) - kZx.var(0).pow(n);
        const Polynomial large = kZx.var(0).pow(big_m) - kZx.var(0).pow(big_n);
        const Polynomial q = poly_divexact(large, small);
        CHECK(q * small == large);
    }
}

TEST_CASE("property: finite quotient of nested ideals agrees with enumeration") {
    gen::Gen g(302);
    int finite = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Ideal i = g.ideal(kZx, 2, 4);
        // Every other trial is pushed into finite index so both branches are exercised.
        if (trial % 2 == 0) i = ideal_sum(i, ix({std::to_string(g.integer(2, 6)), "x^3-x"}));
        // J = I * (N, x^k) sits inside I and often has finite index in it.
        const long n = g.integer(2, 4);
        const Ideal j = ideal_product(i, ix({std::to_string(n), "x^" + std::to_string(g.integer(1, 3))}));
        REQUIRE(i.contains(j));
        const auto v = finite_index_test(ideal_quotient(j, i));
        const auto vi = finite_index_test(i), vj = finite_index_test(j);
        if (vi.status == FiniteStatus::Finite && vj.status == FiniteStatus::Finite) {
            // |I/J| = |R/J| / |R/I| is finite, so J : I has finite index.
            CHECK(v.status == FiniteStatus::Finite);
            CHECK(vj.cardinality % vi.cardinality == 0);
            ++finite;
        }
        if (v.status != FiniteStatus::Finite) CHECK(vj.status != FiniteStatus::Finite);
    }
    CHECK(finite >= 15);
}
