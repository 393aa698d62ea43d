#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <set>

#include "generators.hpp"
#include "noether/dual.hpp"

using namespace noether;

namespace {

std::shared_ptr<const QuotientContext> zmod(unsigned n) {
    return std::make_shared<QuotientContext>(QuotientContext::integers_mod(n));
}

std::shared_ptr<const QuotientContext> dual_numbers_f2() {
    return std::make_shared<QuotientContext>(QuotientContext::presented({"t"}, {"2", "t^2"}));
}

std::vector<std::size_t> sorted_sizes(const std::vector<std::vector<std::size_t>>& orbits) {
    std::vector<std::size_t> out;
    for (const auto& o : orbits) out.push_back(o.size());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> everything(const FiniteModel& m) {
    std::vector<std::size_t> out(m.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = k;
    return out;
}

std::vector<BigInt> factors(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("finite dual models") {
    CHECK(FiniteModel(zmod(4), 2).size() == 16);
    CHECK(FiniteModel(dual_numbers_f2(), 2).invariant_factors() == factors({2, 2, 2, 2}));
    const FiniteModel m6(zmod(6), 2);
    CHECK(m6.size() == 36);
    CHECK(m6.invariant_factors() == factors({6, 6}));
}

TEST_CASE("dual action") {
    const FiniteModel m(zmod(4), 2);
    const FiniteRing& R = m.ring();
    const std::size_t chi = m.character_from_exponents({1, 0});
    CHECK(m.dual_act(identity(R, 2), chi) == chi);
    const FMat e12 = elementary(R, 2, 0, 1, R.one());
    CHECK(m.exponents(m.dual_act(e12, chi)) == std::vector<unsigned long>{1, 3});
}

TEST_CASE("orbits of the elementary group on (Z/4)^2") {
    const FiniteModel m(zmod(4), 2);
    const auto& perms = m.dual_generator_perms();
    CHECK(orbit(m.character_from_exponents({0, 0}), perms).size() == 1);
    CHECK(orbit(m.character_from_exponents({1, 0}), perms).size() == 12);
    const auto o = orbit(m.character_from_exponents({2, 0}), perms);
    std::set<std::vector<unsigned long>> got;
    for (auto c : o) got.insert(m.exponents(c));
    CHECK(got == std::set<std::vector<unsigned long>>{{2, 0}, {0, 2}, {2, 2}});
    CHECK(sorted_sizes(orbits(m.size(), perms)) == std::vector<std::size_t>{1, 3, 12});
}

TEST_CASE("invariant subgroup checks") {
    const FiniteModel m(zmod(4), 2);
    const auto two = m.ring().q().ideal_closure({m.ring().from_integer(2)});
    const auto delta = m.ideal_power(two);
    const auto c = invariant_subgroup_check(m, delta);
    CHECK(c.el_invariant);
    CHECK(c.equals_ideal_power);
    CHECK(c.ideal == two);
    std::vector<std::size_t> axis;
    for (std::size_t k = 0; k < m.size(); ++k)
        if (m.vector_of(k)[1] == 0) axis.push_back(k);
    CHECK_FALSE(invariant_subgroup_check(m, axis).el_invariant);
    const auto zero = invariant_subgroup_check(m, {m.index_of({0, 0})});
    CHECK(zero.el_invariant);
    CHECK(zero.ideal == std::vector<FiniteModel::Elem>{0});
}

TEST_CASE("every invariant subgroup is an ideal power") {
    for (auto [q, d] : std::vector<std::pair<std::shared_ptr<const QuotientContext>, std::size_t>>{
             {zmod(4), 2}, {zmod(2), 3}}) {
        const FiniteModel m(q, d);
        const auto inv = all_invariant_subgroups(m);
        CHECK(inv.size() == q->all_ideals().size());
        for (const auto& s : inv) CHECK(invariant_subgroup_check(m, s).equals_ideal_power);
    }
}

TEST_CASE("Fourier transforms of Haar measures") {
    const FiniteModel m(zmod(4), 2);
    const Measure full = haar(everything(m));
    for (std::size_t g = 1; g < m.size(); ++g) CHECK(std::abs(fourier(m, full, g)) < 1e-9);
    const Measure trivial = haar({m.character_from_exponents({0, 0})});
    for (std::size_t g = 0; g < m.size(); ++g) CHECK(std::abs(fourier(m, trivial, g) - 1.0) < 1e-9);
    const auto h = m.annihilator_in_dual(m.ideal_power(m.ring().q().ideal_closure({m.ring().from_integer(2)})));
    const Measure mu = haar(h);
    CHECK(std::abs(fourier(m, mu, m.index_of({2, 0})) - 1.0) < 1e-9);
    CHECK(std::abs(fourier(m, mu, m.index_of({1, 0}))) < 1e-9);
}

TEST_CASE("convolution") {
    const FiniteModel m(zmod(6), 2);
    const std::size_t a = m.character_from_exponents({1, 4}), b = m.character_from_exponents({5, 3});
    CHECK(convolve(m, point_mass(a), point_mass(b)) == point_mass(m.character_from_exponents({0, 1})));
    const auto h1 = m.annihilator_in_dual(m.ideal_power(m.ring().q().ideal_closure({m.ring().from_integer(2)})));
    const auto h2 = m.annihilator_in_dual(m.ideal_power(m.ring().q().ideal_closure({m.ring().from_integer(3)})));
    std::vector<std::size_t> gens = h1;
    gens.insert(gens.end(), h2.begin(), h2.end());
    CHECK(convolve(m, uniform(h1), uniform(h2)) == uniform(subgroup_closure(m, gens)));
}

TEST_CASE("measure classification examples") {
    const FiniteModel m(zmod(4), 2);
    const Classification c = classify_measures(m);
    CHECK(c.bijection);
    CHECK(c.all_invariant);
    CHECK(sorted_sizes(c.dual_orbits) == std::vector<std::size_t>{1, 3, 12});
    const FiniteModel f2(zmod(2), 2);
    CHECK(sorted_sizes(classify_measures(f2).dual_orbits) == std::vector<std::size_t>{1, 3});
}

TEST_CASE("property: classification is invariant, ergodic and complete across models") {
    for (auto [q, d] : std::vector<std::pair<std::shared_ptr<const QuotientContext>, std::size_t>>{
             {zmod(4), 2}, {zmod(6), 2}, {dual_numbers_f2(), 2}, {zmod(4), 3}, {dual_numbers_f2(), 3}}) {
        const FiniteModel m(q, d);
        const Classification c = classify_measures(m);
        CHECK(c.bijection);
        CHECK(c.distinct_ergodic == c.dual_orbits.size());
        for (const auto& p : c.parametric) {
            for (const auto& perm : m.dual_generator_perms()) CHECK(push_forward(perm, p.explicit_measure) == p.explicit_measure);
            if (p.ergodic) {
                const auto first = p.explicit_measure.mass.begin()->first;
                const auto o = orbit(first, m.dual_generator_perms());
                CHECK(o.size() == p.explicit_measure.mass.size());
            }
        }
    }
}

TEST_CASE("property: the pairing is bilinear and the dual action is contragredient") {
    const FiniteModel m(zmod(6), 2);
    gen::Gen g(501);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t chi = g.index(m.size()), a = g.index(m.size()), b = g.index(m.size());
        CHECK(m.pairing(chi, m.add(a, b)) == (m.pairing(chi, a) + m.pairing(chi, b)) % m.modulus());
        const FMat s = g.felement(m.ring(), 2, 5);
        CHECK(m.pairing(m.dual_act(s, chi), m.act(s, a)) == m.pairing(chi, a));
    }
}
