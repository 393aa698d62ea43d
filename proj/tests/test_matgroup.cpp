#include <doctest.h>

#include <memory>

#include "generators.hpp"
#include "noether/matgroup.hpp"

using namespace noether;

namespace {

FiniteRing mod(unsigned n) { return FiniteRing(std::make_shared<QuotientContext>(QuotientContext::integers_mod(n))); }

const IntegerRing Z;

ZMat zmat(std::vector<std::vector<long>> rows) {
    ZMat m{rows.size(), {}};
    for (const auto& r : rows)
        for (long v : r) m.a.emplace_back(v);
    return m;
}

bool is_scalar(const FMat& m) {
    for (std::size_t i = 0; i < m.d; ++i)
        for (std::size_t j = 0; j < m.d; ++j)
            if ((i == j && m(i, j) != m(0, 0)) || (i != j && m(i, j) != 0)) return false;
    return true;
}

}  // namespace

TEST_CASE("elementary matrices and words") {
    auto r = RingPresentation::polynomial_ring(2, {"a", "b"});
    PolyRing P(r);
    const auto a = P.parse("a"), b = P.parse("b");
    const PMat e = elementary(P, 3, 0, 1, a);
    CHECK(P.eq(e(0, 1), a));
    CHECK(P.eq(e(0, 0), P.one()));
    CHECK(P.is_zero(e(1, 0)));
    CHECK(mat_equal(P, multiply(P, elementary(P, 3, 0, 1, a), elementary(P, 3, 0, 1, b)),
                    elementary(P, 3, 0, 1, P.add(a, b))));
    // E12(1) E21(-1) E12(1) is the signed swap of the first two coordinates.
    const ZMat w = word_product(Z, 3, ZWord{{0, 1, 1}, {1, 0, -1}, {0, 1, 1}});
    CHECK(w == zmat({{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}}));
    CHECK_THROWS_AS(elementary(Z, 3, 1, 1, BigInt(2)), DimensionError);
    CHECK_THROWS_AS(elementary(Z, 3, 0, 3, BigInt(2)), DimensionError);
}

TEST_CASE("determinant and inverse") {
    CHECK(det(Z, identity(Z, 3)) == 1);
    CHECK(det(Z, elementary(Z, 3, 0, 2, BigInt(7))) == 1);
    const ZMat m = zmat({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
    CHECK(inverse_sl(Z, m) == zmat({{1, -1, 1}, {0, 1, -1}, {0, 0, 1}}));
    CHECK_THROWS_AS(inverse_sl(Z, zmat({{2, 0}, {0, 1}})), NonUnitDeterminant);
}

TEST_CASE("units of order dividing d") {
    auto u = [](unsigned n, unsigned d) {
        const auto q = QuotientContext::integers_mod(n);
        std::vector<std::string> out;
        for (auto x : units_order_dividing(q, d)) out.push_back(q.to_string(x));
        return out;
    };
    CHECK(u(7, 3) == std::vector<std::string>{"1", "2", "4"});
    CHECK(u(8, 3) == std::vector<std::string>{"1"});
    CHECK(u(5, 4) == std::vector<std::string>{"1", "2", "3", "4"});
}

TEST_CASE("center words") {
    const FiniteRing R = mod(7);
    CHECK(center_word(R, R.one(), 3).empty());
    const FWord w = center_word(R, R.from_integer(2), 3);
    CHECK(mat_equal(R, word_product(R, 3, w), scalar(R, 3, R.from_integer(2))));
    CHECK_THROWS_AS(center_word(R, R.from_integer(3), 3), PreconditionError);
}

TEST_CASE("property: center words evaluate to the scalar for every admissible unit") {
    for (unsigned n : {5u, 7u, 8u, 9u})
        for (std::size_t d : {3u, 4u}) {
            const FiniteRing R = mod(n);
            for (auto u : units_order_dividing(R.q(), static_cast<unsigned>(d))) {
                const FWord w = center_word(R, u, d);
                CHECK(mat_equal(R, word_product(R, d, w), scalar(R, d, u)));
                CHECK(w.size() == (u == R.one() ? 0 : 6 * (d - 1)));
            }
        }
}

TEST_CASE("level ideals") {
    const ZMat e = elementary(Z, 3, 0, 1, BigInt(6));
    CHECK(sl_level(e).to_string() == "(6)");
    CHECK(sltil_level(e).to_string() == "(6)");
    CHECK(sltil_level(zmat({{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}})).to_string() == "(2)");
    CHECK(sl_level(identity(Z, 3)).to_string() == "(0)");
    CHECK(sltil_level(identity(Z, 3)).to_string() == "(0)");
}

TEST_CASE("iota") {
    auto z = RingPresentation::integers();
    PolyRing P(z);
    const PMat g = to_poly_matrix(P, elementary(Z, 3, 0, 1, BigInt(2)));
    const Ideal f = Ideal::parse(z, {"2"}), k = Ideal::parse(z, {"4"});
    const PMat m = iota(P, g, f, k);
    CHECK(P.eq(m(0, 1), P.from_integer(2)));
    const PMat zero = iota(P, to_poly_matrix(P, identity(Z, 3)), f, k);
    for (const auto& e : zero.a) CHECK(e.is_zero());
    CHECK_THROWS_AS(iota(P, to_poly_matrix(P, elementary(Z, 3, 0, 1, BigInt(1))), f, k), PreconditionError);
}

TEST_CASE("unimodular shortening") {
    CHECK(shorten_unimodular(Z, {1, 0, 0}) == std::vector<BigInt>{0, 0});
    const auto s = shorten_unimodular(Z, {6, 10, 15});
    REQUIRE(s.size() == 2);
    CHECK(is_unimodular(Z, {BigInt(6 + 15 * s[0]), BigInt(10 + 15 * s[1])}));
    CHECK_THROWS_AS(shorten_unimodular(Z, {2, 4}), ShorteningError);
}

TEST_CASE("normal form of conjugates") {
    const auto nf = normal_form_conjugate(Z, identity(Z, 3));
    CHECK(nf.verified);
    const auto nf2 = normal_form_conjugate(Z, elementary(Z, 3, 0, 2, BigInt(5)));
    CHECK(nf2.verified);
    CHECK(nf2.h_prime.size() == 1);
    CHECK(nf2.h_prime.front().i == 0);
    CHECK(nf2.h_prime.front().j == 1);
    CHECK(nf2.h_prime.front().r == -1);
}

TEST_CASE("property: normal form re-multiplies exactly with the stated shape") {
    gen::Gen g(401);
    for (int trial = 0; trial < 120; ++trial) {
        const ZMat m = word_product(Z, 3, g.zword(3, 10, 5));
        const auto nf = normal_form_conjugate(Z, m);
        REQUIRE(nf.verified);
        const ZMat c = word_product(Z, 3, nf.conjugator);
        CHECK(multiply(Z, multiply(Z, inverse_sl(Z, c), m), c) == nf.conjugated);
        ZMat rebuilt = multiply(Z, word_product(Z, 3, nf.h), word_product(Z, 3, nf.v));
        rebuilt = multiply(Z, rebuilt, word_product(Z, 3, nf.h_prime));
        rebuilt = multiply(Z, rebuilt, word_product(Z, 3, nf.v_prime));
        rebuilt = multiply(Z, rebuilt, nf.n);
        CHECK(rebuilt == nf.conjugated);
        for (const auto& l : nf.h) CHECK(l.i == 0);
        for (const auto& l : nf.v) CHECK(l.j == 0);
        for (std::size_t k = 1; k < 3; ++k) {
            CHECK(nf.n(0, k) == 0);
            CHECK(nf.n(k, 0) == 0);
        }
        CHECK(nf.n(0, 0) == 1);
    }
}

TEST_CASE("property: word evaluation is a homomorphism and inverse words invert") {
    gen::Gen g(402);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = 3 + trial % 2;
        const ZWord a = g.zword(d, 6, 4), b = g.zword(d, 6, 4);
        const ZMat pa = word_product(Z, d, a), pb = word_product(Z, d, b);
        CHECK(word_product(Z, d, concat(a, b)) == multiply(Z, pa, pb));
        CHECK(word_product(Z, d, inverse_word(Z, a)) == inverse_sl(Z, pa));
        CHECK(det(Z, pa) == 1);
    }
}

TEST_CASE("property: sltil level is the smallest ideal modulo which g is scalar") {
    gen::Gen g(403);
    const RingPresentation z = RingPresentation::integers();
    for (int trial = 0; trial < 150; ++trial) {
        const ZMat m = word_product(Z, 3, g.zword(3, 6, 3));
        const Ideal level = sltil_level(m);
        const long n = g.integer(1, 12);
        const Ideal j = Ideal::parse(z, {std::to_string(n)});
        bool scalar_mod_j = true;
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) {
                const BigInt v = r == c ? BigInt(m(r, c) - m(0, 0)) : m(r, c);
                if (v % n != 0) scalar_mod_j = false;
            }
        CHECK(scalar_mod_j == j.contains(level));
    }
}

TEST_CASE("property: symbolic commutator relations for d = 3, 4") {
    auto r = RingPresentation::polynomial_ring(2, {"a", "b"});
    PolyRing P(r);
    const auto a = P.parse("a"), b = P.parse("b");
    for (std::size_t d : {3u, 4u})
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k)
                    for (std::size_t l = 0; l < d; ++l) {
                        if (i == j || k == l) continue;
                        const PMat c = commutator(P, elementary(P, d, i, j, a), elementary(P, d, k, l, b));
                        if (j == k && i != l) {
                            CHECK(mat_equal(P, c, elementary(P, d, i, l, P.mul(a, b))));
                        } else if (i == l && j != k) {
                            CHECK(mat_equal(P, c, elementary(P, d, k, j, P.neg(P.mul(a, b)))));
                        } else if (j != k && i != l) {
                            CHECK(mat_equal(P, c, identity(P, d)));
                        }
                    }
}

TEST_CASE("subgroup enumeration orders") {
    const FiniteRing F2 = mod(2);
    CHECK(generate_subgroup(F2, 2, el_generators(F2, 2)).size() == 6);
    CHECK(generate_subgroup(F2, 3, el_generators(F2, 3)).size() == 168);
    const FiniteRing Z5 = mod(5);
    const MatrixSet sl25 = generate_subgroup(Z5, 2, el_generators(Z5, 2));
    CHECK(sl25.size() == 120);
    std::size_t center = 0;
    for (const auto& m : sl25.elements()) {
        bool central = true;
        for (const auto& s : el_generators(Z5, 2)) central = central && commutes(Z5, m, s);
        center += central;
    }
    CHECK(center == 2);
}

TEST_CASE("enumeration respects the element cap") {
    Limits tight = limits();
    tight.max_elements = 50;
    ScopedLimits guard(tight);
    const FiniteRing F2 = mod(2);
    CHECK_THROWS_AS(generate_subgroup(F2, 3, el_generators(F2, 3)), ResourceLimitError);
}

TEST_CASE("Tits containment in SL3(Z/8)") {
    const FiniteRing R = mod(8);
    const auto gens2 = elementary_generators(R, 3, R.q().ideal_closure({R.from_integer(2)}));
    const auto gens4 = elementary_generators(R, 3, R.q().ideal_closure({R.from_integer(4)}));
    const MatrixSet f2 = generate_subgroup(R, 3, gens2);
    const MatrixSet el4 = normal_closure(R, 3, gens4, el_generators(R, 3));
    CHECK(el4.subset_of(f2));
}

TEST_CASE("structure predicates agree with brute force over SL3(Z/3)") {
    const FiniteRing R = mod(3);
    const MatrixSet g = generate_subgroup(R, 3, el_generators(R, 3));
    REQUIRE(g.size() == 5616);
    // V_1: matrices Id + (column 1 below the diagonal); H_1 likewise along row 1.
    std::vector<FMat> vertical, horizontal;
    for (long x = 0; x < 3; ++x)
        for (long y = 0; y < 3; ++y) {
            FMat v = identity(R, 3), h = identity(R, 3);
            v(1, 0) = R.from_integer(x);
            v(2, 0) = R.from_integer(y);
            h(0, 1) = R.from_integer(x);
            h(0, 2) = R.from_integer(y);
            vertical.push_back(v);
            horizontal.push_back(h);
        }
    MatrixSet vset, hset;
    for (const auto& v : vertical) vset.insert(v);
    for (const auto& h : horizontal) hset.insert(h);
    std::size_t checked = 0;
    for (std::size_t k = 0; k < g.size(); k += 7) {
        const FMat& m = g[k];
        const FMat mi = inverse_sl(R, m);
        bool norm_v = true, norm_h = true;
        for (const auto& v : vertical) norm_v = norm_v && vset.contains(multiply(R, multiply(R, m, v), mi));
        for (const auto& h : horizontal) norm_h = norm_h && hset.contains(multiply(R, multiply(R, m, h), mi));
        CHECK(normalizes_vertical(R, m, 0) == norm_v);
        CHECK(normalizes_horizontal(R, m, 0) == norm_h);
        const FMat e = elementary(R, 3, 0, 1, R.one());
        CHECK(centralizes_elementary(R, m, 0, 1, R.one()) == commutes(R, m, e));
        ++checked;
    }
    CHECK(checked > 700);
}

TEST_CASE("center of SL_d over small fields") {
    const FiniteRing F3 = mod(3);
    const MatrixSet g = generate_subgroup(F3, 3, el_generators(F3, 3));
    std::size_t center = 0;
    for (const auto& m : g.elements()) center += is_scalar(m);
    CHECK(center == 1);
    // F4 = F2[t]/(t^2+t+1): Z(SL3(F4)) has the three cube roots of unity.
    auto q = std::make_shared<QuotientContext>(QuotientContext::presented({"t"}, {"2", "t^2+t+1"}));
    const FiniteRing F4(q);
    CHECK(units_order_dividing(*q, 3).size() == 3);
    for (auto u : units_order_dividing(*q, 3)) {
        const FMat s = scalar(F4, 3, u);
        for (const auto& gen : el_generators(F4, 3)) CHECK(commutes(F4, s, gen));
        CHECK(mat_equal(F4, word_product(F4, 3, center_word(F4, u, 3)), s));
    }
}

TEST_CASE("property: normal subgroups sit between EL(J) and SLtil(J) in SL3(Z/4)") {
    const FiniteRing R = mod(4);
    const auto ambient = el_generators(R, 3);
    const MatrixSet sl = generate_subgroup(R, 3, ambient);
    gen::Gen g(404);
    for (int trial = 0; trial < 6; ++trial) {
        const FMat seed = g.felement(R, 3, trial < 3 ? 2 : 6);
        const MatrixSet h = normal_closure(R, 3, {seed}, ambient);
        // J: the ideal generated by the sltil levels of the members of H.
        std::vector<FiniteRing::Elem> gens;
        for (const auto& m : h.elements()) {
            const auto lv = sltil_level(R, m);
            gens.insert(gens.end(), lv.begin(), lv.end());
        }
        const auto j = R.q().ideal_closure(gens);
        const MatrixSet el_j = normal_closure(R, 3, elementary_generators(R, 3, j), ambient);
        CHECK(el_j.subset_of(h));
        for (const auto& m : h.elements()) CHECK(scalar_modulo(R, m, j));
        CHECK(sl.size() % h.size() == 0);
    }
}
