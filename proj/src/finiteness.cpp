#include "noether/finiteness.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

namespace noether {

const char* to_string(FiniteStatus s) {
    switch (s) {
        case FiniteStatus::Finite: return "Finite";
        case FiniteStatus::Infinite: return "Infinite";
        default: return "Unknown";
    }
}

const char* to_string(DepthAnswer a) {
    switch (a) {
        case DepthAnswer::Yes: return "Yes";
        case DepthAnswer::No: return "No";
        default: return "Certified-No";
    }
}

const char* to_string(DepthStatus s) { return s == DepthStatus::Certified ? "Certified" : "BoundLimited"; }

std::vector<BigInt> prime_divisors(const BigInt& c) {
    if (c <= 0) throw PreconditionError("prime_divisors: argument must be positive");
    const BigInt bound = limits().trial_division_bound;
    std::vector<BigInt> primes;
    BigInt rem = c;
    for (BigInt p = 2; p * p <= rem; p += (p == 2 ? 1 : 2)) {
        if (p > bound)
            throw ResourceLimitError("trial division bound " + bound.get_str() + " exceeded while factoring " +
                                     c.get_str());
        if (mpz_divisible_p(rem.get_mpz_t(), p.get_mpz_t())) {
            primes.push_back(p);
            while (mpz_divisible_p(rem.get_mpz_t(), p.get_mpz_t())) rem /= p;
        }
    }
    if (rem > 1) primes.push_back(rem);
    std::sort(primes.begin(), primes.end());
    return primes;
}

namespace {

bool staircase_zero_dimensional_mod(const Ideal& i, const BigInt& p) {
    Ideal ip = ideal_add_element(i, i.ring().constant(p));
    const auto& gb = ip.gb();
    for (std::size_t v = 0; v < i.ring().nvars; ++v) {
        bool found = false;
        for (const auto& g : gb.elements) {
            if (mpz_divisible_p(g.leading_coeff().get_mpz_t(), p.get_mpz_t())) continue;
            const auto& m = g.leading_monomial();
            if (m[v] > 0 && m.degree() == m[v]) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::pair<std::uint32_t, std::uint32_t> power_repetition(const Ideal& i, std::size_t var, const BigInt& card) {
    std::unordered_map<Polynomial, std::uint32_t> seen;
    Polynomial cur = i.reduce(i.ring().one());
    const Polynomial x = i.ring().var(var);
    const std::uint64_t cap = card.fits_ulong_p() ? card.get_ui() + 1 : 1000000;
    for (std::uint32_t k = 0; k <= cap; ++k) {
        auto [it, inserted] = seen.emplace(cur, k);
        if (!inserted) return {it->second, k};
        cur = i.reduce(cur * x);
    }
    throw ResourceLimitError("power repetition search exceeded its bound");
}

}  // namespace

FinitenessVerdict finite_index_test(const Ideal& i) {
    FinitenessVerdict v;
    v.integer_part = integer_part(i);
    if (v.integer_part == 0) {
        v.status = FiniteStatus::Infinite;
        return v;
    }
    for (const auto& p : prime_divisors(v.integer_part)) {
        if (!staircase_zero_dimensional_mod(i, p)) {
            v.status = FiniteStatus::Infinite;
            v.bad_prime = p;
            return v;
        }
    }
    v.status = FiniteStatus::Finite;
    AdditiveStructure s = cardinality_and_structure(i);
    v.cardinality = s.order_of_group();
    for (std::size_t var = 0; var < i.ring().nvars; ++var) v.witnesses.push_back(power_repetition(i, var, v.cardinality));
    return v;
}

BigInt AdditiveStructure::order_of_group() const {
    BigInt n = 1;
    for (const auto& a : leading_ideal) n *= a;
    return n;
}

std::vector<BigInt> AdditiveStructure::staircase_vector(const Polynomial& f) const {
    Polynomial r = normal_form(f, gb);
    std::vector<BigInt> out(staircase.size(), 0);
    for (const auto& t : r.terms()) {
        auto it = std::lower_bound(staircase.begin(), staircase.end(), t.mono, [&](const Monomial& a, const Monomial& b) {
            return compare(a, b, order) < 0;
        });
        if (it == staircase.end() || !(*it == t.mono)) throw std::logic_error("normal form term outside staircase");
        out[static_cast<std::size_t>(it - staircase.begin())] = t.coeff;
    }
    return out;
}

std::vector<BigInt> AdditiveStructure::coordinates(const Polynomial& f) const {
    auto x = staircase_vector(f);
    std::vector<BigInt> out;
    for (std::size_t k = 0; k < factor_columns.size(); ++k) {
        const std::size_t col = factor_columns[k];
        BigInt y = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (x[j] != 0) y += x[j] * smith.v[j][col];
        BigInt r;
        mpz_fdiv_r(r.get_mpz_t(), y.get_mpz_t(), invariant_factors[k].get_mpz_t());
        out.push_back(r);
    }
    return out;
}

Polynomial AdditiveStructure::element(const std::vector<BigInt>& coords) const {
    std::vector<Term> terms;
    std::vector<BigInt> x(staircase.size(), 0);
    for (std::size_t k = 0; k < coords.size(); ++k)
        for (std::size_t j = 0; j < x.size(); ++j) x[j] += coords[k] * smith.v_inv[factor_columns[k]][j];
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] != 0) terms.push_back({x[j], staircase[j]});
    return normal_form(Polynomial::from_terms(nvars, std::move(terms), order), gb);
}

AdditiveStructure cardinality_and_structure(const Ideal& i) {
    AdditiveStructure s;
    s.nvars = i.ring().nvars;
    s.order = i.ring().order;
    s.gb = i.gb();
    if (integer_part(i) == 0) throw PreconditionError("cardinality_and_structure: quotient is infinite");

    std::set<std::vector<std::uint32_t>> visited;
    std::deque<Monomial> queue{Monomial(s.nvars)};
    visited.insert(std::vector<std::uint32_t>(s.nvars, 0));
    std::vector<std::pair<Monomial, BigInt>> found;
    while (!queue.empty()) {
        Monomial m = std::move(queue.front());
        queue.pop_front();
        BigInt a = s.gb.leading_ideal_at(m);
        if (a == 1) continue;
        if (a == 0) throw PreconditionError("cardinality_and_structure: quotient is infinite");
        found.emplace_back(m, a);
        if (found.size() > limits().max_staircase)
            throw ResourceLimitError("staircase exceeds cap; quotient may be infinite or too large");
        for (std::size_t v = 0; v < s.nvars; ++v) {
            Monomial n = m;
            n[v] += 1;
            std::vector<std::uint32_t> key(n.exponents().begin(), n.exponents().end());
            if (visited.insert(key).second) queue.push_back(std::move(n));
        }
    }
    std::sort(found.begin(), found.end(),
              [&](const auto& x, const auto& y) { return compare(x.first, y.first, s.order) < 0; });
    for (auto& [m, a] : found) {
        s.staircase.push_back(m);
        s.leading_ideal.push_back(a);
    }

    const std::size_t n = s.staircase.size();
    IntMatrix rel(n, std::vector<BigInt>(n, 0));
    for (std::size_t r = 0; r < n; ++r) {
        const Monomial& m = s.staircase[r];
        const Polynomial* g = nullptr;
        for (const auto& e : s.gb.elements)
            if (e.leading_monomial().divides(m) && e.leading_coeff() == s.leading_ideal[r]) {
                g = &e;
                break;
            }
        if (!g) throw std::logic_error("strong basis lacks an element realizing a leading coefficient");
        Polynomial tail = g->mul_term(1, g->leading_monomial().quotient_of(m));
        tail.pop_leading();
        auto vec = s.staircase_vector(tail);
        vec[r] += s.leading_ideal[r];
        rel[r] = std::move(vec);
    }
    s.smith = smith_normal_form(rel, n);
    for (std::size_t k = 0; k < s.smith.diagonal.size(); ++k) {
        if (s.smith.diagonal[k] != 1) {
            s.invariant_factors.push_back(s.smith.diagonal[k]);
            s.factor_columns.push_back(k);
        }
    }
    return s;
}

bool depth_membership(const Polynomial& r, const Ideal& i) {
    if (i.contains(r)) return true;
    return finite_index_test(ideal_quotient(i, r)).status == FiniteStatus::Finite;
}

std::vector<Polynomial> depth_candidates(const Ideal& i, DepthBounds bounds) {
    const auto& ring = i.ring();
    const auto& gb = i.gb();
    std::vector<Monomial> monos;
    // Enumerate monomials of degree <= B, degree by degree.
    std::vector<Monomial> layer{Monomial(ring.nvars)};
    for (unsigned deg = 0; deg <= bounds.degree; ++deg) {
        std::vector<Monomial> sorted = layer;
        std::sort(sorted.begin(), sorted.end(),
                  [&](const Monomial& a, const Monomial& b) { return compare(a, b, ring.order) < 0; });
        for (const auto& m : sorted)
            if (gb.leading_ideal_at(m) != 1) monos.push_back(m);
        std::set<std::vector<std::uint32_t>> next_keys;
        std::vector<Monomial> next;
        for (const auto& m : layer)
            for (std::size_t v = 0; v < ring.nvars; ++v) {
                Monomial n = m;
                n[v] += 1;
                if (next_keys.insert({n.exponents().begin(), n.exponents().end()}).second) next.push_back(n);
            }
        layer = std::move(next);
        if (layer.empty()) break;
    }
    std::vector<Polynomial> out;
    auto push = [&](Polynomial p) {
        if (!i.contains(p)) out.push_back(std::move(p));
    };
    for (const auto& m : monos)
        for (unsigned c = 1; c <= bounds.coeff; ++c) push(Polynomial::monomial(c, m, ring.order));
    for (std::size_t a = 0; a < monos.size(); ++a)
        for (std::size_t b = a + 1; b < monos.size(); ++b)
            for (unsigned c1 = 1; c1 <= bounds.coeff; ++c1)
                for (int c2 = 1; c2 <= static_cast<int>(bounds.coeff); ++c2)
                    for (int sign : {1, -1})
                        push(Polynomial::monomial(c1, monos[b], ring.order) +
                             Polynomial::monomial(sign * c2, monos[a], ring.order));
    return out;
}

IsDepthResult is_depth(const Ideal& i, DepthBounds bounds) {
    IsDepthResult res;
    if (i.is_unit()) return res;
    if (finite_index_test(i).status == FiniteStatus::Finite) {
        res.answer = DepthAnswer::CertifiedNo;
        return res;
    }
    for (auto& r : depth_candidates(i, bounds)) {
        if (depth_membership(r, i)) {
            res.answer = DepthAnswer::No;
            res.witness = std::move(r);
            return res;
        }
    }
    return res;
}

namespace {

bool monic_basis(const Ideal& d) {
    return std::all_of(d.gb().elements.begin(), d.gb().elements.end(),
                       [](const Polynomial& g) { return g.leading_coeff() == 1; });
}

}  // namespace

DepthResult compute_depth(const Ideal& i, DepthBounds bounds) {
    if (i.is_unit() || finite_index_test(i).status == FiniteStatus::Finite)
        return {Ideal::unit(i.ring()), DepthStatus::Certified, {}};
    DepthResult res{i, DepthStatus::BoundLimited, {}};
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto& r : depth_candidates(res.depth, bounds)) {
            if (depth_membership(r, res.depth)) {
                res.depth = ideal_add_element(res.depth, r);
                res.added.push_back(std::move(r));
                grew = true;
                break;
            }
        }
    }
    res.depth = Ideal(i.ring(), res.depth.minimal_generators());
    if (monic_basis(res.depth)) res.status = DepthStatus::Certified;
    return res;
}

bool commensurable(const Ideal& a, const Ideal& b) {
    Ideal meet = ideal_intersect(a, b);
    return finite_index_test(ideal_quotient(meet, a)).status == FiniteStatus::Finite &&
           finite_index_test(ideal_quotient(meet, b)).status == FiniteStatus::Finite;
}

}  // namespace noether
