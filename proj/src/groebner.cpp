#include "noether/groebner.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace noether {

BigInt StrongGB::integer_part() const {
    for (const auto& g : elements)
        if (g.leading_monomial().is_one()) return g.leading_coeff();
    return 0;
}

BigInt StrongGB::leading_ideal_at(const Monomial& m) const {
    BigInt a = 0;
    for (const auto& g : elements)
        if (g.leading_monomial().divides(m)) a = gcd(a, g.leading_coeff());
    return a;
}

namespace {

Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& basis) {
    Polynomial work = f;
    std::vector<Term> rem;
    while (!work.is_zero()) {
        const Term& lt = work.leading_term();
        const Polynomial* best = nullptr;
        for (const auto& g : basis) {
            if (!g.leading_monomial().divides(lt.mono)) continue;
            if (!best || cmp(g.leading_coeff(), best->leading_coeff()) < 0) best = &g;
        }
        if (best) {
            BigInt q;
            mpz_fdiv_q(q.get_mpz_t(), lt.coeff.get_mpz_t(), best->leading_coeff().get_mpz_t());
            if (q != 0) {
                Monomial shift = best->leading_monomial().quotient_of(lt.mono);
                work.sub_mul_term(q, shift, *best);
                continue;
            }
        }
        rem.push_back(work.pop_leading());
    }
    return Polynomial::from_sorted_terms(f.nvars(), std::move(rem), f.order());
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint64_t degree;
};

/// Pairs by lcm degree, then lcm in the term order, then age.
struct PairLess {
    TermOrder order;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (int c = compare(a.lcm, b.lcm, order); c != 0) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    }
};

class Buchberger {
public:
    Buchberger(std::size_t nvars, TermOrder order) : nvars_(nvars), order_(order), pairs_(PairLess{order}) {}

    void add(const Polynomial& f) {
        Polynomial r = reduce_by(f, basis_);
        if (r.is_zero()) return;
        r = r.positive();
        const std::size_t k = basis_.size();
        for (std::size_t i = 0; i < k; ++i) {
            Monomial l = basis_[i].leading_monomial().lcm(r.leading_monomial());
            std::uint64_t deg = l.degree();
            pairs_.insert({i, k, std::move(l), deg});
        }
        basis_.push_back(std::move(r));
    }

    void run() {
        const auto& lim = limits();
        std::size_t processed = 0;
        while (!pairs_.empty()) {
            Pair p = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            if (++processed > lim.max_gb_pairs)
                throw ResourceLimitError("Groebner basis: critical pair cap of " + std::to_string(lim.max_gb_pairs) +
                                         " exceeded");
            if (p.degree > lim.max_gb_degree)
                throw ResourceLimitError("Groebner basis: degree cap of " + std::to_string(lim.max_gb_degree) +
                                         " exceeded");
            process(p);
        }
    }

    std::vector<Polynomial>& basis() { return basis_; }

private:
    void process(const Pair& p) {
        const Polynomial f = basis_[p.i];
        const Polynomial g = basis_[p.j];
        const BigInt& a = f.leading_coeff();
        const BigInt& b = g.leading_coeff();
        Monomial mf = f.leading_monomial().quotient_of(p.lcm);
        Monomial mg = g.leading_monomial().quotient_of(p.lcm);

        // Coprime leading monomials and coefficients: the S-polynomial reduces to zero.
        const bool coprime = mf == g.leading_monomial() && gcd(a, b) == 1;
        if (!coprime) {
            BigInt l = lcm(a, b);
            Polynomial s = f.mul_term(l / a, mf);
            s.sub_mul_term(l / b, mg, g);
            add(s);
        }

        const bool a_div_b = mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
        const bool b_div_a = mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
        if (!a_div_b && !b_div_a) {
            BigInt gg, u, v;
            mpz_gcdext(gg.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Polynomial gp = f.mul_term(u, mf) + g.mul_term(v, mg);
            add(gp);
        }
    }

    std::size_t nvars_;
    TermOrder order_;
    std::vector<Polynomial> basis_;
    std::set<Pair, PairLess> pairs_;
};

bool lead_divides(const Polynomial& h, const Polynomial& g) {
    return h.leading_monomial().divides(g.leading_monomial()) &&
           mpz_divisible_p(g.leading_coeff().get_mpz_t(), h.leading_coeff().get_mpz_t()) != 0;
}

}  // namespace

StrongGB strong_groebner(const std::vector<Polynomial>& gens, std::size_t nvars, TermOrder order) {
    Buchberger bb(nvars, order);
    for (const auto& f : gens) {
        if (f.nvars() != nvars) throw VariableMismatch("generator has wrong variable count");
        bb.add(f.with_order(order));
    }
    bb.run();
    auto& g = bb.basis();

    std::sort(g.begin(), g.end(), [&](const Polynomial& x, const Polynomial& y) {
        if (int c = compare(x.leading_monomial(), y.leading_monomial(), order); c != 0) return c < 0;
        return cmp(x.leading_coeff(), y.leading_coeff()) < 0;
    });
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j || !lead_divides(g[j], g[i])) continue;
            const bool same_lead = g[j].leading_monomial() == g[i].leading_monomial() &&
                                   g[j].leading_coeff() == g[i].leading_coeff();
            redundant = !same_lead || j < i;
        }
        if (!redundant) minimal.push_back(g[i]);
    }

    StrongGB out{nvars, order, {}};
    for (const auto& e : minimal) {
        Polynomial tail = e;
        Term lt = tail.pop_leading();
        Polynomial reduced = Polynomial::monomial(lt.coeff, lt.mono, order) + reduce_by(tail, minimal);
        out.elements.push_back(std::move(reduced));
    }
    return out;
}

Polynomial normal_form(const Polynomial& f, const StrongGB& basis) {
    return reduce_by(f.with_order(basis.order), basis.elements);
}

}  // namespace noether
