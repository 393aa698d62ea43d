#include "noether/quotient.hpp"

#include <algorithm>
#include <set>

namespace noether {

namespace {

constexpr std::size_t kMaxQuotient = 1024;

}  // namespace

QuotientContext::QuotientContext(const Ideal& k) : modulus_(k) {
    auto verdict = finite_index_test(k);
    if (verdict.status != FiniteStatus::Finite)
        throw PreconditionError("quotient context: R/K is not finite for K = " + k.to_string());
    if (verdict.cardinality > kMaxQuotient)
        throw ResourceLimitError("quotient context: |R/K| = " + verdict.cardinality.get_str() + " exceeds " +
                                 std::to_string(kMaxQuotient));
    additive_ = cardinality_and_structure(k);
    const auto& factors = additive_.invariant_factors;

    // Enumerate coordinate vectors in mixed radix, last coordinate fastest.
    const std::size_t n = verdict.cardinality.get_ui();
    std::vector<std::pair<std::vector<BigInt>, Polynomial>> all;
    std::vector<BigInt> c(factors.size(), 0);
    for (std::size_t idx = 0; idx < n; ++idx) {
        all.emplace_back(c, additive_.element(c));
        for (std::size_t p = factors.size(); p-- > 0;) {
            if (++c[p] < factors[p]) break;
            c[p] = 0;
        }
    }
    // Order elements by their staircase vectors, highest monomial most significant,
    // so that Z/n lists residues 0..n-1 and zero comes first.
    std::sort(all.begin(), all.end(), [&](const auto& x, const auto& y) {
        auto vx = additive_.staircase_vector(x.second);
        auto vy = additive_.staircase_vector(y.second);
        for (std::size_t i = vx.size(); i-- > 0;)
            if (vx[i] != vy[i]) return vx[i] < vy[i];
        return false;
    });
    for (auto& [coord, poly] : all) {
        index_.emplace(poly, static_cast<Elem>(elements_.size()));
        elements_.push_back(poly);
        coords_.push_back(coord);
    }
    for (std::size_t k2 = 0; k2 < factors.size(); ++k2) {
        std::vector<BigInt> e(factors.size(), 0);
        e[k2] = 1;
        basis_.push_back(index_of(additive_.element(e)));
    }
    add_.resize(n * n);
    mul_.resize(n * n);
    neg_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        neg_[a] = index_of(-elements_[a]);
        for (std::size_t b = 0; b < n; ++b) {
            add_[a * n + b] = index_of(elements_[a] + elements_[b]);
            mul_[a * n + b] = index_of(elements_[a] * elements_[b]);
        }
    }
    one_ = index_of(ring().one());
}

QuotientContext QuotientContext::integers_mod(unsigned n) {
    auto z = RingPresentation::integers();
    return QuotientContext(Ideal(z, {z.constant(n)}));
}

QuotientContext QuotientContext::presented(const std::vector<std::string>& names,
                                           const std::vector<std::string>& relations) {
    auto r = RingPresentation::polynomial_ring(names.size(), names);
    return QuotientContext(Ideal::parse(r, relations));
}

QuotientContext::Elem QuotientContext::index_of(const Polynomial& f) const {
    auto it = index_.find(modulus_.reduce(f));
    if (it == index_.end()) throw std::logic_error("quotient context: residue not in element table");
    return it->second;
}

QuotientContext::Elem QuotientContext::parse(const std::string& text) const { return index_of(ring().parse(text)); }

std::string QuotientContext::to_string(Elem a) const {
    return noether::to_string(elements_[a], ring().variable_names());
}

QuotientContext::Elem QuotientContext::pow(Elem a, unsigned e) const {
    Elem r = one_;
    for (unsigned i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

QuotientContext::Elem QuotientContext::from_integer(long v) const { return index_of(ring().constant(v)); }

std::optional<QuotientContext::Elem> QuotientContext::inverse(Elem a) const {
    for (std::size_t b = 0; b < size(); ++b)
        if (mul(a, static_cast<Elem>(b)) == one_) return static_cast<Elem>(b);
    return std::nullopt;
}

std::vector<QuotientContext::Elem> QuotientContext::ring_generators() const {
    std::vector<Elem> g{one_};
    for (std::size_t v = 0; v < ring().nvars; ++v) g.push_back(index_of(ring().var(v)));
    return g;
}

std::vector<QuotientContext::Elem> QuotientContext::ideal_closure(const std::vector<Elem>& gens) const {
    std::vector<char> in(size(), 0);
    std::vector<Elem> members{zero()};
    in[0] = 1;
    const auto rgens = ring_generators();
    std::vector<Elem> queue = gens;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Elem g = queue[qi];
        // Add g to the additive group spanned so far, closing under sums.
        if (in[g]) continue;
        std::vector<Elem> fresh;
        Elem m = g;
        std::vector<Elem> current = members;
        while (!in[m]) {
            for (Elem x : current) {
                Elem s = add(x, m);
                if (!in[s]) {
                    in[s] = 1;
                    members.push_back(s);
                    fresh.push_back(s);
                }
            }
            m = add(m, g);
        }
        for (Elem f : fresh)
            for (Elem r : rgens) queue.push_back(mul(r, f));
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<std::vector<QuotientContext::Elem>> QuotientContext::all_ideals() const {
    std::set<std::vector<Elem>> seen;
    std::vector<std::vector<Elem>> frontier{ideal_closure({})};
    seen.insert(frontier.front());
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        const auto cur = frontier[i];
        for (std::size_t a = 0; a < size(); ++a) {
            if (std::binary_search(cur.begin(), cur.end(), static_cast<Elem>(a))) continue;
            auto gens = cur;
            gens.push_back(static_cast<Elem>(a));
            auto next = ideal_closure(gens);
            if (seen.insert(next).second) frontier.push_back(std::move(next));
        }
    }
    std::vector<std::vector<Elem>> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return out;
}

const std::vector<std::vector<char>>& QuotientContext::maximal_ideals() const {
    std::call_once(lazy_->once, [this] {
        auto ideals = all_ideals();
        std::vector<std::vector<Elem>> proper;
        for (auto& i : ideals)
            if (i.size() < size()) proper.push_back(i);
        for (const auto& i : proper) {
            bool maximal = true;
            for (const auto& j : proper)
                if (j.size() > i.size() && std::includes(j.begin(), j.end(), i.begin(), i.end())) maximal = false;
            if (!maximal) continue;
            std::vector<char> mask(size(), 0);
            for (Elem e : i) mask[e] = 1;
            lazy_->maximal.push_back(std::move(mask));
        }
    });
    return lazy_->maximal;
}

bool QuotientContext::unimodular(const std::vector<Elem>& v) const {
    for (const auto& m : maximal_ideals())
        if (std::all_of(v.begin(), v.end(), [&m](Elem e) { return m[e] != 0; })) return false;
    return true;
}

bool QuotientContext::is_field() const {
    if (size() < 2) return false;
    for (std::size_t a = 1; a < size(); ++a)
        if (!is_unit(static_cast<Elem>(a))) return false;
    return true;
}

std::vector<QuotientContext::Elem> units_order_dividing(const QuotientContext& q, unsigned d) {
    std::vector<QuotientContext::Elem> out;
    for (std::size_t a = 0; a < q.size(); ++a)
        if (q.pow(static_cast<QuotientContext::Elem>(a), d) == q.one()) out.push_back(static_cast<QuotientContext::Elem>(a));
    return out;
}

}  // namespace noether
