#include "noether/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace noether {

Ideal::Ideal(RingPresentation ring, std::vector<Polynomial> generators) : state_(std::make_shared<State>()) {
    for (auto& g : generators) {
        if (g.nvars() != ring.nvars) throw VariableMismatch("ideal generator has wrong variable count");
        g = g.with_order(ring.order);
    }
    std::erase_if(generators, [](const Polynomial& g) { return g.is_zero(); });
    state_->ring = std::move(ring);
    state_->generators = std::move(generators);
}

Ideal Ideal::parse(const RingPresentation& ring, const std::vector<std::string>& generators) {
    std::vector<Polynomial> gens;
    for (const auto& s : generators) gens.push_back(ring.parse(s));
    return Ideal(ring, std::move(gens));
}

std::vector<Polynomial> Ideal::preimage_generators() const {
    std::vector<Polynomial> all = generators();
    for (const auto& r : ring().relations) all.push_back(r.with_order(ring().order));
    return all;
}

const StrongGB& Ideal::gb() const {
    std::call_once(state_->once,
                   [this] { state_->gb = strong_groebner(preimage_generators(), ring().nvars, ring().order); });
    return *state_->gb;
}

bool Ideal::contains(const Polynomial& f) const { return reduce(f).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
    require_same_ring(*this, other);
    return std::all_of(other.generators().begin(), other.generators().end(),
                       [this](const Polynomial& g) { return contains(g); });
}

std::vector<Polynomial> Ideal::minimal_generators() const {
    const auto& elems = gb().elements;
    if (ring().relations.empty()) return elems;
    Ideal rel = Ideal::zero(ring());
    std::vector<Polynomial> out;
    for (const auto& g : elems)
        if (!rel.contains(g)) out.push_back(g);
    return out;
}

std::string Ideal::to_string() const {
    if (is_unit()) return "(1)";
    auto gens = minimal_generators();
    if (gens.empty()) return "(0)";
    const auto names = ring().variable_names();
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) os << ", ";
        os << noether::to_string(gens[i], names);
    }
    os << ')';
    return os.str();
}

void require_same_ring(const Ideal& a, const Ideal& b) {
    if (!a.ring().same_ring(b.ring())) throw VariableMismatch("ideals belong to different rings");
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    auto gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_add_element(const Ideal& a, const Polynomial& f) {
    auto gens = a.generators();
    gens.push_back(f);
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    std::vector<Polynomial> gens;
    const auto ga = a.minimal_generators(), gb = b.minimal_generators();
    for (const auto& f : ga)
        for (const auto& g : gb) gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens));
}

std::vector<Polynomial> intersect_generators(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                             std::size_t nvars, TermOrder order) {
    if (a.empty() || b.empty()) return {};
    const TermOrder elim = TermOrder::elimination(1);
    const Polynomial t = Polynomial::variable(nvars + 1, 0, elim);
    const Polynomial one_minus_t = Polynomial::constant(nvars + 1, 1, elim) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a) gens.push_back(t * f.prepend_variables(1, elim));
    for (const auto& g : b) gens.push_back(one_minus_t * g.prepend_variables(1, elim));
    StrongGB gb = strong_groebner(gens, nvars + 1, elim);
    std::vector<Polynomial> out;
    for (const auto& e : gb.elements)
        if (!e.uses_variable(0)) out.push_back(e.drop_front_variables(1, order));
    return out;
}

namespace {

/// Reduced generators together with the relations of the ring.
std::vector<Polynomial> reduced_preimage(const Ideal& i) {
    std::vector<Polynomial> all = i.minimal_generators();
    for (const auto& r : i.ring().relations) all.push_back(r.with_order(i.ring().order));
    return all;
}

}  // namespace

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    if (a.contains(b)) return b;
    if (b.contains(a)) return a;
    return Ideal(a.ring(), intersect_generators(reduced_preimage(a), reduced_preimage(b), a.ring().nvars,
                                                a.ring().order));
}

Ideal ideal_quotient(const Ideal& j, const Polynomial& g) {
    if (j.contains(g)) return Ideal::unit(j.ring());
    auto meet = intersect_generators(reduced_preimage(j), {g}, j.ring().nvars, j.ring().order);
    std::vector<Polynomial> gens;
    for (const auto& h : meet) gens.push_back(poly_divexact(h, g));
    return Ideal(j.ring(), std::move(gens));
}

Ideal ideal_quotient(const Ideal& j, const Ideal& i) {
    require_same_ring(j, i);
    Ideal result = Ideal::unit(j.ring());
    for (const auto& g : i.minimal_generators()) {
        if (j.contains(g)) continue;
        result = ideal_intersect(result, ideal_quotient(j, g));
    }
    return result;
}

Ideal saturate(const Ideal& j, const Ideal& f) {
    Ideal current = j;
    while (true) {
        Ideal next = ideal_quotient(current, f);
        if (ideal_equal(next, current)) return current;
        current = next;
    }
}

BigInt integer_part(const Ideal& i) { return i.gb().integer_part(); }

bool ideal_equal(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    return a.gb().elements == b.gb().elements;
}

}  // namespace noether
