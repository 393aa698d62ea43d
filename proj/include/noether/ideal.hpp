#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "noether/groebner.hpp"

namespace noether {

/// Ideal of R = Z[x]/J, represented by its preimage in Z[x]: the generator list
/// is always read together with the ring relations.  The strong Groebner basis
/// is computed lazily, at most once, and shared between copies.
class Ideal {
public:
    Ideal() : Ideal(RingPresentation::integers(), {}) {}
    Ideal(RingPresentation ring, std::vector<Polynomial> generators);

    static Ideal unit(const RingPresentation& ring) { return Ideal(ring, {ring.one()}); }
    static Ideal zero(const RingPresentation& ring) { return Ideal(ring, {}); }
    static Ideal parse(const RingPresentation& ring, const std::vector<std::string>& generators);

    const RingPresentation& ring() const { return state_->ring; }
    /// Generators as given, without the ring relations.
    const std::vector<Polynomial>& generators() const { return state_->generators; }
    /// Generators followed by the ring relations.
    std::vector<Polynomial> preimage_generators() const;
    const StrongGB& gb() const;

    bool contains(const Polynomial& f) const;
    bool contains(const Ideal& other) const;
    bool is_unit() const { return gb().is_unit(); }
    Polynomial reduce(const Polynomial& f) const { return normal_form(f, gb()); }
    /// Reduced basis elements that are not already in the relation ideal.
    std::vector<Polynomial> minimal_generators() const;
    /// Text form like "(2, x^2)"; "(1)" for R and "(0)" for the zero ideal.
    std::string to_string() const;

private:
    struct State {
        RingPresentation ring;
        std::vector<Polynomial> generators;
        std::once_flag once;
        std::optional<StrongGB> gb;
    };
    std::shared_ptr<State> state_;
};

void require_same_ring(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
/// J : I = {f : f I subset J}.
Ideal ideal_quotient(const Ideal& j, const Ideal& i);
/// J : (g).
Ideal ideal_quotient(const Ideal& j, const Polynomial& g);
/// J : F^infinity.
Ideal saturate(const Ideal& j, const Ideal& f);
/// Generator c >= 0 of I intersected with Z.
BigInt integer_part(const Ideal& i);
bool ideal_equal(const Ideal& a, const Ideal& b);
Ideal ideal_add_element(const Ideal& a, const Polynomial& f);

/// Intersection of two ideals of the free polynomial ring given by generator
/// lists (no relations added).  Elimination of a tag variable.
std::vector<Polynomial> intersect_generators(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                             std::size_t nvars, TermOrder order);

}  // namespace noether
