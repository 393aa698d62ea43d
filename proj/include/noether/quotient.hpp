#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "noether/finiteness.hpp"

namespace noether {

/// Finite ring Q = R/K with precomputed operation tables.  Elements are
/// indices 0..|Q|-1; index 0 is zero.  Immutable after construction.
class QuotientContext {
public:
    using Elem = std::uint16_t;

    explicit QuotientContext(const Ideal& k);
    static QuotientContext integers_mod(unsigned n);
    /// Z[x]/(relations) with variable names, e.g. ("t", {"2", "t^2"}).
    static QuotientContext presented(const std::vector<std::string>& names, const std::vector<std::string>& relations);

    std::size_t size() const { return elements_.size(); }
    Elem zero() const { return 0; }
    Elem one() const { return one_; }
    Elem add(Elem a, Elem b) const { return add_[a * size() + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * size() + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem pow(Elem a, unsigned e) const;
    Elem from_integer(long v) const;
    std::optional<Elem> inverse(Elem a) const;
    bool is_unit(Elem a) const { return inverse(a).has_value(); }

    /// Residue of a polynomial of the ambient ring.
    Elem index_of(const Polynomial& f) const;
    Elem parse(const std::string& text) const;
    const Polynomial& element(Elem a) const { return elements_[a]; }
    std::string to_string(Elem a) const;

    const Ideal& modulus() const { return modulus_; }
    const RingPresentation& ring() const { return modulus_.ring(); }
    const AdditiveStructure& additive() const { return additive_; }
    const std::vector<BigInt>& invariant_factors() const { return additive_.invariant_factors; }
    /// Additive coordinates of each element, reduced modulo the invariant factors.
    const std::vector<BigInt>& coordinates(Elem a) const { return coords_[a]; }
    /// Element with coordinate vector e_k, one per invariant factor.
    const std::vector<Elem>& additive_basis() const { return basis_; }
    /// Ring generators: 1 and the images of the variables.
    std::vector<Elem> ring_generators() const;

    /// Ideal generated by the given elements, as a sorted element list.
    std::vector<Elem> ideal_closure(const std::vector<Elem>& gens) const;
    /// All ideals of Q, sorted by size then lexicographically.
    std::vector<std::vector<Elem>> all_ideals() const;
    /// Whether the given elements generate the unit ideal.
    bool unimodular(const std::vector<Elem>& v) const;
    /// Maximal ideals as membership masks.
    const std::vector<std::vector<char>>& maximal_ideals() const;
    bool is_field() const;

private:
    Ideal modulus_;
    AdditiveStructure additive_;
    std::vector<Polynomial> elements_;
    std::unordered_map<Polynomial, Elem> index_;
    std::vector<std::vector<BigInt>> coords_;
    std::vector<Elem> basis_;
    std::vector<Elem> add_, mul_, neg_;
    Elem one_ = 0;
    struct Lazy {
        std::once_flag once;
        std::vector<std::vector<char>> maximal;
    };
    std::shared_ptr<Lazy> lazy_ = std::make_shared<Lazy>();
};

/// All u with u^d = 1, sorted by index.
std::vector<QuotientContext::Elem> units_order_dividing(const QuotientContext& q, unsigned d);

}  // namespace noether
