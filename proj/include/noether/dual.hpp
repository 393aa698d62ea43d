#pragma once

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "noether/matgroup.hpp"

namespace noether {

/// Gamma = Q^d together with its Pontryagin dual.  Group elements and
/// characters are both indexed 0..|Q|^d - 1 (position p is the base-|Q| digit
/// p).  A character is stored through its exponent tuple (c_{p,k}) over the
/// invariant factors m_k of Q and acts by gamma |-> sum c_{p,k} a_{p,k} / m_k
/// mod 1, where a_{p,k} are the coordinates of gamma_p.
class FiniteModel {
public:
    using Elem = FiniteRing::Elem;

    FiniteModel(std::shared_ptr<const QuotientContext> q, std::size_t d);

    const FiniteRing& ring() const { return ring_; }
    const QuotientContext& q() const { return ring_.q(); }
    std::size_t d() const { return d_; }
    std::size_t size() const { return size_; }
    /// Invariant factors of Q repeated d times, sorted.
    std::vector<BigInt> invariant_factors() const;
    /// Pairing values are integers mod this (lcm of the invariant factors).
    unsigned long modulus() const { return modulus_; }

    std::vector<Elem> vector_of(std::size_t idx) const;
    std::size_t index_of(const std::vector<Elem>& v) const;
    std::size_t add(std::size_t a, std::size_t b) const;
    std::size_t neg(std::size_t a) const;

    /// Exponent tuple of a character, d * r entries.
    std::vector<unsigned long> exponents(std::size_t chi) const;
    std::size_t character_from_exponents(const std::vector<unsigned long>& e) const;
    std::string character_string(std::size_t chi) const;

    /// chi(gamma) as an integer mod modulus().
    unsigned long pairing(std::size_t chi, std::size_t gamma) const;
    /// g gamma.
    std::size_t act(const FMat& g, std::size_t gamma) const;
    /// (g chi)(gamma) = chi(g^-1 gamma), solved on additive generators.
    std::size_t dual_act(const FMat& g, std::size_t chi) const;
    std::vector<std::size_t> dual_permutation(const FMat& g) const;
    std::vector<std::size_t> permutation(const FMat& g) const;

    /// E_ij(b), b in the additive basis of Q.
    const std::vector<FMat>& generators() const { return gens_; }
    const std::vector<std::vector<std::size_t>>& dual_generator_perms() const { return dual_perms_; }
    const std::vector<std::vector<std::size_t>>& generator_perms() const { return perms_; }

    /// Additive generators e_{p,k} of Gamma.
    std::vector<std::size_t> additive_generators() const;

    /// I^d for an ideal of Q (sorted element list), as sorted group indices.
    std::vector<std::size_t> ideal_power(const std::vector<Elem>& ideal) const;
    /// Characters vanishing on the given subgroup.
    std::vector<std::size_t> annihilator_in_dual(const std::vector<std::size_t>& subgroup) const;
    /// Group elements on which every given character is trivial.
    std::vector<std::size_t> annihilator_in_group(const std::vector<std::size_t>& characters) const;

private:
    FiniteRing ring_;
    std::size_t d_;
    std::size_t size_;
    std::size_t r_;
    unsigned long modulus_ = 1;
    std::vector<unsigned long> factors_;
    std::vector<unsigned long> scale_;            // modulus / m_k
    std::vector<std::vector<unsigned long>> qc_;  // coordinates of each Q element
    std::map<std::vector<unsigned long>, Elem> from_coords_;
    std::vector<unsigned long> qpair_;            // |Q| x |Q| pairing table
    std::vector<FMat> gens_;
    std::vector<std::vector<std::size_t>> perms_, dual_perms_;
};

/// BFS orbit under the given permutations, sorted.
std::vector<std::size_t> orbit(std::size_t x, const std::vector<std::vector<std::size_t>>& perms);
/// All orbits, each sorted; ordered by smallest element.
std::vector<std::vector<std::size_t>> orbits(std::size_t n, const std::vector<std::vector<std::size_t>>& perms);

struct InvariantSubgroupCheck {
    bool equals_ideal_power = false;
    bool el_invariant = false;
    std::vector<FiniteModel::Elem> ideal;  // ideal generated by all coordinates
};

InvariantSubgroupCheck invariant_subgroup_check(const FiniteModel& m, const std::vector<std::size_t>& subgroup);
/// Subgroup of Gamma generated by the given elements.
std::vector<std::size_t> subgroup_closure(const FiniteModel& m, const std::vector<std::size_t>& gens);
/// All subgroups of Gamma (small models only).
std::vector<std::vector<std::size_t>> all_subgroups(const FiniteModel& m);
/// All EL-invariant subgroups of Gamma.
std::vector<std::vector<std::size_t>> all_invariant_subgroups(const FiniteModel& m);

/// Finitely supported probability distribution on the dual, exact masses.
struct Measure {
    std::map<std::size_t, mpq_class> mass;
    friend bool operator==(const Measure& a, const Measure& b) { return a.mass == b.mass; }
};

Measure uniform(const std::vector<std::size_t>& support);
Measure point_mass(std::size_t chi);
Measure haar(const std::vector<std::size_t>& subgroup);
Measure translate(const FiniteModel& m, const Measure& mu, std::size_t t);
Measure push_forward(const std::vector<std::size_t>& perm, const Measure& mu);
Measure convolve(const FiniteModel& m, const Measure& a, const Measure& b);
bool has_atoms(const Measure& mu);
std::complex<double> fourier(const FiniteModel& m, const Measure& mu, std::size_t gamma);
/// e^{2 pi i chi(gamma)}.
std::complex<double> character_value(const FiniteModel& m, std::size_t chi, std::size_t gamma);

struct ParametricMeasure {
    std::vector<FiniteModel::Elem> ideal;  // I-bar, sorted elements of Q
    std::vector<std::size_t> orbit_cosets;  // representatives of the cosets in omega
    Measure explicit_measure;
    bool depth = false;      // I-bar = Q
    bool ergodic = false;    // supported on one EL-orbit
    bool invariant = false;  // fixed by every generator
    std::optional<std::size_t> duplicate_of;
};

struct Classification {
    std::vector<ParametricMeasure> parametric;
    std::vector<std::vector<std::size_t>> dual_orbits;
    std::vector<Measure> orbit_measures;
    std::size_t distinct_parametric = 0;
    std::size_t distinct_ergodic = 0;
    std::size_t collisions = 0;
    bool bijection = false;
    bool all_invariant = false;
};

Classification classify_measures(const FiniteModel& m);

}  // namespace noether
