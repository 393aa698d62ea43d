#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "noether/finiteness.hpp"
#include "noether/matgroup.hpp"

namespace noether {

using Complex = std::complex<double>;

/// Finite group G / N of matrices over a finite ring, given by the element
/// set G, a normal subgroup N and generators of G.  Elements are cosets,
/// indexed in the canonical order of their smallest representative.
class FiniteGroup {
public:
    FiniteGroup(FiniteRing ring, std::size_t d, const MatrixSet& g, const std::vector<FMat>& generators,
                const MatrixSet* normal = nullptr);

    const FiniteRing& ring() const { return ring_; }
    std::size_t d() const { return d_; }
    std::size_t order() const { return reps_.size(); }
    const FMat& representative(std::size_t k) const { return reps_[k]; }
    /// Coset index of a matrix of G; nullopt when the matrix is outside G.
    std::optional<std::size_t> index_of(const FMat& m) const;
    std::size_t identity() const { return identity_; }
    std::size_t multiply(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const;
    const std::vector<FMat>& generators() const { return gens_; }

    /// Conjugacy classes: identity class first, the rest ordered by smallest member.
    const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
    std::size_t class_of(std::size_t element) const { return class_of_[element]; }
    std::optional<std::size_t> class_of_matrix(const FMat& m) const;

private:
    void compute_classes();

    FiniteRing ring_;
    std::size_t d_;
    std::vector<FMat> reps_;
    MatrixSet all_;                    // every matrix of G
    std::vector<std::uint32_t> coset_;  // coset of each matrix of all_
    std::vector<FMat> gens_;
    std::size_t identity_ = 0;
    std::vector<std::vector<std::size_t>> classes_;
    std::vector<std::size_t> class_of_;
};

/// Generators chosen greedily in canonical order.
std::vector<FMat> greedy_generators(const FiniteRing& R, std::size_t d, const MatrixSet& group);

/// Class function: one value per conjugacy class.
struct ClassFunction {
    std::vector<Complex> values;
    Complex operator[](std::size_t k) const { return values[k]; }
};

long degree_of(const ClassFunction& chi);

/// Burnside-Dixon: simultaneous eigenvectors of a random combination of class
/// matrices.  Sorted by degree, then by values.  Throws when no separating
/// combination is found after the retry budget.
std::vector<ClassFunction> irreducible_characters(const FiniteGroup& g, std::uint64_t seed);

struct OrthogonalityReport {
    double first = 0;   // max deviation of the row relations
    double second = 0;  // max deviation of the column relations
    double degree_sum = 0;  // |sum of squared degrees - |G||
};
OrthogonalityReport check_orthogonality(const FiniteGroup& g, const std::vector<ClassFunction>& chars);

/// <a, b> = (1/|G|) sum |C_k| a_k conj(b_k).
Complex inner_product(const FiniteGroup& g, const ClassFunction& a, const ClassFunction& b);

// ---- the subquotient A_d(I, K) in a finite model Q = R/K ----------------------------

struct Subquotient {
    std::shared_ptr<FiniteRing> ring;  // Q
    std::size_t d = 0;
    MatrixSet ambient;                 // EL_d(Q)
    std::vector<FMat> ambient_generators;
    MatrixSet level_part;              // {g : g mod I-bar scalar}
    MatrixSet kernel_closure;          // normal closure of E_ij(K-bar)
    std::shared_ptr<FiniteGroup> group;  // A
    std::size_t center_index = 0;      // [A : A intersect Z(G/N)]
    std::vector<FiniteRing::Elem> level_ideal;
    std::vector<FiniteRing::Elem> kernel_ideal;
};

/// Ideals I-bar, K-bar of Q given as element lists (K-bar inside I-bar).
Subquotient subquotient_A(std::shared_ptr<const QuotientContext> q, std::size_t d,
                          const std::vector<FiniteRing::Elem>& level, const std::vector<FiniteRing::Elem>& kernel);

/// Permutation of the classes of A induced by conjugation with an ambient element.
std::vector<std::size_t> class_permutation(const Subquotient& a, const FMat& s);
ClassFunction twist(const ClassFunction& chi, const std::vector<std::size_t>& class_perm);
bool same_class_function(const ClassFunction& a, const ClassFunction& b, double tol = 1e-6);

// ---- character triples -----------------------------------------------------------

struct CharacterTriple {
    RingPresentation ring;
    std::size_t d = 3;
    Ideal level;   // I
    Ideal kernel;  // K
    /// Characters of A, as class-value arrays in the class order of A.
    std::vector<ClassFunction> orbit;
};

/// The model built from a triple: Q = R/K and A_d(I, K).
struct TripleModel {
    std::shared_ptr<const QuotientContext> q;
    Subquotient a;
    std::vector<ClassFunction> irreducibles;
};

TripleModel build_triple_model(const CharacterTriple& t, std::uint64_t seed);

/// Orbit of chi under conjugation by the ambient generators, in discovery order.
std::vector<ClassFunction> ambient_orbit(const TripleModel& model, const ClassFunction& chi);
/// Orbit of the first irreducible of the given degree; empty if none.
std::vector<ClassFunction> orbit_by_degree(const TripleModel& model, long degree);
/// Irreducibles with nonzero inner product against the class function.
std::vector<std::size_t> constituents(const TripleModel& model, const ClassFunction& f, double tol = 1e-6);

struct TripleReport {
    bool depth_matches = false;
    std::string depth_status;
    std::string computed_depth;
    bool orbit_closed = false;
    bool orbit_single = false;
    bool essential = false;
    bool characters_irreducible = false;
    std::size_t orbit_size = 0;
    bool pass() const { return depth_matches && orbit_closed && orbit_single && essential && characters_irreducible; }
};

TripleReport validate_triple(const CharacterTriple& t, const TripleModel& model);

/// phi(g) = 0 when sltil_level(g) is not inside I, otherwise the average of
/// psi / psi(1) over the orbit at the image of g in A.
class InducedTrace {
public:
    InducedTrace(CharacterTriple triple, TripleModel model);
    Complex operator()(const ZMat& g) const;
    Complex operator()(const PMat& g) const;
    /// Value on an element of A, by class.
    Complex on_class(std::size_t cls) const { return class_values_[cls]; }
    const CharacterTriple& triple() const { return triple_; }
    const TripleModel& model() const { return model_; }

private:
    Complex evaluate(const PMat& g, const Ideal& level) const;

    CharacterTriple triple_;
    TripleModel model_;
    PolyRing poly_;
    std::vector<Complex> class_values_;
};

/// Ball of word radius r in the generators E_ij(+-1) of SL_d(Z), BFS order.
std::vector<ZMat> integer_ball(std::size_t d, unsigned radius);

struct TraceCheckReport {
    double gram_min_eigenvalue = 0;
    double square_gram_min_eigenvalue = 0;
    double conjugation_defect = 0;
    double square_conjugation_defect = 0;
    double identity_defect = 0;
    double schur_defect = 0;
    std::size_t central_samples = 0;
    bool kernel_inside_k = false;
    std::string kernel_ideal;
    bool psd(double tol) const { return gram_min_eigenvalue >= -tol; }
};

/// Gram matrix [phi(g_j^-1 g_i)], conjugation, phi(e), |phi|^2, Schur and
/// kernel checks on the sample; central elements are sample elements whose
/// sltil level lies in K.
TraceCheckReport trace_checks(const std::function<Complex(const ZMat&)>& phi, const std::vector<ZMat>& sample,
                              const Ideal& kernel);

/// Sum of the sltil levels of the elements where phi equals 1.
Ideal kernel_level(const std::function<Complex(const ZMat&)>& phi, const std::vector<ZMat>& elements,
                   const RingPresentation& ring, double tol = 1e-9);
/// Sum of the sltil levels of the elements where phi is nonzero.
Ideal support_level(const std::function<Complex(const ZMat&)>& phi, const std::vector<ZMat>& elements,
                    const RingPresentation& ring, double tol = 1e-9);

double min_hermitian_eigenvalue(const std::vector<std::vector<Complex>>& m);

}  // namespace noether
