#pragma once

#include <optional>
#include <unordered_map>

#include "noether/matrix.hpp"

namespace noether {

using ZMat = Mat<IntegerRing>;
using PMat = Mat<PolyRing>;
using FMat = Mat<FiniteRing>;
using ZWord = Word<IntegerRing>;
using FWord = Word<FiniteRing>;

// ---- levels -----------------------------------------------------------------

/// Ideal generated by the entries of g - Id.
Ideal sl_level(const PolyRing& R, const PMat& g);
/// Ideal generated by the off-diagonal entries and g_ii - g_11.
Ideal sltil_level(const PolyRing& R, const PMat& g);
Ideal sl_level(const ZMat& g);
Ideal sltil_level(const ZMat& g);
/// Finite versions: ideals of Q as sorted element lists.
std::vector<FiniteRing::Elem> sl_level(const FiniteRing& R, const FMat& g);
std::vector<FiniteRing::Elem> sltil_level(const FiniteRing& R, const FMat& g);
/// g mod the ideal is scalar.
bool scalar_modulo(const FiniteRing& R, const FMat& g, const std::vector<FiniteRing::Elem>& ideal);

PMat to_poly_matrix(const PolyRing& R, const ZMat& g);

/// iota(g) = g - Id reduced modulo K.  Precondition sl_level(g) in F, F^2 in K.
PMat iota(const PolyRing& R, const PMat& g, const Ideal& f, const Ideal& k);

// ---- center words -----------------------------------------------------------

/// W_ij(x, y) = E_ij(x) E_ji(-y) E_ij(x).
FWord weyl_word(const FiniteRing& R, std::size_t i, std::size_t j, FiniteRing::Elem x, FiniteRing::Elem y);
/// D_ij(x, y) = W_ij(x, y) W_ij(-1, -1).
FWord diagonal_word(const FiniteRing& R, std::size_t i, std::size_t j, FiniteRing::Elem x, FiniteRing::Elem y);
/// D_12(u) D_23(u^2) ... D_{d-1,d}(u^{d-1}), evaluating to u Id.  Throws
/// PreconditionError unless u^d = 1 and d >= 3.
FWord center_word(const FiniteRing& R, FiniteRing::Elem u, std::size_t d);

// ---- stable range and shortening ---------------------------------------------

class ShorteningError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// s with (r_1 + s_1 r_{n+1}, ..., r_n + s_n r_{n+1}) unimodular.  Search by L1
/// norm, ties lexicographic with entry order 0, 1, -1, 2, -2, ...; falls back
/// to a gcd construction.
std::vector<BigInt> shorten_unimodular(const IntegerRing& R, const std::vector<BigInt>& v);
/// Exhaustive search in index order; fields use the trivial choice.
std::vector<FiniteRing::Elem> shorten_unimodular(const FiniteRing& R, const std::vector<FiniteRing::Elem>& v);

/// Coefficients c with sum c_k v_k = target.
std::optional<std::vector<BigInt>> bezout(const IntegerRing& R, const std::vector<BigInt>& v, const BigInt& target);
std::optional<std::vector<FiniteRing::Elem>> bezout(const FiniteRing& R, const std::vector<FiniteRing::Elem>& v,
                                                    FiniteRing::Elem target);

/// Smallest n <= 3 such that every unimodular (n+1)-tuple shortens; 4 when none.
unsigned stable_range(const FiniteRing& R);

bool is_unimodular(const IntegerRing& R, const std::vector<BigInt>& v);
bool is_unimodular(const FiniteRing& R, const std::vector<FiniteRing::Elem>& v);

// ---- normal form for conjugates -----------------------------------------------

template <class Ring>
struct NormalForm {
    Word<Ring> conjugator;
    Word<Ring> h, v, h_prime, v_prime;
    Mat<Ring> n;
    /// conjugator^-1 g conjugator.
    Mat<Ring> conjugated;
    bool verified = false;
};

NormalForm<IntegerRing> normal_form_conjugate(const IntegerRing& R, const ZMat& g);
NormalForm<FiniteRing> normal_form_conjugate(const FiniteRing& R, const FMat& g);

// ---- finite groups -------------------------------------------------------------

std::string matrix_key(const FMat& m);

/// Insert-only set of matrices with stable insertion order.
class MatrixSet {
public:
    bool insert(const FMat& m);
    bool contains(const FMat& m) const { return index_.count(matrix_key(m)) != 0; }
    std::optional<std::size_t> find(const FMat& m) const;
    std::size_t size() const { return elems_.size(); }
    const std::vector<FMat>& elements() const { return elems_; }
    const FMat& operator[](std::size_t k) const { return elems_[k]; }
    /// Reorders elements by canonical key.
    void canonicalize();
    bool subset_of(const MatrixSet& other) const;
    friend bool operator==(const MatrixSet& a, const MatrixSet& b) { return a.size() == b.size() && a.subset_of(b); }

private:
    std::vector<FMat> elems_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Closure of {Id} under right multiplication by the generators.
MatrixSet generate_subgroup(const FiniteRing& R, std::size_t d, const std::vector<FMat>& gens);
/// Smallest subgroup containing the seeds and normalized by the ambient generators.
MatrixSet normal_closure(const FiniteRing& R, std::size_t d, const std::vector<FMat>& seeds,
                         const std::vector<FMat>& ambient);
bool member(const MatrixSet& s, const FMat& g);

/// E_ij(b) for all i != j and b in the given element list.
std::vector<FMat> elementary_generators(const FiniteRing& R, std::size_t d, const std::vector<FiniteRing::Elem>& values);
/// E_ij(b) for b in the additive basis of Q: generators of EL_d(Q).
std::vector<FMat> el_generators(const FiniteRing& R, std::size_t d);

// ---- structure predicates ------------------------------------------------------

/// g normalizes V_i (column i) iff g_ij = 0 for all j != i.
bool normalizes_vertical(const FiniteRing& R, const FMat& g, std::size_t i);
/// g normalizes H_i (row i) iff g_ji = 0 for all j != i.
bool normalizes_horizontal(const FiniteRing& R, const FMat& g, std::size_t i);
/// g centralizes E_ij(x) iff x g_ki = 0 (k != i), x g_jl = 0 (l != j), x (g_ii - g_jj) = 0.
bool centralizes_elementary(const FiniteRing& R, const FMat& g, std::size_t i, std::size_t j, FiniteRing::Elem x);
/// g in Z(SL_d) x V_i: scalar u (u^d = 1) times an element of V_i.
bool centralizes_vertical(const FiniteRing& R, const FMat& g, std::size_t i);
bool commutes(const FiniteRing& R, const FMat& x, const FMat& y);

}  // namespace noether
