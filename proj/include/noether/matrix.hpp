#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "noether/ideal.hpp"
#include "noether/quotient.hpp"

namespace noether {

/// Ring backends.  Each provides Elem, zero/one, add/sub/mul/neg, equality,
/// from_integer and str.

struct IntegerRing {
    using Elem = BigInt;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_integer(long v) const { return v; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a == 0; }
    std::string str(const Elem& a) const { return a.get_str(); }
};

/// Polynomials of a presented ring, kept reduced modulo the relations.
class PolyRing {
public:
    using Elem = Polynomial;
    explicit PolyRing(RingPresentation ring) : relations_(Ideal::zero(ring)) {}
    const RingPresentation& ring() const { return relations_.ring(); }
    Elem zero() const { return ring().zero(); }
    Elem one() const { return ring().one(); }
    Elem from_integer(long v) const { return ring().constant(v); }
    Elem reduce(const Elem& a) const { return ring().relations.empty() ? a : relations_.reduce(a); }
    Elem add(const Elem& a, const Elem& b) const { return reduce(a + b); }
    Elem sub(const Elem& a, const Elem& b) const { return reduce(a - b); }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
    Elem neg(const Elem& a) const { return -a; }
    bool eq(const Elem& a, const Elem& b) const { return reduce(a - b).is_zero(); }
    bool is_zero(const Elem& a) const { return reduce(a).is_zero(); }
    Elem parse(const std::string& s) const { return reduce(ring().parse(s)); }
    std::string str(const Elem& a) const { return to_string(a, ring().variable_names()); }

private:
    Ideal relations_;
};

/// Residues of a finite quotient context.
class FiniteRing {
public:
    using Elem = QuotientContext::Elem;
    explicit FiniteRing(std::shared_ptr<const QuotientContext> q) : q_(std::move(q)) {}
    const QuotientContext& q() const { return *q_; }
    std::shared_ptr<const QuotientContext> shared() const { return q_; }
    Elem zero() const { return 0; }
    Elem one() const { return q_->one(); }
    Elem from_integer(long v) const { return q_->from_integer(v); }
    Elem add(Elem a, Elem b) const { return q_->add(a, b); }
    Elem sub(Elem a, Elem b) const { return q_->sub(a, b); }
    Elem mul(Elem a, Elem b) const { return q_->mul(a, b); }
    Elem neg(Elem a) const { return q_->neg(a); }
    bool eq(Elem a, Elem b) const { return a == b; }
    bool is_zero(Elem a) const { return a == 0; }
    std::string str(Elem a) const { return q_->to_string(a); }

private:
    std::shared_ptr<const QuotientContext> q_;
};

/// Dense d x d matrix, row-major.  Indices are 0-based in code.
template <class Ring>
struct Mat {
    using Elem = typename Ring::Elem;
    std::size_t d = 0;
    std::vector<Elem> a;

    Elem& operator()(std::size_t i, std::size_t j) { return a[i * d + j]; }
    const Elem& operator()(std::size_t i, std::size_t j) const { return a[i * d + j]; }
    friend bool operator==(const Mat&, const Mat&) = default;
};

template <class Ring>
struct Letter {
    std::size_t i = 0, j = 0;
    typename Ring::Elem r{};
};

template <class Ring>
using Word = std::vector<Letter<Ring>>;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <class Ring>
Mat<Ring> identity(const Ring& R, std::size_t d) {
    Mat<Ring> m{d, std::vector<typename Ring::Elem>(d * d, R.zero())};
    for (std::size_t i = 0; i < d; ++i) m(i, i) = R.one();
    return m;
}

template <class Ring>
Mat<Ring> scalar(const Ring& R, std::size_t d, const typename Ring::Elem& u) {
    Mat<Ring> m{d, std::vector<typename Ring::Elem>(d * d, R.zero())};
    for (std::size_t i = 0; i < d; ++i) m(i, i) = u;
    return m;
}

template <class Ring>
Mat<Ring> elementary(const Ring& R, std::size_t d, std::size_t i, std::size_t j, const typename Ring::Elem& r) {
    if (i >= d || j >= d || i == j) throw DimensionError("elementary: need distinct indices within the dimension");
    Mat<Ring> m = identity(R, d);
    m(i, j) = r;
    return m;
}

template <class Ring>
Mat<Ring> multiply(const Ring& R, const Mat<Ring>& x, const Mat<Ring>& y) {
    const std::size_t d = x.d;
    Mat<Ring> z{d, std::vector<typename Ring::Elem>(d * d, R.zero())};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            if (R.is_zero(x(i, k))) continue;
            for (std::size_t j = 0; j < d; ++j) z(i, j) = R.add(z(i, j), R.mul(x(i, k), y(k, j)));
        }
    return z;
}

template <class Ring>
bool mat_equal(const Ring& R, const Mat<Ring>& x, const Mat<Ring>& y) {
    if (x.d != y.d) return false;
    for (std::size_t k = 0; k < x.a.size(); ++k)
        if (!R.eq(x.a[k], y.a[k])) return false;
    return true;
}

/// Left multiplication by E_ij(r): row i += r * row j.
template <class Ring>
void left_elementary(const Ring& R, Mat<Ring>& m, std::size_t i, std::size_t j, const typename Ring::Elem& r) {
    for (std::size_t c = 0; c < m.d; ++c) m(i, c) = R.add(m(i, c), R.mul(r, m(j, c)));
}

/// Right multiplication by E_ij(r): column j += r * column i.
template <class Ring>
void right_elementary(const Ring& R, Mat<Ring>& m, std::size_t i, std::size_t j, const typename Ring::Elem& r) {
    for (std::size_t c = 0; c < m.d; ++c) m(c, j) = R.add(m(c, j), R.mul(m(c, i), r));
}

/// Left-to-right product of the letters.
template <class Ring>
Mat<Ring> word_product(const Ring& R, std::size_t d, const Word<Ring>& w) {
    Mat<Ring> m = identity(R, d);
    for (const auto& l : w) {
        if (l.i >= d || l.j >= d || l.i == l.j) throw DimensionError("word letter has invalid indices");
        right_elementary(R, m, l.i, l.j, l.r);
    }
    return m;
}

template <class Ring>
Word<Ring> inverse_word(const Ring& R, const Word<Ring>& w) {
    Word<Ring> out(w.rbegin(), w.rend());
    for (auto& l : out) l.r = R.neg(l.r);
    return out;
}

template <class Ring>
Word<Ring> concat(Word<Ring> a, const Word<Ring>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline constexpr std::size_t kMaxLeibnizDim = 6;

/// Leibniz determinant over all permutations (d <= 6).
template <class Ring>
typename Ring::Elem det(const Ring& R, const Mat<Ring>& m) {
    const std::size_t d = m.d;
    if (d > kMaxLeibnizDim) throw DimensionError("det: dimension above the Leibniz cap");
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    typename Ring::Elem total = R.zero();
    do {
        // Sign from the inversion count.
        std::size_t inv = 0;
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = a + 1; b < d; ++b) inv += perm[a] > perm[b];
        typename Ring::Elem term = R.one();
        for (std::size_t r = 0; r < d && !R.is_zero(term); ++r) term = R.mul(term, m(r, perm[r]));
        total = (inv % 2) ? R.sub(total, term) : R.add(total, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

template <class Ring>
Mat<Ring> minor_matrix(const Ring&, const Mat<Ring>& m, std::size_t row, std::size_t col) {
    Mat<Ring> s{m.d - 1, {}};
    for (std::size_t i = 0; i < m.d; ++i)
        for (std::size_t j = 0; j < m.d; ++j)
            if (i != row && j != col) s.a.push_back(m(i, j));
    return s;
}

class NonUnitDeterminant : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Adjugate inverse of a determinant-one matrix.
template <class Ring>
Mat<Ring> inverse_sl(const Ring& R, const Mat<Ring>& m) {
    if (!R.eq(det(R, m), R.one())) throw NonUnitDeterminant("inverse_sl: determinant is not 1");
    const std::size_t d = m.d;
    Mat<Ring> inv = identity(R, d);
    if (d == 1) return inv;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto c = det(R, minor_matrix(R, m, j, i));
            inv(i, j) = ((i + j) % 2) ? R.neg(c) : c;
        }
    return inv;
}

/// [x, y] = x y x^-1 y^-1 for determinant-one matrices.
template <class Ring>
Mat<Ring> commutator(const Ring& R, const Mat<Ring>& x, const Mat<Ring>& y) {
    return multiply(R, multiply(R, x, y), multiply(R, inverse_sl(R, x), inverse_sl(R, y)));
}

template <class Ring>
std::string to_string(const Ring& R, const Mat<Ring>& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.d; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.d; ++j) os << (j ? ", " : "") << R.str(m(i, j));
        os << ']';
    }
    os << ']';
    return os.str();
}

template <class Ring>
std::string to_string(const Ring& R, const Word<Ring>& w) {
    std::ostringstream os;
    for (std::size_t k = 0; k < w.size(); ++k)
        os << (k ? " " : "") << "E" << w[k].i + 1 << w[k].j + 1 << "(" << R.str(w[k].r) << ")";
    return os.str();
}

}  // namespace noether
