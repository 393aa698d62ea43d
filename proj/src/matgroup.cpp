#include "noether/matgroup.hpp"

#include <algorithm>
#include <functional>

namespace noether {

// ---- levels -------------------------------------------------------------------

Ideal sl_level(const PolyRing& R, const PMat& g) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < g.d; ++i)
        for (std::size_t j = 0; j < g.d; ++j) gens.push_back(i == j ? R.sub(g(i, j), R.one()) : g(i, j));
    return Ideal(R.ring(), std::move(gens));
}

Ideal sltil_level(const PolyRing& R, const PMat& g) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < g.d; ++i)
        for (std::size_t j = 0; j < g.d; ++j) {
            if (i != j) gens.push_back(g(i, j));
            else if (i > 0) gens.push_back(R.sub(g(i, i), g(0, 0)));
        }
    return Ideal(R.ring(), std::move(gens));
}

PMat to_poly_matrix(const PolyRing& R, const ZMat& g) {
    PMat m{g.d, {}};
    for (const auto& e : g.a) m.a.push_back(R.ring().constant(e));
    return m;
}

namespace {

const PolyRing& integer_poly_ring() {
    static const PolyRing ring{RingPresentation::integers()};
    return ring;
}

}  // namespace

Ideal sl_level(const ZMat& g) { return sl_level(integer_poly_ring(), to_poly_matrix(integer_poly_ring(), g)); }

Ideal sltil_level(const ZMat& g) { return sltil_level(integer_poly_ring(), to_poly_matrix(integer_poly_ring(), g)); }

std::vector<FiniteRing::Elem> sl_level(const FiniteRing& R, const FMat& g) {
    std::vector<FiniteRing::Elem> gens;
    for (std::size_t i = 0; i < g.d; ++i)
        for (std::size_t j = 0; j < g.d; ++j) gens.push_back(i == j ? R.sub(g(i, j), R.one()) : g(i, j));
    return R.q().ideal_closure(gens);
}

std::vector<FiniteRing::Elem> sltil_level(const FiniteRing& R, const FMat& g) {
    std::vector<FiniteRing::Elem> gens;
    for (std::size_t i = 0; i < g.d; ++i)
        for (std::size_t j = 0; j < g.d; ++j) {
            if (i != j) gens.push_back(g(i, j));
            else if (i > 0) gens.push_back(R.sub(g(i, i), g(0, 0)));
        }
    return R.q().ideal_closure(gens);
}

bool scalar_modulo(const FiniteRing& R, const FMat& g, const std::vector<FiniteRing::Elem>& ideal) {
    auto in = [&](FiniteRing::Elem e) { return std::binary_search(ideal.begin(), ideal.end(), e); };
    for (std::size_t i = 0; i < g.d; ++i)
        for (std::size_t j = 0; j < g.d; ++j) {
            if (i != j && !in(g(i, j))) return false;
            if (i == j && i > 0 && !in(R.sub(g(i, i), g(0, 0)))) return false;
        }
    return true;
}

PMat iota(const PolyRing& R, const PMat& g, const Ideal& f, const Ideal& k) {
    if (!f.contains(sl_level(R, g))) throw PreconditionError("iota: level of g is not contained in F");
    if (!k.contains(ideal_product(f, f))) throw PreconditionError("iota: F^2 is not contained in K");
    PMat out{g.d, {}};
    for (std::size_t i = 0; i < g.d; ++i)
        for (std::size_t j = 0; j < g.d; ++j) out.a.push_back(k.reduce(i == j ? g(i, j) - R.one() : g(i, j)));
    return out;
}

// ---- center words ---------------------------------------------------------------

FWord weyl_word(const FiniteRing& R, std::size_t i, std::size_t j, FiniteRing::Elem x, FiniteRing::Elem y) {
    return {{i, j, x}, {j, i, R.neg(y)}, {i, j, x}};
}

FWord diagonal_word(const FiniteRing& R, std::size_t i, std::size_t j, FiniteRing::Elem x, FiniteRing::Elem y) {
    const auto m1 = R.neg(R.one());
    return concat(weyl_word(R, i, j, x, y), weyl_word(R, i, j, m1, m1));
}

FWord center_word(const FiniteRing& R, FiniteRing::Elem u, std::size_t d) {
    if (d < 3) throw PreconditionError("center_word: dimension must be at least 3");
    const auto& q = R.q();
    if (q.pow(u, static_cast<unsigned>(d)) != q.one())
        throw PreconditionError("center_word: " + q.to_string(u) + " is not a unit of order dividing " +
                                std::to_string(d));
    FWord w;
    if (u == q.one()) return w;
    for (std::size_t k = 1; k < d; ++k) {
        auto x = q.pow(u, static_cast<unsigned>(k));
        auto y = *q.inverse(x);
        w = concat(std::move(w), diagonal_word(R, k - 1, k, x, y));
    }
    return w;
}

// ---- unimodularity, shortening, Bezout ----------------------------------------------

bool is_unimodular(const IntegerRing&, const std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g == 1;
}

bool is_unimodular(const FiniteRing& R, const std::vector<FiniteRing::Elem>& v) { return R.q().unimodular(v); }

namespace {

BigInt rank_value(unsigned k) {
    if (k == 0) return 0;
    return (k % 2) ? BigInt((k + 1) / 2) : BigInt(-static_cast<long>(k / 2));
}

/// Calls visit on every vector of length n with L1 norm exactly `norm`, in
/// lexicographic rank order; stops when visit returns true.
bool enumerate_l1(std::size_t n, unsigned norm, std::vector<BigInt>& cur, const std::function<bool()>& visit) {
    const std::size_t p = cur.size();
    if (p + 1 == n) {
        for (unsigned k = 0; k <= 2 * norm; ++k) {
            BigInt v = rank_value(k);
            if (abs(v) != norm) continue;
            cur.push_back(v);
            bool done = visit();
            cur.pop_back();
            if (done) return true;
        }
        return false;
    }
    for (unsigned k = 0; k <= 2 * norm; ++k) {
        BigInt v = rank_value(k);
        cur.push_back(v);
        bool done = enumerate_l1(n, norm - static_cast<unsigned>(BigInt(abs(v)).get_ui()), cur, visit);
        cur.pop_back();
        if (done) return true;
    }
    return false;
}

constexpr unsigned kShorteningSearchNorm = 16;

}  // namespace

std::vector<BigInt> shorten_unimodular(const IntegerRing& R, const std::vector<BigInt>& v) {
    if (v.size() < 2) throw ShorteningError("shorten_unimodular: need at least two entries");
    if (!is_unimodular(R, v)) throw ShorteningError("shorten_unimodular: tuple is not unimodular");
    const std::size_t n = v.size() - 1;
    const BigInt& c = v[n];
    auto works = [&](const std::vector<BigInt>& s) {
        BigInt g = 0;
        for (std::size_t i = 0; i < n; ++i) g = gcd(g, v[i] + s[i] * c);
        return g == 1;
    };
    std::vector<BigInt> found;
    for (unsigned norm = 0; norm <= kShorteningSearchNorm && found.empty(); ++norm) {
        std::vector<BigInt> cur;
        enumerate_l1(n, norm, cur, [&] {
            if (!works(cur)) return false;
            found = cur;
            return true;
        });
    }
    if (!found.empty()) return found;

    // Construction: make the rest nonzero, then pick s_1 coprime-adjusting.
    std::vector<BigInt> s(n, 0);
    if (n == 1) {
        for (int target : {1, -1}) {
            BigInt diff = BigInt(target) - v[0];
            if (c != 0 && mpz_divisible_p(diff.get_mpz_t(), c.get_mpz_t())) {
                s[0] = diff / c;
                return s;
            }
        }
        throw ShorteningError("shorten_unimodular: pair cannot be shortened over Z");
    }
    BigInt g = 0;
    for (std::size_t i = 1; i < n; ++i) g = gcd(g, v[i]);
    if (g == 0) {
        s[1] = 1;
        g = gcd(v[1] + c, BigInt(0));
        for (std::size_t i = 2; i < n; ++i) g = gcd(g, v[i]);
    }
    BigInt prod = 1;
    if (g > 1)
        for (const auto& p : prime_divisors(g))
            if (!mpz_divisible_p(v[0].get_mpz_t(), p.get_mpz_t())) prod *= p;
    s[0] = prod;
    if (!works(s)) throw ShorteningError("shorten_unimodular: construction failed");
    return s;
}

namespace {

/// Visits Q^n in lexicographic index order until visit returns true.
template <class F>
bool for_each_tuple(std::size_t q, std::size_t n, F&& visit) {
    double total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= static_cast<double>(q);
    if (total > 1e7) throw ResourceLimitError("exhaustive tuple search exceeds 10^7 candidates");
    std::vector<FiniteRing::Elem> t(n, 0);
    while (true) {
        if (visit(t)) return true;
        std::size_t p = n;
        while (p > 0) {
            --p;
            if (++t[p] < q) break;
            t[p] = 0;
            if (p == 0) return false;
        }
        if (n == 0) return false;
    }
}

}  // namespace

std::vector<FiniteRing::Elem> shorten_unimodular(const FiniteRing& R, const std::vector<FiniteRing::Elem>& v) {
    if (v.size() < 2) throw ShorteningError("shorten_unimodular: need at least two entries");
    if (!is_unimodular(R, v)) throw ShorteningError("shorten_unimodular: tuple is not unimodular");
    const std::size_t n = v.size() - 1;
    std::vector<FiniteRing::Elem> found;
    for_each_tuple(R.q().size(), n, [&](const std::vector<FiniteRing::Elem>& s) {
        std::vector<FiniteRing::Elem> w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = R.add(v[i], R.mul(s[i], v[n]));
        if (!is_unimodular(R, w)) return false;
        found = s;
        return true;
    });
    if (found.empty()) throw ShorteningError("shorten_unimodular: exhaustive search found no shortening");
    return found;
}

std::optional<std::vector<BigInt>> bezout(const IntegerRing&, const std::vector<BigInt>& v, const BigInt& target) {
    std::vector<BigInt> coeff(v.size(), 0);
    BigInt g = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        BigInt ng, a, b;
        mpz_gcdext(ng.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t(), v[k].get_mpz_t());
        for (std::size_t j = 0; j < k; ++j) coeff[j] *= a;
        coeff[k] = b;
        g = ng;
    }
    if (g == 0) {
        if (target == 0) return coeff;
        return std::nullopt;
    }
    if (!mpz_divisible_p(target.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
    BigInt scale = target / g;
    for (auto& c : coeff) c *= scale;
    return coeff;
}

std::optional<std::vector<FiniteRing::Elem>> bezout(const FiniteRing& R, const std::vector<FiniteRing::Elem>& v,
                                                    FiniteRing::Elem target) {
    std::optional<std::vector<FiniteRing::Elem>> found;
    for_each_tuple(R.q().size(), v.size(), [&](const std::vector<FiniteRing::Elem>& c) {
        FiniteRing::Elem s = R.zero();
        for (std::size_t k = 0; k < v.size(); ++k) s = R.add(s, R.mul(c[k], v[k]));
        if (s != target) return false;
        found = c;
        return true;
    });
    return found;
}

unsigned stable_range(const FiniteRing& R) {
    const std::size_t q = R.q().size();
    for (unsigned n = 1; n <= 3; ++n) {
        bool ok = true;
        for_each_tuple(q, n + 1, [&](const std::vector<FiniteRing::Elem>& t) {
            if (!is_unimodular(R, t)) return false;
            try {
                shorten_unimodular(R, t);
            } catch (const ShorteningError&) {
                ok = false;
                return true;
            }
            return false;
        });
        if (ok) return n;
    }
    return 4;
}

// ---- normal form for conjugates -------------------------------------------------------

namespace {

template <class Ring>
Mat<Ring> conjugate_by_word(const Ring& R, const Mat<Ring>& g, const Word<Ring>& w) {
    return multiply(R, multiply(R, word_product(R, g.d, inverse_word(R, w)), g), word_product(R, g.d, w));
}

template <class Ring>
NormalForm<Ring> normal_form_impl(const Ring& R, const Mat<Ring>& g) {
    using Elem = typename Ring::Elem;
    const std::size_t d = g.d;
    if (d < 3) throw DimensionError("normal_form_conjugate: dimension must be at least 3");
    if (!R.eq(det(R, g), R.one())) throw NonUnitDeterminant("normal_form_conjugate: determinant is not 1");
    NormalForm<Ring> out;
    Mat<Ring> cur = g;

    // Shorten (r1, r3, ..., rd | r2) by conjugating with E_i2 letters.
    std::vector<Elem> tuple{cur(0, 0)};
    for (std::size_t k = 2; k < d; ++k) tuple.push_back(cur(k, 0));
    tuple.push_back(cur(1, 0));
    auto s = shorten_unimodular(R, tuple);
    Word<Ring> x;
    if (!R.is_zero(s[0])) x.push_back({0, 1, R.neg(s[0])});
    for (std::size_t k = 2; k < d; ++k)
        if (!R.is_zero(s[k - 1])) x.push_back({k, 1, R.neg(s[k - 1])});
    cur = conjugate_by_word(R, cur, x);
    out.conjugator = x;

    // Bezout: b0 r1 + sum_k b_k r_k = 1 - r1 - r2, then move the sum into r2.
    std::vector<Elem> vals{cur(0, 0)};
    for (std::size_t k = 2; k < d; ++k) vals.push_back(cur(k, 0));
    Elem target = R.sub(R.sub(R.one(), cur(0, 0)), cur(1, 0));
    auto b = bezout(R, vals, target);
    if (!b) throw ShorteningError("normal_form_conjugate: shortened column is not unimodular");
    Word<Ring> y;
    for (std::size_t k = 2; k < d; ++k)
        if (!R.is_zero((*b)[k - 1])) y.push_back({1, k, R.neg((*b)[k - 1])});
    cur = conjugate_by_word(R, cur, y);
    out.conjugator = concat(std::move(out.conjugator), y);

    // h1 v1 cur has top-left entry 1.
    const Elem s1 = (*b)[0];
    Mat<Ring> g2 = cur;
    left_elementary(R, g2, 1, 0, s1);
    left_elementary(R, g2, 0, 1, R.one());
    if (!R.eq(g2(0, 0), R.one())) throw std::logic_error("normal_form_conjugate: pivot is not 1");

    Word<Ring> v2, v2_inv;
    Mat<Ring> g3 = g2;
    for (std::size_t i = 1; i < d; ++i) {
        if (R.is_zero(g2(i, 0))) continue;
        v2.push_back({i, 0, R.neg(g2(i, 0))});
        v2_inv.push_back({i, 0, g2(i, 0)});
        left_elementary(R, g3, i, 0, R.neg(g2(i, 0)));
    }
    Word<Ring> h2;
    Mat<Ring> n = g3;
    for (std::size_t j = 1; j < d; ++j) {
        if (R.is_zero(g3(0, j))) continue;
        h2.push_back({0, j, R.neg(g3(0, j))});
        right_elementary(R, n, 0, j, R.neg(g3(0, j)));
    }

    // cur = v1^-1 h1^-1 v2^-1 n h2^-1, so h2^-1 cur h2 = h2^-1 v1^-1 h1^-1 v2^-1 n.
    out.conjugator = concat(std::move(out.conjugator), h2);
    out.h = inverse_word(R, h2);
    if (!R.is_zero(s1)) out.v = {{1, 0, R.neg(s1)}};
    out.h_prime = {{0, 1, R.neg(R.one())}};
    out.v_prime = v2_inv;
    out.n = n;
    out.conjugated = conjugate_by_word(R, g, out.conjugator);

    Mat<Ring> rebuilt = multiply(
        R, word_product(R, d, concat(concat(concat(out.h, out.v), out.h_prime), out.v_prime)), out.n);
    bool n_shape = R.eq(n(0, 0), R.one());
    for (std::size_t k = 1; k < d; ++k) n_shape = n_shape && R.is_zero(n(0, k)) && R.is_zero(n(k, 0));
    out.verified = n_shape && mat_equal(R, rebuilt, out.conjugated) && R.eq(det(R, n), R.one());
    return out;
}

}  // namespace

NormalForm<IntegerRing> normal_form_conjugate(const IntegerRing& R, const ZMat& g) { return normal_form_impl(R, g); }

NormalForm<FiniteRing> normal_form_conjugate(const FiniteRing& R, const FMat& g) { return normal_form_impl(R, g); }

// ---- finite groups ---------------------------------------------------------------

std::string matrix_key(const FMat& m) {
    std::string k(m.a.size() * 2, '\0');
    for (std::size_t i = 0; i < m.a.size(); ++i) {
        k[2 * i] = static_cast<char>(m.a[i] >> 8);
        k[2 * i + 1] = static_cast<char>(m.a[i] & 0xff);
    }
    return k;
}

bool MatrixSet::insert(const FMat& m) {
    auto [it, inserted] = index_.emplace(matrix_key(m), elems_.size());
    if (!inserted) return false;
    if (elems_.size() >= limits().max_elements)
        throw ResourceLimitError("matrix group enumeration exceeds " + std::to_string(limits().max_elements) +
                                 " elements");
    elems_.push_back(m);
    return true;
}

std::optional<std::size_t> MatrixSet::find(const FMat& m) const {
    auto it = index_.find(matrix_key(m));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

void MatrixSet::canonicalize() {
    std::vector<std::pair<std::string, FMat>> tmp;
    tmp.reserve(elems_.size());
    for (auto& m : elems_) tmp.emplace_back(matrix_key(m), std::move(m));
    std::sort(tmp.begin(), tmp.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    elems_.clear();
    index_.clear();
    for (auto& [k, m] : tmp) {
        index_.emplace(k, elems_.size());
        elems_.push_back(std::move(m));
    }
}

bool MatrixSet::subset_of(const MatrixSet& other) const {
    return std::all_of(elems_.begin(), elems_.end(), [&](const FMat& m) { return other.contains(m); });
}

namespace {

void extend_closure(const FiniteRing& R, MatrixSet& set, const std::vector<FMat>& all_gens,
                    const std::vector<FMat>& new_gens) {
    std::vector<std::size_t> queue;
    const std::size_t old = set.size();
    for (std::size_t e = 0; e < old; ++e)
        for (const auto& s : new_gens)
            if (set.insert(multiply(R, set[e], s))) queue.push_back(set.size() - 1);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const FMat cur = set[queue[qi]];
        for (const auto& s : all_gens)
            if (set.insert(multiply(R, cur, s))) queue.push_back(set.size() - 1);
    }
}

}  // namespace

MatrixSet generate_subgroup(const FiniteRing& R, std::size_t d, const std::vector<FMat>& gens) {
    MatrixSet set;
    set.insert(identity(R, d));
    extend_closure(R, set, gens, gens);
    set.canonicalize();
    return set;
}

MatrixSet normal_closure(const FiniteRing& R, std::size_t d, const std::vector<FMat>& seeds,
                         const std::vector<FMat>& ambient) {
    std::vector<FMat> gens = seeds;
    MatrixSet set;
    set.insert(identity(R, d));
    extend_closure(R, set, gens, gens);
    std::vector<FMat> ambient_inv;
    for (const auto& a : ambient) ambient_inv.push_back(inverse_sl(R, a));
    std::size_t checked = 0;
    while (checked < gens.size()) {
        std::vector<FMat> fresh;
        const std::size_t upto = gens.size();
        for (; checked < upto; ++checked)
            for (std::size_t k = 0; k < ambient.size(); ++k) {
                FMat c = multiply(R, multiply(R, ambient[k], gens[checked]), ambient_inv[k]);
                if (!set.contains(c)) {
                    fresh.push_back(c);
                    gens.push_back(c);
                    extend_closure(R, set, gens, {c});
                }
            }
    }
    set.canonicalize();
    return set;
}

bool member(const MatrixSet& s, const FMat& g) { return s.contains(g); }

std::vector<FMat> elementary_generators(const FiniteRing& R, std::size_t d,
                                        const std::vector<FiniteRing::Elem>& values) {
    std::vector<FMat> out;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (i != j)
                for (auto b : values)
                    if (b != 0) out.push_back(elementary(R, d, i, j, b));
    return out;
}

std::vector<FMat> el_generators(const FiniteRing& R, std::size_t d) {
    return elementary_generators(R, d, R.q().additive_basis());
}

// ---- structure predicates ---------------------------------------------------------

bool normalizes_vertical(const FiniteRing&, const FMat& g, std::size_t i) {
    for (std::size_t j = 0; j < g.d; ++j)
        if (j != i && g(i, j) != 0) return false;
    return true;
}

bool normalizes_horizontal(const FiniteRing&, const FMat& g, std::size_t i) {
    for (std::size_t j = 0; j < g.d; ++j)
        if (j != i && g(j, i) != 0) return false;
    return true;
}

bool centralizes_elementary(const FiniteRing& R, const FMat& g, std::size_t i, std::size_t j, FiniteRing::Elem x) {
    for (std::size_t k = 0; k < g.d; ++k)
        if (k != i && R.mul(x, g(k, i)) != 0) return false;
    for (std::size_t l = 0; l < g.d; ++l)
        if (l != j && R.mul(x, g(j, l)) != 0) return false;
    return R.mul(x, R.sub(g(i, i), g(j, j))) == 0;
}

bool centralizes_vertical(const FiniteRing& R, const FMat& g, std::size_t i) {
    const auto u = g(0, 0);
    if (R.q().pow(u, static_cast<unsigned>(g.d)) != R.one()) return false;
    for (std::size_t r = 0; r < g.d; ++r)
        for (std::size_t c = 0; c < g.d; ++c) {
            if (r == c && g(r, c) != u) return false;
            if (r != c && c != i && g(r, c) != 0) return false;
        }
    return true;
}

bool commutes(const FiniteRing& R, const FMat& x, const FMat& y) { return multiply(R, x, y) == multiply(R, y, x); }

}  // namespace noether
