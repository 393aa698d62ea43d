#include "noether/characters.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "noether/limits.hpp"

namespace noether {

namespace {

constexpr std::uint32_t kUnassigned = 0xffffffffu;

bool complex_less(const Complex& a, const Complex& b) {
    constexpr double eps = 1e-6;
    if (std::abs(a.real() - b.real()) > eps) return a.real() < b.real();
    if (std::abs(a.imag() - b.imag()) > eps) return a.imag() < b.imag();
    return false;
}

}  // namespace

// ---- FiniteGroup -----------------------------------------------------------------

FiniteGroup::FiniteGroup(FiniteRing ring, std::size_t d, const MatrixSet& g, const std::vector<FMat>& generators,
                         const MatrixSet* normal)
    : ring_(std::move(ring)), d_(d), all_(g), gens_(generators) {
    all_.canonicalize();
    if (gens_.empty()) gens_ = greedy_generators(ring_, d_, all_);
    coset_.assign(all_.size(), kUnassigned);
    for (std::size_t k = 0; k < all_.size(); ++k) {
        if (coset_[k] != kUnassigned) continue;
        const auto c = static_cast<std::uint32_t>(reps_.size());
        reps_.push_back(all_[k]);
        if (normal == nullptr) {
            coset_[k] = c;
            continue;
        }
        for (const auto& n : normal->elements()) {
            auto pos = all_.find(noether::multiply(ring_, all_[k], n));
            if (!pos) throw PreconditionError("normal subgroup is not contained in the group");
            coset_[*pos] = c;
        }
    }
    auto id = index_of(noether::identity(ring_, d_));
    if (!id) throw PreconditionError("group does not contain the identity");
    identity_ = *id;
    compute_classes();
}

std::optional<std::size_t> FiniteGroup::index_of(const FMat& m) const {
    auto pos = all_.find(m);
    if (!pos) return std::nullopt;
    return coset_[*pos];
}

std::size_t FiniteGroup::multiply(std::size_t a, std::size_t b) const {
    return *index_of(noether::multiply(ring_, reps_[a], reps_[b]));
}

std::size_t FiniteGroup::inverse(std::size_t a) const { return *index_of(inverse_sl(ring_, reps_[a])); }

std::optional<std::size_t> FiniteGroup::class_of_matrix(const FMat& m) const {
    auto k = index_of(m);
    if (!k) return std::nullopt;
    return class_of_[*k];
}

void FiniteGroup::compute_classes() {
    const std::size_t n = order();
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    class_of_.assign(n, none);
    std::vector<std::size_t> gen_idx, gen_inv;
    for (const auto& s : gens_) {
        auto k = index_of(s);
        if (!k) throw PreconditionError("generator outside the group");
        gen_idx.push_back(*k);
        gen_inv.push_back(inverse(*k));
    }
    auto grow = [&](std::size_t start) {
        const std::size_t c = classes_.size();
        classes_.emplace_back();
        std::deque<std::size_t> queue{start};
        class_of_[start] = c;
        while (!queue.empty()) {
            std::size_t x = queue.front();
            queue.pop_front();
            classes_[c].push_back(x);
            for (std::size_t s = 0; s < gen_idx.size(); ++s) {
                std::size_t y = multiply(multiply(gen_idx[s], x), gen_inv[s]);
                if (class_of_[y] == none) {
                    class_of_[y] = c;
                    queue.push_back(y);
                }
            }
        }
        std::sort(classes_[c].begin(), classes_[c].end());
    };
    grow(identity_);
    for (std::size_t k = 0; k < n; ++k)
        if (class_of_[k] == none) grow(k);
}

std::vector<FMat> greedy_generators(const FiniteRing& R, std::size_t d, const MatrixSet& group) {
    std::vector<FMat> gens;
    MatrixSet current = generate_subgroup(R, d, gens);
    for (const auto& g : group.elements()) {
        if (current.size() == group.size()) break;
        if (current.contains(g)) continue;
        gens.push_back(g);
        current = generate_subgroup(R, d, gens);
    }
    return gens;
}

// ---- characters ------------------------------------------------------------------

long degree_of(const ClassFunction& chi) { return std::lround(chi.values.at(0).real()); }

Complex inner_product(const FiniteGroup& g, const ClassFunction& a, const ClassFunction& b) {
    Complex s = 0;
    for (std::size_t k = 0; k < g.classes().size(); ++k)
        s += static_cast<double>(g.classes()[k].size()) * a[k] * std::conj(b[k]);
    return s / static_cast<double>(g.order());
}

std::vector<ClassFunction> irreducible_characters(const FiniteGroup& g, std::uint64_t seed) {
    const auto& classes = g.classes();
    const std::size_t r = classes.size();
    const std::size_t n = g.order();
    std::vector<std::size_t> inv(n);
    for (std::size_t x = 0; x < n; ++x) inv[x] = g.inverse(x);

    // a[j](k, l) = #{x in C_j : x^-1 z_l in C_k} for a fixed z_l in C_l.
    std::vector<Eigen::MatrixXd> a(r, Eigen::MatrixXd::Zero(r, r));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t l = 0; l < r; ++l) {
            const std::size_t z = classes[l][0];
            for (std::size_t x : classes[j]) a[j](g.class_of(g.multiply(inv[x], z)), l) += 1.0;
        }

    std::mt19937_64 rng(seed);
    constexpr int attempts = 64;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(r, r);
        for (std::size_t j = 0; j < r; ++j) m += static_cast<double>(rng() % 1000 + 1) * a[j];
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m.cast<Complex>());
        if (solver.info() != Eigen::Success) continue;
        const auto& lambda = solver.eigenvalues();
        double scale = 1.0;
        for (Eigen::Index i = 0; i < lambda.size(); ++i) scale = std::max(scale, std::abs(lambda(i)));
        bool separated = true;
        for (Eigen::Index i = 0; i < lambda.size() && separated; ++i)
            for (Eigen::Index k = i + 1; k < lambda.size(); ++k)
                if (std::abs(lambda(i) - lambda(k)) < 1e-6 * scale) {
                    separated = false;
                    break;
                }
        if (!separated) continue;

        std::vector<ClassFunction> chars;
        bool ok = true;
        for (std::size_t c = 0; c < r && ok; ++c) {
            Eigen::VectorXcd v = solver.eigenvectors().col(static_cast<Eigen::Index>(c));
            if (std::abs(v(0)) < 1e-12) {
                ok = false;
                break;
            }
            v /= v(0);
            double norm = 0;
            for (std::size_t k = 0; k < r; ++k)
                norm += std::norm(v(static_cast<Eigen::Index>(k))) / static_cast<double>(classes[k].size());
            const double deg = std::round(std::sqrt(static_cast<double>(n) / norm));
            if (deg < 1) {
                ok = false;
                break;
            }
            ClassFunction chi;
            for (std::size_t k = 0; k < r; ++k) {
                Complex value = deg * v(static_cast<Eigen::Index>(k)) / static_cast<double>(classes[k].size());
                if (std::abs(value.real()) < 1e-12) value.real(0);
                if (std::abs(value.imag()) < 1e-12) value.imag(0);
                chi.values.push_back(value);
            }
            chars.push_back(std::move(chi));
        }
        if (!ok) continue;
        std::sort(chars.begin(), chars.end(), [](const ClassFunction& x, const ClassFunction& y) {
            if (degree_of(x) != degree_of(y)) return degree_of(x) < degree_of(y);
            for (std::size_t k = 0; k < x.values.size(); ++k) {
                if (complex_less(x[k], y[k])) return true;
                if (complex_less(y[k], x[k])) return false;
            }
            return false;
        });
        // The trivial character has all values 1 and sorts first among degree 1,
        // except that lexicographic order puts smaller values first; move it.
        auto trivial = std::find_if(chars.begin(), chars.end(), [](const ClassFunction& chi) {
            return std::all_of(chi.values.begin(), chi.values.end(),
                               [](const Complex& z) { return std::abs(z - Complex(1, 0)) < 1e-6; });
        });
        if (trivial != chars.end()) std::rotate(chars.begin(), trivial, trivial + 1);
        return chars;
    }
    throw ResourceLimitError("no separating combination of class matrices found");
}

OrthogonalityReport check_orthogonality(const FiniteGroup& g, const std::vector<ClassFunction>& chars) {
    OrthogonalityReport rep;
    const auto& classes = g.classes();
    const double n = static_cast<double>(g.order());
    for (std::size_t a = 0; a < chars.size(); ++a)
        for (std::size_t b = 0; b < chars.size(); ++b) {
            Complex ip = inner_product(g, chars[a], chars[b]);
            rep.first = std::max(rep.first, std::abs(ip - Complex(a == b ? 1.0 : 0.0, 0)));
        }
    for (std::size_t k = 0; k < classes.size(); ++k)
        for (std::size_t l = 0; l < classes.size(); ++l) {
            Complex s = 0;
            for (const auto& chi : chars) s += chi[k] * std::conj(chi[l]);
            const double expect = k == l ? n / static_cast<double>(classes[k].size()) : 0.0;
            rep.second = std::max(rep.second, std::abs(s - Complex(expect, 0)));
        }
    double sum = 0;
    for (const auto& chi : chars) sum += std::norm(chi[0]);
    rep.degree_sum = std::abs(sum - n);
    return rep;
}

// ---- subquotient ------------------------------------------------------------------

Subquotient subquotient_A(std::shared_ptr<const QuotientContext> q, std::size_t d,
                          const std::vector<FiniteRing::Elem>& level, const std::vector<FiniteRing::Elem>& kernel) {
    Subquotient out;
    out.ring = std::make_shared<FiniteRing>(q);
    out.d = d;
    const FiniteRing& R = *out.ring;
    out.level_ideal = q->ideal_closure(level);
    out.kernel_ideal = q->ideal_closure(kernel);
    for (auto k : out.kernel_ideal)
        if (std::find(out.level_ideal.begin(), out.level_ideal.end(), k) == out.level_ideal.end())
            throw PreconditionError("kernel ideal is not contained in the level ideal");

    out.ambient_generators = el_generators(R, d);
    out.ambient = generate_subgroup(R, d, out.ambient_generators);
    if (out.ambient.size() > limits().max_elements) throw ResourceLimitError("ambient group too large");
    for (const auto& g : out.ambient.elements())
        if (scalar_modulo(R, g, out.level_ideal)) out.level_part.insert(g);
    out.level_part.canonicalize();

    std::vector<FiniteRing::Elem> nonzero;
    for (auto k : out.kernel_ideal)
        if (k != 0) nonzero.push_back(k);
    out.kernel_closure = normal_closure(R, d, elementary_generators(R, d, nonzero), out.ambient_generators);

    out.group = std::make_shared<FiniteGroup>(R, d, out.level_part, greedy_generators(R, d, out.level_part),
                                              &out.kernel_closure);

    std::size_t central = 0;
    for (const auto& g : out.level_part.elements()) {
        bool ok = std::all_of(out.ambient_generators.begin(), out.ambient_generators.end(),
                              [&](const FMat& s) { return out.kernel_closure.contains(commutator(R, g, s)); });
        if (ok) ++central;
    }
    out.center_index = out.level_part.size() / central;
    return out;
}

std::vector<std::size_t> class_permutation(const Subquotient& a, const FMat& s) {
    const FiniteRing& R = *a.ring;
    const FMat s_inv = inverse_sl(R, s);
    const auto& grp = *a.group;
    std::vector<std::size_t> perm;
    for (const auto& cls : grp.classes()) {
        FMat c = multiply(R, multiply(R, s_inv, grp.representative(cls[0])), s);
        auto k = grp.class_of_matrix(c);
        if (!k) throw PreconditionError("subgroup is not normalized by the ambient element");
        perm.push_back(*k);
    }
    return perm;
}

ClassFunction twist(const ClassFunction& chi, const std::vector<std::size_t>& class_perm) {
    ClassFunction out;
    for (std::size_t k = 0; k < class_perm.size(); ++k) out.values.push_back(chi[class_perm[k]]);
    return out;
}

bool same_class_function(const ClassFunction& a, const ClassFunction& b, double tol) {
    if (a.values.size() != b.values.size()) return false;
    for (std::size_t k = 0; k < a.values.size(); ++k)
        if (std::abs(a[k] - b[k]) > tol) return false;
    return true;
}

// ---- triples ---------------------------------------------------------------------

TripleModel build_triple_model(const CharacterTriple& t, std::uint64_t seed) {
    TripleModel m;
    m.q = std::make_shared<QuotientContext>(t.kernel);
    std::vector<FiniteRing::Elem> level;
    for (const auto& g : t.level.generators()) level.push_back(m.q->index_of(g));
    m.a = subquotient_A(m.q, t.d, level, {});
    m.irreducibles = irreducible_characters(*m.a.group, seed);
    return m;
}

std::vector<ClassFunction> ambient_orbit(const TripleModel& model, const ClassFunction& chi) {
    std::vector<std::vector<std::size_t>> perms;
    for (const auto& s : model.a.ambient_generators) perms.push_back(class_permutation(model.a, s));
    std::vector<ClassFunction> orbit{chi};
    for (std::size_t k = 0; k < orbit.size(); ++k)
        for (const auto& p : perms) {
            ClassFunction t = twist(orbit[k], p);
            bool seen = std::any_of(orbit.begin(), orbit.end(),
                                    [&](const ClassFunction& o) { return same_class_function(o, t); });
            if (!seen) orbit.push_back(std::move(t));
        }
    return orbit;
}

std::vector<ClassFunction> orbit_by_degree(const TripleModel& model, long degree) {
    for (const auto& chi : model.irreducibles)
        if (degree_of(chi) == degree) return ambient_orbit(model, chi);
    return {};
}

std::vector<std::size_t> constituents(const TripleModel& model, const ClassFunction& f, double tol) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < model.irreducibles.size(); ++k)
        if (std::abs(inner_product(*model.a.group, f, model.irreducibles[k])) > tol) out.push_back(k);
    return out;
}

TripleReport validate_triple(const CharacterTriple& t, const TripleModel& model) {
    TripleReport rep;
    rep.orbit_size = t.orbit.size();
    DepthResult depth = compute_depth(t.kernel);
    rep.computed_depth = depth.depth.to_string();
    rep.depth_status = to_string(depth.status);
    rep.depth_matches = depth.status == DepthStatus::Certified && ideal_equal(depth.depth, t.level);
    if (t.orbit.empty()) return rep;

    rep.characters_irreducible = std::all_of(t.orbit.begin(), t.orbit.end(), [&](const ClassFunction& psi) {
        return std::any_of(model.irreducibles.begin(), model.irreducibles.end(),
                           [&](const ClassFunction& chi) { return same_class_function(psi, chi); });
    });

    auto contains = [&](const ClassFunction& x) {
        return std::any_of(t.orbit.begin(), t.orbit.end(),
                           [&](const ClassFunction& o) { return same_class_function(o, x); });
    };
    rep.orbit_closed = true;
    for (const auto& s : model.a.ambient_generators) {
        auto perm = class_permutation(model.a, s);
        for (const auto& psi : t.orbit)
            if (!contains(twist(psi, perm))) rep.orbit_closed = false;
    }
    auto full = ambient_orbit(model, t.orbit[0]);
    rep.orbit_single = full.size() == t.orbit.size() && std::all_of(full.begin(), full.end(), contains);

    // The common kernel must lie in the image of SLtil(K), i.e. consist of
    // classes whose elements are scalar modulo K-bar.
    const auto& grp = *model.a.group;
    rep.essential = true;
    for (std::size_t k = 0; k < grp.classes().size(); ++k) {
        bool in_kernel = std::all_of(t.orbit.begin(), t.orbit.end(),
                                     [&](const ClassFunction& psi) { return std::abs(psi[k] - psi[0]) < 1e-6; });
        if (in_kernel && !scalar_modulo(*model.a.ring, grp.representative(grp.classes()[k][0]), model.a.kernel_ideal))
            rep.essential = false;
    }
    return rep;
}

// ---- induced trace ---------------------------------------------------------------

InducedTrace::InducedTrace(CharacterTriple triple, TripleModel model)
    : triple_(std::move(triple)), model_(std::move(model)), poly_(triple_.ring) {
    if (triple_.orbit.empty()) throw PreconditionError("empty character orbit");
    const std::size_t r = model_.a.group->classes().size();
    for (std::size_t k = 0; k < r; ++k) {
        Complex s = 0;
        for (const auto& psi : triple_.orbit) s += psi[k] / psi[0];
        class_values_.push_back(s / static_cast<double>(triple_.orbit.size()));
    }
}

Complex InducedTrace::operator()(const ZMat& g) const { return evaluate(to_poly_matrix(poly_, g), triple_.level); }

Complex InducedTrace::operator()(const PMat& g) const { return evaluate(g, triple_.level); }

Complex InducedTrace::evaluate(const PMat& g, const Ideal& level) const {
    if (g.d != triple_.d) throw DimensionError("matrix dimension does not match the triple");
    if (!level.contains(sltil_level(poly_, g))) return 0;
    FMat m{g.d, {}};
    for (const auto& e : g.a) m.a.push_back(model_.q->index_of(e));
    auto cls = model_.a.group->class_of_matrix(m);
    if (!cls) throw PreconditionError("matrix does not reduce into the finite model");
    return class_values_[*cls];
}

// ---- sampling and checks -----------------------------------------------------------

std::vector<ZMat> integer_ball(std::size_t d, unsigned radius) {
    IntegerRing Z;
    std::vector<ZMat> gens;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (i != j)
                for (long s : {1L, -1L}) gens.push_back(elementary(Z, d, i, j, BigInt(s)));
    auto key = [](const ZMat& m) {
        std::string k;
        for (const auto& e : m.a) k += e.get_str() + ",";
        return k;
    };
    std::vector<ZMat> ball{identity(Z, d)};
    std::unordered_map<std::string, char> seen{{key(ball[0]), 1}};
    std::size_t begin = 0;
    for (unsigned r = 0; r < radius; ++r) {
        const std::size_t end = ball.size();
        for (std::size_t k = begin; k < end; ++k)
            for (const auto& s : gens) {
                ZMat m = multiply(Z, ball[k], s);
                if (seen.emplace(key(m), 1).second) ball.push_back(std::move(m));
            }
        begin = end;
    }
    return ball;
}

double min_hermitian_eigenvalue(const std::vector<std::vector<Complex>>& m) {
    const auto n = static_cast<Eigen::Index>(m.size());
    if (n == 0) return 0;
    Eigen::MatrixXcd h(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) h(i, j) = m[i][j];
    Eigen::MatrixXcd sym = (h + h.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

TraceCheckReport trace_checks(const std::function<Complex(const ZMat&)>& phi, const std::vector<ZMat>& sample,
                              const Ideal& kernel) {
    IntegerRing Z;
    TraceCheckReport rep;
    const std::size_t n = sample.size();
    std::vector<std::vector<Complex>> gram(n, std::vector<Complex>(n)), square(n, std::vector<Complex>(n));
    std::vector<ZMat> inv;
    for (const auto& g : sample) inv.push_back(inverse_sl(Z, g));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex v = phi(multiply(Z, inv[j], sample[i]));
            gram[i][j] = v;
            square[i][j] = std::norm(v);
        }
    rep.gram_min_eigenvalue = min_hermitian_eigenvalue(gram);
    rep.square_gram_min_eigenvalue = min_hermitian_eigenvalue(square);

    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t h = (i + 1) % n;
        ZMat c = multiply(Z, multiply(Z, sample[h], sample[i]), inv[h]);
        Complex a = phi(c), b = phi(sample[i]);
        rep.conjugation_defect = std::max(rep.conjugation_defect, std::abs(a - b));
        rep.square_conjugation_defect = std::max(rep.square_conjugation_defect, std::abs(std::norm(a) - std::norm(b)));
    }
    const std::size_t d = sample.empty() ? 3 : sample[0].d;
    rep.identity_defect = std::abs(phi(identity(Z, d)) - Complex(1, 0));

    std::vector<ZMat> central{identity(Z, d)};
    for (const auto& g : sample)
        if (kernel.contains(sltil_level(g))) central.push_back(g);
    rep.central_samples = central.size();
    for (const auto& z : central) {
        const Complex pz = phi(z);
        for (std::size_t i = 0; i < std::min<std::size_t>(n, 10); ++i)
            rep.schur_defect = std::max(rep.schur_defect, std::abs(phi(multiply(Z, sample[i], z)) - phi(sample[i]) * pz));
    }

    Ideal ker = kernel_level(phi, sample, kernel.ring());
    rep.kernel_ideal = ker.to_string();
    rep.kernel_inside_k = kernel.contains(ker);
    return rep;
}

namespace {

Ideal level_sum(const std::function<bool(const ZMat&)>& keep, const std::vector<ZMat>& elements,
                const RingPresentation& ring) {
    PolyRing P(ring);
    std::vector<Polynomial> gens;
    std::unordered_set<Polynomial> seen;
    for (const auto& g : elements)
        if (keep(g)) {
            const Ideal level = sltil_level(P, to_poly_matrix(P, g));
            for (const auto& f : level.generators())
                if (!f.is_zero() && seen.insert(f).second) gens.push_back(f);
        }
    return Ideal(ring, Ideal(ring, std::move(gens)).minimal_generators());
}

}  // namespace

Ideal kernel_level(const std::function<Complex(const ZMat&)>& phi, const std::vector<ZMat>& elements,
                   const RingPresentation& ring, double tol) {
    return level_sum([&](const ZMat& g) { return std::abs(phi(g) - Complex(1, 0)) < tol; }, elements, ring);
}

Ideal support_level(const std::function<Complex(const ZMat&)>& phi, const std::vector<ZMat>& elements,
                    const RingPresentation& ring, double tol) {
    return level_sum([&](const ZMat& g) { return std::abs(phi(g)) > tol; }, elements, ring);
}

}  // namespace noether
