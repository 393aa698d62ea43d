#include "noether/dual.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

namespace noether {

FiniteModel::FiniteModel(std::shared_ptr<const QuotientContext> q, std::size_t d) : ring_(std::move(q)), d_(d) {
    const auto& qc = ring_.q();
    const std::size_t n = qc.size();
    double total = std::pow(static_cast<double>(n), static_cast<double>(d));
    if (total > static_cast<double>(limits().max_model_size))
        throw ResourceLimitError("finite model: |Q|^d exceeds the model cap");
    size_ = 1;
    for (std::size_t p = 0; p < d; ++p) size_ *= n;
    for (const auto& m : qc.invariant_factors()) factors_.push_back(m.get_ui());
    r_ = factors_.size();
    for (auto m : factors_) modulus_ = std::lcm(modulus_, m);
    for (auto m : factors_) scale_.push_back(modulus_ / m);
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<unsigned long> c;
        for (const auto& x : qc.coordinates(static_cast<Elem>(a))) c.push_back(x.get_ui());
        from_coords_.emplace(c, static_cast<Elem>(a));
        qc_.push_back(std::move(c));
    }
    qpair_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            unsigned long s = 0;
            for (std::size_t k = 0; k < r_; ++k) s = (s + qc_[a][k] * qc_[b][k] % modulus_ * scale_[k]) % modulus_;
            qpair_[a * n + b] = s;
        }
    gens_ = el_generators(ring_, d);
    for (const auto& g : gens_) {
        perms_.push_back(permutation(g));
        dual_perms_.push_back(dual_permutation(g));
    }
}

std::vector<BigInt> FiniteModel::invariant_factors() const {
    std::vector<BigInt> out;
    for (std::size_t p = 0; p < d_; ++p)
        for (auto m : factors_) out.emplace_back(m);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FiniteModel::Elem> FiniteModel::vector_of(std::size_t idx) const {
    const std::size_t n = q().size();
    std::vector<Elem> v(d_);
    for (std::size_t p = 0; p < d_; ++p) {
        v[p] = static_cast<Elem>(idx % n);
        idx /= n;
    }
    return v;
}

std::size_t FiniteModel::index_of(const std::vector<Elem>& v) const {
    const std::size_t n = q().size();
    std::size_t idx = 0;
    for (std::size_t p = d_; p-- > 0;) idx = idx * n + v[p];
    return idx;
}

std::size_t FiniteModel::add(std::size_t a, std::size_t b) const {
    auto va = vector_of(a), vb = vector_of(b);
    for (std::size_t p = 0; p < d_; ++p) va[p] = ring_.add(va[p], vb[p]);
    return index_of(va);
}

std::size_t FiniteModel::neg(std::size_t a) const {
    auto va = vector_of(a);
    for (auto& x : va) x = ring_.neg(x);
    return index_of(va);
}

std::vector<unsigned long> FiniteModel::exponents(std::size_t chi) const {
    std::vector<unsigned long> out;
    for (Elem e : vector_of(chi)) out.insert(out.end(), qc_[e].begin(), qc_[e].end());
    return out;
}

std::size_t FiniteModel::character_from_exponents(const std::vector<unsigned long>& e) const {
    if (e.size() != d_ * r_) throw std::invalid_argument("character exponents have the wrong length");
    std::vector<Elem> v(d_);
    for (std::size_t p = 0; p < d_; ++p) {
        std::vector<unsigned long> c(e.begin() + static_cast<long>(p * r_), e.begin() + static_cast<long>((p + 1) * r_));
        for (std::size_t k = 0; k < r_; ++k) c[k] %= factors_[k];
        v[p] = from_coords_.at(c);
    }
    return index_of(v);
}

std::string FiniteModel::character_string(std::size_t chi) const {
    std::ostringstream os;
    os << '(';
    auto e = exponents(chi);
    for (std::size_t k = 0; k < e.size(); ++k) os << (k ? "," : "") << e[k];
    os << ')';
    return os.str();
}

unsigned long FiniteModel::pairing(std::size_t chi, std::size_t gamma) const {
    const std::size_t n = q().size();
    unsigned long s = 0;
    for (std::size_t p = 0; p < d_; ++p) {
        s = (s + qpair_[(chi % n) * n + gamma % n]) % modulus_;
        chi /= n;
        gamma /= n;
    }
    return s;
}

std::size_t FiniteModel::act(const FMat& g, std::size_t gamma) const {
    auto v = vector_of(gamma);
    std::vector<Elem> w(d_, 0);
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j < d_; ++j) w[i] = ring_.add(w[i], ring_.mul(g(i, j), v[j]));
    return index_of(w);
}

std::vector<std::size_t> FiniteModel::additive_generators() const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < d_; ++p)
        for (Elem b : q().additive_basis()) {
            std::vector<Elem> v(d_, 0);
            v[p] = b;
            out.push_back(index_of(v));
        }
    return out;
}

std::size_t FiniteModel::dual_act(const FMat& g, std::size_t chi) const {
    const FMat ginv = inverse_sl(ring_, g);
    const auto gens = additive_generators();
    std::vector<unsigned long> e(d_ * r_);
    for (std::size_t p = 0; p < d_; ++p)
        for (std::size_t k = 0; k < r_; ++k) {
            unsigned long val = pairing(chi, act(ginv, gens[p * r_ + k]));
            if (val % scale_[k] != 0) throw std::logic_error("dual action: pairing value has the wrong order");
            e[p * r_ + k] = val / scale_[k];
        }
    return character_from_exponents(e);
}

std::vector<std::size_t> FiniteModel::dual_permutation(const FMat& g) const {
    const FMat ginv = inverse_sl(ring_, g);
    const auto gens = additive_generators();
    std::vector<std::size_t> images;
    for (auto e : gens) images.push_back(act(ginv, e));
    std::vector<std::size_t> perm(size_);
    std::vector<unsigned long> e(d_ * r_);
    for (std::size_t chi = 0; chi < size_; ++chi) {
        for (std::size_t p = 0; p < d_; ++p)
            for (std::size_t k = 0; k < r_; ++k) e[p * r_ + k] = pairing(chi, images[p * r_ + k]) / scale_[k];
        perm[chi] = character_from_exponents(e);
    }
    return perm;
}

std::vector<std::size_t> FiniteModel::permutation(const FMat& g) const {
    std::vector<std::size_t> perm(size_);
    for (std::size_t x = 0; x < size_; ++x) perm[x] = act(g, x);
    return perm;
}

std::vector<std::size_t> FiniteModel::ideal_power(const std::vector<Elem>& ideal) const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < size_; ++x) {
        auto v = vector_of(x);
        if (std::all_of(v.begin(), v.end(), [&](Elem e) { return std::binary_search(ideal.begin(), ideal.end(), e); }))
            out.push_back(x);
    }
    return out;
}

std::vector<std::size_t> FiniteModel::annihilator_in_dual(const std::vector<std::size_t>& subgroup) const {
    std::vector<std::size_t> out;
    for (std::size_t chi = 0; chi < size_; ++chi)
        if (std::all_of(subgroup.begin(), subgroup.end(), [&](std::size_t g) { return pairing(chi, g) == 0; }))
            out.push_back(chi);
    return out;
}

std::vector<std::size_t> FiniteModel::annihilator_in_group(const std::vector<std::size_t>& characters) const {
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < size_; ++g)
        if (std::all_of(characters.begin(), characters.end(), [&](std::size_t c) { return pairing(c, g) == 0; }))
            out.push_back(g);
    return out;
}

std::vector<std::size_t> orbit(std::size_t x, const std::vector<std::vector<std::size_t>>& perms) {
    std::set<std::size_t> seen{x};
    std::vector<std::size_t> queue{x};
    for (std::size_t k = 0; k < queue.size(); ++k)
        for (const auto& p : perms)
            if (seen.insert(p[queue[k]]).second) queue.push_back(p[queue[k]]);
    return {seen.begin(), seen.end()};
}

std::vector<std::vector<std::size_t>> orbits(std::size_t n, const std::vector<std::vector<std::size_t>>& perms) {
    std::vector<char> done(n, 0);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t x = 0; x < n; ++x) {
        if (done[x]) continue;
        auto o = orbit(x, perms);
        for (auto y : o) done[y] = 1;
        out.push_back(std::move(o));
    }
    return out;
}

std::vector<std::size_t> subgroup_closure(const FiniteModel& m, const std::vector<std::size_t>& gens) {
    std::set<std::size_t> seen{0};
    std::vector<std::size_t> queue{0};
    for (std::size_t k = 0; k < queue.size(); ++k)
        for (auto g : gens) {
            auto s = m.add(queue[k], g);
            if (seen.insert(s).second) queue.push_back(s);
        }
    return {seen.begin(), seen.end()};
}

namespace {

std::vector<std::size_t> invariant_closure(const FiniteModel& m, std::vector<std::size_t> gens) {
    auto cur = subgroup_closure(m, gens);
    while (true) {
        std::vector<std::size_t> ext = cur;
        for (const auto& p : m.generator_perms())
            for (auto x : cur) ext.push_back(p[x]);
        auto next = subgroup_closure(m, ext);
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

template <class Close>
std::vector<std::vector<std::size_t>> enumerate_lattice(const FiniteModel& m, Close close) {
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> frontier{close(std::vector<std::size_t>{})};
    seen.insert(frontier.front());
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        const auto cur = frontier[i];
        for (std::size_t x = 0; x < m.size(); ++x) {
            if (std::binary_search(cur.begin(), cur.end(), x)) continue;
            auto gens = cur;
            gens.push_back(x);
            auto next = close(gens);
            if (seen.insert(next).second) frontier.push_back(std::move(next));
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<std::vector<std::size_t>> all_subgroups(const FiniteModel& m) {
    return enumerate_lattice(m, [&](const std::vector<std::size_t>& g) { return subgroup_closure(m, g); });
}

std::vector<std::vector<std::size_t>> all_invariant_subgroups(const FiniteModel& m) {
    return enumerate_lattice(m, [&](const std::vector<std::size_t>& g) { return invariant_closure(m, g); });
}

InvariantSubgroupCheck invariant_subgroup_check(const FiniteModel& m, const std::vector<std::size_t>& subgroup) {
    InvariantSubgroupCheck out;
    std::vector<FiniteModel::Elem> coords;
    for (auto x : subgroup)
        for (auto e : m.vector_of(x)) coords.push_back(e);
    out.ideal = m.q().ideal_closure(coords);
    std::vector<std::size_t> sorted = subgroup;
    std::sort(sorted.begin(), sorted.end());
    out.equals_ideal_power = sorted == m.ideal_power(out.ideal);
    out.el_invariant = true;
    for (const auto& p : m.generator_perms())
        for (auto x : sorted)
            if (!std::binary_search(sorted.begin(), sorted.end(), p[x])) out.el_invariant = false;
    return out;
}

Measure uniform(const std::vector<std::size_t>& support) {
    Measure mu;
    const mpq_class w(1, static_cast<unsigned long>(support.size()));
    for (auto x : support) mu.mass[x] = w;
    return mu;
}

Measure point_mass(std::size_t chi) { return uniform({chi}); }

Measure haar(const std::vector<std::size_t>& subgroup) { return uniform(subgroup); }

Measure translate(const FiniteModel& m, const Measure& mu, std::size_t t) {
    Measure out;
    for (const auto& [x, w] : mu.mass) out.mass[m.add(x, t)] += w;
    return out;
}

Measure push_forward(const std::vector<std::size_t>& perm, const Measure& mu) {
    Measure out;
    for (const auto& [x, w] : mu.mass) out.mass[perm[x]] += w;
    return out;
}

Measure convolve(const FiniteModel& m, const Measure& a, const Measure& b) {
    Measure out;
    for (const auto& [x, wx] : a.mass)
        for (const auto& [y, wy] : b.mass) out.mass[m.add(x, y)] += wx * wy;
    std::erase_if(out.mass, [](const auto& kv) { return kv.second == 0; });
    return out;
}

bool has_atoms(const Measure& mu) {
    return std::any_of(mu.mass.begin(), mu.mass.end(), [](const auto& kv) { return kv.second > 0; });
}

std::complex<double> character_value(const FiniteModel& m, std::size_t chi, std::size_t gamma) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(m.pairing(chi, gamma)) /
                         static_cast<double>(m.modulus());
    return std::polar(1.0, angle);
}

std::complex<double> fourier(const FiniteModel& m, const Measure& mu, std::size_t gamma) {
    std::complex<double> s = 0;
    for (const auto& [chi, w] : mu.mass) s += w.get_d() * character_value(m, chi, gamma);
    return s;
}

Classification classify_measures(const FiniteModel& m) {
    Classification out;
    const auto& dperms = m.dual_generator_perms();
    out.dual_orbits = orbits(m.size(), dperms);
    std::vector<std::size_t> orbit_of(m.size());
    for (std::size_t k = 0; k < out.dual_orbits.size(); ++k)
        for (auto x : out.dual_orbits[k]) orbit_of[x] = k;
    for (const auto& o : out.dual_orbits) out.orbit_measures.push_back(uniform(o));

    for (const auto& ideal : m.q().all_ideals()) {
        const auto delta = m.ideal_power(ideal);
        const auto k_ann = m.annihilator_in_dual(delta);
        // Coset representative: smallest element of chi + K.
        std::vector<std::size_t> rep(m.size());
        for (std::size_t chi = 0; chi < m.size(); ++chi) {
            std::size_t best = chi;
            for (auto k : k_ann) best = std::min(best, m.add(chi, k));
            rep[chi] = best;
        }
        std::vector<std::size_t> reps;
        for (std::size_t chi = 0; chi < m.size(); ++chi)
            if (rep[chi] == chi) reps.push_back(chi);
        std::vector<std::vector<std::size_t>> coset_perms;
        for (const auto& p : dperms) {
            std::vector<std::size_t> cp(m.size());
            for (auto r : reps) cp[r] = rep[p[r]];
            coset_perms.push_back(std::move(cp));
        }
        std::set<std::size_t> done;
        for (auto r : reps) {
            if (done.count(r)) continue;
            auto omega = orbit(r, coset_perms);
            done.insert(omega.begin(), omega.end());
            ParametricMeasure pm;
            pm.ideal = ideal;
            pm.orbit_cosets = omega;
            std::vector<std::size_t> support;
            for (auto t : omega)
                for (auto k : k_ann) support.push_back(m.add(t, k));
            std::sort(support.begin(), support.end());
            pm.explicit_measure = uniform(support);
            pm.depth = ideal.size() == m.q().size();
            const std::size_t o0 = orbit_of[support.front()];
            pm.ergodic = std::all_of(support.begin(), support.end(), [&](std::size_t x) { return orbit_of[x] == o0; });
            pm.invariant = std::all_of(dperms.begin(), dperms.end(), [&](const auto& p) {
                return push_forward(p, pm.explicit_measure) == pm.explicit_measure;
            });
            for (std::size_t j = 0; j < out.parametric.size(); ++j)
                if (out.parametric[j].explicit_measure == pm.explicit_measure) {
                    pm.duplicate_of = j;
                    break;
                }
            out.parametric.push_back(std::move(pm));
        }
    }

    std::vector<const Measure*> ergodic;
    out.all_invariant = true;
    for (const auto& pm : out.parametric) {
        out.all_invariant = out.all_invariant && pm.invariant;
        if (pm.duplicate_of) {
            ++out.collisions;
            continue;
        }
        ++out.distinct_parametric;
        if (pm.ergodic) ergodic.push_back(&pm.explicit_measure);
    }
    out.distinct_ergodic = ergodic.size();
    bool every_orbit_found = std::all_of(out.orbit_measures.begin(), out.orbit_measures.end(), [&](const Measure& mu) {
        return std::any_of(ergodic.begin(), ergodic.end(), [&](const Measure* e) { return *e == mu; });
    });
    bool every_ergodic_is_orbit = std::all_of(ergodic.begin(), ergodic.end(), [&](const Measure* e) {
        return std::any_of(out.orbit_measures.begin(), out.orbit_measures.end(),
                           [&](const Measure& mu) { return *e == mu; });
    });
    out.bijection = every_orbit_found && every_ergodic_is_orbit && ergodic.size() == out.orbit_measures.size();
    return out;
}

}  // namespace noether
