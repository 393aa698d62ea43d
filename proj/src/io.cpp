#include "noether/io.hpp"

#include <cmath>
#include <fstream>

namespace noether {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

namespace {

std::vector<std::string> string_list(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (e.is_string()) out.push_back(e.get<std::string>());
        else if (e.is_number_integer()) out.push_back(std::to_string(e.get<long long>()));
        else throw ParseError(std::string(what) + " entries must be strings");
    }
    return out;
}

std::vector<std::string> polys_to_strings(const std::vector<Polynomial>& ps, const RingPresentation& r) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(to_string(p, r.variable_names()));
    return out;
}

}  // namespace

RingPresentation ring_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("ring must be an object");
    const std::size_t k = j.value("vars", 0);
    std::vector<std::string> names;
    if (j.contains("names")) names = string_list(j["names"], "names");
    if (!names.empty() && names.size() != k) throw ParseError("names must list one name per variable");
    RingPresentation r = RingPresentation::polynomial_ring(k, names);
    if (j.contains("relations"))
        for (const auto& s : string_list(j["relations"], "relations")) r.relations.push_back(r.parse(s));
    return r;
}

Json ring_to_json(const RingPresentation& r) {
    Json out;
    out["vars"] = r.nvars;
    out["names"] = r.variable_names();
    out["relations"] = polys_to_strings(r.relations, r);
    return out;
}

Ideal ideal_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("generators"))
        throw ParseError("ideal document needs \"ring\" and \"generators\"");
    RingPresentation r = ring_from_json(j["ring"]);
    try {
        return Ideal::parse(r, string_list(j["generators"], "generators"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Json ideal_to_json(const Ideal& i) {
    Json out;
    out["ring"] = ring_to_json(i.ring());
    out["generators"] = polys_to_strings(i.minimal_generators(), i.ring());
    return out;
}

Json verdict_to_json(const FinitenessVerdict& v) {
    Json out;
    out["status"] = to_string(v.status);
    out["integer_part"] = v.integer_part.get_str();
    if (v.status == FiniteStatus::Finite) {
        out["cardinality"] = v.cardinality.get_str();
        Json w = Json::array();
        for (auto [n, m] : v.witnesses) w.push_back(Json::array({n, m}));
        out["power_witnesses"] = w;
    } else {
        out["reason"] = v.integer_part == 0 ? "trivial integer part" : "prime " + v.bad_prime.get_str();
    }
    return out;
}

Json depth_to_json(const DepthResult& r) {
    Json out;
    out["depth"] = r.depth.to_string();
    out["status"] = to_string(r.status);
    out["added"] = polys_to_strings(r.added, r.depth.ring());
    return out;
}

Json matrix_to_json(const FiniteRing& R, const FMat& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.d; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.d; ++j) row.push_back(R.str(m(i, j)));
        out.push_back(row);
    }
    return out;
}

Json matrix_to_json(const ZMat& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.d; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.d; ++j) row.push_back(m(i, j).get_str());
        out.push_back(row);
    }
    return out;
}

ZMat zmatrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
    ZMat m{j.size(), {}};
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != m.d) throw ParseError("matrix must be square");
        for (const auto& e : row) {
            if (e.is_number_integer()) m.a.emplace_back(std::to_string(e.get<long long>()));
            else if (e.is_string()) {
                BigInt v;
                if (v.set_str(e.get<std::string>(), 10) != 0) throw ParseError("bad integer entry");
                m.a.push_back(v);
            } else throw ParseError("matrix entries must be integers");
        }
    }
    return m;
}

Json complex_to_json(const Complex& z) {
    // Rounded so that reports do not depend on the last bits of the eigensolver.
    auto r = [](double x) {
        double v = std::round(x * 1e9) / 1e9;
        return v == 0 ? 0.0 : v;
    };
    return Json::array({r(z.real()), r(z.imag())});
}

Json class_function_to_json(const ClassFunction& f) {
    Json out = Json::array();
    for (const auto& v : f.values) out.push_back(complex_to_json(v));
    return out;
}

ClassFunction class_function_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("class function must be an array");
    ClassFunction f;
    for (const auto& v : j) {
        if (v.is_number()) f.values.emplace_back(v.get<double>(), 0.0);
        else if (v.is_array() && v.size() == 2) f.values.emplace_back(v[0].get<double>(), v[1].get<double>());
        else throw ParseError("class values must be numbers or [re, im] pairs");
    }
    return f;
}

Json measure_to_json(const FiniteModel& m, const Measure& mu) {
    Json out = Json::array();
    for (const auto& [chi, w] : mu.mass) out.push_back(Json::array({m.character_string(chi), w.get_str()}));
    return out;
}

Json classification_to_json(const FiniteModel& m, const Classification& c) {
    Json out;
    out["invariant_factors"] = Json::array();
    for (const auto& f : m.invariant_factors()) out["invariant_factors"].push_back(f.get_str());
    out["dual_size"] = m.size();
    Json orbits = Json::array();
    for (std::size_t k = 0; k < c.dual_orbits.size(); ++k) {
        Json o;
        o["size"] = c.dual_orbits[k].size();
        o["representative"] = m.character_string(c.dual_orbits[k].front());
        orbits.push_back(o);
    }
    out["ergodic_measures"] = orbits;
    Json params = Json::array();
    for (const auto& p : c.parametric) {
        Json e;
        Json ideal = Json::array();
        for (auto x : p.ideal) ideal.push_back(m.q().to_string(x));
        e["ideal"] = ideal;
        Json cosets = Json::array();
        for (auto t : p.orbit_cosets) cosets.push_back(m.character_string(t));
        e["orbit_cosets"] = cosets;
        e["support_size"] = p.explicit_measure.mass.size();
        e["depth_parameter"] = p.depth;
        e["ergodic"] = p.ergodic;
        e["invariant"] = p.invariant;
        if (p.duplicate_of) e["duplicate_of"] = *p.duplicate_of;
        else e["duplicate_of"] = nullptr;
        params.push_back(e);
    }
    out["parametric"] = params;
    out["distinct_parametric"] = c.distinct_parametric;
    out["distinct_ergodic"] = c.distinct_ergodic;
    out["collisions"] = c.collisions;
    out["bijection"] = c.bijection;
    out["all_invariant"] = c.all_invariant;
    return out;
}

LoadedTriple triple_from_json(const Json& j, std::uint64_t seed) {
    for (const char* key : {"ring", "level", "kernel", "orbit"})
        if (!j.contains(key)) throw ParseError(std::string("triple document needs \"") + key + "\"");
    LoadedTriple out;
    auto& t = out.triple;
    t.ring = ring_from_json(j["ring"]);
    t.d = j.value("d", 3);
    if (t.d < 2 || t.d > 6) throw ParseError("d must lie in [2, 6]");
    t.level = Ideal::parse(t.ring, string_list(j["level"], "level"));
    t.kernel = Ideal::parse(t.ring, string_list(j["kernel"], "kernel"));
    out.model = build_triple_model(t, seed);
    const Json& o = j["orbit"];
    if (o.contains("degree")) {
        t.orbit = orbit_by_degree(out.model, o["degree"].get<long>());
        if (t.orbit.empty()) throw ParseError("no irreducible character of the requested degree");
    } else if (o.contains("characters")) {
        for (const auto& c : o["characters"]) t.orbit.push_back(class_function_from_json(c));
        const std::size_t r = out.model.a.group->classes().size();
        for (const auto& c : t.orbit)
            if (c.values.size() != r) throw ParseError("character length does not match the class count");
    } else {
        throw ParseError("orbit needs \"degree\" or \"characters\"");
    }
    return out;
}

Json triple_to_json(const CharacterTriple& t, const TripleModel& model) {
    Json out;
    out["ring"] = ring_to_json(t.ring);
    out["d"] = t.d;
    out["level"] = polys_to_strings(t.level.minimal_generators(), t.ring);
    out["kernel"] = polys_to_strings(t.kernel.minimal_generators(), t.ring);
    const auto& grp = *model.a.group;
    Json reps = Json::array();
    for (const auto& cls : grp.classes()) {
        Json c;
        c["size"] = cls.size();
        c["representative"] = matrix_to_json(grp.ring(), grp.representative(cls[0]));
        reps.push_back(c);
    }
    out["classes"] = reps;
    Json chars = Json::array();
    for (const auto& c : t.orbit) chars.push_back(class_function_to_json(c));
    out["orbit"] = Json{{"characters", chars}};
    return out;
}

}  // namespace noether
