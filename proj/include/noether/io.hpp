#pragma once

#include <string>

#include <json.hpp>

#include "noether/characters.hpp"
#include "noether/dual.hpp"
#include "noether/finiteness.hpp"
#include "noether/matgroup.hpp"

namespace noether {

using Json = nlohmann::ordered_json;

/// Version stamped into every report.
inline constexpr int kSchemaVersion = 1;

Json read_json_file(const std::string& path);

/// {"vars": k, "names": [...], "relations": [poly...]}; names are optional.
RingPresentation ring_from_json(const Json& j);
Json ring_to_json(const RingPresentation& r);

/// {"ring": {...}, "generators": [poly...]}
Ideal ideal_from_json(const Json& j);
Json ideal_to_json(const Ideal& i);

Json verdict_to_json(const FinitenessVerdict& v);
Json depth_to_json(const DepthResult& r);

Json matrix_to_json(const FiniteRing& R, const FMat& m);
Json matrix_to_json(const ZMat& m);
ZMat zmatrix_from_json(const Json& j);
template <class Ring>
Json word_to_json(const Ring& R, const Word<Ring>& w) {
    Json out = Json::array();
    for (const auto& l : w) out.push_back(Json::array({l.i + 1, l.j + 1, R.str(l.r)}));
    return out;
}

Json complex_to_json(const Complex& z);
Json class_function_to_json(const ClassFunction& f);
ClassFunction class_function_from_json(const Json& j);

Json measure_to_json(const FiniteModel& m, const Measure& mu);
Json classification_to_json(const FiniteModel& m, const Classification& c);

/// A triple document: {"ring", "d", "level", "kernel", "orbit"}, where
/// "level"/"kernel" are generator lists and "orbit" is either
/// {"degree": n} (the ambient orbit of the first irreducible of degree n) or
/// {"characters": [[[re, im], ...], ...]} in the class order of A.
struct LoadedTriple {
    CharacterTriple triple;
    TripleModel model;
};
LoadedTriple triple_from_json(const Json& j, std::uint64_t seed);
Json triple_to_json(const CharacterTriple& t, const TripleModel& model);

}  // namespace noether
