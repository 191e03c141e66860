#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "colhur/algebra.hpp"
#include "colhur/coloring.hpp"
#include "colhur/necklace.hpp"
#include "colhur/surface.hpp"

namespace colhur {

using Json = nlohmann::ordered_json;

/// Array of arrays of color indices.
Json neckMessToJson(const NeckMess& mess);
NeckMess neckMessFromJson(const Json& json);

Json coloringToJson(const Coloring& coloring);

/// [{mess, autOrder, size, factorialOverAut, normalizationsDiffer, representative}]
Json classesJson(const Coloring& coloring, const Limits& limits = {});

/// [{orbitKey: {u, v}, autOrder, orbitSize, genusProfile, components}]
Json surfacesJson(const Coloring& coloring, std::span<const SurfaceClass> classes);

/// {coloring, classes, constants: [{mu, lambda, terms: [{nu, c}]}]}; zero terms omitted.
Json tableJson(const StructureTable& table);
/// Header "mu,lambda,nu,c" followed by the nonzero constants.
std::string tableCsv(const StructureTable& table);

/// Rationals print as integers when integral, else "p/q".
Json rationalToJson(const Rational& value);

}  // namespace colhur
