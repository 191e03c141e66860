#include "colhur/serialize.hpp"

#include <sstream>

#include "colhur/classes.hpp"
#include "colhur/errors.hpp"

namespace colhur {

Json neckMessToJson(const NeckMess& mess) {
  Json out = Json::array();
  for (const Necklace& p : mess.necklaces()) out.push_back(std::vector<Color>(p.word().begin(), p.word().end()));
  return out;
}

NeckMess neckMessFromJson(const Json& json) {
  if (!json.is_array()) throw ValidationError("neck mess JSON must be an array of arrays");
  std::vector<std::vector<Color>> words;
  for (const Json& word : json) {
    if (!word.is_array() || word.empty()) throw ValidationError("each necklace must be a nonempty array");
    std::vector<Color> colors;
    for (const Json& c : word) {
      if (!c.is_number_unsigned()) throw ValidationError("colors must be nonnegative integers");
      colors.push_back(c.get<Color>());
    }
    words.push_back(std::move(colors));
  }
  if (words.empty()) throw ValidationError("neck mess must contain a necklace");
  return makeNeckMess(words);
}

Json coloringToJson(const Coloring& coloring) {
  Json out;
  out["letters"] = coloring.letters();
  out["multiplicities"] = std::vector<std::size_t>(coloring.multiplicities().begin(), coloring.multiplicities().end());
  return out;
}

Json classesJson(const Coloring& coloring, const Limits& limits) {
  Json out = Json::array();
  for (const NeckMess& theta : enumerateNeckMesses(coloring.multiplicities(), limits)) {
    Json entry;
    entry["mess"] = formatNeckMess(theta);
    entry["autOrder"] = neckMessAutOrder(theta);
    entry["size"] = classSize(theta, coloring);
    entry["factorialOverAut"] = factorialOverAut(theta, coloring);
    entry["normalizationsDiffer"] = classSize(theta, coloring) != factorialOverAut(theta, coloring);
    entry["representative"] = formatCycles(classRepresentative(theta, coloring));
    out.push_back(std::move(entry));
  }
  return out;
}

Json surfacesJson(const Coloring& coloring, std::span<const SurfaceClass> classes) {
  Json out = Json::array();
  for (const SurfaceClass& cls : classes) {
    Json entry;
    entry["orbitKey"] = {{"u", formatCycles(cls.orbitKey.first)}, {"v", formatCycles(cls.orbitKey.second)}};
    entry["autOrder"] = cls.autOrder;
    entry["orbitSize"] = cls.orbitSize;
    const auto components = componentProfile(buildSurface(cls.orbitKey.first, cls.orbitKey.second, coloring));
    Json genera = Json::array();
    Json parts = Json::array();
    for (const ComponentProfile& p : components) {
      genera.push_back(p.genus);
      parts.push_back({{"chambers", p.chambers},
                       {"V", p.vertices},
                       {"E", p.edges},
                       {"F", p.faces},
                       {"euler", p.euler},
                       {"genus", p.genus}});
    }
    entry["genusProfile"] = std::move(genera);
    entry["components"] = std::move(parts);
    out.push_back(std::move(entry));
  }
  return out;
}

Json tableJson(const StructureTable& table) {
  Json out;
  out["coloring"] = coloringToJson(table.coloring());
  Json classes = Json::array();
  for (const NeckMess& theta : table.classes()) classes.push_back(formatNeckMess(theta));
  out["classes"] = std::move(classes);
  Json constants = Json::array();
  const std::size_t k = table.classCount();
  for (std::size_t mu = 0; mu < k; ++mu) {
    for (std::size_t lambda = 0; lambda < k; ++lambda) {
      Json terms = Json::array();
      for (std::size_t nu = 0; nu < k; ++nu) {
        if (auto c = table.at(mu, lambda, nu)) terms.push_back({{"nu", formatNeckMess(table.classes()[nu])}, {"c", c}});
      }
      constants.push_back({{"mu", formatNeckMess(table.classes()[mu])},
                           {"lambda", formatNeckMess(table.classes()[lambda])},
                           {"terms", std::move(terms)}});
    }
  }
  out["constants"] = std::move(constants);
  return out;
}

std::string tableCsv(const StructureTable& table) {
  std::ostringstream out;
  out << "mu,lambda,nu,c\n";
  const std::size_t k = table.classCount();
  for (std::size_t mu = 0; mu < k; ++mu) {
    for (std::size_t lambda = 0; lambda < k; ++lambda) {
      for (std::size_t nu = 0; nu < k; ++nu) {
        if (auto c = table.at(mu, lambda, nu)) {
          out << formatNeckMess(table.classes()[mu]) << ',' << formatNeckMess(table.classes()[lambda]) << ','
              << formatNeckMess(table.classes()[nu]) << ',' << c << '\n';
        }
      }
    }
  }
  return out.str();
}

Json rationalToJson(const Rational& value) {
  if (denominator(value) == 1) {
    const auto num = numerator(value);
    if (num >= 0 && num <= std::numeric_limits<std::uint64_t>::max()) return num.convert_to<std::uint64_t>();
  }
  return value.str();
}

}  // namespace colhur
