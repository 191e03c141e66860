#include "colhur/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "colhur/classes.hpp"
#include "colhur/errors.hpp"

namespace colhur {

void AlgebraElement::add(const NeckMess& type, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(type, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational AlgebraElement::coefficient(const NeckMess& type) const {
  auto it = terms_.find(type);
  return it == terms_.end() ? Rational(0) : it->second;
}

AlgebraElement convolveClassSums(const NeckMess& mu, const NeckMess& lambda, const Coloring& coloring,
                                 const Limits& limits) {
  requireMatchesColoring(mu, coloring, "mu");
  requireMatchesColoring(lambda, coloring, "lambda");
  if (coloring.degree() > limits.maxScanDegree) {
    throw CapExceeded("convolution supports N <= " + std::to_string(limits.maxScanDegree));
  }
  const std::vector<Permutation> vs = enumerateClass(mu, coloring, limits);
  const std::vector<Permutation> us = enumerateClass(lambda, coloring, limits);
  std::map<std::uint64_t, std::uint64_t> product;
  for (const Permutation& v : vs) {
    for (const Permutation& u : us) ++product[packImages(compose(v, u))];
  }

  // Group the support by type: every member of a touched class must carry
  // the same value, and a touched class must be touched everywhere.
  struct Seen {
    std::uint64_t value;
    std::uint64_t members;
    std::uint64_t witness;
  };
  std::map<NeckMess, Seen> byType;
  const std::size_t n = coloring.degree();
  auto unpack = [n](std::uint64_t key) {
    std::vector<Point> images(n);
    for (std::size_t i = n; i-- > 0; key >>= 4) images[i] = static_cast<Point>(key & 0xF);
    return Permutation(std::move(images));
  };
  for (const auto& [key, value] : product) {
    const Permutation w = unpack(key);
    auto [it, inserted] = byType.try_emplace(coloredCycleType(w, coloring), Seen{value, 0, key});
    if (it->second.value != value) {
      throw VerificationFailure("class-sum product is not constant on class " + formatNeckMess(it->first) + ": " +
                                std::to_string(it->second.value) + " at " + formatCycles(unpack(it->second.witness)) +
                                " vs " + std::to_string(value) + " at " + formatCycles(w));
    }
    ++it->second.members;
  }
  AlgebraElement out;
  for (const auto& [nu, seen] : byType) {
    if (seen.members != classSize(nu, coloring)) {
      throw VerificationFailure("class-sum product vanishes on part of class " + formatNeckMess(nu));
    }
    out.add(nu, Rational(seen.value));
  }
  return out;
}

std::uint64_t structureConstantAt(const NeckMess& lambda, const NeckMess& mu, const Permutation& target,
                                  const Coloring& coloring, const Limits& limits) {
  requireMatchesColoring(mu, coloring, "mu");
  std::uint64_t count = 0;
  for (const Permutation& u : enumerateClass(lambda, coloring, limits)) {
    if (coloredCycleType(compose(target, inverse(u)), coloring) == mu) ++count;
  }
  return count;
}

std::uint64_t structureConstantOracle(const NeckMess& lambda, const NeckMess& mu, const NeckMess& nu,
                                      const Coloring& coloring, const Limits& limits) {
  return structureConstantAt(lambda, mu, classRepresentative(nu, coloring), coloring, limits);
}

Rational hurwitzSum(const NeckMess& nu, std::span<const SurfaceClass> classes) {
  Rational sum = 0;
  for (const SurfaceClass& cls : classes) sum += Rational(1, cls.autOrder);
  return sum * neckMessAutOrder(nu);
}

Rational hurwitzStructureConstant(const NeckMess& lambda, const NeckMess& mu, const NeckMess& nu,
                                  const Coloring& coloring, const Limits& limits) {
  return hurwitzSum(nu, enumerateSurfaceClasses(lambda, mu, nu, coloring, limits));
}

StructureTable::StructureTable(Coloring coloring, std::vector<NeckMess> classes)
    : coloring_(std::move(coloring)), classes_(std::move(classes)) {
  for (std::size_t i = 0; i < classes_.size(); ++i) index_.emplace(classes_[i], i);
  constants_.assign(classes_.size() * classes_.size() * classes_.size(), 0);
}

std::optional<std::size_t> StructureTable::indexOf(const NeckMess& type) const {
  auto it = index_.find(type);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

std::string hurwitzWitness(const StructureTable& table, std::size_t mu, std::size_t lambda, std::size_t nu,
                           std::uint64_t oracle, const Rational& hurwitz, std::span<const SurfaceClass> classes) {
  std::ostringstream out;
  out << "oracle/Hurwitz mismatch for lambda=" << formatNeckMess(table.classes()[lambda])
      << " mu=" << formatNeckMess(table.classes()[mu]) << " nu=" << formatNeckMess(table.classes()[nu])
      << ": oracle " << oracle << ", Hurwitz " << hurwitz << "\n";
  std::uint64_t pairs = 0;
  for (const SurfaceClass& cls : classes) {
    out << "  orbit u=" << formatCycles(cls.orbitKey.first) << " v=" << formatCycles(cls.orbitKey.second)
        << " autOrder=" << cls.autOrder << " orbitSize=" << cls.orbitSize << "\n";
    pairs += cls.orbitSize;
  }
  out << "  pair count " << pairs;
  return out.str();
}

}  // namespace

StructureTable multiplicationTable(const Coloring& coloring, bool verifyHurwitz, const Limits& limits) {
  StructureTable table(coloring, enumerateNeckMesses(coloring.multiplicities(), limits));
  const std::size_t k = table.classCount();
  std::vector<std::vector<Permutation>> members;
  members.reserve(k);
  for (const NeckMess& theta : table.classes()) members.push_back(enumerateClass(theta, coloring, limits));

  for (std::size_t nu = 0; nu < k; ++nu) {
    const Permutation target = classRepresentative(table.classes()[nu], coloring);
    for (std::size_t lambda = 0; lambda < k; ++lambda) {
      for (const Permutation& u : members[lambda]) {
        const NeckMess mu = coloredCycleType(compose(target, inverse(u)), coloring);
        ++table.at(*table.indexOf(mu), lambda, nu);
      }
    }
  }

  if (verifyHurwitz) {
    for (std::size_t mu = 0; mu < k; ++mu) {
      for (std::size_t lambda = 0; lambda < k; ++lambda) {
        auto byTarget = enumerateSurfaceClassesByTarget(table.classes()[lambda], table.classes()[mu], coloring, limits);
        for (std::size_t nu = 0; nu < k; ++nu) {
          auto it = byTarget.find(table.classes()[nu]);
          std::span<const SurfaceClass> classes;
          if (it != byTarget.end()) classes = it->second;
          const Rational hurwitz = hurwitzSum(table.classes()[nu], classes);
          if (hurwitz != Rational(table.at(mu, lambda, nu))) {
            throw VerificationFailure(hurwitzWitness(table, mu, lambda, nu, table.at(mu, lambda, nu), hurwitz, classes));
          }
        }
      }
    }
  }
  return table;
}

AssociativityResult checkAssociativity(const StructureTable& table) {
  const std::size_t k = table.classCount();
  // Sparse rows: for each (a, b), the nonzero (sigma, c^sigma_{ab}).
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> rows(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t s = 0; s < k; ++s) {
        if (auto c = table.at(a, b, s)) rows[a * k + b].emplace_back(s, c);
      }
    }
  }
  std::vector<std::uint64_t> lhs(k);
  std::vector<std::uint64_t> rhs(k);
  for (std::size_t nu = 0; nu < k; ++nu) {
    for (std::size_t mu = 0; mu < k; ++mu) {
      for (std::size_t lambda = 0; lambda < k; ++lambda) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        // gamma_nu (gamma_mu gamma_lambda)
        for (auto [s, c] : rows[mu * k + lambda]) {
          for (auto [t, d] : rows[nu * k + s]) lhs[t] += c * d;
        }
        // (gamma_nu gamma_mu) gamma_lambda
        for (auto [s, c] : rows[nu * k + mu]) {
          for (auto [t, d] : rows[s * k + lambda]) rhs[t] += c * d;
        }
        for (std::size_t tau = 0; tau < k; ++tau) {
          if (lhs[tau] != rhs[tau]) return {false, std::array<std::size_t, 4>{mu, lambda, nu, tau}};
        }
      }
    }
  }
  return {};
}

std::optional<std::array<std::size_t, 2>> findUnitLawViolation(const StructureTable& table) {
  auto unit = table.indexOf(identityMess(table.coloring()));
  if (!unit) return std::array<std::size_t, 2>{0, 0};
  const std::size_t k = table.classCount();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const std::uint64_t want = a == b ? 1 : 0;
      if (table.at(*unit, a, b) != want || table.at(a, *unit, b) != want) return std::array<std::size_t, 2>{a, b};
    }
  }
  return std::nullopt;
}

StructureTable classicalCenterTable(std::size_t n, const Limits& limits) {
  if (n > limits.maxScanDegree) throw CapExceeded("classical scan supports N <= " + std::to_string(limits.maxScanDegree));
  auto cycleType = [](const Permutation& g) {
    std::vector<std::size_t> lengths;
    for (const Cycle& c : cycleDecomposition(g)) lengths.push_back(c.size());
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  };
  auto messOf = [](const std::vector<std::size_t>& lengths) {
    std::vector<std::vector<Color>> words;
    for (std::size_t len : lengths) words.emplace_back(len, Color{0});
    return makeNeckMess(words);
  };

  std::vector<Permutation> group;
  forEachPermutation(n, [&](const Permutation& g) { group.push_back(g); });
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> byType;
  for (std::size_t i = 0; i < group.size(); ++i) byType[cycleType(group[i])].push_back(i);

  std::vector<NeckMess> classes;
  std::map<std::vector<std::size_t>, std::size_t> position;
  for (const auto& [lengths, ids] : byType) classes.push_back(messOf(lengths));
  std::sort(classes.begin(), classes.end());
  for (const auto& [lengths, ids] : byType) {
    position[lengths] = static_cast<std::size_t>(
        std::lower_bound(classes.begin(), classes.end(), messOf(lengths)) - classes.begin());
  }

  StructureTable table(Coloring::fromMultiplicities(std::vector<std::size_t>{n}), classes);
  for (const auto& [nuType, nuIds] : byType) {
    const Permutation& target = group[nuIds.front()];
    const std::size_t nu = position[nuType];
    for (const auto& [lambdaType, lambdaIds] : byType) {
      for (std::size_t id : lambdaIds) {
        const Permutation v = compose(target, inverse(group[id]));
        ++table.at(position[cycleType(v)], position[lambdaType], nu);
      }
    }
  }
  return table;
}

}  // namespace colhur
