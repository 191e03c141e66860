#include "colhur/surface.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "colhur/classes.hpp"
#include "colhur/errors.hpp"

namespace colhur {

namespace {

std::size_t slotIndex(SlotRef s) { return 3 * static_cast<std::size_t>(s.triangle) + static_cast<std::size_t>(s.slot); }

void normalizeCycles(std::vector<Cycle>& cycles) {
  for (Cycle& c : cycles) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) { return a.front() < b.front(); });
}

// Walks the corners of each vertex whose edges have colors `first` and
// `second`, starting from plus-triangles and crossing `first` then `second`.
void walkVertices(const LabeledSurface& s, EdgeSlot first, EdgeSlot second, std::vector<Cycle>& plusLabels,
                  std::vector<Cycle>* minusLabels) {
  const std::size_t n = s.chamberCount();
  std::vector<bool> visited(n, false);
  for (Point start = 0; start < n; ++start) {
    if (visited[start]) continue;
    Cycle plus;
    Cycle minus;
    std::uint32_t t = triangleOf(start, Sign::Plus);
    do {
      visited[chamberOf(t)] = true;
      plus.push_back(chamberOf(t));
      std::uint32_t across = s.glued({t, first}).triangle;
      minus.push_back(chamberOf(across));
      t = s.glued({across, second}).triangle;
    } while (t != triangleOf(start, Sign::Plus));
    plusLabels.push_back(std::move(plus));
    if (minusLabels) minusLabels->push_back(std::move(minus));
  }
  normalizeCycles(plusLabels);
  if (minusLabels) normalizeCycles(*minusLabels);
}

void requireCompatible(const Permutation& u, const Permutation& v, const Coloring& coloring) {
  if (u.degree() != v.degree() || u.degree() != coloring.degree()) {
    throw ValidationError("u, v and the coloring must have the same degree");
  }
}

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.first * 0x9E3779B97F4A7C15ULL ^ p.second);
  }
};

}  // namespace

LabeledSurface LabeledSurface::fromGluing(std::vector<SlotRef> gluing, std::vector<Color> chamberColors) {
  const std::size_t n = chamberColors.size();
  if (n == 0) throw ValidationError("surface needs at least one chamber");
  if (gluing.size() != 6 * n) throw ValidationError("gluing must list 6 slots per chamber");
  for (std::size_t i = 0; i < gluing.size(); ++i) {
    const SlotRef self{static_cast<std::uint32_t>(i / 3), static_cast<EdgeSlot>(i % 3)};
    const SlotRef other = gluing[i];
    if (other.triangle >= 2 * n || static_cast<unsigned>(other.slot) > 2) {
      throw ValidationError("gluing refers to a nonexistent slot");
    }
    if (other == self) throw ValidationError("edge slot glued to itself");
    if (gluing[slotIndex(other)] != self) throw ValidationError("gluing is not an involution");
    if (other.slot != self.slot) throw ValidationError("gluing joins edges of different colors");
    if (signOf(other.triangle) == signOf(self.triangle)) {
      throw ValidationError("gluing joins two triangles of the same sign");
    }
    if (self.slot == EdgeSlot::FarUV && chamberOf(other.triangle) != chamberOf(self.triangle)) {
      throw ValidationError("farUV edges must join the two triangles of one chamber");
    }
  }
  LabeledSurface s;
  s.gluing_ = std::move(gluing);
  s.chamberColors_ = std::move(chamberColors);
  return s;
}

LabeledSurface buildSurface(const Permutation& u, const Permutation& v, const Coloring& coloring) {
  requireCompatible(u, v, coloring);
  const std::size_t n = u.degree();
  std::vector<SlotRef> gluing(6 * n);
  auto join = [&](SlotRef a, SlotRef b) {
    gluing[slotIndex(a)] = b;
    gluing[slotIndex(b)] = a;
  };
  for (Point c = 0; c < n; ++c) {
    join({triangleOf(c, Sign::Plus), EdgeSlot::FarUV}, {triangleOf(c, Sign::Minus), EdgeSlot::FarUV});
    join({triangleOf(c, Sign::Plus), EdgeSlot::NearIR}, {triangleOf(u(c), Sign::Minus), EdgeSlot::NearIR});
    join({triangleOf(c, Sign::Minus), EdgeSlot::MidIR}, {triangleOf(v(c), Sign::Plus), EdgeSlot::MidIR});
  }
  auto colors = coloring.colors();
  return LabeledSurface::fromGluing(std::move(gluing), std::vector<Color>(colors.begin(), colors.end()));
}

std::pair<Permutation, Permutation> recoverPair(const LabeledSurface& surface) {
  const std::size_t n = surface.chamberCount();
  std::vector<Point> u(n);
  std::vector<Point> v(n);
  for (Point c = 0; c < n; ++c) {
    u[c] = chamberOf(surface.glued({triangleOf(c, Sign::Plus), EdgeSlot::NearIR}).triangle);
    v[c] = chamberOf(surface.glued({triangleOf(c, Sign::Minus), EdgeSlot::MidIR}).triangle);
  }
  try {
    return {Permutation(std::move(u)), Permutation(std::move(v))};
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("malformed gluing: ") + e.what());
  }
}

VertexOrbits vertexOrbits(const LabeledSurface& surface) {
  VertexOrbits out;
  walkVertices(surface, EdgeSlot::NearIR, EdgeSlot::FarUV, out.nearFar, nullptr);
  walkVertices(surface, EdgeSlot::FarUV, EdgeSlot::MidIR, out.midFar, nullptr);
  walkVertices(surface, EdgeSlot::NearIR, EdgeSlot::MidIR, out.nearMidPlus, &out.nearMidMinus);
  return out;
}

std::vector<ComponentProfile> componentProfile(const LabeledSurface& surface) {
  const std::size_t n = surface.chamberCount();
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < surface.gluing().size(); ++i) {
    Point a = find(static_cast<Point>(i / 6));
    Point b = find(chamberOf(surface.gluing()[i].triangle));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<ComponentProfile> components;
  std::vector<std::size_t> slot(n);
  for (Point c = 0; c < n; ++c) {
    Point root = find(c);
    if (root == c) {
      slot[c] = components.size();
      components.emplace_back();
    }
    components[slot[root]].chambers.push_back(c);
  }
  const VertexOrbits orbits = vertexOrbits(surface);
  for (const auto* family : {&orbits.nearFar, &orbits.midFar, &orbits.nearMidPlus}) {
    for (const Cycle& cycle : *family) ++components[slot[find(cycle.front())]].vertices;
  }
  for (ComponentProfile& p : components) {
    const auto chambers = static_cast<std::int64_t>(p.chambers.size());
    p.edges = 3 * chambers;
    p.faces = 2 * chambers;
    p.euler = p.vertices - p.edges + p.faces;
    if (p.euler > 2 || p.euler % 2 != 0) {
      throw VerificationFailure("component containing chamber " + std::to_string(p.chambers.front()) +
                                " has Euler characteristic " + std::to_string(p.euler));
    }
    p.genus = (2 - p.euler) / 2;
  }
  return components;
}

std::uint64_t complexAutomorphismCount(const LabeledSurface& surface, const Limits& limits) {
  const std::size_t n = surface.chamberCount();
  if (n > limits.maxScanDegree) throw CapExceeded("automorphism scan supports N <= " + std::to_string(limits.maxScanDegree));
  std::uint64_t count = 0;
  forEachPermutation(n, [&](const Permutation& h) {
    for (Point c = 0; c < n; ++c) {
      if (surface.chamberColor(h(c)) != surface.chamberColor(c)) return;
    }
    auto move = [&](SlotRef s) { return SlotRef{triangleOf(h(chamberOf(s.triangle)), signOf(s.triangle)), s.slot}; };
    for (std::size_t i = 0; i < surface.gluing().size(); ++i) {
      const SlotRef self{static_cast<std::uint32_t>(i / 3), static_cast<EdgeSlot>(i % 3)};
      if (surface.glued(move(self)) != move(surface.gluing()[i])) return;
    }
    ++count;
  });
  return count;
}

std::uint64_t stabilizerOrderY(const Permutation& u, const Permutation& v, const Coloring& coloring,
                               const Limits& limits) {
  requireCompatible(u, v, coloring);
  std::uint64_t count = 0;
  forEachYoung(coloring, [&](const Permutation& h) {
    if (conjugate(u, h) == u && conjugate(v, h) == v) ++count;
  }, limits);
  return count;
}

PermutationPair canonicalOrbitKey(const Permutation& u, const Permutation& v, const Coloring& coloring,
                                  const Limits& limits) {
  requireCompatible(u, v, coloring);
  PermutationPair best{u, v};
  forEachYoung(coloring, [&](const Permutation& h) {
    PermutationPair candidate{conjugate(u, h), conjugate(v, h)};
    if (candidate < best) best = std::move(candidate);
  }, limits);
  return best;
}

std::map<NeckMess, std::vector<SurfaceClass>> enumerateSurfaceClassesByTarget(const NeckMess& lambda,
                                                                              const NeckMess& mu,
                                                                              const Coloring& coloring,
                                                                              const Limits& limits) {
  requireMatchesColoring(lambda, coloring, "lambda");
  requireMatchesColoring(mu, coloring, "mu");
  if (coloring.degree() > 16) throw CapExceeded("surface enumeration supports N <= 16");
  const std::vector<Permutation> young = enumerateYoung(coloring, limits);
  const std::vector<Permutation> us = enumerateClass(lambda, coloring, limits);
  const std::vector<Permutation> vs = enumerateClass(mu, coloring, limits);

  std::map<NeckMess, std::vector<SurfaceClass>> out;
  std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, PairHash> visited;
  std::vector<PermutationPair> orbit;
  for (const Permutation& u : us) {
    for (const Permutation& v : vs) {
      if (visited.contains({packImages(u), packImages(v)})) continue;
      SurfaceClass cls{{u, v}, 0, 0, lambda, mu, coloredCycleType(compose(v, u), coloring)};
      orbit.clear();
      for (const Permutation& h : young) {
        Permutation hu = conjugate(u, h);
        Permutation hv = conjugate(v, h);
        if (hu == u && hv == v) ++cls.autOrder;
        if (visited.insert({packImages(hu), packImages(hv)}).second) orbit.emplace_back(std::move(hu), std::move(hv));
      }
      cls.orbitSize = orbit.size();
      cls.orbitKey = *std::min_element(orbit.begin(), orbit.end());
      out[cls.nu].push_back(std::move(cls));
    }
  }
  for (auto& [nu, classes] : out) {
    std::sort(classes.begin(), classes.end(),
              [](const SurfaceClass& a, const SurfaceClass& b) { return a.orbitKey < b.orbitKey; });
  }
  return out;
}

std::vector<SurfaceClass> enumerateSurfaceClasses(const NeckMess& lambda, const NeckMess& mu, const NeckMess& nu,
                                                  const Coloring& coloring, const Limits& limits) {
  requireMatchesColoring(nu, coloring, "nu");
  auto all = enumerateSurfaceClassesByTarget(lambda, mu, coloring, limits);
  auto it = all.find(nu);
  return it == all.end() ? std::vector<SurfaceClass>{} : std::move(it->second);
}

std::map<NeckMess, std::uint64_t> countTriplesByTarget(const NeckMess& lambda, const NeckMess& mu,
                                                       const Coloring& coloring, const Limits& limits) {
  requireMatchesColoring(lambda, coloring, "lambda");
  requireMatchesColoring(mu, coloring, "mu");
  const std::vector<Permutation> us = enumerateClass(lambda, coloring, limits);
  const std::vector<Permutation> vs = enumerateClass(mu, coloring, limits);
  std::map<NeckMess, std::uint64_t> counts;
  for (const Permutation& u : us) {
    for (const Permutation& v : vs) ++counts[coloredCycleType(compose(v, u), coloring)];
  }
  return counts;
}

std::uint64_t countTriples(const NeckMess& lambda, const NeckMess& mu, const NeckMess& nu,
                           const Coloring& coloring, const Limits& limits) {
  requireMatchesColoring(nu, coloring, "nu");
  auto counts = countTriplesByTarget(lambda, mu, coloring, limits);
  auto it = counts.find(nu);
  return it == counts.end() ? 0 : it->second;
}

}  // namespace colhur
