#include "colhur/classes.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "colhur/errors.hpp"

namespace colhur {

NeckMess coloredCycleType(const Permutation& g, const Coloring& coloring) {
  if (g.degree() != coloring.degree()) throw ValidationError("degree mismatch between permutation and coloring");
  std::vector<Necklace> necklaces;
  std::vector<bool> seen(g.degree(), false);
  std::vector<Color> word;
  for (Point start = 0; start < g.degree(); ++start) {
    if (seen[start]) continue;
    word.clear();
    for (Point x = start; !seen[x]; x = g(x)) {
      seen[x] = true;
      word.push_back(coloring.colorOf(x));
    }
    necklaces.emplace_back(word);
  }
  return NeckMess(std::move(necklaces));
}

Permutation classRepresentative(const NeckMess& type, const Coloring& coloring) {
  requireMatchesColoring(type, coloring, "class");
  std::vector<std::size_t> next(coloring.colorCount(), 0);
  std::vector<Point> images(coloring.degree());
  for (const Necklace& p : type.necklaces()) {
    Cycle cycle;
    for (Color c : p.word()) cycle.push_back(coloring.pointsOf(c)[next[c]++]);
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation(std::move(images));
}

std::uint64_t classSize(const NeckMess& type, const Coloring& coloring) {
  requireMatchesColoring(type, coloring, "class");
  return youngOrder(coloring) / neckMessAutOrder(type);
}

std::uint64_t factorialOverAut(const NeckMess& type, const Coloring& coloring) {
  requireMatchesColoring(type, coloring, "class");
  return factorial(coloring.degree()) / neckMessAutOrder(type);
}

std::vector<Permutation> enumerateClass(const NeckMess& type, const Coloring& coloring,
                                        const Limits& limits) {
  const std::uint64_t expected = classSize(type, coloring);
  if (expected > limits.maxYoung) {
    throw CapExceeded("class of size " + std::to_string(expected) + " exceeds the enumeration cap " +
                      std::to_string(limits.maxYoung));
  }
  // Y is generated by the transpositions of consecutive same-colored points.
  std::vector<Permutation> generators;
  for (Color c = 0; c < coloring.colorCount(); ++c) {
    auto pts = coloring.pointsOf(c);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      generators.push_back(fromCycles(coloring.degree(), std::vector<Cycle>{{pts[i], pts[i + 1]}}));
    }
  }
  std::vector<Permutation> orbit{classRepresentative(type, coloring)};
  std::deque<std::size_t> frontier{0};
  std::unordered_set<std::uint64_t> seen;
  const bool packed = coloring.degree() <= 16;
  std::set<Permutation> seenWide;
  auto insert = [&](const Permutation& g) {
    return packed ? seen.insert(packImages(g)).second : seenWide.insert(g).second;
  };
  insert(orbit.front());
  while (!frontier.empty()) {
    std::size_t i = frontier.front();
    frontier.pop_front();
    for (const Permutation& t : generators) {
      Permutation next = conjugate(orbit[i], t);
      if (insert(next)) {
        orbit.push_back(std::move(next));
        frontier.push_back(orbit.size() - 1);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::map<NeckMess, std::uint64_t> enumerateClassesByScan(const Coloring& coloring, const Limits& limits) {
  if (coloring.degree() > limits.maxScanDegree) {
    throw CapExceeded("full scan of S_N supports N <= " + std::to_string(limits.maxScanDegree));
  }
  std::map<NeckMess, std::uint64_t> sizes;
  forEachPermutation(coloring.degree(), [&](const Permutation& g) { ++sizes[coloredCycleType(g, coloring)]; });
  return sizes;
}

}  // namespace colhur
