#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "colhur/coloring.hpp"
#include "colhur/limits.hpp"
#include "colhur/necklace.hpp"
#include "colhur/perm.hpp"

namespace colhur {

enum class Sign : std::uint8_t { Plus = 0, Minus = 1 };
enum class EdgeSlot : std::uint8_t { NearIR = 0, MidIR = 1, FarUV = 2 };

/// One edge slot of one triangle. Triangle 2*c is the plus-triangle of
/// chamber c and 2*c+1 its minus-triangle.
struct SlotRef {
  std::uint32_t triangle;
  EdgeSlot slot;

  friend auto operator<=>(const SlotRef&, const SlotRef&) = default;
};

constexpr std::uint32_t triangleOf(Point chamber, Sign sign) {
  return 2 * chamber + static_cast<std::uint32_t>(sign);
}
constexpr Point chamberOf(std::uint32_t triangle) { return triangle / 2; }
constexpr Sign signOf(std::uint32_t triangle) { return static_cast<Sign>(triangle % 2); }

/// A closed checker-triangulated surface with labeled, colored chambers:
/// 2n triangles and a perfect matching of their 6n edge slots.
class LabeledSurface {
 public:
  /// Builds from a raw matching (indexed by 3*triangle + slot) and validates
  /// it: an involution without fixed slots, pairing equal edge colors,
  /// nearIR and midIR across signs, farUV within one chamber.
  static LabeledSurface fromGluing(std::vector<SlotRef> gluing, std::vector<Color> chamberColors);

  std::size_t chamberCount() const noexcept { return chamberColors_.size(); }
  std::size_t triangleCount() const noexcept { return 2 * chamberCount(); }
  SlotRef glued(SlotRef side) const noexcept {
    return gluing_[3 * side.triangle + static_cast<std::size_t>(side.slot)];
  }
  std::span<const SlotRef> gluing() const noexcept { return gluing_; }
  Color chamberColor(Point chamber) const noexcept { return chamberColors_[chamber]; }
  std::span<const Color> chamberColors() const noexcept { return chamberColors_; }

  friend bool operator==(const LabeledSurface&, const LabeledSurface&) = default;

 private:
  LabeledSurface() = default;

  std::vector<SlotRef> gluing_;
  std::vector<Color> chamberColors_;
};

/// u: a -> b glues the nearIR slot of plus(a) to the nearIR slot of minus(b);
/// v: c -> d glues the midIR slot of minus(c) to the midIR slot of plus(d);
/// farUV joins the two triangles of each chamber.
LabeledSurface buildSurface(const Permutation& u, const Permutation& v, const Coloring& coloring);

/// Reads (u, v) back from the nearIR and midIR gluings.
std::pair<Permutation, Permutation> recoverPair(const LabeledSurface& surface);

/// Label cycles read off by walking corners around each vertex.
struct VertexOrbits {
  std::vector<Cycle> nearFar;       // cycles of u
  std::vector<Cycle> midFar;        // cycles of v
  std::vector<Cycle> nearMidPlus;   // plus-triangle labels: cycles of vu
  std::vector<Cycle> nearMidMinus;  // minus-triangle labels: cycles of uv

  std::size_t vertexCount() const noexcept { return nearFar.size() + midFar.size() + nearMidPlus.size(); }
};

/// Cycles are normalized like cycleDecomposition (minimal point first, sorted).
VertexOrbits vertexOrbits(const LabeledSurface& surface);

struct ComponentProfile {
  std::vector<Point> chambers;
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t faces = 0;
  std::int64_t euler = 0;
  std::int64_t genus = 0;
};

/// Connected components in order of their smallest chamber. Throws
/// VerificationFailure if some component has odd or > 2 Euler characteristic.
std::vector<ComponentProfile> componentProfile(const LabeledSurface& surface);

/// Number of chamber relabelings preserving the gluing and chamber colors.
/// Independent of (u, v); checks stabilizerOrderY on small surfaces.
std::uint64_t complexAutomorphismCount(const LabeledSurface& surface, const Limits& limits = {});

/// |{h in Y : h u h^-1 = u and h v h^-1 = v}|.
std::uint64_t stabilizerOrderY(const Permutation& u, const Permutation& v, const Coloring& coloring,
                               const Limits& limits = {});

using PermutationPair = std::pair<Permutation, Permutation>;

/// Least pair, comparing (u images, v images), in the simultaneous Y-conjugation orbit.
PermutationPair canonicalOrbitKey(const Permutation& u, const Permutation& v, const Coloring& coloring,
                                  const Limits& limits = {});

/// One isomorphism class of colored surfaces: a Y-orbit of pairs.
struct SurfaceClass {
  PermutationPair orbitKey;
  std::uint64_t autOrder = 0;   // simultaneous Y-centralizer of the pair
  std::uint64_t orbitSize = 0;
  NeckMess lambda;              // type of u
  NeckMess mu;                  // type of v
  NeckMess nu;                  // type of vu
};

/// Classes with type(u) = lambda, type(v) = mu, type(vu) = nu, ordered by orbitKey.
std::vector<SurfaceClass> enumerateSurfaceClasses(const NeckMess& lambda, const NeckMess& mu, const NeckMess& nu,
                                                  const Coloring& coloring, const Limits& limits = {});

/// All classes with the given lambda and mu, grouped by nu. One pass over
/// Gamma[lambda] x Gamma[mu].
std::map<NeckMess, std::vector<SurfaceClass>> enumerateSurfaceClassesByTarget(const NeckMess& lambda,
                                                                              const NeckMess& mu,
                                                                              const Coloring& coloring,
                                                                              const Limits& limits = {});

/// #{(u, v) : u in Gamma[lambda], v in Gamma[mu], vu in Gamma[nu]} by direct enumeration.
std::uint64_t countTriples(const NeckMess& lambda, const NeckMess& mu, const NeckMess& nu,
                           const Coloring& coloring, const Limits& limits = {});

std::map<NeckMess, std::uint64_t> countTriplesByTarget(const NeckMess& lambda, const NeckMess& mu,
                                                       const Coloring& coloring, const Limits& limits = {});

}  // namespace colhur
