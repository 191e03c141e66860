#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "colhur/limits.hpp"
#include "colhur/perm.hpp"

namespace colhur {

using Color = std::uint32_t;

/// Color letters: a, b, c, ... for colors 0, 1, 2, ...
char colorLetter(Color color);
Color letterColor(char letter);

/// A painting of the points {0, ..., N-1} in colors {0, ..., psi-1}, every
/// color used at least once. Determines the Young subgroup Y of
/// color-preserving permutations.
class Coloring {
 public:
  /// Per-point colors; the colors used must be exactly 0..psi-1.
  static Coloring fromColors(std::vector<Color> colorOf);
  /// Block form: multiplicities (2,2,1) paints points 0,1 a; 2,3 b; 4 c.
  static Coloring fromMultiplicities(std::span<const std::size_t> multiplicities);
  /// Per-point letters, e.g. "aabba".
  static Coloring fromLetters(std::string_view letters);

  std::size_t degree() const noexcept { return colorOf_.size(); }
  std::size_t colorCount() const noexcept { return multiplicities_.size(); }
  Color colorOf(Point x) const noexcept { return colorOf_[x]; }
  std::span<const Color> colors() const noexcept { return colorOf_; }
  std::span<const std::size_t> multiplicities() const noexcept { return multiplicities_; }
  /// Points of one color in increasing order.
  std::span<const Point> pointsOf(Color color) const noexcept { return points_[color]; }

  std::string letters() const;

  friend bool operator==(const Coloring& a, const Coloring& b) { return a.colorOf_ == b.colorOf_; }

 private:
  Coloring() = default;

  std::vector<Color> colorOf_;
  std::vector<std::size_t> multiplicities_;
  std::vector<std::vector<Point>> points_;
};

/// |Y| = prod m_j!.
std::uint64_t youngOrder(const Coloring& coloring);

bool isInYoung(const Permutation& g, const Coloring& coloring);

/// Visits every element of Y once. Throws CapExceeded when |Y| > limits.maxYoung.
void forEachYoung(const Coloring& coloring, const std::function<void(const Permutation&)>& visit,
                  const Limits& limits = {});
std::vector<Permutation> enumerateYoung(const Coloring& coloring, const Limits& limits = {});

}  // namespace colhur
