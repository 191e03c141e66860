#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace colhur {

using Point = std::uint32_t;
using Cycle = std::vector<Point>;

/// A bijection of {0, ..., n-1}, stored as its image sequence.
///
/// Composition follows the "right factor acts first" convention:
/// compose(a, b)(x) = a(b(x)). The product vu of two permutations is
/// therefore compose(v, u). Ordering compares image sequences
/// lexicographically.
class Permutation {
 public:
  /// Validates that `images` is a bijection of {0, ..., images.size()-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t n);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }
  bool isIdentity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Trusted {};
  Permutation(std::vector<Point> images, Trusted) noexcept : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& a, const Permutation& b);
  friend Permutation inverse(const Permutation& g);
  friend Permutation conjugate(const Permutation& g, const Permutation& h);

  std::vector<Point> images_;
};

Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& g);
/// h g h^-1.
Permutation conjugate(const Permutation& g, const Permutation& h);

/// Cycles start at their minimal point and are sorted by it. Fixed points
/// appear as 1-cycles.
std::vector<Cycle> cycleDecomposition(const Permutation& g);
std::size_t cycleCount(const Permutation& g);

/// Inverse of cycleDecomposition. Points not mentioned are fixed.
Permutation fromCycles(std::size_t n, std::span<const Cycle> cycles);

/// "(0 1 2)(3 4)"; 1-cycles are omitted and the identity prints as "()".
std::string formatCycles(const Permutation& g);
/// Accepts the printed form plus explicit 1-cycles, e.g. "(0 1 2)(3)".
Permutation parseCycles(std::string_view text, std::size_t n);

/// n!, throwing CapExceeded when it does not fit in 64 bits.
std::uint64_t factorial(std::size_t n);

/// Packs the image sequence into 64 bits (4 bits per point); degree <= 16.
std::uint64_t packImages(const Permutation& g);

/// Calls `visit` on every element of S_n in lexicographic image order.
template <class Visit>
void forEachPermutation(std::size_t n, Visit&& visit);

}  // namespace colhur

#include <algorithm>
#include <numeric>

namespace colhur {

template <class Visit>
void forEachPermutation(std::size_t n, Visit&& visit) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  do {
    visit(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace colhur
