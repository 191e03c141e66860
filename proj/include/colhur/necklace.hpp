#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "colhur/coloring.hpp"
#include "colhur/limits.hpp"

namespace colhur {

/// A cyclic color word, stored as its lexicographically least rotation.
/// Necklaces are not reversible: a word and its mirror image differ unless
/// they are rotations of each other.
class Necklace {
 public:
  /// Canonicalizes `word`; throws ValidationError when it is empty.
  explicit Necklace(std::vector<Color> word);

  std::span<const Color> word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }

  /// Order: by length, then lexicographic word.
  friend std::strong_ordering operator<=>(const Necklace& a, const Necklace& b);
  friend bool operator==(const Necklace& a, const Necklace& b) = default;

 private:
  std::vector<Color> word_;
};

Necklace canonicalNecklace(std::span<const Color> word);

/// Number of rotations fixing the word: length / minimal period.
std::uint64_t necklaceAutOrder(const Necklace& necklace);

/// A multiset of necklaces, stored sorted so that isomorphic messes compare equal.
class NeckMess {
 public:
  explicit NeckMess(std::vector<Necklace> necklaces);

  std::span<const Necklace> necklaces() const noexcept { return necklaces_; }
  std::size_t size() const noexcept { return necklaces_.size(); }
  std::size_t beadCount() const noexcept;
  /// Bead totals per color; the result has max(colorCount, top color + 1) entries.
  std::vector<std::size_t> colorMultiplicities(std::size_t colorCount = 0) const;

  friend auto operator<=>(const NeckMess&, const NeckMess&) = default;
  friend bool operator==(const NeckMess&, const NeckMess&) = default;

 private:
  std::vector<Necklace> necklaces_;
};

NeckMess makeNeckMess(const std::vector<std::vector<Color>>& words);

/// prod over distinct necklaces r occurring alpha times of alpha! * |Aut(r)|^alpha.
std::uint64_t neckMessAutOrder(const NeckMess& mess);

/// True when the mess has exactly the coloring's bead count in every color.
bool matchesColoring(const NeckMess& mess, const Coloring& coloring);
/// Throws ValidationError naming `role` when matchesColoring fails.
void requireMatchesColoring(const NeckMess& mess, const Coloring& coloring, std::string_view role);

/// All isomorphism classes of neck messes with the given bead counts,
/// each once, in ascending NeckMess order.
std::vector<NeckMess> enumerateNeckMesses(std::span<const std::size_t> multiplicities,
                                          const Limits& limits = {});

/// The mess of all fixed points: one length-1 necklace per point.
NeckMess identityMess(const Coloring& coloring);

/// "a|ab|aab": letter words joined by '|', in stored order.
std::string formatNecklace(const Necklace& necklace);
std::string formatNeckMess(const NeckMess& mess);
/// Accepts rotated or unsorted words and canonicalizes.
NeckMess parseNeckMess(std::string_view text);

}  // namespace colhur
