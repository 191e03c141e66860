#include "colhur/coloring.hpp"

#include <algorithm>

#include "colhur/errors.hpp"

namespace colhur {

char colorLetter(Color color) {
  if (color >= 26) throw ValidationError("at most 26 colors have letter names");
  return static_cast<char>('a' + color);
}

Color letterColor(char letter) {
  if (letter < 'a' || letter > 'z') {
    throw ValidationError(std::string("color letters are a-z, got '") + letter + "'");
  }
  return static_cast<Color>(letter - 'a');
}

Coloring Coloring::fromColors(std::vector<Color> colorOf) {
  if (colorOf.empty()) throw ValidationError("coloring must paint at least one point");
  Color top = *std::max_element(colorOf.begin(), colorOf.end());
  Coloring c;
  c.multiplicities_.assign(static_cast<std::size_t>(top) + 1, 0);
  c.points_.resize(c.multiplicities_.size());
  for (std::size_t x = 0; x < colorOf.size(); ++x) {
    ++c.multiplicities_[colorOf[x]];
    c.points_[colorOf[x]].push_back(static_cast<Point>(x));
  }
  for (std::size_t j = 0; j < c.multiplicities_.size(); ++j) {
    if (c.multiplicities_[j] == 0) {
      throw ValidationError("color " + std::to_string(j) +
                            " is unused; colors must form a contiguous range from 0");
    }
  }
  c.colorOf_ = std::move(colorOf);
  return c;
}

Coloring Coloring::fromMultiplicities(std::span<const std::size_t> multiplicities) {
  std::vector<Color> colorOf;
  for (std::size_t j = 0; j < multiplicities.size(); ++j) {
    if (multiplicities[j] == 0) throw ValidationError("multiplicities must be positive");
    colorOf.insert(colorOf.end(), multiplicities[j], static_cast<Color>(j));
  }
  return fromColors(std::move(colorOf));
}

Coloring Coloring::fromLetters(std::string_view letters) {
  std::vector<Color> colorOf;
  colorOf.reserve(letters.size());
  for (char ch : letters) colorOf.push_back(letterColor(ch));
  return fromColors(std::move(colorOf));
}

std::string Coloring::letters() const {
  std::string out;
  for (Color c : colorOf_) out += colorLetter(c);
  return out;
}

std::uint64_t youngOrder(const Coloring& coloring) {
  std::uint64_t order = 1;
  for (std::size_t m : coloring.multiplicities()) {
    std::uint64_t f = factorial(m);
    if (order > UINT64_MAX / f) throw CapExceeded("|Y| does not fit in 64 bits");
    order *= f;
  }
  return order;
}

bool isInYoung(const Permutation& g, const Coloring& coloring) {
  if (g.degree() != coloring.degree()) throw ValidationError("degree mismatch between permutation and coloring");
  for (Point x = 0; x < g.degree(); ++x) {
    if (coloring.colorOf(g(x)) != coloring.colorOf(x)) return false;
  }
  return true;
}

void forEachYoung(const Coloring& coloring, const std::function<void(const Permutation&)>& visit,
                  const Limits& limits) {
  if (youngOrder(coloring) > limits.maxYoung) {
    throw CapExceeded("|Y| = " + std::to_string(youngOrder(coloring)) + " exceeds the enumeration cap " +
                      std::to_string(limits.maxYoung));
  }
  const std::size_t psi = coloring.colorCount();
  // One arrangement per color block, advanced like an odometer.
  std::vector<std::vector<Point>> blocks(psi);
  for (Color j = 0; j < psi; ++j) {
    auto pts = coloring.pointsOf(j);
    blocks[j].assign(pts.begin(), pts.end());
  }
  std::vector<Point> images(coloring.degree());
  for (;;) {
    for (Color j = 0; j < psi; ++j) {
      auto pts = coloring.pointsOf(j);
      for (std::size_t i = 0; i < pts.size(); ++i) images[pts[i]] = blocks[j][i];
    }
    visit(Permutation(images));
    std::size_t j = psi;
    while (j > 0) {
      --j;
      if (std::next_permutation(blocks[j].begin(), blocks[j].end())) break;
      if (j == 0) return;
    }
  }
}

std::vector<Permutation> enumerateYoung(const Coloring& coloring, const Limits& limits) {
  std::vector<Permutation> out;
  forEachYoung(coloring, [&](const Permutation& h) { out.push_back(h); }, limits);
  return out;
}

}  // namespace colhur
