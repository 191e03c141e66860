#include "colhur/perm.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "colhur/errors.hpp"
#include "colhur/limits.hpp"

namespace colhur {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw ValidationError("permutation degree must be at least 1");
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw ValidationError("image sequence is not a bijection of {0,...," +
                            std::to_string(images_.size() - 1) + "}");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  if (n == 0) throw ValidationError("permutation degree must be at least 1");
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Trusted{});
}

bool Permutation::isIdentity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

namespace {

void requireSameDegree(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw ValidationError("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                          std::to_string(b.degree()));
  }
}

}  // namespace

Permutation compose(const Permutation& a, const Permutation& b) {
  requireSameDegree(a, b);
  std::vector<Point> out(a.degree());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = a.images_[b.images_[x]];
  return Permutation(std::move(out), Permutation::Trusted{});
}

Permutation inverse(const Permutation& g) {
  std::vector<Point> out(g.degree());
  for (std::size_t x = 0; x < out.size(); ++x) out[g.images_[x]] = static_cast<Point>(x);
  return Permutation(std::move(out), Permutation::Trusted{});
}

Permutation conjugate(const Permutation& g, const Permutation& h) {
  requireSameDegree(g, h);
  // (h g h^-1)(h(x)) = h(g(x))
  std::vector<Point> out(g.degree());
  for (std::size_t x = 0; x < out.size(); ++x) out[h.images_[x]] = h.images_[g.images_[x]];
  return Permutation(std::move(out), Permutation::Trusted{});
}

std::vector<Cycle> cycleDecomposition(const Permutation& g) {
  std::vector<Cycle> cycles;
  std::vector<bool> seen(g.degree(), false);
  for (Point start = 0; start < g.degree(); ++start) {
    if (seen[start]) continue;
    Cycle cycle;
    for (Point x = start; !seen[x]; x = g(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::size_t cycleCount(const Permutation& g) {
  std::size_t count = 0;
  std::vector<bool> seen(g.degree(), false);
  for (Point start = 0; start < g.degree(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (Point x = start; !seen[x]; x = g(x)) seen[x] = true;
  }
  return count;
}

Permutation fromCycles(std::size_t n, std::span<const Cycle> cycles) {
  if (n == 0) throw ValidationError("permutation degree must be at least 1");
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(n, false);
  for (const Cycle& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= n) throw ValidationError("point " + std::to_string(x) + " out of range");
      if (used[x]) throw ValidationError("point " + std::to_string(x) + " repeated in cycles");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

std::string formatCycles(const Permutation& g) {
  std::string out;
  for (const Cycle& cycle : cycleDecomposition(g)) {
    if (cycle.size() == 1) continue;
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation parseCycles(std::string_view text, std::size_t n) {
  std::vector<Cycle> cycles;
  std::size_t i = 0;
  auto skipSpace = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skipSpace();
  while (i < text.size()) {
    if (text[i] != '(') throw ValidationError("expected '(' in cycle notation: " + std::string(text));
    ++i;
    Cycle cycle;
    for (;;) {
      skipSpace();
      if (i >= text.size()) throw ValidationError("unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ValidationError("unexpected character in cycle notation: " + std::string(text));
      }
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > std::numeric_limits<Point>::max()) throw ValidationError("point out of range");
        ++i;
      }
      cycle.push_back(static_cast<Point>(value));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skipSpace();
  }
  return fromCycles(n, cycles);
}

std::uint64_t factorial(std::size_t n) {
  if (n > 20) throw CapExceeded(std::to_string(n) + "! does not fit in 64 bits");
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

std::uint64_t packImages(const Permutation& g) {
  if (g.degree() > 16) throw CapExceeded("packed permutation keys support degree <= 16");
  std::uint64_t key = 0;
  for (Point x : g.images()) key = (key << 4) | x;
  return key;
}

Limits Limits::fromEnvironment() { return fromEnvironment(Limits{}); }

Limits Limits::fromEnvironment(Limits base) {
  auto read = [](const char* name, auto& field) {
    if (const char* value = std::getenv(name); value && *value) {
      char* end = nullptr;
      unsigned long long parsed = std::strtoull(value, &end, 10);
      if (end && *end == '\0' && parsed > 0) field = static_cast<std::remove_reference_t<decltype(field)>>(parsed);
    }
  };
  read("COLHUR_MAX_N", base.maxDegree);
  read("COLHUR_MAX_YOUNG", base.maxYoung);
  read("COLHUR_MAX_VERIFY_N", base.maxVerifyDegree);
  return base;
}

}  // namespace colhur
