#include "colhur/necklace.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "colhur/errors.hpp"

namespace colhur {

namespace {

std::vector<Color> leastRotation(std::vector<Color> word) {
  const std::size_t n = word.size();
  std::size_t best = 0;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      Color a = word[(k + i) % n];
      Color b = word[(best + i) % n];
      if (a != b) {
        if (a < b) best = k;
        break;
      }
    }
  }
  std::rotate(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(best), word.end());
  return word;
}

}  // namespace

Necklace::Necklace(std::vector<Color> word) {
  if (word.empty()) throw ValidationError("necklace must have at least one bead");
  word_ = leastRotation(std::move(word));
}

std::strong_ordering operator<=>(const Necklace& a, const Necklace& b) {
  if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
  return a.word_ <=> b.word_;
}

Necklace canonicalNecklace(std::span<const Color> word) {
  return Necklace(std::vector<Color>(word.begin(), word.end()));
}

std::uint64_t necklaceAutOrder(const Necklace& necklace) {
  auto w = necklace.word();
  const std::size_t n = w.size();
  for (std::size_t period = 1; period <= n; ++period) {
    if (n % period != 0) continue;
    bool fixed = true;
    for (std::size_t i = 0; i + period < n && fixed; ++i) fixed = w[i] == w[i + period];
    if (fixed) return n / period;
  }
  return 1;
}

NeckMess::NeckMess(std::vector<Necklace> necklaces) : necklaces_(std::move(necklaces)) {
  std::sort(necklaces_.begin(), necklaces_.end());
}

std::size_t NeckMess::beadCount() const noexcept {
  std::size_t total = 0;
  for (const Necklace& p : necklaces_) total += p.length();
  return total;
}

std::vector<std::size_t> NeckMess::colorMultiplicities(std::size_t colorCount) const {
  std::vector<std::size_t> counts(colorCount, 0);
  for (const Necklace& p : necklaces_) {
    for (Color c : p.word()) {
      if (c >= counts.size()) counts.resize(static_cast<std::size_t>(c) + 1, 0);
      ++counts[c];
    }
  }
  return counts;
}

NeckMess makeNeckMess(const std::vector<std::vector<Color>>& words) {
  std::vector<Necklace> necklaces;
  necklaces.reserve(words.size());
  for (const auto& w : words) necklaces.emplace_back(w);
  return NeckMess(std::move(necklaces));
}

std::uint64_t neckMessAutOrder(const NeckMess& mess) {
  std::uint64_t order = 1;
  auto ps = mess.necklaces();
  for (std::size_t i = 0; i < ps.size();) {
    std::size_t j = i;
    while (j < ps.size() && ps[j] == ps[i]) ++j;
    const std::uint64_t copies = j - i;
    order *= factorial(copies);
    const std::uint64_t rot = necklaceAutOrder(ps[i]);
    for (std::uint64_t k = 0; k < copies; ++k) order *= rot;
    i = j;
  }
  return order;
}

bool matchesColoring(const NeckMess& mess, const Coloring& coloring) {
  auto counts = mess.colorMultiplicities(coloring.colorCount());
  auto want = coloring.multiplicities();
  return std::equal(counts.begin(), counts.end(), want.begin(), want.end());
}

void requireMatchesColoring(const NeckMess& mess, const Coloring& coloring, std::string_view role) {
  if (!matchesColoring(mess, coloring)) {
    throw ValidationError(std::string(role) + " mess '" + formatNeckMess(mess) +
                          "' does not have the coloring's bead counts");
  }
}

std::vector<NeckMess> enumerateNeckMesses(std::span<const std::size_t> multiplicities,
                                          const Limits& limits) {
  std::size_t total = 0;
  for (std::size_t m : multiplicities) total += m;
  if (total == 0) throw ValidationError("at least one bead is required");
  if (total > limits.maxNecklaceDegree) {
    throw CapExceeded("neck mess enumeration supports at most " +
                      std::to_string(limits.maxNecklaceDegree) + " beads");
  }
  const std::size_t psi = multiplicities.size();

  // Every canonical necklace whose color counts fit the budget.
  std::vector<Necklace> candidates;
  std::vector<std::size_t> used(psi, 0);
  std::vector<Color> word;
  std::function<void()> grow = [&] {
    if (!word.empty()) {
      Necklace p(word);
      if (std::equal(p.word().begin(), p.word().end(), word.begin(), word.end())) {
        candidates.push_back(std::move(p));
      }
    }
    if (word.size() == total) return;
    for (Color c = 0; c < psi; ++c) {
      if (used[c] == multiplicities[c]) continue;
      // A canonical word never starts with a color larger than any later color.
      if (!word.empty() && c < word.front()) continue;
      ++used[c];
      word.push_back(c);
      grow();
      word.pop_back();
      --used[c];
    }
  };
  grow();
  std::sort(candidates.begin(), candidates.end());

  std::vector<std::vector<std::size_t>> beads;
  beads.reserve(candidates.size());
  for (const Necklace& p : candidates) beads.push_back(NeckMess({p}).colorMultiplicities(psi));

  // Multisets as non-decreasing index sequences that exhaust the budget.
  std::vector<NeckMess> out;
  std::vector<std::size_t> remaining(multiplicities.begin(), multiplicities.end());
  std::vector<Necklace> chosen;
  std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t from, std::size_t left) {
    if (left == 0) {
      out.emplace_back(chosen);
      return;
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
      bool fits = true;
      for (std::size_t c = 0; c < psi && fits; ++c) fits = beads[i][c] <= remaining[c];
      if (!fits) continue;
      for (std::size_t c = 0; c < psi; ++c) remaining[c] -= beads[i][c];
      chosen.push_back(candidates[i]);
      pick(i, left - candidates[i].length());
      chosen.pop_back();
      for (std::size_t c = 0; c < psi; ++c) remaining[c] += beads[i][c];
    }
  };
  pick(0, total);
  std::sort(out.begin(), out.end());
  return out;
}

NeckMess identityMess(const Coloring& coloring) {
  std::vector<Necklace> fixed;
  fixed.reserve(coloring.degree());
  for (Color c : coloring.colors()) fixed.emplace_back(std::vector<Color>{c});
  return NeckMess(std::move(fixed));
}

std::string formatNecklace(const Necklace& necklace) {
  std::string out;
  for (Color c : necklace.word()) out += colorLetter(c);
  return out;
}

std::string formatNeckMess(const NeckMess& mess) {
  std::string out;
  for (const Necklace& p : mess.necklaces()) {
    if (!out.empty()) out += '|';
    out += formatNecklace(p);
  }
  return out;
}

NeckMess parseNeckMess(std::string_view text) {
  std::vector<std::vector<Color>> words(1);
  for (char ch : text) {
    if (ch == ' ') continue;
    if (ch == '|') {
      words.emplace_back();
      continue;
    }
    words.back().push_back(letterColor(ch));
  }
  for (const auto& w : words) {
    if (w.empty()) throw ValidationError("empty necklace in mess '" + std::string(text) + "'");
  }
  return makeNeckMess(words);
}

}  // namespace colhur
