#include <doctest.h>

#include <functional>
#include <set>

#include "colhur/classes.hpp"
#include "colhur/errors.hpp"
#include "colhur/necklace.hpp"
#include "oracle.hpp"

using namespace colhur;

namespace {

Necklace neck(const char* letters) {
  std::vector<Color> word;
  for (const char* p = letters; *p; ++p) word.push_back(letterColor(*p));
  return Necklace(word);
}

// Every word of each length up to maxLength over `colors` colors.
void forEachWord(std::size_t maxLength, Color colors, const std::function<void(const std::vector<Color>&)>& visit) {
  std::vector<Color> word;
  std::function<void()> grow = [&] {
    if (!word.empty()) visit(word);
    if (word.size() == maxLength) return;
    for (Color c = 0; c < colors; ++c) {
      word.push_back(c);
      grow();
      word.pop_back();
    }
  };
  grow();
}

}  // namespace

TEST_CASE("canonicalNecklace picks the least rotation") {
  CHECK(formatNecklace(neck("baa")) == "aab");
  CHECK(formatNecklace(neck("abab")) == "abab");
  CHECK(formatNecklace(neck("b")) == "b");
  CHECK(formatNecklace(neck("cabca")) == "abcac");
  CHECK_THROWS_AS(Necklace(std::vector<Color>{}), ValidationError);
}

TEST_CASE("necklaceAutOrder") {
  CHECK(necklaceAutOrder(neck("ababab")) == 3);
  CHECK(necklaceAutOrder(neck("aab")) == 1);
  CHECK(necklaceAutOrder(neck("aaaa")) == 4);
  CHECK(necklaceAutOrder(neck("b")) == 1);
}

TEST_CASE("five necklaces with rotation groups Z1, Z2, Z3, Z3, Z1") {
  // Two isomorphic necklaces with three-fold symmetry among five.
  const std::vector<Necklace> five{neck("aab"), neck("abab"), neck("abbabbabb"), neck("bbabbabba"), neck("abb")};
  std::vector<std::uint64_t> orders;
  for (const Necklace& p : five) orders.push_back(necklaceAutOrder(p));
  CHECK(orders == std::vector<std::uint64_t>{1, 2, 3, 3, 1});
  CHECK(five[2] == five[3]);
  // Z2 x (S2 semidirect (Z3)^2)
  CHECK(neckMessAutOrder(NeckMess(five)) == 2 * (2 * 3 * 3));
}

TEST_CASE("rotation invariance and period divisibility, length <= 8, <= 3 colors") {
  forEachWord(8, 3, [](const std::vector<Color>& w) {
    const Necklace p(w);
    CHECK(std::vector<Color>(p.word().begin(), p.word().end()) == oracle::minimalRotationByListing(w));
    std::vector<Color> rotated = w;
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    CHECK(Necklace(rotated) == p);
    CHECK(Necklace(std::vector<Color>(p.word().begin(), p.word().end())) == p);
    CHECK(w.size() % necklaceAutOrder(p) == 0);
  });
}

TEST_CASE("makeNeckMess canonicalizes and sorts") {
  CHECK(makeNeckMess({{1, 0}, {0, 1}}) == makeNeckMess({{0, 1}, {0, 1}}));
  CHECK(formatNeckMess(makeNeckMess({{1}, {0}, {0}})) == "a|a|b");
  CHECK(makeNeckMess({{0, 1, 0}}) == makeNeckMess({{0, 0, 1}}));
  CHECK(parseNeckMess("ab|a") == parseNeckMess("a|ba"));
  CHECK(formatNeckMess(parseNeckMess("aab|b|ba")) == "b|ab|aab");
  CHECK_THROWS_AS(parseNeckMess("a||b"), ValidationError);
  CHECK_THROWS_AS(parseNeckMess(""), ValidationError);
  CHECK_THROWS_AS(parseNeckMess("aB"), ValidationError);
}

TEST_CASE("mirror images are distinct necklaces") {
  CHECK(neck("aabc") != neck("acba"));
  CHECK(neck("abc") != neck("acb"));
}

TEST_CASE("neckMessAutOrder") {
  CHECK(neckMessAutOrder(parseNeckMess("ab|ab|aab")) == 2);
  CHECK(neckMessAutOrder(parseNeckMess("a|a|b")) == 2);
  CHECK(neckMessAutOrder(parseNeckMess("ab|ab|ab")) == 6);
  CHECK(neckMessAutOrder(parseNeckMess("aa|aa")) == 2 * 2 * 2);
  for (const char* letters : {"aab", "aabbc", "aaaa", "abcd", "aaabbb"}) {
    const Coloring c = Coloring::fromLetters(letters);
    CHECK(neckMessAutOrder(identityMess(c)) == youngOrder(c));
  }
}

TEST_CASE("enumerateNeckMesses small cases") {
  auto render = [](std::vector<std::size_t> m) {
    std::vector<std::string> out;
    for (const NeckMess& mess : enumerateNeckMesses(m)) out.push_back(formatNeckMess(mess));
    return out;
  };
  CHECK(render({2}) == std::vector<std::string>{"a|a", "aa"});
  CHECK(render({1, 1}) == std::vector<std::string>{"a|b", "ab"});
  CHECK(render({2, 1}) == std::vector<std::string>{"a|a|b", "a|ab", "b|aa", "aab"});
  Limits small;
  small.maxNecklaceDegree = 4;
  CHECK_THROWS_AS(enumerateNeckMesses(std::vector<std::size_t>{3, 2}, small), CapExceeded);
}

TEST_CASE("enumerateNeckMesses equals the types found by scanning S_N, N <= 7") {
  for (const char* letters : {"a", "ab", "aab", "abc", "aaaa", "aabb", "aabc", "abcd", "aaabb", "aabbc", "aaaaaa",
                              "aabbcc", "aaabbb", "aaaaabc", "aaaaaaa", "aaaabbb", "aabbccd"}) {
    CAPTURE(letters);
    const Coloring c = Coloring::fromLetters(letters);
    std::set<NeckMess> scanned;
    forEachPermutation(c.degree(), [&](const Permutation& g) { scanned.insert(coloredCycleType(g, c)); });
    const auto listed = enumerateNeckMesses(c.multiplicities());
    CHECK(listed == std::vector<NeckMess>(scanned.begin(), scanned.end()));
    for (const NeckMess& mess : listed) CHECK(matchesColoring(mess, c));
  }
}

TEST_CASE("enumeration count matches Burnside over Y for the block coloring") {
  // Number of Y-conjugacy classes = (1/|Y|) sum over h in Y of |centralizer of h in S_N|.
  for (const char* letters : {"aabbcc", "aaabbb", "aabbb"}) {
    const Coloring c = Coloring::fromLetters(letters);
    const auto group = oracle::symmetricGroup(c.degree());
    std::uint64_t fixedTotal = 0;
    for (const Permutation& h : oracle::youngByFilter(c)) {
      for (const Permutation& g : group) fixedTotal += oracle::product(h, g) == oracle::product(g, h);
    }
    CHECK(enumerateNeckMesses(c.multiplicities()).size() == fixedTotal / youngOrder(c));
  }
}
