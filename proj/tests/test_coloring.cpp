#include <doctest.h>

#include <algorithm>
#include <set>

#include "colhur/coloring.hpp"
#include "colhur/errors.hpp"
#include "oracle.hpp"

using namespace colhur;

TEST_CASE("makeColoring") {
  const Coloring a = Coloring::fromColors({0, 0, 1});
  CHECK(a.colorCount() == 2);
  CHECK(std::vector<std::size_t>(a.multiplicities().begin(), a.multiplicities().end()) == std::vector<std::size_t>{2, 1});
  const Coloring b = Coloring::fromColors({0, 1, 2});
  CHECK(b.colorCount() == 3);
  CHECK(youngOrder(b) == 1);
  const Coloring mono = Coloring::fromColors({0, 0, 0});
  CHECK(mono.colorCount() == 1);
  CHECK(mono.multiplicities()[0] == 3);
}

TEST_CASE("makeColoring errors") {
  CHECK_THROWS_AS(Coloring::fromColors({}), ValidationError);
  CHECK_THROWS_AS(Coloring::fromColors({0, 2}), ValidationError);
  CHECK_THROWS_AS(Coloring::fromColors({1, 1}), ValidationError);
  CHECK_THROWS_AS(Coloring::fromLetters("aB"), ValidationError);
  CHECK_THROWS_AS(Coloring::fromMultiplicities(std::vector<std::size_t>{2, 0}), ValidationError);
  CHECK_THROWS_AS(Coloring::fromMultiplicities(std::vector<std::size_t>{}), ValidationError);
}

TEST_CASE("block and letter forms agree") {
  const Coloring blocks = oracle::blocks({2, 2, 1});
  CHECK(blocks.letters() == "aabbc");
  CHECK(Coloring::fromLetters("aabbc") == blocks);
  const Coloring mixed = Coloring::fromLetters("abab");
  CHECK(std::vector<Point>(mixed.pointsOf(1).begin(), mixed.pointsOf(1).end()) == std::vector<Point>{1, 3});
}

TEST_CASE("youngOrder") {
  CHECK(youngOrder(oracle::blocks({2, 1})) == 2);
  CHECK(youngOrder(oracle::blocks({1, 1})) == 1);
  CHECK(youngOrder(oracle::blocks({3})) == 6);
  CHECK(youngOrder(oracle::blocks({3, 2, 2})) == 24);
}

TEST_CASE("enumerateYoung small cases") {
  CHECK(enumerateYoung(Coloring::fromColors({0, 1})) == std::vector<Permutation>{Permutation::identity(2)});
  const auto y = enumerateYoung(Coloring::fromColors({0, 0, 1}));
  CHECK(std::set<Permutation>(y.begin(), y.end()) ==
        std::set<Permutation>{Permutation::identity(3), parseCycles("(0 1)", 3)});
  CHECK(enumerateYoung(Coloring::fromColors({0, 0, 0})).size() == 6);
}

TEST_CASE("enumerateYoung respects the cap") {
  Limits tight;
  tight.maxYoung = 5;
  CHECK_THROWS_AS(enumerateYoung(oracle::blocks({3}), tight), CapExceeded);
  CHECK(enumerateYoung(oracle::blocks({2, 2}), tight).size() == 4);
}

TEST_CASE("isInYoung") {
  const Coloring c = Coloring::fromColors({0, 0, 1});
  CHECK(isInYoung(Permutation::identity(3), c));
  CHECK_FALSE(isInYoung(parseCycles("(0 2)", 3), c));
  CHECK(isInYoung(parseCycles("(0 1)", 3), c));
  CHECK_THROWS_AS(isInYoung(Permutation::identity(2), c), ValidationError);
}

TEST_CASE("enumerateYoung equals the filtered scan and is a subgroup, N <= 6") {
  for (const char* letters : {"a", "ab", "aab", "aba", "abc", "aabb", "abab", "aaabb", "aabbc", "abcab", "aabbcc",
                              "aaabbb", "aaaaaa", "abcdef"}) {
    CAPTURE(letters);
    const Coloring c = Coloring::fromLetters(letters);
    auto listed = enumerateYoung(c);
    CHECK(listed.size() == youngOrder(c));
    std::sort(listed.begin(), listed.end());
    CHECK(std::adjacent_find(listed.begin(), listed.end()) == listed.end());
    CHECK(listed == oracle::youngByFilter(c));
    const std::set<Permutation> members(listed.begin(), listed.end());
    for (const Permutation& a : listed) {
      CHECK(isInYoung(a, c));
      CHECK(members.contains(inverse(a)));
      if (listed.size() <= 36) {
        for (const Permutation& b : listed) CHECK(members.contains(compose(a, b)));
      }
    }
  }
}
