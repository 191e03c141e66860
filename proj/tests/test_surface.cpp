#include <doctest.h>

#include <random>
#include <set>

#include "colhur/classes.hpp"
#include "colhur/errors.hpp"
#include "colhur/surface.hpp"
#include "oracle.hpp"

using namespace colhur;

namespace {

Permutation cyc(const char* text, std::size_t n) { return parseCycles(text, n); }

std::size_t chamberAcross(const LabeledSurface& s, Point chamber, Sign sign, EdgeSlot slot) {
  return chamberOf(s.glued({triangleOf(chamber, sign), slot}).triangle);
}

}  // namespace

TEST_CASE("buildSurface on one chamber glues it to itself") {
  const LabeledSurface s = buildSurface(Permutation::identity(1), Permutation::identity(1), oracle::blocks({1}));
  CHECK(s.chamberCount() == 1);
  CHECK(s.glued({0, EdgeSlot::NearIR}) == SlotRef{1, EdgeSlot::NearIR});
  CHECK(s.glued({1, EdgeSlot::MidIR}) == SlotRef{0, EdgeSlot::MidIR});
  CHECK(s.glued({0, EdgeSlot::FarUV}) == SlotRef{1, EdgeSlot::FarUV});
}

TEST_CASE("buildSurface follows the gluing rules") {
  const LabeledSurface s = buildSurface(cyc("(0 1)", 2), Permutation::identity(2), oracle::blocks({2}));
  CHECK(chamberAcross(s, 0, Sign::Plus, EdgeSlot::NearIR) == 1);
  CHECK(chamberAcross(s, 1, Sign::Plus, EdgeSlot::NearIR) == 0);
  CHECK(chamberAcross(s, 0, Sign::Minus, EdgeSlot::MidIR) == 0);
  CHECK(chamberAcross(s, 1, Sign::Minus, EdgeSlot::MidIR) == 1);
  CHECK(chamberAcross(s, 1, Sign::Plus, EdgeSlot::FarUV) == 1);
  CHECK_THROWS_AS(buildSurface(Permutation::identity(2), Permutation::identity(3), oracle::blocks({2})), ValidationError);
}

TEST_CASE("edge counts and sign alternation") {
  std::mt19937_64 rng(11);
  const Coloring c = oracle::blocks({3, 2});
  const LabeledSurface s = buildSurface(oracle::randomPermutation(5, rng), oracle::randomPermutation(5, rng), c);
  std::map<EdgeSlot, int> slots;
  for (std::uint32_t t = 0; t < s.triangleCount(); ++t) {
    for (EdgeSlot e : {EdgeSlot::NearIR, EdgeSlot::MidIR, EdgeSlot::FarUV}) {
      ++slots[e];
      CHECK(signOf(s.glued({t, e}).triangle) != signOf(t));
    }
  }
  CHECK(slots[EdgeSlot::NearIR] == 10);  // 2 slots per edge, n edges per color
  CHECK(slots[EdgeSlot::FarUV] == 10);
}

TEST_CASE("recoverPair inverts buildSurface") {
  CHECK(recoverPair(buildSurface(Permutation::identity(3), Permutation::identity(3), oracle::blocks({3}))) ==
        std::pair{Permutation::identity(3), Permutation::identity(3)});
  CHECK(recoverPair(buildSurface(cyc("(0 1 2)", 3), cyc("(0 2)", 3), oracle::blocks({2, 1}))) ==
        std::pair{cyc("(0 1 2)", 3), cyc("(0 2)", 3)});

  const auto s3 = oracle::symmetricGroup(3);
  std::set<std::vector<SlotRef>> complexes;
  for (const Permutation& u : s3) {
    for (const Permutation& v : s3) {
      const LabeledSurface s = buildSurface(u, v, oracle::blocks({3}));
      CHECK(recoverPair(s) == std::pair{u, v});
      complexes.emplace(s.gluing().begin(), s.gluing().end());
    }
  }
  CHECK(complexes.size() == 36);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const Permutation u = oracle::randomPermutation(n, rng);
    const Permutation v = oracle::randomPermutation(n, rng);
    CHECK(recoverPair(buildSurface(u, v, Coloring::fromMultiplicities(std::vector<std::size_t>{n}))) == std::pair{u, v});
  }
}

TEST_CASE("fromGluing rejects malformed matchings") {
  const LabeledSurface good = buildSurface(cyc("(0 1)", 2), cyc("(0 1)", 2), oracle::blocks({2}));
  std::vector<SlotRef> gluing(good.gluing().begin(), good.gluing().end());
  std::vector<Color> colors{0, 0};
  CHECK(LabeledSurface::fromGluing(gluing, colors) == good);

  auto broken = gluing;
  broken[0] = SlotRef{0, EdgeSlot::NearIR};  // glued to itself
  CHECK_THROWS_AS(LabeledSurface::fromGluing(broken, colors), ValidationError);

  broken = gluing;
  broken[0] = SlotRef{1, EdgeSlot::NearIR};  // not an involution
  CHECK_THROWS_AS(LabeledSurface::fromGluing(broken, colors), ValidationError);

  // Swap the farUV partners of the two chambers: involutive and sign-alternating,
  // but farUV no longer stays inside a chamber.
  broken = gluing;
  broken[3 * 0 + 2] = SlotRef{3, EdgeSlot::FarUV};
  broken[3 * 3 + 2] = SlotRef{0, EdgeSlot::FarUV};
  broken[3 * 2 + 2] = SlotRef{1, EdgeSlot::FarUV};
  broken[3 * 1 + 2] = SlotRef{2, EdgeSlot::FarUV};
  CHECK_THROWS_AS(LabeledSurface::fromGluing(broken, colors), ValidationError);

  CHECK_THROWS_AS(LabeledSurface::fromGluing(gluing, {0}), ValidationError);
  CHECK_THROWS_AS(LabeledSurface::fromGluing({}, {}), ValidationError);
}

TEST_CASE("vertexOrbits") {
  const VertexOrbits one = vertexOrbits(buildSurface(Permutation::identity(1), Permutation::identity(1), oracle::blocks({1})));
  CHECK(one.nearFar.size() == 1);
  CHECK(one.midFar.size() == 1);
  CHECK(one.nearMidPlus.size() == 1);

  const VertexOrbits swap = vertexOrbits(buildSurface(cyc("(0 1)", 2), Permutation::identity(2), oracle::blocks({2})));
  CHECK(swap.nearFar.size() == 1);
  CHECK(swap.midFar.size() == 2);
  CHECK(swap.nearMidPlus.size() == 1);

  const VertexOrbits three = vertexOrbits(buildSurface(cyc("(0 1 2)", 3), cyc("(0 1 2)", 3), oracle::blocks({3})));
  CHECK(three.nearFar.size() == 1);
  CHECK(three.midFar.size() == 1);
  CHECK(three.nearMidPlus == std::vector<Cycle>{{0, 2, 1}});
}

TEST_CASE("vertex cycles are the cycles of u, v, vu and uv") {
  auto check = [](const Permutation& u, const Permutation& v) {
    const VertexOrbits o = vertexOrbits(buildSurface(u, v, Coloring::fromMultiplicities(std::vector<std::size_t>{u.degree()})));
    CHECK(o.nearFar == cycleDecomposition(u));
    CHECK(o.midFar == cycleDecomposition(v));
    CHECK(o.nearMidPlus == cycleDecomposition(compose(v, u)));
    CHECK(o.nearMidMinus == cycleDecomposition(compose(u, v)));
  };
  const auto s3 = oracle::symmetricGroup(3);
  for (const Permutation& u : s3) {
    for (const Permutation& v : s3) check(u, v);
  }
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 8;
    check(oracle::randomPermutation(n, rng), oracle::randomPermutation(n, rng));
  }
}

TEST_CASE("componentProfile") {
  const auto spheres = componentProfile(buildSurface(Permutation::identity(3), Permutation::identity(3), oracle::blocks({3})));
  REQUIRE(spheres.size() == 3);
  for (const ComponentProfile& p : spheres) {
    CHECK(p.euler == 2);
    CHECK(p.genus == 0);
  }
  const auto torus = componentProfile(buildSurface(cyc("(0 1 2)", 3), cyc("(0 1 2)", 3), oracle::blocks({3})));
  REQUIRE(torus.size() == 1);
  CHECK(torus[0].vertices == 3);
  CHECK(torus[0].euler == 0);
  CHECK(torus[0].genus == 1);
  const auto sphere = componentProfile(buildSurface(cyc("(0 1)", 2), Permutation::identity(2), oracle::blocks({2})));
  REQUIRE(sphere.size() == 1);
  CHECK(sphere[0].euler == 2);
}

TEST_CASE("Euler characteristic per component is even, at most 2, and sums to c(u)+c(v)+c(vu)-N") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const Permutation u = oracle::randomPermutation(n, rng);
    const Permutation v = oracle::randomPermutation(n, rng);
    const auto parts = componentProfile(buildSurface(u, v, Coloring::fromMultiplicities(std::vector<std::size_t>{n})));
    std::int64_t total = 0;
    std::size_t chambers = 0;
    for (const ComponentProfile& p : parts) {
      CHECK(p.euler % 2 == 0);
      CHECK(p.euler <= 2);
      total += p.euler;
      chambers += p.chambers.size();
    }
    CHECK(chambers == n);
    CHECK(total == static_cast<std::int64_t>(cycleCount(u) + cycleCount(v) + cycleCount(compose(v, u))) -
                       static_cast<std::int64_t>(n));
  }
}

TEST_CASE("stabilizerOrderY") {
  const Coloring c = Coloring::fromColors({0, 0, 1});
  CHECK(stabilizerOrderY(Permutation::identity(3), Permutation::identity(3), c) == 2);
  CHECK(stabilizerOrderY(cyc("(0 2)", 3), cyc("(1 2)", 3), c) == 1);
  CHECK(stabilizerOrderY(cyc("(0 1 2)", 3), cyc("(0 1 2)", 3), oracle::blocks({3})) == 3);
}

TEST_CASE("stabilizerOrderY matches automorphisms of the explicit complex, N <= 4") {
  for (const char* letters : {"a", "ab", "aa", "aab", "aaa", "abc", "aabb", "aaab", "aaaa", "abab"}) {
    CAPTURE(letters);
    const Coloring c = Coloring::fromLetters(letters);
    const auto group = oracle::symmetricGroup(c.degree());
    for (const Permutation& u : group) {
      for (const Permutation& v : group) {
        const auto aut = stabilizerOrderY(u, v, c);
        CHECK(aut == complexAutomorphismCount(buildSurface(u, v, c)));
        CHECK(youngOrder(c) % aut == 0);
      }
    }
  }
}

TEST_CASE("canonicalOrbitKey") {
  const Coloring c = Coloring::fromColors({0, 0, 1});
  const PermutationPair e{Permutation::identity(3), Permutation::identity(3)};
  CHECK(canonicalOrbitKey(e.first, e.second, c) == e);
  CHECK(canonicalOrbitKey(cyc("(0 2)", 3), cyc("(1 2)", 3), c) == canonicalOrbitKey(cyc("(1 2)", 3), cyc("(0 2)", 3), c));
  std::mt19937_64 rng(17);
  const Coloring wide = Coloring::fromLetters("aabbcab");
  for (int trial = 0; trial < 1000; ++trial) {
    const Permutation u = oracle::randomPermutation(7, rng);
    const Permutation v = oracle::randomPermutation(7, rng);
    const PermutationPair key = canonicalOrbitKey(u, v, wide);
    CHECK(canonicalOrbitKey(key.first, key.second, wide) == key);
    CHECK(key <= PermutationPair{u, v});
  }
}

TEST_CASE("enumerateSurfaceClasses worked cases") {
  const Coloring c = Coloring::fromColors({0, 0, 1});
  const NeckMess t = parseNeckMess("ab|a");
  const auto threeCycle = enumerateSurfaceClasses(t, t, parseNeckMess("aab"), c);
  REQUIRE(threeCycle.size() == 1);
  CHECK(threeCycle[0].autOrder == 1);
  CHECK(threeCycle[0].orbitSize == 2);
  const auto unit = enumerateSurfaceClasses(t, t, identityMess(c), c);
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].autOrder == 1);

  const NeckMess transposition = parseNeckMess("aa|a");
  const auto mono = enumerateSurfaceClasses(transposition, transposition, parseNeckMess("aaa"), oracle::blocks({3}));
  REQUIRE(mono.size() == 1);
  CHECK(mono[0].autOrder == 1);
  CHECK(mono[0].orbitSize == 6);

  CHECK(enumerateSurfaceClasses(t, t, parseNeckMess("aa|b"), c).empty());
}

TEST_CASE("countTriples") {
  const Coloring c = Coloring::fromColors({0, 0, 1});
  const NeckMess t = parseNeckMess("ab|a");
  CHECK(countTriples(t, t, parseNeckMess("aab"), c) == 2);
  CHECK_THROWS_AS(countTriples(t, t, parseNeckMess("aaa"), c), ValidationError);
  const NeckMess e = identityMess(c);
  for (const NeckMess& mu : enumerateNeckMesses(c.multiplicities())) {
    for (const NeckMess& nu : enumerateNeckMesses(c.multiplicities())) {
      CHECK(countTriples(e, mu, nu, c) == (mu == nu ? classSize(mu, c) : 0));
    }
  }
}

TEST_CASE("surface orbits partition all pairs, N <= 5") {
  for (const char* letters : {"ab", "aab", "aaa", "aabb", "aaab", "aabbc", "aaabb"}) {
    CAPTURE(letters);
    const Coloring c = Coloring::fromLetters(letters);
    const auto classes = enumerateNeckMesses(c.multiplicities());
    std::uint64_t pairs = 0;
    for (const NeckMess& lambda : classes) {
      for (const NeckMess& mu : classes) {
        const auto counts = countTriplesByTarget(lambda, mu, c);
        for (const auto& [nu, list] : enumerateSurfaceClassesByTarget(lambda, mu, c)) {
          std::uint64_t viaOrbits = 0;
          for (const SurfaceClass& cls : list) {
            CHECK(cls.autOrder * cls.orbitSize == youngOrder(c));
            CHECK(cls.autOrder == stabilizerOrderY(cls.orbitKey.first, cls.orbitKey.second, c));
            CHECK(canonicalOrbitKey(cls.orbitKey.first, cls.orbitKey.second, c) == cls.orbitKey);
            CHECK(coloredCycleType(compose(cls.orbitKey.second, cls.orbitKey.first), c) == nu);
            viaOrbits += youngOrder(c) / cls.autOrder;
          }
          CHECK(viaOrbits == counts.at(nu));
          pairs += viaOrbits;
        }
      }
    }
    CHECK(pairs == factorial(c.degree()) * factorial(c.degree()));
  }
}
