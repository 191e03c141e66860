#include "colhur/verify.hpp"

#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "colhur/algebra.hpp"
#include "colhur/classes.hpp"
#include "colhur/errors.hpp"
#include "colhur/surface.hpp"

namespace colhur {

namespace {

// Runs `body`; a thrown VerificationFailure or a returned message fails the check.
CheckResult runCheck(std::string name, const std::function<std::string()>& body) {
  CheckResult result{std::move(name), true, {}};
  try {
    result.detail = body();
  } catch (const VerificationFailure& e) {
    result.passed = false;
    result.detail = e.what();
  }
  return result;
}

void fail(const std::string& what) { throw VerificationFailure(what); }

std::string cycleList(const std::vector<Cycle>& cycles) {
  std::string out;
  for (const Cycle& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + std::to_string(c[i]);
    out += ')';
  }
  return out;
}

void checkSurface(const Permutation& u, const Permutation& v, const Coloring& coloring) {
  const LabeledSurface s = buildSurface(u, v, coloring);
  const std::string where = " for u=" + formatCycles(u) + " v=" + formatCycles(v);
  if (recoverPair(s) != std::pair{u, v}) fail("recoverPair did not invert buildSurface" + where);
  const VertexOrbits orbits = vertexOrbits(s);
  const Permutation vu = compose(v, u);
  if (orbits.nearFar != cycleDecomposition(u)) fail("nearIR-farUV cycles " + cycleList(orbits.nearFar) + " differ from u" + where);
  if (orbits.midFar != cycleDecomposition(v)) fail("midIR-farUV cycles " + cycleList(orbits.midFar) + " differ from v" + where);
  if (orbits.nearMidPlus != cycleDecomposition(vu)) fail("plus nearIR-midIR cycles differ from vu" + where);
  if (orbits.nearMidMinus != cycleDecomposition(compose(u, v))) fail("minus nearIR-midIR cycles differ from uv" + where);
  std::int64_t euler = 0;
  for (const ComponentProfile& p : componentProfile(s)) euler += p.euler;
  const auto expected = static_cast<std::int64_t>(cycleCount(u) + cycleCount(v) + cycleCount(vu)) -
                        static_cast<std::int64_t>(u.degree());
  if (euler != expected) fail("total Euler characteristic " + std::to_string(euler) + " != " + std::to_string(expected) + where);
}

Permutation randomPermutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::text() const {
  std::ostringstream out;
  out << "coloring " << coloring.letters() << " (N=" << coloring.degree() << ", psi=" << coloring.colorCount()
      << ", |Y|=" << youngOrder(coloring) << ")\n";
  for (const CheckResult& c : checks) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  out << "normalizations:\n";
  for (const std::string& note : notes) out << "  " << note << '\n';
  out << "result: " << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

Json VerifyReport::json() const {
  Json out;
  out["coloring"] = coloringToJson(coloring);
  Json list = Json::array();
  for (const CheckResult& c : checks) list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  out["checks"] = std::move(list);
  out["notes"] = notes;
  out["passed"] = passed();
  return out;
}

VerifyReport runVerify(const Coloring& coloring, const VerifyOptions& options, const Limits& limits) {
  const std::size_t n = coloring.degree();
  if (n > limits.maxVerifyDegree) {
    throw CapExceeded("full verification supports N <= " + std::to_string(limits.maxVerifyDegree));
  }
  VerifyReport report{coloring, {}, {}};
  const std::uint64_t young = youngOrder(coloring);
  const std::uint64_t nFactorial = factorial(n);
  const std::vector<NeckMess> messes = enumerateNeckMesses(coloring.multiplicities(), limits);
  const std::map<NeckMess, std::uint64_t> scan = enumerateClassesByScan(coloring, limits);

  report.checks.push_back(runCheck("neck mess enumeration matches S_N scan", [&] {
    std::vector<NeckMess> scanned;
    for (const auto& [type, size] : scan) scanned.push_back(type);
    if (scanned != messes) {
      fail("enumerated " + std::to_string(messes.size()) + " messes, scan found " + std::to_string(scanned.size()));
    }
    return std::to_string(messes.size()) + " classes";
  }));

  report.checks.push_back(runCheck("class sizes partition N!", [&] {
    std::uint64_t total = 0;
    for (const NeckMess& theta : messes) total += classSize(theta, coloring);
    if (total != nFactorial) fail("sum " + std::to_string(total) + " != " + std::to_string(nFactorial));
    return "sum " + std::to_string(total);
  }));

  report.checks.push_back(runCheck("orbit-stabilizer class sizes", [&] {
    for (const NeckMess& theta : messes) {
      const std::uint64_t size = classSize(theta, coloring);
      const std::string label = formatNeckMess(theta);
      if (size * neckMessAutOrder(theta) != young) fail(label + ": size * |Aut| != |Y|");
      auto it = scan.find(theta);
      if (it == scan.end() || it->second != size) fail(label + ": scan size differs from |Y|/|Aut|");
      if (enumerateClass(theta, coloring, limits).size() != size) fail(label + ": orbit length differs from class size");
    }
    return std::string();
  }));

  report.checks.push_back(runCheck("class representatives round trip", [&] {
    for (const NeckMess& theta : messes) {
      if (coloredCycleType(classRepresentative(theta, coloring), coloring) != theta) {
        fail("representative of " + formatNeckMess(theta) + " has a different type");
      }
    }
    return std::string();
  }));

  report.checks.push_back(runCheck("Y-orbits coincide with colored cycle types", [&] {
    const std::vector<Permutation> ys = enumerateYoung(coloring, limits);
    std::map<Permutation, std::size_t> orbitOf;
    std::map<NeckMess, std::size_t> orbitOfType;
    std::size_t orbits = 0;
    forEachPermutation(n, [&](const Permutation& g) {
      if (orbitOf.contains(g)) return;
      for (const Permutation& h : ys) orbitOf.emplace(conjugate(g, h), orbits);
      ++orbits;
    });
    for (const auto& [g, id] : orbitOf) {
      auto [it, inserted] = orbitOfType.emplace(coloredCycleType(g, coloring), id);
      if (!inserted && it->second != id) fail("two Y-orbits share type " + formatNeckMess(it->first));
    }
    if (orbitOfType.size() != orbits) fail("one Y-orbit carries several types");
    return std::to_string(orbits) + " orbits";
  }));

  report.checks.push_back(runCheck("surface round trip, vertex cycles and Euler characteristic", [&] {
    if (nFactorial * nFactorial <= 20'000) {
      std::vector<Permutation> group;
      forEachPermutation(n, [&](const Permutation& g) { group.push_back(g); });
      for (const Permutation& u : group) {
        for (const Permutation& v : group) checkSurface(u, v, coloring);
      }
      return "all " + std::to_string(nFactorial * nFactorial) + " pairs";
    }
    std::mt19937_64 rng(options.seed);
    for (std::size_t i = 0; i < options.randomPairs; ++i) {
      Permutation u = randomPermutation(n, rng);
      checkSurface(u, randomPermutation(n, rng), coloring);
    }
    return std::to_string(options.randomPairs) + " random pairs, seed " + std::to_string(options.seed);
  }));

  if (n <= 4) {
    report.checks.push_back(runCheck("complex automorphisms equal Y-centralizers", [&] {
      std::size_t pairs = 0;
      forEachPermutation(n, [&](const Permutation& u) {
        forEachPermutation(n, [&](const Permutation& v) {
          const auto fromY = stabilizerOrderY(u, v, coloring, limits);
          const auto fromComplex = complexAutomorphismCount(buildSurface(u, v, coloring), limits);
          if (fromY != fromComplex) {
            fail("u=" + formatCycles(u) + " v=" + formatCycles(v) + ": " + std::to_string(fromY) + " vs " +
                 std::to_string(fromComplex));
          }
          ++pairs;
        });
      });
      return std::to_string(pairs) + " pairs";
    }));
  }

  const StructureTable table = multiplicationTable(coloring, false, limits);
  const std::size_t k = table.classCount();

  // One pass over all class pairs feeds the Hurwitz and counting checks.
  CheckResult hurwitz{"oracle equals colored Hurwitz number on all triples", true, {}};
  CheckResult counting{"triple counts: classSize(nu) * c = orbit sum = direct count", true, {}};
  CheckResult total{"all pairs are counted once: sum = (N!)^2", true, {}};
  std::uint64_t pairSum = 0;
  Rational inverseAutSum = 0;
  for (std::size_t mu = 0; mu < k && hurwitz.passed && counting.passed; ++mu) {
    for (std::size_t lambda = 0; lambda < k; ++lambda) {
      const NeckMess& lam = table.classes()[lambda];
      const NeckMess& m = table.classes()[mu];
      const auto surfaces = enumerateSurfaceClassesByTarget(lam, m, coloring, limits);
      const auto counts = countTriplesByTarget(lam, m, coloring, limits);
      for (std::size_t nu = 0; nu < k; ++nu) {
        const NeckMess& target = table.classes()[nu];
        std::span<const SurfaceClass> classes;
        if (auto it = surfaces.find(target); it != surfaces.end()) classes = it->second;
        const auto cnt = counts.contains(target) ? counts.at(target) : 0;
        const std::uint64_t c = table.at(mu, lambda, nu);
        const Rational h = hurwitzSum(target, classes);
        std::uint64_t orbitSum = 0;
        for (const SurfaceClass& cls : classes) {
          orbitSum += young / cls.autOrder;
          inverseAutSum += Rational(1, cls.autOrder);
        }
        const std::string triple = "(lambda, mu, nu) = (" + formatNeckMess(lam) + ", " + formatNeckMess(m) + ", " +
                                   formatNeckMess(target) + ")";
        if (h != Rational(c) && hurwitz.passed) {
          hurwitz.passed = false;
          std::ostringstream witness;
          witness << triple << ": oracle " << c << ", Hurwitz " << h << "; orbits:";
          for (const SurfaceClass& cls : classes) {
            witness << " [u=" << formatCycles(cls.orbitKey.first) << " v=" << formatCycles(cls.orbitKey.second)
                    << " aut=" << cls.autOrder << "]";
          }
          witness << "; pair count " << cnt;
          hurwitz.detail = witness.str();
        }
        if ((cnt != classSize(target, coloring) * c || cnt != orbitSum) && counting.passed) {
          counting.passed = false;
          counting.detail = triple + ": direct " + std::to_string(cnt) + ", classSize*c " +
                            std::to_string(classSize(target, coloring) * c) + ", orbit sum " + std::to_string(orbitSum);
        }
        pairSum += cnt;
      }
    }
  }
  if (hurwitz.passed) hurwitz.detail = std::to_string(k * k * k) + " triples";
  if (pairSum != nFactorial * nFactorial && hurwitz.passed && counting.passed) {
    total.passed = false;
    total.detail = std::to_string(pairSum) + " != " + std::to_string(nFactorial * nFactorial);
  } else {
    total.detail = std::to_string(pairSum);
  }
  report.checks.push_back(hurwitz);
  report.checks.push_back(counting);
  report.checks.push_back(total);

  if (n <= 5) {
    report.checks.push_back(runCheck("oracle is independent of the target representative", [&] {
      for (std::size_t nu = 0; nu < k; ++nu) {
        for (const Permutation& w : enumerateClass(table.classes()[nu], coloring, limits)) {
          for (std::size_t lambda = 0; lambda < k; ++lambda) {
            for (std::size_t mu = 0; mu < k; ++mu) {
              if (structureConstantAt(table.classes()[lambda], table.classes()[mu], w, coloring, limits) !=
                  table.at(mu, lambda, nu)) {
                fail("target " + formatCycles(w) + " changes c for nu=" + formatNeckMess(table.classes()[nu]));
              }
            }
          }
        }
      }
      return std::string();
    }));
  }

  report.checks.push_back(runCheck("class-sum products are class-constant and match the table", [&] {
    for (std::size_t mu = 0; mu < k; ++mu) {
      for (std::size_t lambda = 0; lambda < k; ++lambda) {
        const AlgebraElement product = convolveClassSums(table.classes()[mu], table.classes()[lambda], coloring, limits);
        for (std::size_t nu = 0; nu < k; ++nu) {
          if (product.coefficient(table.classes()[nu]) != Rational(table.at(mu, lambda, nu))) {
            fail("convolution disagrees with the table at mu=" + formatNeckMess(table.classes()[mu]) +
                 " lambda=" + formatNeckMess(table.classes()[lambda]) + " nu=" + formatNeckMess(table.classes()[nu]));
          }
        }
      }
    }
    return std::string();
  }));

  report.checks.push_back(runCheck("associativity", [&] {
    const AssociativityResult r = checkAssociativity(table);
    if (!r.associative) {
      const auto& [mu, lambda, nu, tau] = *r.counterexample;
      fail("fails at mu=" + formatNeckMess(table.classes()[mu]) + " lambda=" + formatNeckMess(table.classes()[lambda]) +
           " nu=" + formatNeckMess(table.classes()[nu]) + " tau=" + formatNeckMess(table.classes()[tau]));
    }
    return std::string();
  }));

  report.checks.push_back(runCheck("identity mess is a two-sided unit", [&] {
    if (auto bad = findUnitLawViolation(table)) {
      fail("fails at " + formatNeckMess(table.classes()[(*bad)[0]]) + ", " + formatNeckMess(table.classes()[(*bad)[1]]));
    }
    return std::string();
  }));

  if (coloring.colorCount() == 1) {
    report.checks.push_back(runCheck("one color: table equals the classical center of C[S_N]", [&] {
      if (classicalCenterTable(n, limits) != table) fail("tables differ");
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          for (std::size_t c = 0; c < k; ++c) {
            if (table.at(a, b, c) != table.at(b, a, c)) fail("table is not commutative");
          }
        }
      }
      return std::string();
    }));
  }

  // Normalizations, reported side by side.
  std::size_t differing = 0;
  for (const NeckMess& theta : messes) {
    const auto orbit = classSize(theta, coloring);
    const auto literal = factorialOverAut(theta, coloring);
    if (orbit != literal) ++differing;
    report.notes.push_back("class " + formatNeckMess(theta) + ": |Y|/|Aut| = " + std::to_string(orbit) +
                           " (scan " + std::to_string(scan.at(theta)) + "), N!/|Aut| = " + std::to_string(literal) +
                           (orbit != literal ? "  [differs]" : ""));
  }
  report.notes.push_back(differing == 0
                             ? "class sizes: N!/|Aut| agrees with the scan for every class"
                             : "class sizes: N!/|Aut| differs from the scan for " + std::to_string(differing) + " of " +
                                   std::to_string(messes.size()) + " classes");
  std::ostringstream labeled;
  labeled << "labeled surfaces: direct pair count " << pairSum << ", |Y| * sum 1/|Aut| = " << inverseAutSum * young
          << ", N! * sum 1/|Aut| = " << inverseAutSum * nFactorial;
  report.notes.push_back(labeled.str());
  if (young == 1) report.notes.push_back("Y is trivial: every class is a singleton");
  return report;
}

}  // namespace colhur
