#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "colhur/coloring.hpp"
#include "colhur/limits.hpp"
#include "colhur/necklace.hpp"
#include "colhur/surface.hpp"

namespace colhur {

using Rational = boost::multiprecision::cpp_rational;

/// A finitely supported combination of class sums gamma(theta) with exact
/// rational coefficients. Zero coefficients are never stored.
class AlgebraElement {
 public:
  void add(const NeckMess& type, const Rational& coefficient);
  Rational coefficient(const NeckMess& type) const;
  const std::map<NeckMess, Rational>& terms() const noexcept { return terms_; }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::map<NeckMess, Rational> terms_;
};

/// gamma(mu) * gamma(lambda), computed as a function on S_N by summing vu
/// over v in Gamma[mu], u in Gamma[lambda]. Throws VerificationFailure when
/// the product is not constant on Y-classes.
AlgebraElement convolveClassSums(const NeckMess& mu, const NeckMess& lambda, const Coloring& coloring,
                                 const Limits& limits = {});

/// #{u in Gamma[lambda] : w0 u^-1 in Gamma[mu]} for the fixed target w0.
std::uint64_t structureConstantAt(const NeckMess& lambda, const NeckMess& mu, const Permutation& target,
                                  const Coloring& coloring, const Limits& limits = {});

/// c^nu_{mu lambda} by direct count with target classRepresentative(nu).
std::uint64_t structureConstantOracle(const NeckMess& lambda, const NeckMess& mu, const NeckMess& nu,
                                      const Coloring& coloring, const Limits& limits = {});

/// |Aut(nu)| * sum over surface classes of 1/autOrder.
Rational hurwitzSum(const NeckMess& nu, std::span<const SurfaceClass> classes);

/// c^nu_{mu lambda} as a colored Hurwitz number, exact; never rounded.
Rational hurwitzStructureConstant(const NeckMess& lambda, const NeckMess& mu, const NeckMess& nu,
                                  const Coloring& coloring, const Limits& limits = {});

/// c^nu_{mu lambda} for all ordered triples of classes.
class StructureTable {
 public:
  StructureTable(Coloring coloring, std::vector<NeckMess> classes);

  const Coloring& coloring() const noexcept { return coloring_; }
  std::span<const NeckMess> classes() const noexcept { return classes_; }
  std::size_t classCount() const noexcept { return classes_.size(); }
  std::optional<std::size_t> indexOf(const NeckMess& type) const;

  std::uint64_t at(std::size_t mu, std::size_t lambda, std::size_t nu) const {
    return constants_[(mu * classes_.size() + lambda) * classes_.size() + nu];
  }
  std::uint64_t& at(std::size_t mu, std::size_t lambda, std::size_t nu) {
    return constants_[(mu * classes_.size() + lambda) * classes_.size() + nu];
  }

  friend bool operator==(const StructureTable&, const StructureTable&) = default;

 private:
  Coloring coloring_;
  std::vector<NeckMess> classes_;
  std::map<NeckMess, std::size_t> index_;
  std::vector<std::uint64_t> constants_;
};

/// Oracle constants for every (mu, lambda, nu), classes in enumerateNeckMesses
/// order. With `verifyHurwitz`, every cell is also computed from surface
/// classes and any mismatch throws VerificationFailure carrying the witness.
StructureTable multiplicationTable(const Coloring& coloring, bool verifyHurwitz = false,
                                   const Limits& limits = {});

struct AssociativityResult {
  bool associative = true;
  /// (mu, lambda, nu, tau) of the first failing coefficient.
  std::optional<std::array<std::size_t, 4>> counterexample;
};

/// Checks (gamma_nu gamma_mu) gamma_lambda = gamma_nu (gamma_mu gamma_lambda)
/// coefficient by coefficient.
AssociativityResult checkAssociativity(const StructureTable& table);

/// First (theta, other) where the identity mess is not a two-sided unit.
std::optional<std::array<std::size_t, 2>> findUnitLawViolation(const StructureTable& table);

/// Center of C[S_N] by classical cycle types (partitions), scanning S_N.
/// Indexed by the monochrome messes so it can be compared with a
/// one-color multiplicationTable.
StructureTable classicalCenterTable(std::size_t n, const Limits& limits = {});

}  // namespace colhur
