#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "colhur/coloring.hpp"
#include "colhur/limits.hpp"
#include "colhur/necklace.hpp"
#include "colhur/perm.hpp"

namespace colhur {

/// Reads point colors along each cycle of g. Two permutations are
/// Y-conjugate exactly when their colored cycle types agree.
NeckMess coloredCycleType(const Permutation& g, const Coloring& coloring);

/// Deterministic member of the class: necklaces are laid out in stored
/// order, each bead taking the smallest unused point of its color.
Permutation classRepresentative(const NeckMess& type, const Coloring& coloring);

/// Orbit-stabilizer size |Y| / |Aut(type)|.
std::uint64_t classSize(const NeckMess& type, const Coloring& coloring);

/// N! / |Aut(type)|. Agrees with classSize only for one-color colorings;
/// kept for reporting the two normalizations side by side.
std::uint64_t factorialOverAut(const NeckMess& type, const Coloring& coloring);

/// The Y-orbit of the representative under conjugation, sorted by images.
std::vector<Permutation> enumerateClass(const NeckMess& type, const Coloring& coloring,
                                        const Limits& limits = {});

/// Groups all of S_N by colored cycle type.
std::map<NeckMess, std::uint64_t> enumerateClassesByScan(const Coloring& coloring,
                                                         const Limits& limits = {});

}  // namespace colhur
