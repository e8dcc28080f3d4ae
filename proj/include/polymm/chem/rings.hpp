//
// Project polymm - Copyright 2026 polymm contributors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef POLYMM_CHEM_RINGS_HPP
#define POLYMM_CHEM_RINGS_HPP

#include <vector>

#include "polymm/chem/molecule.hpp"

namespace polymm::chem {

/// Smallest set of smallest rings: exactly |bonds| - |atoms| + 1 independent
/// simple cycles for a connected graph, chosen smallest-first (Horton
/// candidate set, GF(2) independence). Ties break on the sorted atom-index
/// sequence, so the result is deterministic and independent of input atom
/// order permutations of the same graph.
std::vector<Ring> find_sssr(const MolecularGraph& graph);

}  // namespace polymm::chem

#endif  // POLYMM_CHEM_RINGS_HPP
