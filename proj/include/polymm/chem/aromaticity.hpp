//
// Project polymm - Copyright 2026 polymm contributors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef POLYMM_CHEM_AROMATICITY_HPP
#define POLYMM_CHEM_AROMATICITY_HPP

#include "polymm/chem/molecule.hpp"

namespace polymm::chem {

/// Reconcile aromaticity over the SSSR rings of a parsed graph.
///
/// A ring spelled entirely lowercase is validated against a Huckel 4n+2
/// pi-electron count and rejected (KekulizationFailure) when it fails.
/// Rings spelled with explicit bond orders are promoted to aromatic when
/// every member is sp2-consistent and the count passes. Atom, bond and ring
/// aromatic flags are set consistently; implicitly-aromatic bonds outside
/// any perceived aromatic ring are demoted to single.
void perceive_aromaticity(MolecularGraph& graph);

}  // namespace polymm::chem

#endif  // POLYMM_CHEM_AROMATICITY_HPP
