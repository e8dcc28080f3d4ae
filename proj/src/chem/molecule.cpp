//
// Project polymm - Copyright 2026 polymm contributors
// SPDX-License-Identifier: Apache-2.0
//

#include "polymm/chem/molecule.hpp"

namespace polymm::chem {

int MolecularGraph::bond_between(int a, int b) const {
  for (int bi : bonds_of(a)) {
    const Bond& bond = bonds[static_cast<std::size_t>(bi)];
    if (bond.other(a) == b) return bi;
  }
  return -1;
}

void MolecularGraph::rebuild_adjacency() {
  adjacency_.assign(atoms.size(), {});
  for (int bi = 0; bi < bond_count(); ++bi) {
    const Bond& bond = bonds[static_cast<std::size_t>(bi)];
    adjacency_[static_cast<std::size_t>(bond.a)].push_back(bi);
    adjacency_[static_cast<std::size_t>(bond.b)].push_back(bi);
  }
}

}  // namespace polymm::chem
