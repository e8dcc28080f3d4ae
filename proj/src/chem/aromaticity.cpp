//
// Project polymm - Copyright 2026 polymm contributors
// SPDX-License-Identifier: Apache-2.0
//

#include "polymm/chem/aromaticity.hpp"

#include <optional>
#include <string>
#include <vector>

#include "polymm/chem/smiles.hpp"

namespace polymm::chem {

namespace {

bool is_n_family(int z) { return z == 7 || z == 15 || z == 33; }
bool is_o_family(int z) { return z == 8 || z == 16 || z == 34; }

int connection_count(const MolecularGraph& g, const Atom& a) {
  return g.degree(a.index) + a.total_h();
}

// Double bond from `a` to a partner that is itself a ring atom anywhere in
// the molecule; such pi electrons stay inside the ring system regardless of
// which Kekule spelling was used.
bool has_ring_double(const MolecularGraph& g, int atom_index) {
  for (int bi : g.bonds_of(atom_index)) {
    const Bond& b = g.bonds[static_cast<std::size_t>(bi)];
    if (b.order == BondOrder::Double &&
        g.atoms[static_cast<std::size_t>(b.other(atom_index))].in_ring) {
      return true;
    }
  }
  return false;
}

bool has_double_or_triple(const MolecularGraph& g, int atom_index) {
  for (int bi : g.bonds_of(atom_index)) {
    const BondOrder o = g.bonds[static_cast<std::size_t>(bi)].order;
    if (o == BondOrder::Double || o == BondOrder::Triple) return true;
  }
  return false;
}

bool has_triple(const MolecularGraph& g, int atom_index) {
  for (int bi : g.bonds_of(atom_index)) {
    if (g.bonds[static_cast<std::size_t>(bi)].order == BondOrder::Triple) return true;
  }
  return false;
}

// Pi-electron contribution of one atom of a ring written entirely lowercase.
// Returns nullopt when the atom cannot sit in an aromatic ring at all.
std::optional<int> claimed_pi(const MolecularGraph& g, const Atom& a) {
  const int z = a.atomic_number;
  if (z == 6 || z == 5) {
    if (a.formal_charge < 0) return 2;
    if (a.formal_charge > 0) return 0;
    return has_double_or_triple(g, a.index) ? 0 : 1;
  }
  if (is_n_family(z)) {
    const int connections = connection_count(g, a);
    if (a.formal_charge > 0) return connections >= 3 ? 1 : std::nullopt;
    if (a.formal_charge < 0) return 2;
    if (has_double_or_triple(g, a.index)) return 1;  // N-oxide style substituent
    return connections >= 3 ? 2 : 1;
  }
  if (is_o_family(z)) {
    return a.formal_charge > 0 ? 1 : 2;
  }
  return std::nullopt;
}

// Pi contribution on the Huckel path (ring written with explicit orders).
// nullopt = atom is not sp2-consistent, the ring cannot be aromatic.
std::optional<int> kekule_pi(const MolecularGraph& g, const Atom& a) {
  if (a.is_wildcard()) return std::nullopt;
  if (has_triple(g, a.index)) return std::nullopt;
  const int z = a.atomic_number;
  if (has_double_or_triple(g, a.index)) {
    // One pi electron when the double bond stays within the ring system;
    // an exocyclic carbonyl contributes none.
    return has_ring_double(g, a.index) ? 1 : 0;
  }
  // No double bond: lone-pair donors only.
  if (z == 6 || z == 5) {
    if (a.formal_charge < 0) return 2;
    if (a.formal_charge > 0) return 0;
    return std::nullopt;  // saturated carbon
  }
  if (is_n_family(z)) {
    if (a.formal_charge > 0) return std::nullopt;
    return connection_count(g, a) <= 3 ? std::optional<int>(2) : std::nullopt;
  }
  if (is_o_family(z)) {
    if (a.formal_charge > 0) return 1;
    return g.degree(a.index) == 2 ? std::optional<int>(2) : std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

void perceive_aromaticity(MolecularGraph& g) {
  for (Ring& ring : g.rings) {
    bool all_lowercase = true;
    for (int ai : ring.atoms) {
      if (!g.atoms[static_cast<std::size_t>(ai)].written_aromatic) {
        all_lowercase = false;
        break;
      }
    }
    // An explicit single bond inside the ring (biphenylene-style bridge)
    // takes the ring off the aromatic-as-written path.
    if (all_lowercase) {
      for (int bi : ring.bonds) {
        if (g.bonds[static_cast<std::size_t>(bi)].order != BondOrder::Aromatic) {
          all_lowercase = false;
          break;
        }
      }
    }

    if (all_lowercase) {
      int pi = 0;
      for (int ai : ring.atoms) {
        const auto contribution = claimed_pi(g, g.atoms[static_cast<std::size_t>(ai)]);
        if (!contribution) {
          throw SmilesError(SmilesErrorCode::KekulizationFailure, SmilesError::npos,
                            "atom " + std::to_string(ai) + " cannot be aromatic");
        }
        pi += *contribution;
      }
      if (pi % 4 != 2) {
        throw SmilesError(SmilesErrorCode::KekulizationFailure, SmilesError::npos,
                          "aromatic-written ring has " + std::to_string(pi) +
                              " pi electrons, failing the 4n+2 rule");
      }
      ring.aromatic = true;
    } else {
      int pi = 0;
      bool consistent = true;
      for (int ai : ring.atoms) {
        const Atom& a = g.atoms[static_cast<std::size_t>(ai)];
        // Atoms shared with an aromatic-written ring carry their pi electron
        // in aromatic bonds rather than explicit doubles.
        std::optional<int> contribution;
        if (a.written_aromatic) {
          contribution = claimed_pi(g, a);
        } else {
          contribution = kekule_pi(g, a);
        }
        if (!contribution) {
          consistent = false;
          break;
        }
        pi += *contribution;
      }
      ring.aromatic = consistent && pi % 4 == 2;
    }
  }

  for (const Ring& ring : g.rings) {
    if (!ring.aromatic) continue;
    for (int ai : ring.atoms) g.atoms[static_cast<std::size_t>(ai)].aromatic = true;
    for (int bi : ring.bonds) g.bonds[static_cast<std::size_t>(bi)].aromatic = true;
  }

  // Spelled-aromatic atoms must have landed in a perceived aromatic ring.
  for (const Atom& a : g.atoms) {
    if (a.written_aromatic && !a.aromatic) {
      throw SmilesError(SmilesErrorCode::KekulizationFailure, SmilesError::npos,
                        "atom " + std::to_string(a.index) +
                            " written aromatic but not in any aromatic ring");
    }
  }

  // Implicitly-aromatic bonds that ended up outside every aromatic ring are
  // ordinary single bonds (e.g. a biphenyl bridge).
  for (Bond& b : g.bonds) {
    if (b.order == BondOrder::Aromatic && !b.aromatic) b.order = BondOrder::Single;
    if (b.aromatic) b.order = BondOrder::Aromatic;
  }
}

}  // namespace polymm::chem
