//
// Project polymm - Copyright 2026 polymm contributors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef POLYMM_CHEM_MOLECULE_HPP
#define POLYMM_CHEM_MOLECULE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace polymm::chem {

enum class BondOrder : std::uint8_t {
  Single = 1,
  Double = 2,
  Triple = 3,
  Aromatic = 4,
};

struct Atom {
  int atomic_number = 0;  // 0 = wildcard '*'
  int formal_charge = 0;
  int isotope = 0;        // 0 = unspecified
  int explicit_h = 0;     // bracket hydrogen count
  int implicit_h = 0;     // derived during parsing
  int index = 0;
  bool aromatic = false;          // perceived
  bool written_aromatic = false;  // spelled lowercase in the input
  bool bracket = false;
  bool in_ring = false;

  bool is_wildcard() const { return atomic_number == 0; }
  int total_h() const { return explicit_h + implicit_h; }
};

struct Bond {
  int a = 0;
  int b = 0;
  BondOrder order = BondOrder::Single;
  bool aromatic = false;  // perceived
  bool in_ring = false;

  int other(int atom_index) const { return atom_index == a ? b : a; }
};

/// One SSSR ring. Atoms are listed in traversal order around the cycle;
/// bonds[i] joins atoms[i] and atoms[(i+1) % size].
struct Ring {
  std::vector<int> atoms;
  std::vector<int> bonds;
  bool aromatic = false;
};

class MolecularGraph {
 public:
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
  std::vector<Ring> rings;
  std::string source_smiles;

  int atom_count() const { return static_cast<int>(atoms.size()); }
  int bond_count() const { return static_cast<int>(bonds.size()); }

  /// Bond indices incident to an atom.
  const std::vector<int>& bonds_of(int atom_index) const {
    return adjacency_[static_cast<std::size_t>(atom_index)];
  }

  int degree(int atom_index) const {
    return static_cast<int>(adjacency_[static_cast<std::size_t>(atom_index)].size());
  }

  int cyclomatic_number() const { return bond_count() - atom_count() + 1; }

  /// Bond index joining two atoms, or -1.
  int bond_between(int a, int b) const;

  /// Rebuild the adjacency lists; called after bond edits during parsing.
  void rebuild_adjacency();

 private:
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace polymm::chem

#endif  // POLYMM_CHEM_MOLECULE_HPP
