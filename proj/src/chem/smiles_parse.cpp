//
// Project polymm - Copyright 2026 polymm contributors
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polymm/chem/aromaticity.hpp"
#include "polymm/chem/element.hpp"
#include "polymm/chem/rings.hpp"
#include "polymm/chem/smiles.hpp"

namespace polymm::chem {

namespace {

[[noreturn]] void fail(SmilesErrorCode code, std::size_t pos, const std::string& msg) {
  throw SmilesError(code, pos, msg);
}

struct PendingBond {
  BondOrder order = BondOrder::Single;
  bool aromatic = false;
  bool explicit_symbol = false;
  std::size_t position = 0;
};

struct OpenRing {
  int atom = -1;
  std::optional<PendingBond> bond;
  std::size_t position = 0;
};

// Sigma-bond sum with aromatic bonds counted once. Used for both the
// valence check and implicit-hydrogen filling.
int sigma_sum(const MolecularGraph& g, int atom_index) {
  int sum = 0;
  for (int bi : g.bonds_of(atom_index)) {
    const Bond& b = g.bonds[static_cast<std::size_t>(bi)];
    switch (b.order) {
      case BondOrder::Single: sum += 1; break;
      case BondOrder::Double: sum += 2; break;
      case BondOrder::Triple: sum += 3; break;
      case BondOrder::Aromatic: sum += 1; break;
    }
  }
  return sum;
}

bool has_multiple_bond(const MolecularGraph& g, int atom_index) {
  for (int bi : g.bonds_of(atom_index)) {
    const BondOrder o = g.bonds[static_cast<std::size_t>(bi)].order;
    if (o == BondOrder::Double || o == BondOrder::Triple) return true;
  }
  return false;
}

void fill_implicit_hydrogens(MolecularGraph& g) {
  for (Atom& atom : g.atoms) {
    if (atom.is_wildcard()) continue;
    const int sigma = sigma_sum(g, atom.index);
    if (atom.bracket) {
      // Bracket atoms carry their hydrogen count explicitly; only check the
      // total does not exceed the charge-adjusted maximum valence.
      const auto cap = max_valence(atom.atomic_number, atom.formal_charge);
      if (cap && sigma + atom.explicit_h > *cap + (atom.written_aromatic ? 1 : 0)) {
        fail(SmilesErrorCode::ValenceExceeded, SmilesError::npos,
             "valence exceeded on atom " + std::to_string(atom.index));
      }
      continue;
    }
    // Organic subset: aromatic B/C/N/P reserve one slot for the ring pi bond
    // unless a written double/triple bond already provides it.
    const int z = atom.atomic_number;
    int pi_need = 0;
    if (atom.written_aromatic && (z == 5 || z == 6 || z == 7 || z == 15) &&
        !has_multiple_bond(g, atom.index)) {
      pi_need = 1;
    }
    const int total = sigma + pi_need;
    int valence = -1;
    for (int v : standard_valences(z)) {
      if (total <= v) {
        valence = v;
        break;
      }
    }
    if (valence < 0) {
      fail(SmilesErrorCode::ValenceExceeded, SmilesError::npos,
           "valence exceeded on atom " + std::to_string(atom.index));
    }
    atom.implicit_h = valence - total;
  }
}

}  // namespace

bool has_polymer_wildcards(const MolecularGraph& graph) {
  int n = 0;
  for (const Atom& a : graph.atoms) n += a.is_wildcard() ? 1 : 0;
  return n == 2;
}

MolecularGraph parse(std::string_view smiles) {
  const std::vector<Token> tokens = tokenize(smiles);

  MolecularGraph g;
  g.source_smiles.assign(smiles);

  int previous_atom = -1;
  std::optional<PendingBond> pending;
  std::vector<int> branch_stack;
  std::vector<std::size_t> branch_positions;
  std::map<int, OpenRing> open_rings;
  std::vector<std::size_t> colon_bonds;

  auto make_bond = [&](int a, int b, const std::optional<PendingBond>& spec, std::size_t pos) {
    if (a == b) fail(SmilesErrorCode::BadRingBond, pos, "bond joins an atom to itself");
    if (g.bond_between(a, b) != -1) {
      fail(SmilesErrorCode::BadRingBond, pos, "duplicate bond between atoms");
    }
    Bond bond;
    bond.a = a;
    bond.b = b;
    if (spec) {
      bond.order = spec->aromatic ? BondOrder::Aromatic : spec->order;
      if (spec->aromatic) colon_bonds.push_back(g.bonds.size());
    } else if (g.atoms[static_cast<std::size_t>(a)].written_aromatic &&
               g.atoms[static_cast<std::size_t>(b)].written_aromatic) {
      bond.order = BondOrder::Aromatic;
    } else {
      bond.order = BondOrder::Single;
    }
    g.bonds.push_back(bond);
    g.rebuild_adjacency();
  };

  for (const Token& tok : tokens) {
    switch (tok.kind) {
      case TokenKind::Atom: {
        Atom atom;
        atom.atomic_number = tok.atomic_number;
        atom.formal_charge = tok.formal_charge;
        atom.isotope = tok.isotope;
        atom.explicit_h = tok.explicit_h;
        atom.written_aromatic = tok.aromatic;
        atom.bracket = tok.bracket;
        atom.index = g.atom_count();
        g.atoms.push_back(atom);
        g.rebuild_adjacency();
        if (previous_atom >= 0) {
          make_bond(previous_atom, atom.index, pending, tok.position);
        } else if (pending) {
          fail(SmilesErrorCode::BadRingBond, pending->position, "bond symbol with no preceding atom");
        }
        pending.reset();
        previous_atom = atom.index;
        break;
      }
      case TokenKind::Bond: {
        if (previous_atom < 0) {
          fail(SmilesErrorCode::BadRingBond, tok.position, "bond symbol with no preceding atom");
        }
        if (pending) fail(SmilesErrorCode::BadRingBond, tok.position, "two consecutive bond symbols");
        pending = PendingBond{tok.order, tok.aromatic_bond, true, tok.position};
        break;
      }
      case TokenKind::RingClosure: {
        if (previous_atom < 0) {
          fail(SmilesErrorCode::UnmatchedRingClosure, tok.position, "ring closure before any atom");
        }
        auto it = open_rings.find(tok.ring_id);
        if (it == open_rings.end()) {
          open_rings[tok.ring_id] = OpenRing{previous_atom, pending, tok.position};
        } else {
          OpenRing open = it->second;
          open_rings.erase(it);
          std::optional<PendingBond> spec;
          if (open.bond && pending) {
            const bool same = open.bond->order == pending->order &&
                              open.bond->aromatic == pending->aromatic;
            if (!same) {
              fail(SmilesErrorCode::RingBondMismatch, tok.position,
                   "ring closure bond symbols disagree");
            }
            spec = pending;
          } else if (open.bond) {
            spec = open.bond;
          } else if (pending) {
            spec = pending;
          }
          make_bond(open.atom, previous_atom, spec, tok.position);
        }
        pending.reset();
        break;
      }
      case TokenKind::BranchOpen: {
        if (previous_atom < 0) {
          fail(SmilesErrorCode::UnmatchedParenthesis, tok.position, "branch with no root atom");
        }
        if (pending) fail(SmilesErrorCode::BadRingBond, tok.position, "bond symbol before branch open");
        branch_stack.push_back(previous_atom);
        branch_positions.push_back(tok.position);
        break;
      }
      case TokenKind::BranchClose: {
        if (branch_stack.empty()) {
          fail(SmilesErrorCode::UnmatchedParenthesis, tok.position, "unmatched ')'");
        }
        if (pending) fail(SmilesErrorCode::BadRingBond, tok.position, "dangling bond symbol in branch");
        previous_atom = branch_stack.back();
        branch_stack.pop_back();
        branch_positions.pop_back();
        break;
      }
      case TokenKind::Dot: {
        fail(SmilesErrorCode::DisconnectedInput, tok.position,
             "multi-fragment input is not a single polymer graph");
      }
    }
  }

  if (!branch_stack.empty()) {
    fail(SmilesErrorCode::UnmatchedParenthesis, branch_positions.back(), "unmatched '('");
  }
  if (!open_rings.empty()) {
    const auto& [digit, open] = *open_rings.begin();
    fail(SmilesErrorCode::UnmatchedRingClosure, open.position,
         "ring closure " + std::to_string(digit) + " never paired");
  }
  if (pending) {
    fail(SmilesErrorCode::BadRingBond, pending->position, "dangling bond symbol");
  }
  if (g.atoms.empty()) {
    throw SmilesError(SmilesErrorCode::EmptyInput, 0, "no atoms in input");
  }

  // Connectivity: every atom reachable from atom 0.
  {
    std::vector<char> seen(g.atoms.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int bi : g.bonds_of(a)) {
        const int nb = g.bonds[static_cast<std::size_t>(bi)].other(a);
        if (!seen[static_cast<std::size_t>(nb)]) {
          seen[static_cast<std::size_t>(nb)] = 1;
          stack.push_back(nb);
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
      fail(SmilesErrorCode::DisconnectedInput, SmilesError::npos, "input graph is disconnected");
    }
  }

  g.rings = find_sssr(g);
  for (const Ring& ring : g.rings) {
    for (int bi : ring.bonds) g.bonds[static_cast<std::size_t>(bi)].in_ring = true;
    for (int ai : ring.atoms) g.atoms[static_cast<std::size_t>(ai)].in_ring = true;
  }

  fill_implicit_hydrogens(g);
  perceive_aromaticity(g);

  // An explicit ':' bond must have ended up inside an aromatic ring.
  for (std::size_t bi : colon_bonds) {
    if (!g.bonds[bi].aromatic) {
      fail(SmilesErrorCode::KekulizationFailure, SmilesError::npos,
           "':' bond outside any aromatic ring");
    }
  }

  return g;
}

}  // namespace polymm::chem
