//
// Project polymm - Copyright 2026 polymm contributors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef POLYMM_CHEM_SMILES_HPP
#define POLYMM_CHEM_SMILES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polymm/chem/molecule.hpp"

namespace polymm::chem {

enum class SmilesErrorCode {
  UnknownCharacter,
  UnterminatedBracket,
  UnmatchedRingClosure,
  UnmatchedParenthesis,
  ValenceExceeded,
  DisconnectedInput,
  KekulizationFailure,
  RingBondMismatch,
  BadRingBond,
  EmptyInput,
};

std::string_view to_string(SmilesErrorCode code);

class SmilesError : public std::runtime_error {
 public:
  SmilesError(SmilesErrorCode code, std::size_t position, const std::string& message)
      : std::runtime_error(message), code_(code), position_(position) {}

  SmilesErrorCode code() const { return code_; }
  /// Byte offset into the input, or npos when the error is not positional.
  std::size_t position() const { return position_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  SmilesErrorCode code_;
  std::size_t position_;
};

enum class TokenKind {
  Atom,
  Bond,
  RingClosure,
  BranchOpen,
  BranchClose,
  Dot,
};

struct Token {
  TokenKind kind = TokenKind::Atom;
  std::size_t position = 0;
  std::size_t length = 0;

  // Atom payload
  int atomic_number = 0;
  bool aromatic = false;
  bool bracket = false;
  int isotope = 0;
  int explicit_h = 0;
  int formal_charge = 0;

  // Bond payload; stereo markers / and \ are parsed as single bonds.
  BondOrder order = BondOrder::Single;
  bool aromatic_bond = false;

  // Ring-closure payload
  int ring_id = 0;
};

/// Split a SMILES string into tokens. Throws SmilesError with
/// UnknownCharacter or UnterminatedBracket.
std::vector<Token> tokenize(std::string_view smiles);

/// Parse one (P-)SMILES string into a validated molecular graph: branches
/// and ring closures resolved, SSSR computed, aromaticity perceived,
/// implicit hydrogens filled, valences checked. Throws SmilesError.
MolecularGraph parse(std::string_view smiles);

/// True when the record looks like a polymer repeat unit: exactly two
/// wildcard atoms. Advisory only; parsing never rejects on this.
bool has_polymer_wildcards(const MolecularGraph& graph);

}  // namespace polymm::chem

#endif  // POLYMM_CHEM_SMILES_HPP
