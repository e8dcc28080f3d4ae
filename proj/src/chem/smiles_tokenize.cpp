//
// Project polymm - Copyright 2026 polymm contributors
// SPDX-License-Identifier: Apache-2.0
//

#include <cctype>
#include <string>

#include "polymm/chem/element.hpp"
#include "polymm/chem/smiles.hpp"

namespace polymm::chem {

std::string_view to_string(SmilesErrorCode code) {
  switch (code) {
    case SmilesErrorCode::UnknownCharacter: return "UnknownCharacter";
    case SmilesErrorCode::UnterminatedBracket: return "UnterminatedBracket";
    case SmilesErrorCode::UnmatchedRingClosure: return "UnmatchedRingClosure";
    case SmilesErrorCode::UnmatchedParenthesis: return "UnmatchedParenthesis";
    case SmilesErrorCode::ValenceExceeded: return "ValenceExceeded";
    case SmilesErrorCode::DisconnectedInput: return "DisconnectedInput";
    case SmilesErrorCode::KekulizationFailure: return "KekulizationFailure";
    case SmilesErrorCode::RingBondMismatch: return "RingBondMismatch";
    case SmilesErrorCode::BadRingBond: return "BadRingBond";
    case SmilesErrorCode::EmptyInput: return "EmptyInput";
  }
  return "UnknownError";
}

namespace {

[[noreturn]] void fail(SmilesErrorCode code, std::size_t pos, const std::string& msg) {
  throw SmilesError(code, pos, msg + " at position " + std::to_string(pos));
}

bool is_two_letter_organic(std::string_view s, std::size_t i) {
  return (s[i] == 'C' && i + 1 < s.size() && s[i + 1] == 'l') ||
         (s[i] == 'B' && i + 1 < s.size() && s[i + 1] == 'r');
}

// Parses the contents between '[' and ']'. `i` points at '['.
Token read_bracket_atom(std::string_view s, std::size_t& i) {
  const std::size_t open = i;
  Token tok;
  tok.kind = TokenKind::Atom;
  tok.position = open;
  tok.bracket = true;
  ++i;

  auto need = [&](std::size_t at) {
    if (at >= s.size()) fail(SmilesErrorCode::UnterminatedBracket, open, "unterminated bracket atom");
  };

  need(i);
  while (std::isdigit(static_cast<unsigned char>(s[i]))) {  // isotope
    tok.isotope = tok.isotope * 10 + (s[i] - '0');
    ++i;
    need(i);
  }

  if (s[i] == '*') {
    tok.atomic_number = 0;
    ++i;
  } else if (std::isalpha(static_cast<unsigned char>(s[i]))) {
    std::string symbol(1, s[i]);
    const bool lowercase = std::islower(static_cast<unsigned char>(s[i]));
    ++i;
    need(i);
    // Two-letter symbols: second letter always lowercase; 'H' suffix is the
    // hydrogen-count marker, never part of a symbol here.
    if (std::islower(static_cast<unsigned char>(s[i])) && s[i] != 'h') {
      std::string two = symbol + std::string(1, s[i]);
      std::string capitalized = two;
      capitalized[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(capitalized[0])));
      if (atomic_number(capitalized)) {
        symbol = two;
        ++i;
      }
    }
    std::string capitalized = symbol;
    capitalized[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(capitalized[0])));
    auto z = atomic_number(capitalized);
    if (!z) fail(SmilesErrorCode::UnknownCharacter, tok.position + 1, "unknown element '" + symbol + "'");
    tok.atomic_number = *z;
    if (lowercase) {
      if (!aromatic_capable(*z)) {
        fail(SmilesErrorCode::UnknownCharacter, tok.position + 1,
             "element '" + symbol + "' cannot be aromatic");
      }
      tok.aromatic = true;
    }
  } else {
    fail(SmilesErrorCode::UnknownCharacter, i, "expected element symbol");
  }

  need(i);
  // Chirality markers are accepted and discarded.
  while (s[i] == '@') {
    ++i;
    need(i);
    if (s[i] == 'T' || s[i] == 'S' || s[i] == 'A' || s[i] == 'O') {  // @TH1 @SP1 @AL1 @OH1 forms
      while (s[i] != ']' && !std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; need(i); }
      while (std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; need(i); }
    }
  }

  if (s[i] == 'H') {
    ++i;
    need(i);
    tok.explicit_h = 1;
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      tok.explicit_h = 0;
      while (std::isdigit(static_cast<unsigned char>(s[i]))) {
        tok.explicit_h = tok.explicit_h * 10 + (s[i] - '0');
        ++i;
        need(i);
      }
    }
  }

  if (s[i] == '+' || s[i] == '-') {
    const int sign = s[i] == '+' ? 1 : -1;
    int magnitude = 0;
    while (i < s.size() && s[i] == (sign > 0 ? '+' : '-')) {
      ++magnitude;
      ++i;
      need(i);
    }
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      if (magnitude != 1) fail(SmilesErrorCode::UnknownCharacter, i, "malformed charge");
      magnitude = 0;
      while (std::isdigit(static_cast<unsigned char>(s[i]))) {
        magnitude = magnitude * 10 + (s[i] - '0');
        ++i;
        need(i);
      }
    }
    tok.formal_charge = sign * magnitude;
  }

  // Atom-map class, parsed and discarded.
  if (s[i] == ':') {
    ++i;
    need(i);
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      fail(SmilesErrorCode::UnknownCharacter, i, "expected atom-map number");
    }
    while (std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; need(i); }
  }

  if (s[i] != ']') fail(SmilesErrorCode::UnterminatedBracket, open, "unterminated bracket atom");
  ++i;
  tok.length = i - open;
  return tok;
}

}  // namespace

std::vector<Token> tokenize(std::string_view smiles) {
  if (smiles.empty()) {
    throw SmilesError(SmilesErrorCode::EmptyInput, 0, "empty SMILES input");
  }
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < smiles.size()) {
    const char c = smiles[i];
    Token tok;
    tok.position = i;
    tok.length = 1;
    switch (c) {
      case '(': tok.kind = TokenKind::BranchOpen; ++i; break;
      case ')': tok.kind = TokenKind::BranchClose; ++i; break;
      case '.': tok.kind = TokenKind::Dot; ++i; break;
      case '-': case '=': case '#': case ':': case '/': case '\\':
        tok.kind = TokenKind::Bond;
        tok.order = c == '=' ? BondOrder::Double : c == '#' ? BondOrder::Triple : BondOrder::Single;
        tok.aromatic_bond = c == ':';
        ++i;
        break;
      case '%': {
        tok.kind = TokenKind::RingClosure;
        if (i + 2 >= smiles.size() || !std::isdigit(static_cast<unsigned char>(smiles[i + 1])) ||
            !std::isdigit(static_cast<unsigned char>(smiles[i + 2]))) {
          fail(SmilesErrorCode::UnknownCharacter, i, "%% requires two digits");
        }
        tok.ring_id = (smiles[i + 1] - '0') * 10 + (smiles[i + 2] - '0');
        tok.length = 3;
        i += 3;
        break;
      }
      case '*':
        tok.kind = TokenKind::Atom;
        tok.atomic_number = 0;
        ++i;
        break;
      case '[': {
        tok = read_bracket_atom(smiles, i);
        break;
      }
      default: {
        if (std::isdigit(static_cast<unsigned char>(c))) {
          tok.kind = TokenKind::RingClosure;
          tok.ring_id = c - '0';
          ++i;
          break;
        }
        if (std::isupper(static_cast<unsigned char>(c))) {
          std::string symbol(1, c);
          if (is_two_letter_organic(smiles, i)) {
            symbol += smiles[i + 1];
          }
          auto z = atomic_number(symbol);
          if (!z || !in_organic_subset(*z)) {
            fail(SmilesErrorCode::UnknownCharacter, i,
                 std::string("'") + c + "' is not an organic-subset atom");
          }
          tok.kind = TokenKind::Atom;
          tok.atomic_number = *z;
          tok.length = symbol.size();
          i += symbol.size();
          break;
        }
        if (std::islower(static_cast<unsigned char>(c))) {
          // Aromatic organic subset: b c n o p s.
          std::string upper(1, static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
          auto z = atomic_number(upper);
          if (!z || !in_organic_subset(*z) || !aromatic_capable(*z)) {
            fail(SmilesErrorCode::UnknownCharacter, i,
                 std::string("'") + c + "' is not an aromatic organic-subset atom");
          }
          tok.kind = TokenKind::Atom;
          tok.atomic_number = *z;
          tok.aromatic = true;
          ++i;
          break;
        }
        fail(SmilesErrorCode::UnknownCharacter, i, std::string("unexpected character '") + c + "'");
      }
    }
    tokens.push_back(tok);
  }
  return tokens;
}

}  // namespace polymm::chem
