//
// Project polymm - Copyright 2026 polymm contributors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef POLYMM_CHEM_ELEMENT_HPP
#define POLYMM_CHEM_ELEMENT_HPP

#include <optional>
#include <span>
#include <string_view>

namespace polymm::chem {

/// Atomic number for an element symbol ("C", "Cl", ...). Case-sensitive,
/// standard capitalization. Returns nullopt for unknown symbols.
std::optional<int> atomic_number(std::string_view symbol);

/// Element symbol for an atomic number; "*" for 0 (wildcard).
std::string_view element_symbol(int atomic_number);

/// True for the SMILES organic subset: B C N O P S F Cl Br I.
bool in_organic_subset(int atomic_number);

/// True for elements that may be written lowercase (aromatic): b c n o p s
/// plus Se and As inside brackets.
bool aromatic_capable(int atomic_number);

/// Standard valences used for implicit-hydrogen filling and valence checks,
/// in increasing order (e.g. S -> {2, 4, 6}). Empty span when the element
/// has no fixed valence model (no check is applied then).
std::span<const int> standard_valences(int atomic_number);

/// Largest permitted valence after formal-charge adjustment, or nullopt when
/// unconstrained. Nitrogen-family charge adds capacity (N+ -> 4), the
/// chalcogens lose it (O- -> 1).
std::optional<int> max_valence(int atomic_number, int formal_charge);

}  // namespace polymm::chem

#endif  // POLYMM_CHEM_ELEMENT_HPP
