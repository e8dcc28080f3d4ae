//
// Project polymm - Copyright 2026 polymm contributors
// SPDX-License-Identifier: Apache-2.0
//

#include "polymm/chem/element.hpp"

#include <array>
#include <unordered_map>

namespace polymm::chem {

namespace {

constexpr std::array<std::string_view, 119> kSymbols = {
    "*",  "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na", "Mg", "Al",
    "Si", "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",  "Cr", "Mn", "Fe", "Co",
    "Ni", "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br", "Kr", "Rb", "Sr", "Y",  "Zr", "Nb",
    "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd", "In", "Sn", "Sb", "Te", "I",  "Xe", "Cs",
    "Ba", "La", "Ce", "Pr", "Nd", "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm",
    "Yb", "Lu", "Hf", "Ta", "W",  "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi",
    "Po", "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U",  "Np", "Pu", "Am", "Cm", "Bk",
    "Cf", "Es", "Fm", "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh", "Hs", "Mt", "Ds", "Rg",
    "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og"};

const std::unordered_map<std::string_view, int>& symbol_index() {
  static const auto* map = [] {
    auto* m = new std::unordered_map<std::string_view, int>();
    for (int z = 0; z < static_cast<int>(kSymbols.size()); ++z) {
      m->emplace(kSymbols[static_cast<std::size_t>(z)], z);
    }
    return m;
  }();
  return *map;
}

constexpr int kValB[] = {3};
constexpr int kValC[] = {4};
constexpr int kValN[] = {3};
constexpr int kValO[] = {2};
constexpr int kValP[] = {3, 5};
constexpr int kValS[] = {2, 4, 6};
constexpr int kValHalogen[] = {1};
constexpr int kValH[] = {1};

}  // namespace

std::optional<int> atomic_number(std::string_view symbol) {
  const auto& map = symbol_index();
  auto it = map.find(symbol);
  if (it == map.end()) return std::nullopt;
  return it->second;
}

std::string_view element_symbol(int z) {
  if (z < 0 || z >= static_cast<int>(kSymbols.size())) return "?";
  return kSymbols[static_cast<std::size_t>(z)];
}

bool in_organic_subset(int z) {
  switch (z) {
    case 5: case 6: case 7: case 8: case 9:
    case 15: case 16: case 17: case 35: case 53:
      return true;
    default:
      return false;
  }
}

bool aromatic_capable(int z) {
  switch (z) {
    case 5: case 6: case 7: case 8: case 15: case 16:
    case 33: case 34:
      return true;
    default:
      return false;
  }
}

std::span<const int> standard_valences(int z) {
  switch (z) {
    case 1: return kValH;
    case 5: return kValB;
    case 6: return kValC;
    case 7: return kValN;
    case 8: return kValO;
    case 15: return kValP;
    case 16: return kValS;
    case 9: case 17: case 35: case 53: return kValHalogen;
    default: return {};
  }
}

std::optional<int> max_valence(int z, int charge) {
  const auto vals = standard_valences(z);
  if (vals.empty()) return std::nullopt;
  int base = vals.back();
  if (z == 6) {
    if (charge != 0) base -= 1;  // carbocation / carbanion are trivalent
  } else if (z == 7 || z == 15 || z == 8 || z == 16) {
    base += charge;  // N+ -> 4, N- -> 2, O- -> 1, O+ -> 3
  }
  if (base < 0) base = 0;
  return base;
}

}  // namespace polymm::chem
