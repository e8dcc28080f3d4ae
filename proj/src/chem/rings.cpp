//
// Project polymm - Copyright 2026 polymm contributors
// SPDX-License-Identifier: Apache-2.0
//

#include "polymm/chem/rings.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

namespace polymm::chem {

namespace {

struct Candidate {
  std::vector<int> atoms;          // cycle order
  std::vector<int> bonds;          // cycle order, bonds[i] joins atoms[i], atoms[i+1]
  std::vector<int> sorted_atoms;   // tie-break key
  std::vector<std::uint64_t> edge_bits;
};

std::vector<std::uint64_t> bond_bitset(const std::vector<int>& bonds, int bond_count) {
  std::vector<std::uint64_t> bits(static_cast<std::size_t>((bond_count + 63) / 64), 0);
  for (int b : bonds) bits[static_cast<std::size_t>(b) / 64] |= 1ULL << (b % 64);
  return bits;
}

// Shortest-path BFS from root; parents give one canonical shortest path.
void bfs(const MolecularGraph& g, int root, std::vector<int>& dist, std::vector<int>& parent) {
  dist.assign(g.atoms.size(), -1);
  parent.assign(g.atoms.size(), -1);
  std::queue<int> queue;
  dist[static_cast<std::size_t>(root)] = 0;
  queue.push(root);
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop();
    for (int bi : g.bonds_of(a)) {
      const int nb = g.bonds[static_cast<std::size_t>(bi)].other(a);
      if (dist[static_cast<std::size_t>(nb)] < 0) {
        dist[static_cast<std::size_t>(nb)] = dist[static_cast<std::size_t>(a)] + 1;
        parent[static_cast<std::size_t>(nb)] = a;
        queue.push(nb);
      }
    }
  }
}

std::vector<int> path_to_root(const std::vector<int>& parent, int from) {
  std::vector<int> path{from};
  while (parent[static_cast<std::size_t>(path.back())] >= 0) {
    path.push_back(parent[static_cast<std::size_t>(path.back())]);
  }
  return path;
}

}  // namespace

std::vector<Ring> find_sssr(const MolecularGraph& g) {
  const int mu = g.cyclomatic_number();
  if (mu <= 0) return {};

  // Horton candidate set: for every vertex v and edge (x, y), the cycle
  // formed by shortest paths v->x, v->y plus the edge, kept when it is a
  // simple cycle.
  std::vector<Candidate> candidates;
  std::set<std::vector<int>> seen_bond_sets;

  std::vector<int> dist;
  std::vector<int> parent;
  for (int v = 0; v < g.atom_count(); ++v) {
    bfs(g, v, dist, parent);
    for (int bi = 0; bi < g.bond_count(); ++bi) {
      const Bond& edge = g.bonds[static_cast<std::size_t>(bi)];
      const int x = edge.a;
      const int y = edge.b;
      if (dist[static_cast<std::size_t>(x)] < 0) continue;
      if (parent[static_cast<std::size_t>(x)] == y || parent[static_cast<std::size_t>(y)] == x) {
        continue;  // tree edge of this BFS
      }
      std::vector<int> px = path_to_root(parent, x);  // x ... v
      std::vector<int> py = path_to_root(parent, y);  // y ... v
      // Simple cycle only when the two paths share exactly the root v.
      std::vector<char> on_px(g.atoms.size(), 0);
      for (int a : px) on_px[static_cast<std::size_t>(a)] = 1;
      bool disjoint = true;
      for (std::size_t i = 0; i + 1 < py.size(); ++i) {
        if (on_px[static_cast<std::size_t>(py[i])]) {
          disjoint = false;
          break;
        }
      }
      if (!disjoint) continue;

      // Cycle order: v ... x, then the closing edge, then y ... back to v.
      Candidate cand;
      for (auto it = px.rbegin(); it != px.rend(); ++it) cand.atoms.push_back(*it);
      for (std::size_t i = 0; i + 1 < py.size(); ++i) cand.atoms.push_back(py[i]);

      const std::size_t n = cand.atoms.size();
      bool ok = n >= 3;
      for (std::size_t i = 0; ok && i < n; ++i) {
        const int b = g.bond_between(cand.atoms[i], cand.atoms[(i + 1) % n]);
        if (b < 0) {
          ok = false;
        } else {
          cand.bonds.push_back(b);
        }
      }
      if (!ok) continue;

      std::vector<int> key = cand.bonds;
      std::sort(key.begin(), key.end());
      if (!seen_bond_sets.insert(key).second) continue;

      cand.sorted_atoms = cand.atoms;
      std::sort(cand.sorted_atoms.begin(), cand.sorted_atoms.end());
      cand.edge_bits = bond_bitset(cand.bonds, g.bond_count());
      candidates.push_back(std::move(cand));
    }
  }

  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.atoms.size() != b.atoms.size()) return a.atoms.size() < b.atoms.size();
    return a.sorted_atoms < b.sorted_atoms;
  });

  // Greedy smallest-first selection of mu cycles independent over GF(2).
  std::vector<std::vector<std::uint64_t>> basis;  // row-echelon rows
  std::vector<int> pivots;
  std::vector<Ring> rings;

  auto leading_bit = [](const std::vector<std::uint64_t>& bits) {
    for (std::size_t w = 0; w < bits.size(); ++w) {
      if (bits[w]) {
        return static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits[w])));
      }
    }
    return -1;
  };

  for (const Candidate& cand : candidates) {
    if (static_cast<int>(rings.size()) == mu) break;
    std::vector<std::uint64_t> reduced = cand.edge_bits;
    for (std::size_t r = 0; r < basis.size(); ++r) {
      const int pivot = pivots[r];
      if (reduced[static_cast<std::size_t>(pivot) / 64] & (1ULL << (pivot % 64))) {
        for (std::size_t w = 0; w < reduced.size(); ++w) reduced[w] ^= basis[r][w];
      }
    }
    const int pivot = leading_bit(reduced);
    if (pivot < 0) continue;  // dependent on chosen rings
    basis.push_back(reduced);
    pivots.push_back(pivot);
    Ring ring;
    ring.atoms = cand.atoms;
    ring.bonds = cand.bonds;
    rings.push_back(std::move(ring));
  }

  if (static_cast<int>(rings.size()) != mu) {
    throw std::logic_error("SSSR: cycle basis incomplete");
  }
  return rings;
}

}  // namespace polymm::chem
