#pragma once

// Ground-truth class of M̄_{0,n} as a sum over boundary strata.
//
// A stratum is a stable tree with n labelled legs. Cut every edge: the side
// not containing leg n carries a marked subset S of {1..n-1} with
// 2 <= |S| <= n-2, and the edge set of a tree is exactly a laminar family of
// such subsets (pairwise nested or disjoint). The open stratum is a product
// of open moduli spaces M_{0,valence} over the tree's vertices, so
//
//   [M̄_{0,n}] = sum over families  prod over vertices  [M_{0,valence(v)}].

#include <cstdint>
#include <functional>
#include <vector>

#include "mbar/exact.hpp"
#include "mbar/lpoly.hpp"

namespace mbar {

inline constexpr int kDefaultOracleMaxN = 9;

/// Bit e-1 set <=> marking e belongs to the subset. Marking n never appears.
using MarkedSubset = std::uint32_t;

struct LaminarFamily {
  std::vector<MarkedSubset> members;  // in enumeration order
};

struct TreeVertex {
  bool has_parent_edge = false;
  std::vector<int> children;  // indices into StableTree::vertices
  std::vector<int> legs;      // markings attached directly here

  int valence() const noexcept {
    return static_cast<int>(children.size() + legs.size()) + (has_parent_edge ? 1 : 0);
  }
};

struct StableTree {
  // vertices[0] is the root (the vertex carrying marking n); vertex i+1
  // corresponds to family member i.
  std::vector<TreeVertex> vertices;
};

/// [M_{0,m}] = prod_{i=2}^{m-2} (L - i); 1 for m = 3. DomainError for m < 3.
LPolynomial open_class(int m);

/// Every subset of {1..n-1} usable as a tree edge, in canonical order
/// (lexicographic on sorted element lists).
std::vector<MarkedSubset> marked_subsets(int n);

/// Calls visit once per laminar family, the empty family included.
void enumerate_laminar_families(int n, const std::function<void(const LaminarFamily&)>& visit);

/// Builds the stable tree of a laminar family. InternalError if some vertex
/// ends up with valence < 3.
StableTree family_to_tree(const LaminarFamily& family, int n);

/// DomainError unless 3 <= n <= n_max.
LPolynomial class_via_strata(int n, int n_max = kDefaultOracleMaxN);

BigInt stratum_count(int n, int n_max = kDefaultOracleMaxN);

}  // namespace mbar
