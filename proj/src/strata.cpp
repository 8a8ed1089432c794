#include "mbar/strata.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "mbar/errors.hpp"

namespace mbar {

namespace {

bool compatible(MarkedSubset a, MarkedSubset b) {
  const MarkedSubset both = a & b;
  return both == 0 || both == a || both == b;
}

bool is_subset(MarkedSubset inner, MarkedSubset outer) { return (inner & outer) == inner; }

void check_oracle_range(int n, int n_max) {
  if (n < 3) throw DomainError("M̄_{0,n} needs n >= 3, got n=" + std::to_string(n));
  if (n_max > 31) throw DomainError("strata oracle supports n_max <= 31");
  if (n > n_max) {
    throw DomainError("strata oracle limited to n <= " + std::to_string(n_max) + ", got n=" +
                      std::to_string(n));
  }
}

// Canonical-order DFS: each family is emitted once, extended only by
// subsets later in the order than its last member.
void extend(const std::vector<MarkedSubset>& subsets, std::size_t from, LaminarFamily& family,
            const std::function<void(const LaminarFamily&)>& visit) {
  visit(family);
  for (std::size_t idx = from; idx < subsets.size(); ++idx) {
    const MarkedSubset s = subsets[idx];
    const bool ok = std::all_of(family.members.begin(), family.members.end(),
                                [s](MarkedSubset m) { return compatible(s, m); });
    if (!ok) continue;
    family.members.push_back(s);
    extend(subsets, idx + 1, family, visit);
    family.members.pop_back();
  }
}

}  // namespace

LPolynomial open_class(int m) {
  if (m < 3) throw DomainError("open moduli M_{0,m} needs m >= 3, got m=" + std::to_string(m));
  LPolynomial out{1};
  for (int i = 2; i <= m - 2; ++i) out *= LPolynomial{-i, 1};
  return out;
}

std::vector<MarkedSubset> marked_subsets(int n) {
  std::vector<MarkedSubset> out;
  const int k = n - 1;
  for (MarkedSubset s = 0; s < (MarkedSubset{1} << k); ++s) {
    const int size = std::popcount(s);
    if (size >= 2 && size <= n - 2) out.push_back(s);
  }
  // lexicographic on the sorted element lists
  auto elements = [](MarkedSubset s) {
    std::vector<int> e;
    for (int b = 0; b < 32; ++b)
      if (s >> b & 1U) e.push_back(b + 1);
    return e;
  };
  std::sort(out.begin(), out.end(),
            [&](MarkedSubset a, MarkedSubset b) { return elements(a) < elements(b); });
  return out;
}

void enumerate_laminar_families(int n, const std::function<void(const LaminarFamily&)>& visit) {
  if (n < 3) throw DomainError("M̄_{0,n} needs n >= 3");
  if (n > 31) throw DomainError("laminar family enumeration supports n <= 31");
  const auto subsets = marked_subsets(n);
  LaminarFamily family;
  extend(subsets, 0, family, visit);
}

StableTree family_to_tree(const LaminarFamily& family, int n) {
  const auto& members = family.members;
  const int count = static_cast<int>(members.size());
  StableTree tree;
  tree.vertices.resize(count + 1);

  // parent = minimal member strictly containing this one, else the root
  std::vector<int> parent(count, 0);
  for (int i = 0; i < count; ++i) {
    int best = -1;
    for (int j = 0; j < count; ++j) {
      if (j == i || members[j] == members[i] || !is_subset(members[i], members[j])) continue;
      if (best < 0 || std::popcount(members[j]) < std::popcount(members[best])) best = j;
    }
    parent[i] = best < 0 ? 0 : best + 1;
    tree.vertices[i + 1].has_parent_edge = true;
    tree.vertices[parent[i]].children.push_back(i + 1);
  }

  for (int leg = 1; leg <= n; ++leg) {
    // the smallest member containing the leg; marking n sits at the root
    int owner = 0;
    if (leg < n) {
      const MarkedSubset bit = MarkedSubset{1} << (leg - 1);
      int owner_size = 0;
      for (int i = 0; i < count; ++i) {
        if (!(members[i] & bit)) continue;
        const int size = std::popcount(members[i]);
        if (owner == 0 || size < owner_size) {
          owner = i + 1;
          owner_size = size;
        }
      }
    }
    tree.vertices[owner].legs.push_back(leg);
  }

  for (std::size_t v = 0; v < tree.vertices.size(); ++v) {
    if (tree.vertices[v].valence() < 3) {
      throw InternalError("unstable vertex " + std::to_string(v) + " (valence " +
                          std::to_string(tree.vertices[v].valence()) + ") for n=" +
                          std::to_string(n));
    }
  }
  return tree;
}

LPolynomial class_via_strata(int n, int n_max) {
  check_oracle_range(n, n_max);
  // Strata sharing a valence multiset share their class; tally first.
  std::map<std::vector<int>, BigInt> tally;
  enumerate_laminar_families(n, [&](const LaminarFamily& family) {
    const StableTree tree = family_to_tree(family, n);
    std::vector<int> valences;
    valences.reserve(tree.vertices.size());
    for (const auto& v : tree.vertices) valences.push_back(v.valence());
    std::sort(valences.begin(), valences.end());
    tally[valences] += 1;
  });

  std::map<int, LPolynomial> open;
  LPolynomial total;
  for (const auto& [valences, multiplicity] : tally) {
    LPolynomial term = LPolynomial::constant(multiplicity);
    for (int m : valences) {
      auto it = open.find(m);
      if (it == open.end()) it = open.emplace(m, open_class(m)).first;
      term *= it->second;
    }
    total += term;
  }
  to_betti_table(total, n);
  return total;
}

BigInt stratum_count(int n, int n_max) {
  check_oracle_range(n, n_max);
  BigInt count = 0;
  enumerate_laminar_families(n, [&](const LaminarFamily&) { count += 1; });
  return count;
}

}  // namespace mbar
