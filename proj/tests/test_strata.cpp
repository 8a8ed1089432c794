#include "doctest.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "mbar/errors.hpp"
#include "mbar/strata.hpp"

using namespace mbar;

namespace {

// Configurations of m points on P^1 modulo PGL2: fix three at 0, 1, inf and
// place the other m-3 at distinct values of F_q outside {0, 1}.
long open_point_count(int m, int q) {
  long count = 0;
  std::vector<int> chosen;
  std::function<void()> walk = [&] {
    if (static_cast<int>(chosen.size()) == m - 3) {
      ++count;
      return;
    }
    for (int v = 2; v < q; ++v) {
      if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
      chosen.push_back(v);
      walk();
      chosen.pop_back();
    }
  };
  walk();
  return count;
}

LaminarFamily family(std::vector<std::vector<int>> sets) {
  LaminarFamily f;
  for (const auto& s : sets) {
    MarkedSubset m = 0;
    for (int e : s) m |= MarkedSubset{1} << (e - 1);
    f.members.push_back(m);
  }
  return f;
}

}  // namespace

TEST_CASE("open_class") {
  CHECK(open_class(3) == LPolynomial{1});
  CHECK(open_class(4) == LPolynomial{-2, 1});
  CHECK(open_class(5) == LPolynomial{6, -5, 1});
  CHECK_THROWS_AS(open_class(2), DomainError);
}

TEST_CASE("open_class counts points over small prime fields") {
  for (int m = 3; m <= 7; ++m) {
    for (int q : {5, 7, 11}) {
      CHECK(eval_rational(open_class(m), q) == open_point_count(m, q));
    }
  }
}

TEST_CASE("laminar family enumeration counts") {
  std::vector<std::size_t> sizes;
  enumerate_laminar_families(4, [&](const LaminarFamily& f) { sizes.push_back(f.members.size()); });
  CHECK(sizes == std::vector<std::size_t>{0, 1, 1, 1});

  std::map<std::size_t, int> by_size;
  enumerate_laminar_families(5, [&](const LaminarFamily& f) { ++by_size[f.members.size()]; });
  CHECK(by_size == std::map<std::size_t, int>{{0, 1}, {1, 10}, {2, 15}});

  CHECK(stratum_count(3) == 1);
  CHECK(stratum_count(4) == 4);
  CHECK(stratum_count(5) == 26);
}

TEST_CASE("families are laminar, distinct and respect stability bounds") {
  for (int n = 3; n <= 7; ++n) {
    std::set<std::set<MarkedSubset>> seen;
    std::size_t total = 0;
    enumerate_laminar_families(n, [&](const LaminarFamily& f) {
      ++total;
      for (MarkedSubset s : f.members) {
        CHECK(std::popcount(s) >= 2);
        CHECK(std::popcount(s) <= n - 2);
        CHECK((s >> (n - 1)) == 0);
      }
      for (std::size_t a = 0; a < f.members.size(); ++a) {
        for (std::size_t b = a + 1; b < f.members.size(); ++b) {
          const MarkedSubset x = f.members[a], y = f.members[b];
          const MarkedSubset both = x & y;
          CHECK((both == 0 || both == x || both == y));
        }
      }
      seen.insert(std::set<MarkedSubset>(f.members.begin(), f.members.end()));
    });
    CHECK(seen.size() == total);
  }
}

TEST_CASE("family_to_tree") {
  const StableTree root_only = family_to_tree(LaminarFamily{}, 5);
  REQUIRE(root_only.vertices.size() == 1);
  CHECK(root_only.vertices[0].valence() == 5);

  const StableTree one_edge = family_to_tree(family({{1, 2}}), 4);
  REQUIRE(one_edge.vertices.size() == 2);
  CHECK(one_edge.vertices[0].valence() == 3);
  CHECK(one_edge.vertices[1].valence() == 3);
  CHECK(one_edge.vertices[1].legs == std::vector<int>{1, 2});
  CHECK(one_edge.vertices[0].legs == std::vector<int>{3, 4});

  const StableTree chain = family_to_tree(family({{1, 2}, {1, 2, 3}}), 5);
  REQUIRE(chain.vertices.size() == 3);
  for (const auto& v : chain.vertices) CHECK(v.valence() == 3);
  CHECK(chain.vertices[2].children == std::vector<int>{1});
  CHECK(chain.vertices[0].children == std::vector<int>{2});
}

TEST_CASE("unstable input trips the valence check") {
  // {1,2,3,4} is not a legal member for n=5: the root keeps leg 5 and one child
  CHECK_THROWS_AS(family_to_tree(family({{1, 2, 3}, {1, 2, 3, 4}}), 5), InternalError);
}

TEST_CASE("stratum dimension bookkeeping") {
  for (int n = 3; n <= 7; ++n) {
    enumerate_laminar_families(n, [&](const LaminarFamily& f) {
      const StableTree t = family_to_tree(f, n);
      int excess = 0;
      for (const auto& v : t.vertices) excess += v.valence() - 3;
      CHECK(excess == (n - 3) - static_cast<int>(f.members.size()));
    });
  }
}

TEST_CASE("class_via_strata") {
  CHECK(class_via_strata(3) == LPolynomial{1});
  CHECK(class_via_strata(4) == LPolynomial{1, 1});
  CHECK(class_via_strata(5) == LPolynomial{1, 5, 1});
  CHECK(class_via_strata(6) == LPolynomial{1, 16, 16, 1});
  CHECK_THROWS_AS(class_via_strata(10), DomainError);
  CHECK_THROWS_AS(class_via_strata(2), DomainError);
  CHECK_THROWS_AS(stratum_count(10), DomainError);
  CHECK(class_via_strata(6, 6) == LPolynomial{1, 16, 16, 1});
  CHECK_THROWS_AS(class_via_strata(7, 6), DomainError);
}

TEST_CASE("oracle classes are palindromic with unit ends") {
  for (int n = 3; n <= 8; ++n) {
    const LPolynomial c = class_via_strata(n);
    CHECK(c.degree() == n - 3);
    CHECK(c.coeff(0) == 1);
    CHECK(c.leading() == 1);
    for (int l = 0; l <= n - 3; ++l) {
      CHECK(c.coeff(l) > 0);
      CHECK(c.coeff(l) == c.coeff(n - 3 - l));
    }
  }
}
