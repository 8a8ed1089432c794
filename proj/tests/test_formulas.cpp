#include "doctest.h"

#include "mbar/errors.hpp"
#include "mbar/formulas.hpp"
#include "support/oracles.hpp"

using namespace mbar;

TEST_CASE("cnki anchors") {
  CHECK(cnki(4, 0, 1).value == -7);
  CHECK(cnki(5, 0, 1).value == -11);
  CHECK(cnki(3, 0, 1).value == -4);
  const CnkiValue v = cnki(6, 2, 3);
  CHECK(v.n == 6);
  CHECK(v.k == 2);
  CHECK(v.i == 3);
  CHECK_THROWS_AS(cnki(2, 0, 1), DomainError);
  CHECK_THROWS_AS(cnki(4, 0, 0), DomainError);
}

TEST_CASE("cnki is the two-term expression evaluated directly") {
  for (int n = 3; n <= 12; ++n) {
    for (int k = 0; k <= 6; ++k) {
      for (int i = 1; i <= 6; ++i) {
        BigRational sum = 0;
        for (int j = 0; j <= k + n - 2; ++j) sum += BigRational(pow(BigInt(j), i));
        const long sign = i % 2 ? -1 : 1;
        const BigRational expected =
            BigRational(sign * (2L * k * i + n * i + k + n - 1) + k - i) / BigRational(i * (i + 1)) -
            sum / BigRational(BigInt(i) * pow(BigInt(k + 1), i));
        CHECK(cnki(n, k, i).value == expected);
      }
    }
  }
}

TEST_CASE("betti_via_cnki anchors") {
  for (int n = 3; n <= 100; ++n) CHECK(betti_via_cnki(n, 0) == 1);
  CHECK(betti_via_cnki(4, 1) == 1);
  CHECK(betti_via_cnki(5, 1) == 5);
  CHECK(betti_via_cnki(6, 1) == 16);
  CHECK_THROWS_AS(betti_via_cnki(5, 3), DomainError);
}

TEST_CASE("grouped-by-m evaluation equals tuple-by-tuple composition sums") {
  for (int n = 3; n <= 9; ++n) {
    for (int l = 0; l <= n - 3; ++l) {
      for (bool literal : {false, true}) {
        BigRational expected = 0;
        for (int k = 0; k <= l; ++k) {
          expected += make_rational(pow(BigInt(k + 1), k + n - 1), factorial(k + 1)) *
                      oracle::inner_sum_by_compositions(n, k, l - k, literal);
        }
        CHECK(betti_via_cnki_exact(n, l, literal ? Eq1Reading::Literal : Eq1Reading::Corrected) ==
              expected);
      }
    }
  }
}

TEST_CASE("literal m=0 reading disagrees with the oracle") {
  // one extra unit per k < l: 8 + 1 - 7 = 2 at n=4, l=1
  CHECK(betti_via_cnki_exact(4, 1, Eq1Reading::Literal) == 2);
  CHECK(betti_via_cnki_exact(5, 1, Eq1Reading::Literal) == 6);
  CHECK(betti_via_cnki(4, 1, Eq1Reading::Literal) == 2);
  CHECK(betti_via_cnki(4, 1, Eq1Reading::Corrected) == 1);
  try {
    betti_via_cnki(6, 3, Eq1Reading::Literal);
    FAIL("expected NonIntegralResult");
  } catch (const NonIntegralResult& e) {
    CHECK(e.n() == 6);
    CHECK(e.l() == 3);
    CHECK(e.value() == BigRational(797, 2));
  }
}

TEST_CASE("class_via_stirling") {
  CHECK(class_via_stirling(3) == LPolynomial{1});
  CHECK(class_via_stirling(4) == LPolynomial{1, 1});
  CHECK(class_via_stirling(5) == LPolynomial{1, 5, 1});
  CHECK(class_via_stirling(7, {0, 0, 0}) == class_via_strata(7));
  CHECK(class_via_stirling(7, {0, 0, 12}) == class_via_strata(7));
  CHECK_THROWS_AS(class_via_stirling(5, {1, 1, 5}), Error);
  CHECK_THROWS_AS(class_via_stirling(5, {0, 1, 5}), TruncationCheckFailed);
  CHECK_THROWS_AS(class_via_stirling(5, {2, 0, 5}), DomainError);
}

TEST_CASE("resolve_convention") {
  CHECK(resolve_convention(6) == StirlingConvention{0, 0, 5});
  const StirlingConvention conv = resolve_convention(5);
  CHECK(class_via_stirling(7, conv) == class_via_strata(7));

  const std::vector<StirlingConvention> broken{{1, 1, 5}, {0, 1, 5}, {1, 0, 5}};
  CHECK_THROWS_AS(resolve_convention(6, broken), NoConventionMatches);
  try {
    resolve_convention(6, broken);
  } catch (const NoConventionMatches& e) {
    const std::string what = e.what();
    CHECK(what.find("k>=1, j>=1") != std::string::npos);
    CHECK(what.find("k>=1, j>=0") != std::string::npos);
  }
  const std::vector<StirlingConvention> twice{{0, 0, 5}, {0, 0, 6}};
  CHECK_THROWS_AS(resolve_convention(6, twice), AmbiguousConvention);
  CHECK_THROWS_AS(resolve_convention(4), DomainError);
}

TEST_CASE("all three methods agree for 3 <= n <= 8") {
  for (int n = 3; n <= 8; ++n) {
    const BettiTable s = betti_table(n, Method::Stirling);
    CHECK(s == betti_table(n, Method::Cnki));
    CHECK(s == betti_table(n, Method::Strata));
    for (int l = 0; l <= n - 3; ++l) {
      CHECK(betti_number(n, l, Method::Stirling) == s.ranks[l]);
      CHECK(betti_number(n, l, Method::Cnki) == s.ranks[l]);
    }
  }
}

TEST_CASE("betti_table dispatch") {
  CHECK(betti_table(4, Method::Stirling).ranks == std::vector<BigInt>{1, 1});
  CHECK(betti_table(5, Method::Cnki).ranks == std::vector<BigInt>{1, 5, 1});
  CHECK(betti_table(3, Method::Strata).ranks == std::vector<BigInt>{1});
  CHECK(parse_method("cnki") == Method::Cnki);
  CHECK_FALSE(parse_method("magic").has_value());
}

TEST_CASE("composition count bound") {
  for (int t = 1; t <= 20; ++t)
    for (int m = 1; m <= t; ++m) CHECK(binomial(t - 1, m - 1) <= pow(BigInt(4), t));
}
