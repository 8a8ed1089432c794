#pragma once

// Closed formulas for the class of M̄_{0,n} and its Betti numbers:
//
//  * the Stirling double sum
//      [M̄_{0,n}] = (1-L)^{n-1} sum_{k>=k0} sum_{j>=j0}
//                    s(k+n-1, k+n-1-j) S(k+n-1-j, k+1) L^{k+j}
//  * the C_{nki} expansion
//      rk H^{2l} = sum_{k=0}^{l} (k+1)^{k+n-1}/(k+1)!
//                  sum_{m} 1/m! sum_{i_1+...+i_m = l-k} C_{nki_1}...C_{nki_m}

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mbar/exact.hpp"
#include "mbar/lpoly.hpp"
#include "mbar/strata.hpp"

namespace mbar {

struct CnkiValue {
  int n = 3;
  int k = 0;
  int i = 1;
  BigRational value;
};

/// C_{nki} = [(-1)^i (2ki + ni + k + n - 1) + k - i] / (i(i+1))
///           - power_sum(k+n-2, i) / (i (k+1)^i)
CnkiValue cnki(int n, int k, int i);

/// How the m = 0 term of the inner sum is read.
///
/// Literal: "the m = 0 term is always 1", for every k.
/// Corrected: the m = 0 term is the empty composition, which exists only
/// when l - k = 0. The inner sum is then the coefficient of x^{l-k} in
/// exp(sum_i C_{nki} x^i). This is the reading that reproduces the strata
/// oracle; the literal one overshoots (2 instead of 1 at n=4, l=1) and goes
/// non-integral from n=6, l=3 on.
enum class Eq1Reading { Corrected, Literal };

const char* to_string(Eq1Reading reading);

/// Exact rational value of the expansion, no integrality check.
BigRational betti_via_cnki_exact(int n, int l, Eq1Reading reading = Eq1Reading::Corrected);

/// Integral value of the expansion. Throws NonIntegralResult or
/// NegativeResult (carrying n, l and the rational obtained) otherwise.
BigInt betti_via_cnki(int n, int l, Eq1Reading reading = Eq1Reading::Corrected);

struct StirlingConvention {
  int k_start = 0;
  int j_start = 0;
  int verify_margin = 5;

  friend bool operator==(const StirlingConvention&, const StirlingConvention&) = default;
};

std::string to_string(const StirlingConvention& conv);

/// The four (k_start, j_start) choices in {0,1}^2 with the given margin.
std::vector<StirlingConvention> candidate_conventions(int verify_margin = 5);

/// Truncated double sum times (1-L)^{n-1}, before any checks. Degrees
/// 0..(n-3)+verify_margin.
LPolynomial stirling_product(int n, const StirlingConvention& conv);

/// Class of M̄_{0,n} from the Stirling double sum. TruncationCheckFailed if
/// the product has a nonzero coefficient in degrees n-2..(n-3)+margin;
/// InvariantViolation if the remaining part is not a valid Betti table.
LPolynomial class_via_stirling(int n, const StirlingConvention& conv = {});

/// Picks the unique candidate whose class_via_stirling matches the strata
/// oracle for every 3 <= n <= n_check. Defaults to candidate_conventions().
StirlingConvention resolve_convention(int n_check,
                                      std::span<const StirlingConvention> candidates = {});

enum class Method { Stirling, Cnki, Strata };

const char* to_string(Method method);
std::optional<Method> parse_method(const std::string& name);

struct TableOptions {
  StirlingConvention convention{};
  Eq1Reading reading = Eq1Reading::Corrected;
  int n_max_oracle = kDefaultOracleMaxN;
};

LPolynomial class_polynomial(int n, Method method, const TableOptions& options = {});
BettiTable betti_table(int n, Method method, const TableOptions& options = {});

/// rk H^{2l}(M̄_{0,n}) alone. For the Stirling method only the series up to
/// degree l is formed, so large n with small l stays cheap.
BigInt betti_number(int n, int l, Method method, const TableOptions& options = {});

}  // namespace mbar
