#pragma once

// Checks run on computed classes: unimodality, binomial-normalized
// ultra-log-concavity, real-rootedness by Sturm sequences, the asymptotic
// main term (l+1)^{l+n-1}/(l+1)! with its relative error, and empirical
// probes for the constants hidden in the error bounds.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mbar/exact.hpp"
#include "mbar/formulas.hpp"
#include "mbar/lpoly.hpp"

namespace mbar {

/// Weakly rising, then weakly falling. Requires a nonempty sequence.
bool is_unimodal(std::span<const BigInt> seq);

/// a_l^2 >= a_{l-1} a_{l+1} for every interior l.
bool is_log_concave(std::span<const BigRational> seq);

/// ranks[l] / binom(n-3, l)
std::vector<BigRational> binomial_normalized(const BettiTable& table);

struct UlcEntry {
  int l = 0;
  BigRational lhs;  // (r_{l-1} / C(n-3,l-1))^2
  BigRational rhs;  // r_{l-2} r_l / (C(n-3,l-2) C(n-3,l))
  bool holds = true;
};

struct UlcReport {
  int n = 3;
  std::vector<UlcEntry> per_l;
  bool all_hold = true;
};

/// Compares both sides for every 2 <= l <= n-3. Vacuously true below n = 5.
UlcReport ulc_check(const BettiTable& table);

/// Sturm chain of p: p, p', then negated remainders, each rescaled to a
/// primitive integer polynomial by a positive factor.
std::vector<LPolynomial> sturm_chain(const LPolynomial& p);

/// Number of distinct real roots of a nonzero polynomial.
int sturm_count(const LPolynomial& p);

/// Exact gcd over Q, returned as a primitive integer polynomial with
/// positive leading coefficient.
LPolynomial polynomial_gcd(const LPolynomial& a, const LPolynomial& b);

/// p / gcd(p, p'), primitive with positive leading coefficient.
LPolynomial squarefree_part(const LPolynomial& p);

bool is_real_rooted(const LPolynomial& p);

/// (l+1)^{l+n-1} / (l+1)!
BigRational main_term(int n, int l);

/// Whether l <= n / (10 ln n), decided exactly by bracketing exp(n/(10 l))
/// between rational Taylor bounds. Orders l < 2 are not constrained.
bool in_asymptotic_range(int n, int l);

struct AsymptoticEntry {
  int n = 0;
  int l = 0;
  BigInt rank;
  BigRational main_term;
  BigRational ratio;            // rank / main_term
  BigRational ratio_minus_one;  // signed
  BigRational abs_error;        // |ratio - 1|
  BigRational scaled;           // n^2 |ratio - 1|
  bool in_range = true;
};

struct AsymptoticReport {
  int l = 0;
  std::vector<AsymptoticEntry> entries;  // ordered by n as given
  std::optional<int> empirical_N;
};

enum class RangePolicy {
  Enforce,   // RangeError on any n outside the asymptotic range
  Annotate,  // keep going, flag entries with in_range = false
};

/// Least tested n such that |ratio-1| <= 1/n'^2 for every tested n' >= n.
std::optional<int> empirical_threshold(const std::vector<AsymptoticEntry>& entries);

AsymptoticReport asymptotic_scan(int l, std::span<const int> ns, Method method = Method::Cnki,
                                 RangePolicy policy = RangePolicy::Enforce, int jobs = 1);

struct ProbeGrid {
  int n_min = 4;
  int n_max = 60;
  std::function<int(int)> k_max = [](int) { return 20; };
  int i_max = 10;
  std::string description;
};

struct ProbeReport {
  BigRational sup_value;  // max |C_{nki}| / n^{i+1} over the grid
  int argmax_n = 0;
  int argmax_k = 0;
  int argmax_i = 0;
  std::size_t points = 0;
  std::string grid;
};

ProbeReport cnki_constant_probe(const ProbeGrid& grid);

struct BoundRanges {
  int i_min = 1, i_max = 10;
  int k_min = 0, k_max = 20;
  int n_min = 4, n_max = 60;
  int t_max = 20;  // 1 <= m <= t <= t_max
};

struct BoundCheckResult {
  bool all_hold = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;
};

/// power_sum(k+n-2, i) <= (k+n-1)^{i+1}/(i+1) and
/// binom(t-1, m-1) <= 2^{t+m-1} <= 4^t over the ranges.
BoundCheckResult run_proof_bound_checks(const BoundRanges& ranges);

inline bool proof_bound_checks(const BoundRanges& ranges) {
  return run_proof_bound_checks(ranges).all_hold;
}

}  // namespace mbar
