#pragma once

// Polynomials in the Lefschetz class L with exact integer coefficients, and
// the Betti-table view of a Grothendieck class.

#include <initializer_list>
#include <string>
#include <vector>

#include "mbar/exact.hpp"

namespace mbar {

class LPolynomial {
 public:
  LPolynomial() = default;
  LPolynomial(std::initializer_list<long> coeffs);
  explicit LPolynomial(std::vector<BigInt> coeffs);

  static LPolynomial constant(const BigInt& c);
  /// c * L^power
  static LPolynomial monomial(const BigInt& c, int power);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of L^power; zero beyond the stored range.
  BigInt coeff(int power) const;
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  const BigInt& leading() const;

  LPolynomial derivative() const;

  LPolynomial& operator+=(const LPolynomial& rhs);
  LPolynomial& operator-=(const LPolynomial& rhs);
  LPolynomial& operator*=(const LPolynomial& rhs);

  friend LPolynomial operator+(LPolynomial lhs, const LPolynomial& rhs) { return lhs += rhs; }
  friend LPolynomial operator-(LPolynomial lhs, const LPolynomial& rhs) { return lhs -= rhs; }
  friend LPolynomial operator*(const LPolynomial& lhs, const LPolynomial& rhs);
  LPolynomial operator-() const;

  friend bool operator==(const LPolynomial&, const LPolynomial&) = default;

  /// Keeps only the coefficients of degree <= max_degree.
  LPolynomial truncated(int max_degree) const;

  /// Renders "c0 + c1*L + c2*L^2 + ..." skipping zero terms; unit
  /// coefficients are dropped ("L^2", "-L"), the zero polynomial is "0".
  std::string to_string() const;

 private:
  void normalize();

  // Lowest degree first; the last entry is nonzero unless empty.
  std::vector<BigInt> coeffs_;
};

LPolynomial pow(const LPolynomial& p, int exponent);

/// Horner evaluation at a rational point.
BigRational eval_rational(const LPolynomial& p, const BigRational& x);

/// rk H^{2l}(M̄_{0,n}) for l = 0..n-3.
struct BettiTable {
  int n = 3;
  std::vector<BigInt> ranks;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Throws InvariantViolation unless the table has length n-2, positive
/// entries, ones at both ends and palindromic symmetry.
void validate(const BettiTable& table);

/// Wraps the coefficients of p as the Betti table of M̄_{0,n} after
/// validating degree n-3 and the table invariants.
BettiTable to_betti_table(const LPolynomial& p, int n);

LPolynomial to_polynomial(const BettiTable& table);

}  // namespace mbar
