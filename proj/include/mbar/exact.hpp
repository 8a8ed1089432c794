#pragma once

// Exact integer/rational arithmetic and the combinatorial primitives used by
// the class and Betti-number formulas.
//
// BigInt and BigRational are GMP's C++ classes. mpq_class results of
// arithmetic are always canonical (lowest terms, positive denominator);
// values built from a raw numerator/denominator pair must go through
// make_rational().

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mbar {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
/// Throws DomainError when den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

/// Decimal text of r: "p" when integral, otherwise "p/q".
std::string to_string(const BigRational& r);
std::string to_string(const BigInt& z);

BigInt pow(const BigInt& base, unsigned long exponent);
BigInt factorial(int a);

/// Signed Stirling number of the first kind s(a, b); 0 outside 0 <= b <= a.
BigInt stirling_first_signed(int a, int b);

/// Stirling number of the second kind S(a, b); 0 outside 0 <= b <= a.
BigInt stirling_second(int a, int b);

/// Binomial coefficient; 0 when b < 0 or b > a. Requires a >= 0.
BigInt binomial(int a, int b);

/// sum_{j=0}^{upper} j^i by direct summation, memoized on (upper, i).
BigInt power_sum(int upper, int i);

struct Composition {
  std::vector<int> parts;

  friend bool operator==(const Composition&, const Composition&) = default;
};

/// Lazily walks the ordered tuples of `parts` positive integers summing to
/// `total`, in lexicographic order. (0, 0) yields the single empty tuple;
/// any other case with parts > total, or parts == 0, yields nothing.
///
///   CompositionStream s(4, 2);
///   while (s.next()) use(s.current());   // (1,3) (2,2) (3,1)
class CompositionStream {
 public:
  CompositionStream(int total, int parts);

  bool next();
  const Composition& current() const noexcept { return current_; }

 private:
  int total_;
  int parts_;
  bool started_ = false;
  bool done_ = false;
  Composition current_;
};

/// Materialized form of CompositionStream.
std::vector<Composition> compositions(int total, int parts);

}  // namespace mbar
