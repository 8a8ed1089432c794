#include "mbar/lpoly.hpp"

#include <algorithm>
#include <sstream>

#include "mbar/errors.hpp"

namespace mbar {

LPolynomial::LPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

LPolynomial::LPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

LPolynomial LPolynomial::constant(const BigInt& c) { return LPolynomial(std::vector<BigInt>{c}); }

LPolynomial LPolynomial::monomial(const BigInt& c, int power) {
  if (power < 0) throw DomainError("negative power of L");
  std::vector<BigInt> v(power + 1);
  v[power] = c;
  return LPolynomial(std::move(v));
}

void LPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt LPolynomial::coeff(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[power];
}

const BigInt& LPolynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

LPolynomial LPolynomial::derivative() const {
  std::vector<BigInt> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(coeffs_[i] * i);
  return LPolynomial(std::move(d));
}

LPolynomial& LPolynomial::operator+=(const LPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

LPolynomial& LPolynomial::operator-=(const LPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

LPolynomial operator*(const LPolynomial& lhs, const LPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return LPolynomial(std::move(out));
}

LPolynomial& LPolynomial::operator*=(const LPolynomial& rhs) { return *this = *this * rhs; }

LPolynomial LPolynomial::operator-() const {
  LPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LPolynomial LPolynomial::truncated(int max_degree) const {
  if (max_degree < 0) return {};
  if (max_degree >= degree()) return *this;
  return LPolynomial(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
}

std::string LPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "L";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

LPolynomial pow(const LPolynomial& p, int exponent) {
  if (exponent < 0) throw DomainError("negative polynomial exponent");
  LPolynomial result{1};
  LPolynomial base = p;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

BigRational eval_rational(const LPolynomial& p, const BigRational& x) {
  BigRational acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * x + BigRational(*it);
  }
  return acc;
}

void validate(const BettiTable& table) {
  const int n = table.n;
  if (n < 3) throw InvariantViolation("Betti table with n < 3");
  const auto& r = table.ranks;
  auto fail = [n](const std::string& what) {
    throw InvariantViolation("Betti table for n=" + std::to_string(n) + ": " + what);
  };
  if (static_cast<int>(r.size()) != n - 2) {
    fail("expected " + std::to_string(n - 2) + " ranks, got " + std::to_string(r.size()));
  }
  for (std::size_t l = 0; l < r.size(); ++l) {
    if (r[l] <= 0) fail("rank at l=" + std::to_string(l) + " is not positive (" + r[l].get_str() + ")");
  }
  if (r.front() != 1 || r.back() != 1) fail("boundary ranks are not 1");
  for (std::size_t l = 0; l < r.size(); ++l) {
    if (r[l] != r[r.size() - 1 - l]) fail("not symmetric at l=" + std::to_string(l));
  }
}

BettiTable to_betti_table(const LPolynomial& p, int n) {
  if (p.degree() != n - 3) {
    throw InvariantViolation("class for n=" + std::to_string(n) + " has degree " +
                             std::to_string(p.degree()) + ", expected " + std::to_string(n - 3));
  }
  BettiTable table{n, p.coeffs()};
  validate(table);
  return table;
}

LPolynomial to_polynomial(const BettiTable& table) { return LPolynomial(table.ranks); }

}  // namespace mbar
