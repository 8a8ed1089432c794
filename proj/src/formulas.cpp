#include "mbar/formulas.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <tuple>

#include "mbar/errors.hpp"

namespace mbar {

namespace {

BigRational compute_cnki(int n, int k, int i) {
  const int sign = (i % 2 == 0) ? 1 : -1;
  const BigInt head = BigInt(sign) * BigInt(2 * k * i + n * i + k + n - 1) + BigInt(k - i);
  const BigRational first = make_rational(head, BigInt(i) * BigInt(i + 1));
  const BigRational second =
      make_rational(power_sum(k + n - 2, i), BigInt(i) * pow(BigInt(k + 1), i));
  return first - second;
}

// Truncated product of two coefficient lists (degrees 0..max_degree).
std::vector<BigRational> mul_truncated(const std::vector<BigRational>& a,
                                       const std::vector<BigRational>& b, int max_degree) {
  std::vector<BigRational> out(max_degree + 1);
  for (int i = 0; i <= max_degree && i < static_cast<int>(a.size()); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= max_degree && j < static_cast<int>(b.size()); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// sum_{m} 1/m! sum_{i_1+...+i_m = t} C_{nki_1}...C_{nki_m}, grouped by m:
// the composition sum for fixed m is the x^t coefficient of c(x)^m with
// c(x) = sum_{i>=1} C_{nki} x^i.
BigRational inner_sum(int n, int k, int t, Eq1Reading reading) {
  BigRational total = (t == 0 || reading == Eq1Reading::Literal) ? BigRational(1) : BigRational(0);
  if (t == 0) return total;
  std::vector<BigRational> base(t + 1);
  for (int i = 1; i <= t; ++i) base[i] = cnki(n, k, i).value;
  std::vector<BigRational> power = base;  // c(x)^m
  BigInt m_factorial = 1;
  for (int m = 1; m <= t; ++m) {
    m_factorial *= m;
    total += power[t] / BigRational(m_factorial);
    if (m < t) power = mul_truncated(power, base, t);
  }
  return total;
}

void require_n(int n) {
  if (n < 3) throw DomainError("M̄_{0,n} needs n >= 3, got n=" + std::to_string(n));
}

// Coefficients of the double sum in degrees 0..max_degree.
std::vector<BigInt> stirling_series(int n, const StirlingConvention& conv, int max_degree) {
  std::vector<BigInt> series(max_degree + 1);
  for (int k = conv.k_start; k <= max_degree; ++k) {
    for (int j = conv.j_start; k + j <= max_degree; ++j) {
      const int top = k + n - 1;
      const int mid = top - j;
      // S(mid, k+1) vanishes once mid < k+1
      if (mid < k + 1) break;
      series[k + j] += stirling_first_signed(top, mid) * stirling_second(mid, k + 1);
    }
  }
  return series;
}

// (1-L)^{n-1} * series, degrees 0..max_degree.
std::vector<BigInt> times_one_minus_l_power(int n, const std::vector<BigInt>& series) {
  const int max_degree = static_cast<int>(series.size()) - 1;
  std::vector<BigInt> out(max_degree + 1);
  for (int d = 0; d <= max_degree; ++d) {
    for (int e = 0; e <= d && e <= n - 1; ++e) {
      BigInt term = binomial(n - 1, e) * series[d - e];
      if (e % 2) out[d] -= term;
      else out[d] += term;
    }
  }
  return out;
}

}  // namespace

CnkiValue cnki(int n, int k, int i) {
  require_n(n);
  if (k < 0 || i < 1) throw DomainError("cnki needs k >= 0 and i >= 1");
  static std::shared_mutex mutex;
  static std::map<std::tuple<int, int, int>, BigRational> memo;
  const auto key = std::make_tuple(n, k, i);
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return {n, k, i, it->second};
  }
  BigRational value = compute_cnki(n, k, i);
  {
    std::unique_lock lock(mutex);
    memo.emplace(key, value);
  }
  return {n, k, i, std::move(value)};
}

const char* to_string(Eq1Reading reading) {
  return reading == Eq1Reading::Corrected ? "corrected" : "literal";
}

BigRational betti_via_cnki_exact(int n, int l, Eq1Reading reading) {
  require_n(n);
  if (l < 0 || l > n - 3) {
    throw DomainError("l must lie in 0..n-3, got n=" + std::to_string(n) + ", l=" + std::to_string(l));
  }
  BigRational total = 0;
  for (int k = 0; k <= l; ++k) {
    const BigRational weight =
        make_rational(pow(BigInt(k + 1), k + n - 1), factorial(k + 1));
    total += weight * inner_sum(n, k, l - k, reading);
  }
  return total;
}

BigInt betti_via_cnki(int n, int l, Eq1Reading reading) {
  BigRational value = betti_via_cnki_exact(n, l, reading);
  const std::string where = "C_nki expansion (" + std::string(to_string(reading)) +
                            " reading) at n=" + std::to_string(n) + ", l=" + std::to_string(l);
  if (value.get_den() != 1) {
    throw NonIntegralResult(where + " is not an integer: " + mbar::to_string(value), n, l, value);
  }
  if (value < 0) {
    throw NegativeResult(where + " is negative: " + mbar::to_string(value), n, l, value);
  }
  return value.get_num();
}

std::string to_string(const StirlingConvention& conv) {
  std::ostringstream os;
  os << "k>=" << conv.k_start << ", j>=" << conv.j_start << ", margin " << conv.verify_margin;
  return os.str();
}

std::vector<StirlingConvention> candidate_conventions(int verify_margin) {
  std::vector<StirlingConvention> out;
  for (int k0 : {0, 1})
    for (int j0 : {0, 1}) out.push_back({k0, j0, verify_margin});
  return out;
}

LPolynomial stirling_product(int n, const StirlingConvention& conv) {
  require_n(n);
  if (conv.k_start < 0 || conv.k_start > 1 || conv.j_start < 0 || conv.j_start > 1 ||
      conv.verify_margin < 0) {
    throw DomainError("invalid Stirling convention: " + to_string(conv));
  }
  const int max_degree = (n - 3) + conv.verify_margin;
  return LPolynomial(times_one_minus_l_power(n, stirling_series(n, conv, max_degree)));
}

LPolynomial class_via_stirling(int n, const StirlingConvention& conv) {
  const LPolynomial product = stirling_product(n, conv);
  for (int d = n - 2; d <= product.degree(); ++d) {
    if (product.coeff(d) != 0) {
      throw TruncationCheckFailed("Stirling sum for n=" + std::to_string(n) + " (" +
                                  to_string(conv) + ") leaves coefficient " +
                                  product.coeff(d).get_str() + " at L^" + std::to_string(d));
    }
  }
  LPolynomial cls = product.truncated(n - 3);
  to_betti_table(cls, n);
  return cls;
}

StirlingConvention resolve_convention(int n_check, std::span<const StirlingConvention> candidates) {
  if (n_check < 5) throw DomainError("resolve_convention needs n_check >= 5");
  std::vector<StirlingConvention> defaults;
  if (candidates.empty()) {
    defaults = candidate_conventions();
    candidates = defaults;
  }

  std::vector<LPolynomial> oracle;
  for (int n = 3; n <= n_check; ++n) oracle.push_back(class_via_strata(n, std::max(n_check, kDefaultOracleMaxN)));

  std::vector<StirlingConvention> matching;
  std::ostringstream dump;
  for (const auto& conv : candidates) {
    bool ok = true;
    for (int n = 3; n <= n_check && ok; ++n) {
      std::string got;
      try {
        const LPolynomial cls = class_via_stirling(n, conv);
        ok = cls == oracle[n - 3];
        got = cls.to_string();
      } catch (const Error& e) {
        ok = false;
        got = std::string("error: ") + e.what();
      }
      if (!ok) {
        dump << "\n  [" << to_string(conv) << "] n=" << n << ": " << got
             << " (oracle " << oracle[n - 3].to_string() << ")"
             << "; raw product " << stirling_product(n, conv).to_string();
      }
    }
    if (ok) matching.push_back(conv);
  }

  if (matching.empty()) {
    throw NoConventionMatches("no Stirling summation convention matches the strata oracle for n <= " +
                              std::to_string(n_check) + ":" + dump.str());
  }
  if (matching.size() > 1) {
    std::string which;
    for (const auto& c : matching) which += " [" + to_string(c) + "]";
    throw AmbiguousConvention("several conventions match up to n=" + std::to_string(n_check) + ":" +
                              which);
  }
  return matching.front();
}

const char* to_string(Method method) {
  switch (method) {
    case Method::Stirling: return "stirling";
    case Method::Cnki: return "cnki";
    case Method::Strata: return "strata";
  }
  return "?";
}

std::optional<Method> parse_method(const std::string& name) {
  if (name == "stirling") return Method::Stirling;
  if (name == "cnki") return Method::Cnki;
  if (name == "strata") return Method::Strata;
  return std::nullopt;
}

LPolynomial class_polynomial(int n, Method method, const TableOptions& options) {
  require_n(n);
  switch (method) {
    case Method::Stirling:
      return class_via_stirling(n, options.convention);
    case Method::Strata:
      return class_via_strata(n, options.n_max_oracle);
    case Method::Cnki: {
      std::vector<BigInt> ranks;
      for (int l = 0; l <= n - 3; ++l) ranks.push_back(betti_via_cnki(n, l, options.reading));
      LPolynomial cls(std::move(ranks));
      to_betti_table(cls, n);
      return cls;
    }
  }
  throw InternalError("unknown method");
}

BettiTable betti_table(int n, Method method, const TableOptions& options) {
  return to_betti_table(class_polynomial(n, method, options), n);
}

BigInt betti_number(int n, int l, Method method, const TableOptions& options) {
  require_n(n);
  if (l < 0 || l > n - 3) {
    throw DomainError("l must lie in 0..n-3, got n=" + std::to_string(n) + ", l=" + std::to_string(l));
  }
  switch (method) {
    case Method::Cnki:
      return betti_via_cnki(n, l, options.reading);
    case Method::Strata:
      return class_via_strata(n, options.n_max_oracle).coeff(l);
    case Method::Stirling:
      return times_one_minus_l_power(n, stirling_series(n, options.convention, l))[l];
  }
  throw InternalError("unknown method");
}

}  // namespace mbar
