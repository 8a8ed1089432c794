#include "mbar/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "mbar/errors.hpp"
#include "mbar/parallel.hpp"

namespace mbar {

namespace {

using QPoly = std::vector<BigRational>;  // lowest degree first, trimmed

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_q(const LPolynomial& p) {
  QPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return out;
}

// Positive rescaling to a primitive integer polynomial: signs (and hence
// sign variations) are untouched.
LPolynomial primitive(const QPoly& p) {
  if (p.empty()) return {};
  BigInt den_lcm = 1;
  for (const auto& c : p) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> ints;
  ints.reserve(p.size());
  BigInt content = 0;
  for (const auto& c : p) {
    BigInt v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  for (auto& v : ints) v /= content;
  return LPolynomial(std::move(ints));
}

// Remainder of a / b over Q; b nonzero.
QPoly remainder(QPoly a, const QPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const BigRational factor = a.back() / b.back();
    for (int i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
    a.pop_back();  // leading term cancelled exactly
    trim(a);
  }
  return a;
}

// Quotient of a / b over Q; the remainder is dropped.
QPoly quotient(QPoly a, const QPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const int da = static_cast<int>(a.size()) - 1;
  if (da < db) return {};
  QPoly q(da - db + 1);
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const BigRational factor = a.back() / b.back();
    q[shift] = factor;
    for (int i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

int sign(const BigInt& z) { return sgn(z); }

int variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

LPolynomial positive_leading(LPolynomial p) {
  if (!p.is_zero() && p.leading() < 0) p = -p;
  return p;
}

std::string describe(int n, int l) {
  return "n=" + std::to_string(n) + ", l=" + std::to_string(l);
}

}  // namespace

bool is_unimodal(std::span<const BigInt> seq) {
  if (seq.empty()) throw DomainError("is_unimodal needs a nonempty sequence");
  std::size_t i = 1;
  while (i < seq.size() && seq[i] >= seq[i - 1]) ++i;
  while (i < seq.size() && seq[i] <= seq[i - 1]) ++i;
  return i == seq.size();
}

bool is_log_concave(std::span<const BigRational> seq) {
  for (std::size_t l = 1; l + 1 < seq.size(); ++l) {
    if (seq[l] * seq[l] < seq[l - 1] * seq[l + 1]) return false;
  }
  return true;
}

std::vector<BigRational> binomial_normalized(const BettiTable& table) {
  std::vector<BigRational> out;
  const int d = table.n - 3;
  for (int l = 0; l < static_cast<int>(table.ranks.size()); ++l) {
    out.push_back(make_rational(table.ranks[l], binomial(d, l)));
  }
  return out;
}

UlcReport ulc_check(const BettiTable& table) {
  UlcReport report;
  report.n = table.n;
  const int d = table.n - 3;
  const auto& r = table.ranks;
  for (int l = 2; l <= d; ++l) {
    UlcEntry e;
    e.l = l;
    const BigRational mid = make_rational(r[l - 1], binomial(d, l - 1));
    e.lhs = mid * mid;
    e.rhs = make_rational(r[l - 2] * r[l], binomial(d, l - 2) * binomial(d, l));
    e.holds = e.lhs >= e.rhs;
    report.all_hold = report.all_hold && e.holds;
    report.per_l.push_back(std::move(e));
  }
  return report;
}

std::vector<LPolynomial> sturm_chain(const LPolynomial& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  std::vector<LPolynomial> chain{primitive(to_q(p))};
  LPolynomial d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(primitive(to_q(d)));
  while (true) {
    QPoly r = remainder(to_q(chain[chain.size() - 2]), to_q(chain.back()));
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(primitive(r));
  }
  return chain;
}

int sturm_count(const LPolynomial& p) {
  const auto chain = sturm_chain(p);
  std::vector<int> at_minus, at_plus;
  for (const auto& q : chain) {
    const int lead = sign(q.leading());
    at_plus.push_back(lead);
    at_minus.push_back(q.degree() % 2 ? -lead : lead);
  }
  return variations(at_minus) - variations(at_plus);
}

LPolynomial polynomial_gcd(const LPolynomial& a, const LPolynomial& b) {
  LPolynomial x = primitive(to_q(a));
  LPolynomial y = primitive(to_q(b));
  while (!y.is_zero()) {
    LPolynomial r = primitive(remainder(to_q(x), to_q(y)));
    x = std::move(y);
    y = std::move(r);
  }
  return positive_leading(x);
}

LPolynomial squarefree_part(const LPolynomial& p) {
  if (p.is_zero()) throw DomainError("squarefree part of the zero polynomial");
  const LPolynomial g = polynomial_gcd(p, p.derivative());
  return positive_leading(primitive(quotient(to_q(p), to_q(g))));
}

bool is_real_rooted(const LPolynomial& p) {
  const LPolynomial q = squarefree_part(p);
  return sturm_count(q) == q.degree();
}

BigRational main_term(int n, int l) {
  if (n < 3 || l < 0) throw DomainError("main_term needs n >= 3 and l >= 0");
  return make_rational(pow(BigInt(l + 1), static_cast<unsigned long>(l + n - 1)), factorial(l + 1));
}

bool in_asymptotic_range(int n, int l) {
  if (n < 3) throw DomainError("in_asymptotic_range needs n >= 3");
  if (l < 2) return true;
  // l <= n/(10 ln n)  <=>  n <= exp(x) with x = n/(10 l)
  const BigRational x = make_rational(BigInt(n), BigInt(10 * l));
  const BigRational target(n);
  BigRational lower = 1;  // partial Taylor sum
  BigRational term = 1;   // x^K / K!
  for (int k = 1;; ++k) {
    term *= x / BigRational(k);
    lower += term;
    if (lower > target) return true;
    // tail after x^k/k! is at most x^{k+1}/(k+1)! / (1 - x/(k+2)) once k+2 > x
    const BigRational ratio = x / BigRational(k + 2);
    if (ratio < 1) {
      const BigRational upper = lower + term * x / BigRational(k + 1) / (BigRational(1) - ratio);
      if (upper < target) return false;
    }
  }
}

std::optional<int> empirical_threshold(const std::vector<AsymptoticEntry>& entries) {
  std::vector<const AsymptoticEntry*> sorted;
  for (const auto& e : entries) sorted.push_back(&e);
  std::sort(sorted.begin(), sorted.end(),
            [](const AsymptoticEntry* a, const AsymptoticEntry* b) { return a->n < b->n; });
  std::optional<int> threshold;
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    const AsymptoticEntry& e = **it;
    const BigRational bound = make_rational(BigInt(1), BigInt(e.n) * BigInt(e.n));
    if (e.abs_error > bound) break;
    threshold = e.n;
  }
  return threshold;
}

AsymptoticReport asymptotic_scan(int l, std::span<const int> ns, Method method, RangePolicy policy,
                                 int jobs) {
  if (ns.empty()) throw DomainError("asymptotic_scan needs at least one n");
  if (l < 0) throw DomainError("asymptotic_scan needs l >= 0");
  std::vector<bool> in_range(ns.size());
  for (std::size_t idx = 0; idx < ns.size(); ++idx) {
    const int n = ns[idx];
    if (n < 3 || l > n - 3) throw RangeError("l=" + std::to_string(l) + " is not a degree of M̄_{0," + std::to_string(n) + "}");
    in_range[idx] = in_asymptotic_range(n, l);
    if (!in_range[idx] && policy == RangePolicy::Enforce) {
      throw RangeError(describe(n, l) + " violates l <= n/(10 ln n)");
    }
  }

  AsymptoticReport report;
  report.l = l;
  report.entries.resize(ns.size());
  parallel_for(ns.size(), jobs, [&](std::size_t idx) {
    AsymptoticEntry& e = report.entries[idx];
    e.n = ns[idx];
    e.l = l;
    e.in_range = in_range[idx];
    e.rank = betti_number(e.n, l, method);
    e.main_term = main_term(e.n, l);
    e.ratio = BigRational(e.rank) / e.main_term;
    e.ratio_minus_one = e.ratio - 1;
    e.abs_error = abs(e.ratio_minus_one);
    e.scaled = BigRational(BigInt(e.n) * BigInt(e.n)) * e.abs_error;
  });
  report.empirical_N = empirical_threshold(report.entries);
  return report;
}

ProbeReport cnki_constant_probe(const ProbeGrid& grid) {
  if (grid.n_min < 3 || grid.n_max < grid.n_min || grid.i_max < 1) {
    throw DomainError("cnki_constant_probe needs a nonempty grid with n >= 3, i >= 1");
  }
  ProbeReport report;
  bool first = true;
  for (int n = grid.n_min; n <= grid.n_max; ++n) {
    const int k_max = grid.k_max(n);
    const BigInt n_big(n);
    for (int k = 0; k <= k_max; ++k) {
      for (int i = 1; i <= grid.i_max; ++i) {
        const BigRational value =
            abs(cnki(n, k, i).value) / BigRational(pow(n_big, static_cast<unsigned long>(i + 1)));
        ++report.points;
        if (first || value > report.sup_value) {
          report.sup_value = value;
          report.argmax_n = n;
          report.argmax_k = k;
          report.argmax_i = i;
          first = false;
        }
      }
    }
  }
  if (report.points == 0) throw DomainError("cnki_constant_probe grid is empty");
  if (!grid.description.empty()) {
    report.grid = grid.description;
  } else {
    std::ostringstream os;
    os << "n in " << grid.n_min << ".." << grid.n_max << ", 0 <= k <= k_max(n), 1 <= i <= "
       << grid.i_max;
    report.grid = os.str();
  }
  return report;
}

BoundCheckResult run_proof_bound_checks(const BoundRanges& ranges) {
  BoundCheckResult result;
  for (int k = ranges.k_min; k <= ranges.k_max; ++k) {
    for (int n = ranges.n_min; n <= ranges.n_max; ++n) {
      for (int i = ranges.i_min; i <= ranges.i_max; ++i) {
        ++result.checked;
        const BigRational sum(power_sum(k + n - 2, i));
        const BigRational integral =
            make_rational(pow(BigInt(k + n - 1), static_cast<unsigned long>(i + 1)), BigInt(i + 1));
        if (sum > integral) {
          result.all_hold = false;
          result.failures.push_back("power sum bound fails at k=" + std::to_string(k) +
                                    ", n=" + std::to_string(n) + ", i=" + std::to_string(i));
        }
      }
    }
  }
  for (int t = 1; t <= ranges.t_max; ++t) {
    const BigInt four_t = pow(BigInt(4), static_cast<unsigned long>(t));
    for (int m = 1; m <= t; ++m) {
      ++result.checked;
      const BigInt count = binomial(t - 1, m - 1);
      const BigInt middle = pow(BigInt(2), static_cast<unsigned long>(t + m - 1));
      if (count > middle || middle > four_t) {
        result.all_hold = false;
        result.failures.push_back("composition count bound fails at t=" + std::to_string(t) +
                                  ", m=" + std::to_string(m));
      }
    }
  }
  return result;
}

}  // namespace mbar
