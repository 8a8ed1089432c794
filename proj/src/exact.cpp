#include "mbar/exact.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "mbar/errors.hpp"

namespace mbar {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const BigRational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigInt factorial(int a) {
  if (a < 0) throw DomainError("factorial of a negative integer");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(a));
  return out;
}

namespace {

// Lower-triangular table of a two-term triangle recurrence, grown row by row
// on demand. Readers share the lock; extension takes it exclusively.
class TriangleMemo {
 public:
  // next(prev_row, a, b) -> entry (a, b) for 0 < b <= a
  using Step = BigInt (*)(const std::vector<BigInt>& prev, int a, int b);

  explicit TriangleMemo(Step step) : step_(step) { rows_.push_back({BigInt(1)}); }

  BigInt get(int a, int b) {
    if (a < 0 || b < 0 || b > a) return 0;
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(a) < rows_.size()) return rows_[a][b];
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= static_cast<std::size_t>(a)) {
      const int r = static_cast<int>(rows_.size());
      std::vector<BigInt> row(r + 1);
      row[0] = 0;
      for (int c = 1; c <= r; ++c) row[c] = step_(rows_.back(), r, c);
      rows_.push_back(std::move(row));
    }
    return rows_[a][b];
  }

 private:
  Step step_;
  std::shared_mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

BigInt at(const std::vector<BigInt>& row, int b) {
  return b < static_cast<int>(row.size()) ? row[b] : BigInt(0);
}

// s(a,b) = s(a-1,b-1) - (a-1) s(a-1,b)
BigInt first_kind_step(const std::vector<BigInt>& prev, int a, int b) {
  return at(prev, b - 1) - BigInt(a - 1) * at(prev, b);
}

// S(a,b) = S(a-1,b-1) + b S(a-1,b)
BigInt second_kind_step(const std::vector<BigInt>& prev, int, int b) {
  return at(prev, b - 1) + BigInt(b) * at(prev, b);
}

TriangleMemo& first_kind_memo() {
  static TriangleMemo memo(first_kind_step);
  return memo;
}

TriangleMemo& second_kind_memo() {
  static TriangleMemo memo(second_kind_step);
  return memo;
}

}  // namespace

BigInt stirling_first_signed(int a, int b) { return first_kind_memo().get(a, b); }

BigInt stirling_second(int a, int b) { return second_kind_memo().get(a, b); }

BigInt binomial(int a, int b) {
  if (a < 0) throw DomainError("binomial with negative upper index");
  if (b < 0 || b > a) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return out;
}

BigInt power_sum(int upper, int i) {
  if (upper < 0 || i < 1) throw DomainError("power_sum requires upper >= 0 and i >= 1");
  static std::shared_mutex mutex;
  static std::map<std::pair<int, int>, BigInt> memo;
  const auto key = std::make_pair(upper, i);
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  BigInt sum = 0;
  BigInt term;
  for (int j = 1; j <= upper; ++j) {
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(j),
                  static_cast<unsigned long>(i));
    sum += term;
  }
  std::unique_lock lock(mutex);
  memo.emplace(key, sum);
  return sum;
}

CompositionStream::CompositionStream(int total, int parts) : total_(total), parts_(parts) {
  if (total < 0 || parts < 0) throw DomainError("compositions of a negative quantity");
  if (parts > total || (parts == 0 && total != 0)) done_ = true;
}

bool CompositionStream::next() {
  if (done_) return false;
  auto& p = current_.parts;
  if (!started_) {
    started_ = true;
    // (1, 1, ..., 1, total - parts + 1): lexicographically smallest
    p.assign(parts_, 1);
    if (parts_ > 0) p.back() = total_ - parts_ + 1;
    return true;
  }
  // Rightmost slot whose tail still has slack: bump it, reset the tail to
  // (1, ..., 1, rest).
  if (parts_ == 0) {
    done_ = true;
    return false;
  }
  int tail = p.back();
  for (int pos = parts_ - 2; pos >= 0; --pos) {
    if (tail > parts_ - pos - 1) {
      ++p[pos];
      --tail;
      for (int q = pos + 1; q < parts_ - 1; ++q) {
        p[q] = 1;
        --tail;
      }
      p.back() = tail;
      return true;
    }
    tail += p[pos];
  }
  done_ = true;
  return false;
}

std::vector<Composition> compositions(int total, int parts) {
  std::vector<Composition> out;
  CompositionStream stream(total, parts);
  while (stream.next()) out.push_back(stream.current());
  return out;
}

}  // namespace mbar
