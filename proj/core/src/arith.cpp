#include "zetaspan/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace zetaspan {

namespace {

// Primes up to sqrt(kFactorizeBound), built once.
const std::vector<std::int64_t>& prime_table() {
  static const std::vector<std::int64_t> primes = [] {
    const std::int64_t limit =
        static_cast<std::int64_t>(std::sqrt(static_cast<double>(kFactorizeBound))) + 1;
    std::vector<bool> composite(static_cast<std::size_t>(limit + 1), false);
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p <= limit; ++p) {
      if (composite[static_cast<std::size_t>(p)]) continue;
      out.push_back(p);
      for (std::int64_t q = p * p; q <= limit; q += p)
        composite[static_cast<std::size_t>(q)] = true;
    }
    return out;
  }();
  return primes;
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

int Factorization::valuation(std::int64_t p) const {
  for (const auto& [q, e] : entries)
    if (q == p) return e;
  return 0;
}

Factorization factorize(std::int64_t n) {
  if (n < 1 || n > kFactorizeBound)
    throw std::out_of_range("factorize: n out of [1, " +
                            std::to_string(kFactorizeBound) + "]: " +
                            std::to_string(n));
  Factorization f;
  std::int64_t m = n;
  for (std::int64_t p : prime_table()) {
    if (p * p > m) break;
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.entries.emplace_back(p, e);
  }
  if (m > 1) f.entries.emplace_back(m, 1);
  return f;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  const Factorization f = factorize(n);
  std::vector<std::int64_t> out{1};
  for (const auto& [p, e] : f.entries) {
    const std::size_t base = out.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::int64_t, std::vector<int>>> divisors_with_exponents(
    const Factorization& f) {
  std::vector<std::pair<std::int64_t, std::vector<int>>> out;
  std::vector<int> exps(f.entries.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t value) -> void {
    if (i == f.entries.size()) {
      out.emplace_back(value, exps);
      return;
    }
    std::int64_t pk = 1;
    for (int k = 0; k <= f.entries[i].second; ++k) {
      exps[i] = k;
      self(self, i + 1, value * pk);
      pk *= f.entries[i].first;
    }
    exps[i] = 0;
  };
  rec(rec, 0, 1);
  return out;
}

const char* to_string(SplittingType t) {
  switch (t) {
    case SplittingType::Ramified: return "ramified";
    case SplittingType::Split: return "split";
    case SplittingType::Inert: return "inert";
  }
  return "?";
}

std::int64_t discriminant(std::int64_t d) {
  if (d == 0 || d == 1)
    throw std::invalid_argument("discriminant: d must not be 0 or 1");
  const std::int64_t a = d < 0 ? -d : d;
  if (a > kFactorizeBound)
    throw std::out_of_range("discriminant: |d| too large");
  for (const auto& [p, e] : factorize(a).entries)
    if (e > 1)
      throw std::invalid_argument("discriminant: d must be squarefree, got " +
                                  std::to_string(d));
  const std::int64_t mod4 = ((d % 4) + 4) % 4;
  return mod4 == 1 ? d : 4 * d;
}

bool is_fundamental_discriminant(std::int64_t D) {
  if (D == 0 || D == 1) return D == 1;  // D = 1: trivial character, allowed
  const auto squarefree = [](std::int64_t v) {
    const std::int64_t a = v < 0 ? -v : v;
    if (a == 0 || a > kFactorizeBound) return false;
    for (const auto& [p, e] : factorize(a).entries)
      if (e > 1) return false;
    return true;
  };
  const std::int64_t mod4 = ((D % 4) + 4) % 4;
  if (mod4 == 1) return squarefree(D);
  if (mod4 == 0) {
    const std::int64_t d = D / 4;
    if (d == 0 || d == 1) return false;
    const std::int64_t dmod4 = ((d % 4) + 4) % 4;
    return (dmod4 == 2 || dmod4 == 3) && squarefree(d);
  }
  return false;
}

int kronecker(std::int64_t D, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("kronecker: n must be positive");
  if (!is_fundamental_discriminant(D))
    throw std::invalid_argument("kronecker: D = " + std::to_string(D) +
                                " is not a fundamental discriminant");
  if (n == 1) return 1;

  int sign = 1;
  std::int64_t m = n;

  // factor of 2 in n: (D/2) is 0 for even D, else +-1 by D mod 8
  int e2 = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++e2;
  }
  if (e2 > 0) {
    if (D % 2 == 0) return 0;
    const std::int64_t dmod8 = ((D % 8) + 8) % 8;
    const int s2 = (dmod8 == 1 || dmod8 == 7) ? 1 : -1;
    if (e2 % 2 == 1 && s2 == -1) sign = -sign;
  }

  // Jacobi symbol (D/m) for odd m >= 1; periodic in D mod m
  std::int64_t a = D % m;
  if (a < 0) a += m;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t mmod8 = m % 8;
      if (mmod8 == 3 || mmod8 == 5) sign = -sign;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) sign = -sign;
    a %= m;
  }
  if (m != 1) return 0;
  return sign;
}

SplittingType splitting_type(std::int64_t D, std::int64_t p) {
  switch (kronecker(D, p)) {
    case 0: return SplittingType::Ramified;
    case 1: return SplittingType::Split;
    default: return SplittingType::Inert;
  }
}

Int multiplicative_eval(const std::function<Int(std::int64_t, int)>& local_rule,
                        std::int64_t n) {
  Int result = 1;
  for (const auto& [p, e] : factorize(n).entries) result *= local_rule(p, e);
  return result;
}

}  // namespace zetaspan
