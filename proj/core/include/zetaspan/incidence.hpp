#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>

#include "zetaspan/integers.hpp"

namespace zetaspan {

// Element of the numerical incidence algebra at the reduced level:
// an integer coefficient for every n <= N, stored sparsely (absent = 0).
// Convolution is the Dirichlet one, (f*g)(n) = sum_{d|n} f(d) g(n/d).
class ReducedFn {
 public:
  explicit ReducedFn(std::int64_t bound);

  static ReducedFn delta(std::int64_t bound);   // 1 at n = 1
  static ReducedFn zeta(std::int64_t bound);    // 1 everywhere
  static ReducedFn mobius(std::int64_t bound);  // convolution inverse of zeta
  // Materializes n -> counter(n); realizes pushforwards numerically.
  static ReducedFn tabulate(std::int64_t bound,
                            const std::function<Int(std::int64_t)>& counter);

  std::int64_t bound() const { return bound_; }
  Int at(std::int64_t n) const;
  void set(std::int64_t n, Int v);
  const std::map<std::int64_t, Int>& support() const { return coeffs_; }

  ReducedFn restricted(std::int64_t new_bound) const;

  friend ReducedFn operator+(const ReducedFn& f, const ReducedFn& g);
  friend ReducedFn operator-(const ReducedFn& f, const ReducedFn& g);
  friend bool operator==(const ReducedFn& f, const ReducedFn& g);

 private:
  void check_index(std::int64_t n) const;

  std::int64_t bound_;
  std::map<std::int64_t, Int> coeffs_;  // zero entries are dropped
};

ReducedFn convolve(const ReducedFn& f, const ReducedFn& g);

// Element of the numerical incidence algebra of the division poset:
// a coefficient for every interval [a, b] with a | b <= N. Keys are stored
// as (a, b/a). Convolution: (f*g)([a,b]) = sum_{a|d|b} f([a,d]) g([d,b]).
class IntervalFn {
 public:
  explicit IntervalFn(std::int64_t bound);

  static IntervalFn delta(std::int64_t bound);   // 1 on degenerate [a,a]
  static IntervalFn zeta(std::int64_t bound);    // 1 on every interval
  static IntervalFn mobius(std::int64_t bound);  // convolution inverse of zeta
  static IntervalFn tabulate(
      std::int64_t bound,
      const std::function<Int(std::int64_t, std::int64_t)>& counter);

  std::int64_t bound() const { return bound_; }
  Int at(std::int64_t a, std::int64_t b) const;
  void set(std::int64_t a, std::int64_t b, Int v);
  // Keys are (a, q), meaning the interval [a, a*q].
  const std::map<std::pair<std::int64_t, std::int64_t>, Int>& support() const {
    return values_;
  }

  IntervalFn restricted(std::int64_t new_bound) const;

  friend IntervalFn operator+(const IntervalFn& f, const IntervalFn& g);
  friend IntervalFn operator-(const IntervalFn& f, const IntervalFn& g);
  friend bool operator==(const IntervalFn& f, const IntervalFn& g);

 private:
  void check_key(std::int64_t a, std::int64_t b) const;

  std::int64_t bound_;
  std::map<std::pair<std::int64_t, std::int64_t>, Int> values_;
};

IntervalFn convolve(const IntervalFn& f, const IntervalFn& g);

// The reduction map: keep only the values on initial intervals,
// reduce(f)(n) = f([1, n]).
ReducedFn reduce(const IntervalFn& f);

// Ordered-factorization counts by parity of length: even(n) / odd(n) count
// the ordered factorizations of n into an even / odd number of factors > 1
// (even(1) = 1 for the empty factorization). even - odd is the Mobius
// function, which is the sign-free form of Mobius inversion.
struct FactorizationParity {
  ReducedFn even;
  ReducedFn odd;
};

FactorizationParity factorization_parity(std::int64_t bound);

}  // namespace zetaspan
