#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "zetaspan/arith.hpp"

namespace zetaspan {

// Quadratic field Q(sqrt(d)), carried around as (d, D, bound). All ideal
// enumeration is norm-bounded by `bound`.
struct QuadField {
  std::int64_t d = 0;       // squarefree, not 0 or 1
  std::int64_t disc = 0;    // fundamental discriminant of Q(sqrt(d))
  std::int64_t bound = 1;   // norm bound N >= 1

  static QuadField from_d(std::int64_t d, std::int64_t bound);
  static QuadField from_discriminant(std::int64_t D, std::int64_t bound);

  SplittingType splitting(std::int64_t p) const { return splitting_type(disc, p); }
  int character(std::int64_t n) const { return kronecker(disc, n); }
};

// Which prime ideal above p: Sole for ramified/inert primes, the pinned
// Chosen/Conjugate pair for split ones. The split choice is a formal global
// convention; conjugation swaps it.
enum class IdealTag { Sole, Chosen, Conjugate };

struct PrimeIdealClass {
  std::int64_t p = 0;
  SplittingType stype = SplittingType::Ramified;
  IdealTag tag = IdealTag::Sole;

  // Norm of the class: p for ramified/split, p^2 for inert.
  std::int64_t class_norm() const {
    return stype == SplittingType::Inert ? p * p : p;
  }

  friend auto operator<=>(const PrimeIdealClass& a, const PrimeIdealClass& b) {
    if (auto c = a.p <=> b.p; c != 0) return c;
    return static_cast<int>(a.tag) <=> static_cast<int>(b.tag);
  }
  friend bool operator==(const PrimeIdealClass&, const PrimeIdealClass&) = default;
};

// An ideal in factored form: exponent table over prime ideal classes,
// entries sorted by (p, tag), all exponents >= 1; the unit ideal is the
// empty table. The norm is cached at construction.
class IdealF {
 public:
  IdealF() = default;
  explicit IdealF(std::vector<std::pair<PrimeIdealClass, int>> exps);

  static IdealF unit() { return IdealF(); }

  const std::vector<std::pair<PrimeIdealClass, int>>& exponents() const {
    return exps_;
  }
  std::int64_t norm() const { return norm_; }
  bool is_unit() const { return exps_.empty(); }
  int exponent_of(const PrimeIdealClass& c) const;

  IdealF times(const IdealF& other) const;
  bool divides(const IdealF& other) const;
  // Exact quotient; throws when other does not divide *this.
  IdealF divided_by(const IdealF& other) const;

  std::string to_string() const;

  friend auto operator<=>(const IdealF& a, const IdealF& b) {
    return a.exps_ <=> b.exps_;
  }
  friend bool operator==(const IdealF&, const IdealF&) = default;

 private:
  std::vector<std::pair<PrimeIdealClass, int>> exps_;
  std::int64_t norm_ = 1;
};

IdealF conjugate(const IdealF& a);

// All ideal divisors of a, deterministic order (exponents ascending,
// last class fastest).
std::vector<IdealF> ideal_divisors(const IdealF& a);

// Interval [lo, hi] in the ideal division poset; lo | hi is enforced.
struct IdealIntervalF {
  IdealF lo;
  IdealF hi;

  IdealIntervalF() = default;
  IdealIntervalF(IdealF lo_, IdealF hi_);

  std::string to_string() const;

  friend auto operator<=>(const IdealIntervalF&, const IdealIntervalF&) = default;
};

// Number of ideals of norm n. Local values: ramified p^k -> 1,
// split p^k -> k+1, inert p^k -> 1 if k even else 0.
std::int64_t ideal_count(const QuadField& K, std::int64_t n);

// All ideals of norm exactly n, deterministic order (primes ascending;
// at a split prime the Chosen exponent descends).
std::vector<IdealF> enumerate_ideals(const QuadField& K, std::int64_t n);

// Number of intervals [A, B] with N(A) = a, N(B) = b, A | B. Local values
// at exponents m = v_p(a) <= n = v_p(b): ramified -> 1,
// split -> (m+1)(n-m+1), inert -> 1 if m and n both even else 0.
std::int64_t interval_count(const QuadField& K, std::int64_t a, std::int64_t b);

std::vector<IdealIntervalF> enumerate_ideal_intervals(const QuadField& K,
                                                      std::int64_t a,
                                                      std::int64_t b);

}  // namespace zetaspan
