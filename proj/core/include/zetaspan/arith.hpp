#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "zetaspan/integers.hpp"

namespace zetaspan {

// Largest n accepted by factorize(). Trial division against a prime table
// up to sqrt of this bound keeps everything deterministic.
inline constexpr std::int64_t kFactorizeBound = 10'000'000;

// Prime factorization of a positive integer: (prime, exponent) pairs with
// strictly increasing primes and exponents >= 1. factorize(1) is empty.
struct Factorization {
  std::vector<std::pair<std::int64_t, int>> entries;

  bool operator==(const Factorization&) const = default;
  int valuation(std::int64_t p) const;
};

Factorization factorize(std::int64_t n);

// All divisors of n, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

// All divisors together with their exponent vectors relative to f's primes.
// Order: lexicographic in the exponent vector, last prime fastest.
std::vector<std::pair<std::int64_t, std::vector<int>>> divisors_with_exponents(
    const Factorization& f);

enum class SplittingType { Ramified, Split, Inert };

const char* to_string(SplittingType t);

// Fundamental discriminant of Q(sqrt(d)) for squarefree d not in {0,1}:
// d itself when d = 1 (mod 4), otherwise 4d.
std::int64_t discriminant(std::int64_t d);

bool is_fundamental_discriminant(std::int64_t D);

// Kronecker symbol (D/n) for a fundamental discriminant D (D = 1 allowed as
// the trivial character) and n >= 1. Jacobi reciprocity with the usual
// 2-adic rules; completely multiplicative in n, zero exactly when
// gcd(n, D) > 1.
int kronecker(std::int64_t D, std::int64_t n);

// Splitting of the rational prime p in the field of discriminant D,
// read off the character: 0 -> Ramified, 1 -> Split, -1 -> Inert.
SplittingType splitting_type(std::int64_t D, std::int64_t p);

// Evaluates the multiplicative function determined by local_rule(p, e) on
// prime powers: product over the factorization of n, empty product = 1.
Int multiplicative_eval(const std::function<Int(std::int64_t, int)>& local_rule,
                        std::int64_t n);

}  // namespace zetaspan
