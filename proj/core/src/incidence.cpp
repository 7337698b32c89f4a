#include "zetaspan/incidence.hpp"

#include <stdexcept>
#include <string>

#include "zetaspan/arith.hpp"

namespace zetaspan {

namespace {

void check_positive_bound(std::int64_t bound, const char* who) {
  if (bound < 1)
    throw std::invalid_argument(std::string(who) + ": bound must be >= 1");
}

void check_same_bound(std::int64_t a, std::int64_t b, const char* who) {
  if (a != b)
    throw std::domain_error(std::string(who) + ": bound mismatch (" +
                            std::to_string(a) + " vs " + std::to_string(b) + ")");
}

}  // namespace

ReducedFn::ReducedFn(std::int64_t bound) : bound_(bound) {
  check_positive_bound(bound, "ReducedFn");
}

void ReducedFn::check_index(std::int64_t n) const {
  if (n < 1 || n > bound_)
    throw std::out_of_range("ReducedFn: index " + std::to_string(n) +
                            " outside [1, " + std::to_string(bound_) + "]");
}

Int ReducedFn::at(std::int64_t n) const {
  check_index(n);
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? Int(0) : it->second;
}

void ReducedFn::set(std::int64_t n, Int v) {
  check_index(n);
  if (v == 0)
    coeffs_.erase(n);
  else
    coeffs_[n] = std::move(v);
}

ReducedFn ReducedFn::delta(std::int64_t bound) {
  ReducedFn f(bound);
  f.set(1, 1);
  return f;
}

ReducedFn ReducedFn::zeta(std::int64_t bound) {
  ReducedFn f(bound);
  for (std::int64_t n = 1; n <= bound; ++n) f.coeffs_[n] = 1;
  return f;
}

ReducedFn ReducedFn::mobius(std::int64_t bound) {
  // mu(1) = 1, mu(n) = -sum_{d|n, d<n} mu(d)
  ReducedFn f(bound);
  std::vector<Int> mu(static_cast<std::size_t>(bound) + 1, 0);
  mu[1] = 1;
  for (std::int64_t d = 1; d <= bound; ++d) {
    if (mu[static_cast<std::size_t>(d)] == 0) continue;
    for (std::int64_t n = 2 * d; n <= bound; n += d)
      mu[static_cast<std::size_t>(n)] -= mu[static_cast<std::size_t>(d)];
  }
  for (std::int64_t n = 1; n <= bound; ++n)
    if (mu[static_cast<std::size_t>(n)] != 0)
      f.coeffs_[n] = mu[static_cast<std::size_t>(n)];
  return f;
}

ReducedFn ReducedFn::tabulate(std::int64_t bound,
                              const std::function<Int(std::int64_t)>& counter) {
  ReducedFn f(bound);
  for (std::int64_t n = 1; n <= bound; ++n) {
    Int v = counter(n);
    if (v != 0) f.coeffs_[n] = std::move(v);
  }
  return f;
}

ReducedFn ReducedFn::restricted(std::int64_t new_bound) const {
  if (new_bound > bound_)
    throw std::domain_error("ReducedFn::restricted: bound can only shrink");
  ReducedFn f(new_bound);
  for (const auto& [n, v] : coeffs_) {
    if (n > new_bound) break;
    f.coeffs_[n] = v;
  }
  return f;
}

ReducedFn operator+(const ReducedFn& f, const ReducedFn& g) {
  check_same_bound(f.bound_, g.bound_, "ReducedFn::operator+");
  ReducedFn out = f;
  for (const auto& [n, v] : g.coeffs_) {
    auto [it, inserted] = out.coeffs_.try_emplace(n, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) out.coeffs_.erase(it);
    }
  }
  return out;
}

ReducedFn operator-(const ReducedFn& f, const ReducedFn& g) {
  check_same_bound(f.bound_, g.bound_, "ReducedFn::operator-");
  ReducedFn out = f;
  for (const auto& [n, v] : g.coeffs_) {
    auto [it, inserted] = out.coeffs_.try_emplace(n, Int(-v));
    if (!inserted) {
      it->second -= v;
      if (it->second == 0) out.coeffs_.erase(it);
    }
  }
  return out;
}

bool operator==(const ReducedFn& f, const ReducedFn& g) {
  return f.bound_ == g.bound_ && f.coeffs_ == g.coeffs_;
}

ReducedFn convolve(const ReducedFn& f, const ReducedFn& g) {
  check_same_bound(f.bound(), g.bound(), "convolve(ReducedFn)");
  ReducedFn out(f.bound());
  for (const auto& [d, fv] : f.support()) {
    for (const auto& [e, gv] : g.support()) {
      if (d * e > f.bound()) break;  // support is ordered
      out.set(d * e, out.at(d * e) + fv * gv);
    }
  }
  return out;
}

IntervalFn::IntervalFn(std::int64_t bound) : bound_(bound) {
  check_positive_bound(bound, "IntervalFn");
}

void IntervalFn::check_key(std::int64_t a, std::int64_t b) const {
  if (a < 1 || b < 1 || b > bound_ || b % a != 0)
    throw std::domain_error("IntervalFn: [" + std::to_string(a) + "," +
                            std::to_string(b) + "] is not an interval key within bound " +
                            std::to_string(bound_));
}

Int IntervalFn::at(std::int64_t a, std::int64_t b) const {
  check_key(a, b);
  auto it = values_.find({a, b / a});
  return it == values_.end() ? Int(0) : it->second;
}

void IntervalFn::set(std::int64_t a, std::int64_t b, Int v) {
  check_key(a, b);
  if (v == 0)
    values_.erase({a, b / a});
  else
    values_[{a, b / a}] = std::move(v);
}

IntervalFn IntervalFn::delta(std::int64_t bound) {
  IntervalFn f(bound);
  for (std::int64_t a = 1; a <= bound; ++a) f.values_[{a, 1}] = 1;
  return f;
}

IntervalFn IntervalFn::zeta(std::int64_t bound) {
  IntervalFn f(bound);
  for (std::int64_t a = 1; a <= bound; ++a)
    for (std::int64_t q = 1; a * q <= bound; ++q) f.values_[{a, q}] = 1;
  return f;
}

IntervalFn IntervalFn::mobius(std::int64_t bound) {
  // mu([a,b]) = 1 on degenerate intervals, else -sum_{a|z|b, z != b} mu([a,z]),
  // computed per key; translation invariance is a theorem about the result,
  // not an input.
  IntervalFn f(bound);
  for (std::int64_t a = 1; a <= bound; ++a) {
    std::map<std::int64_t, Int> mu_a;  // q -> mu([a, a*q])
    std::vector<std::int64_t> quotients;
    for (std::int64_t q = 1; a * q <= bound; ++q) quotients.push_back(q);
    for (std::int64_t q : quotients) {
      if (q == 1) {
        mu_a[1] = 1;
        continue;
      }
      Int s = 0;
      for (std::int64_t e : divisors(q))
        if (e != q) s += mu_a[e];
      mu_a[q] = -s;
    }
    for (const auto& [q, v] : mu_a)
      if (v != 0) f.values_[{a, q}] = v;
  }
  return f;
}

IntervalFn IntervalFn::tabulate(
    std::int64_t bound,
    const std::function<Int(std::int64_t, std::int64_t)>& counter) {
  IntervalFn f(bound);
  for (std::int64_t a = 1; a <= bound; ++a)
    for (std::int64_t q = 1; a * q <= bound; ++q) {
      Int v = counter(a, a * q);
      if (v != 0) f.values_[{a, q}] = std::move(v);
    }
  return f;
}

IntervalFn IntervalFn::restricted(std::int64_t new_bound) const {
  if (new_bound > bound_)
    throw std::domain_error("IntervalFn::restricted: bound can only shrink");
  IntervalFn f(new_bound);
  for (const auto& [key, v] : values_)
    if (key.first * key.second <= new_bound) f.values_[key] = v;
  return f;
}

IntervalFn operator+(const IntervalFn& f, const IntervalFn& g) {
  check_same_bound(f.bound_, g.bound_, "IntervalFn::operator+");
  IntervalFn out = f;
  for (const auto& [key, v] : g.values_) {
    auto [it, inserted] = out.values_.try_emplace(key, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) out.values_.erase(it);
    }
  }
  return out;
}

IntervalFn operator-(const IntervalFn& f, const IntervalFn& g) {
  check_same_bound(f.bound_, g.bound_, "IntervalFn::operator-");
  IntervalFn out = f;
  for (const auto& [key, v] : g.values_) {
    auto [it, inserted] = out.values_.try_emplace(key, Int(-v));
    if (!inserted) {
      it->second -= v;
      if (it->second == 0) out.values_.erase(it);
    }
  }
  return out;
}

bool operator==(const IntervalFn& f, const IntervalFn& g) {
  return f.bound_ == g.bound_ && f.values_ == g.values_;
}

IntervalFn convolve(const IntervalFn& f, const IntervalFn& g) {
  check_same_bound(f.bound(), g.bound(), "convolve(IntervalFn)");
  IntervalFn out(f.bound());
  const auto& gs = g.support();
  for (const auto& [fkey, fv] : f.support()) {
    const auto [a, q1] = fkey;
    const std::int64_t d = a * q1;
    // continuations [d, d*q2] in g
    for (auto it = gs.lower_bound({d, 0}); it != gs.end() && it->first.first == d;
         ++it) {
      const std::int64_t q2 = it->first.second;
      if (d * q2 > f.bound()) break;
      const std::int64_t b = d * q2;
      out.set(a, b, out.at(a, b) + fv * it->second);
    }
  }
  return out;
}

ReducedFn reduce(const IntervalFn& f) {
  ReducedFn out(f.bound());
  for (std::int64_t n = 1; n <= f.bound(); ++n) {
    Int v = f.at(1, n);
    if (v != 0) out.set(n, std::move(v));
  }
  return out;
}

FactorizationParity factorization_parity(std::int64_t bound) {
  check_positive_bound(bound, "factorization_parity");
  std::vector<Int> even(static_cast<std::size_t>(bound) + 1, 0);
  std::vector<Int> odd(static_cast<std::size_t>(bound) + 1, 0);
  even[1] = 1;
  // Strip the first factor: a length-k factorization of n is a factor d > 1
  // followed by a length-(k-1) factorization of n/d.
  for (std::int64_t n = 2; n <= bound; ++n) {
    for (std::int64_t d : divisors(n)) {
      if (d == 1) continue;
      const std::size_t rest = static_cast<std::size_t>(n / d);
      odd[static_cast<std::size_t>(n)] += even[rest];
      even[static_cast<std::size_t>(n)] += odd[rest];
    }
  }
  FactorizationParity out{ReducedFn(bound), ReducedFn(bound)};
  for (std::int64_t n = 1; n <= bound; ++n) {
    if (even[static_cast<std::size_t>(n)] != 0)
      out.even.set(n, even[static_cast<std::size_t>(n)]);
    if (odd[static_cast<std::size_t>(n)] != 0)
      out.odd.set(n, odd[static_cast<std::size_t>(n)]);
  }
  return out;
}

}  // namespace zetaspan
