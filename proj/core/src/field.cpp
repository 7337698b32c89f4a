#include "zetaspan/field.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace zetaspan {

namespace {

void check_bound(const QuadField& K, std::int64_t n, const char* who) {
  if (n < 1 || n > K.bound)
    throw std::out_of_range(std::string(who) + ": n = " + std::to_string(n) +
                            " outside [1, " + std::to_string(K.bound) + "]");
}

PrimeIdealClass sole(std::int64_t p, SplittingType t) {
  return PrimeIdealClass{p, t, IdealTag::Sole};
}
PrimeIdealClass chosen(std::int64_t p) {
  return PrimeIdealClass{p, SplittingType::Split, IdealTag::Chosen};
}
PrimeIdealClass conj_class(std::int64_t p) {
  return PrimeIdealClass{p, SplittingType::Split, IdealTag::Conjugate};
}

// Per-prime lists of local factors, combined by cartesian product with
// primes ascending and the local lists in their stated order.
std::vector<IdealF> combine(
    const std::vector<std::vector<IdealF>>& local_choices) {
  std::vector<IdealF> acc{IdealF::unit()};
  for (const auto& choices : local_choices) {
    if (choices.empty()) return {};
    std::vector<IdealF> next;
    next.reserve(acc.size() * choices.size());
    for (const auto& a : acc)
      for (const auto& c : choices) next.push_back(a.times(c));
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

QuadField QuadField::from_d(std::int64_t d, std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("QuadField: bound must be >= 1");
  QuadField K;
  K.d = d;
  K.disc = discriminant(d);  // validates squarefree, d not in {0,1}
  K.bound = bound;
  return K;
}

QuadField QuadField::from_discriminant(std::int64_t D, std::int64_t bound) {
  if (!is_fundamental_discriminant(D) || D == 1)
    throw std::invalid_argument("QuadField: " + std::to_string(D) +
                                " is not a fundamental discriminant");
  const std::int64_t mod4 = ((D % 4) + 4) % 4;
  return from_d(mod4 == 1 ? D : D / 4, bound);
}

IdealF::IdealF(std::vector<std::pair<PrimeIdealClass, int>> exps)
    : exps_(std::move(exps)) {
  std::erase_if(exps_, [](const auto& e) { return e.second == 0; });
  std::sort(exps_.begin(), exps_.end());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const auto& [cls, e] = exps_[i];
    if (e < 0) throw std::invalid_argument("IdealF: negative exponent");
    if ((cls.tag == IdealTag::Sole) != (cls.stype != SplittingType::Split))
      throw std::invalid_argument("IdealF: tag inconsistent with splitting type");
    if (i > 0 && exps_[i - 1].first == cls)
      throw std::invalid_argument("IdealF: duplicate prime ideal class");
    std::int64_t cn = cls.class_norm();
    for (int k = 0; k < e; ++k) norm_ *= cn;
  }
}

int IdealF::exponent_of(const PrimeIdealClass& c) const {
  for (const auto& [cls, e] : exps_)
    if (cls == c) return e;
  return 0;
}

IdealF IdealF::times(const IdealF& other) const {
  std::map<PrimeIdealClass, int> merged;
  for (const auto& [c, e] : exps_) merged[c] += e;
  for (const auto& [c, e] : other.exps_) merged[c] += e;
  return IdealF(std::vector<std::pair<PrimeIdealClass, int>>(merged.begin(),
                                                             merged.end()));
}

bool IdealF::divides(const IdealF& other) const {
  for (const auto& [c, e] : exps_)
    if (e > other.exponent_of(c)) return false;
  return true;
}

IdealF IdealF::divided_by(const IdealF& other) const {
  if (!other.divides(*this))
    throw std::domain_error("IdealF::divided_by: not a divisor");
  std::vector<std::pair<PrimeIdealClass, int>> exps;
  for (const auto& [c, e] : exps_) {
    const int q = e - other.exponent_of(c);
    if (q > 0) exps.emplace_back(c, q);
  }
  return IdealF(std::move(exps));
}

std::string IdealF::to_string() const {
  if (exps_.empty()) return "(1)";
  std::string out;
  for (const auto& [c, e] : exps_) {
    if (!out.empty()) out += "*";
    out += "p" + std::to_string(c.p);
    if (c.tag == IdealTag::Conjugate) out += "b";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

IdealF conjugate(const IdealF& a) {
  std::vector<std::pair<PrimeIdealClass, int>> exps;
  exps.reserve(a.exponents().size());
  for (auto [c, e] : a.exponents()) {
    if (c.tag == IdealTag::Chosen)
      c.tag = IdealTag::Conjugate;
    else if (c.tag == IdealTag::Conjugate)
      c.tag = IdealTag::Chosen;
    exps.emplace_back(c, e);
  }
  return IdealF(std::move(exps));
}

std::vector<IdealF> ideal_divisors(const IdealF& a) {
  std::vector<IdealF> out;
  std::vector<std::pair<PrimeIdealClass, int>> current;
  const auto& exps = a.exponents();
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == exps.size()) {
      out.push_back(IdealF(current));
      return;
    }
    for (int k = 0; k <= exps[i].second; ++k) {
      if (k > 0) {
        if (!current.empty() && current.back().first == exps[i].first)
          current.back().second = k;
        else
          current.emplace_back(exps[i].first, k);
      }
      self(self, i + 1);
    }
    if (!current.empty() && current.back().first == exps[i].first)
      current.pop_back();
  };
  rec(rec, 0);
  return out;
}

IdealIntervalF::IdealIntervalF(IdealF lo_, IdealF hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (!lo.divides(hi))
    throw std::domain_error("IdealIntervalF: lo does not divide hi");
}

std::string IdealIntervalF::to_string() const {
  return "[" + lo.to_string() + "," + hi.to_string() + "]";
}

std::int64_t ideal_count(const QuadField& K, std::int64_t n) {
  check_bound(K, n, "ideal_count");
  std::int64_t count = 1;
  for (const auto& [p, e] : factorize(n).entries) {
    switch (K.splitting(p)) {
      case SplittingType::Ramified: break;
      case SplittingType::Split: count *= (e + 1); break;
      case SplittingType::Inert:
        if (e % 2 != 0) return 0;
        break;
    }
  }
  return count;
}

std::vector<IdealF> enumerate_ideals(const QuadField& K, std::int64_t n) {
  check_bound(K, n, "enumerate_ideals");
  std::vector<std::vector<IdealF>> locals;
  for (const auto& [p, e] : factorize(n).entries) {
    std::vector<IdealF> choices;
    switch (K.splitting(p)) {
      case SplittingType::Ramified:
        choices.push_back(IdealF({{sole(p, SplittingType::Ramified), e}}));
        break;
      case SplittingType::Inert:
        if (e % 2 == 0)
          choices.push_back(IdealF({{sole(p, SplittingType::Inert), e / 2}}));
        break;
      case SplittingType::Split:
        for (int i = e; i >= 0; --i)
          choices.push_back(IdealF({{chosen(p), i}, {conj_class(p), e - i}}));
        break;
    }
    locals.push_back(std::move(choices));
  }
  return combine(locals);
}

std::int64_t interval_count(const QuadField& K, std::int64_t a, std::int64_t b) {
  check_bound(K, b, "interval_count");
  if (a < 1 || b % a != 0)
    throw std::domain_error("interval_count: a must divide b");
  const Factorization fa = factorize(a);
  std::int64_t count = 1;
  for (const auto& [p, n] : factorize(b).entries) {
    const int m = fa.valuation(p);
    switch (K.splitting(p)) {
      case SplittingType::Ramified: break;
      case SplittingType::Split:
        count *= static_cast<std::int64_t>(m + 1) * (n - m + 1);
        break;
      case SplittingType::Inert:
        if (m % 2 != 0 || n % 2 != 0) return 0;
        break;
    }
  }
  return count;
}

std::vector<IdealIntervalF> enumerate_ideal_intervals(const QuadField& K,
                                                      std::int64_t a,
                                                      std::int64_t b) {
  check_bound(K, b, "enumerate_ideal_intervals");
  if (a < 1 || b % a != 0)
    throw std::domain_error("enumerate_ideal_intervals: a must divide b");

  // Per prime, the local (lo, hi) exponent choices.
  const Factorization fa = factorize(a);
  std::vector<std::vector<std::pair<IdealF, IdealF>>> locals;
  for (const auto& [p, n] : factorize(b).entries) {
    const int m = fa.valuation(p);
    std::vector<std::pair<IdealF, IdealF>> choices;
    switch (K.splitting(p)) {
      case SplittingType::Ramified:
        choices.emplace_back(IdealF({{sole(p, SplittingType::Ramified), m}}),
                             IdealF({{sole(p, SplittingType::Ramified), n}}));
        break;
      case SplittingType::Inert:
        if (m % 2 == 0 && n % 2 == 0)
          choices.emplace_back(IdealF({{sole(p, SplittingType::Inert), m / 2}}),
                               IdealF({{sole(p, SplittingType::Inert), n / 2}}));
        break;
      case SplittingType::Split:
        // lo = p^i pbar^(m-i), hi = p^i' pbar^(n-i') with i <= i',
        // m - i <= n - i'; Chosen exponents descend.
        for (int i = m; i >= 0; --i)
          for (int i2 = i + (n - m); i2 >= i; --i2)
            choices.emplace_back(
                IdealF({{chosen(p), i}, {conj_class(p), m - i}}),
                IdealF({{chosen(p), i2}, {conj_class(p), n - i2}}));
        break;
    }
    locals.push_back(std::move(choices));
  }

  std::vector<std::pair<IdealF, IdealF>> acc{{IdealF::unit(), IdealF::unit()}};
  for (const auto& choices : locals) {
    if (choices.empty()) return {};
    std::vector<std::pair<IdealF, IdealF>> next;
    next.reserve(acc.size() * choices.size());
    for (const auto& [alo, ahi] : acc)
      for (const auto& [clo, chi] : choices)
        next.emplace_back(alo.times(clo), ahi.times(chi));
    acc = std::move(next);
  }

  std::vector<IdealIntervalF> out;
  out.reserve(acc.size());
  for (auto& [lo, hi] : acc) out.emplace_back(std::move(lo), std::move(hi));
  return out;
}

}  // namespace zetaspan
