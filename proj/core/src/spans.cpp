#include "zetaspan/spans.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace zetaspan {

namespace {

std::string pp_to_string(const PrimePower& pp) {
  return std::to_string(pp.p) + "^" + std::to_string(pp.e);
}

}  // namespace

std::string label_to_string(const Label& l) {
  struct V {
    std::string operator()(std::int64_t n) const { return std::to_string(n); }
    std::string operator()(const PrimePower& pp) const { return pp_to_string(pp); }
    std::string operator()(const NumInterval& iv) const {
      return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
    }
    std::string operator()(const IdealF& a) const { return a.to_string(); }
    std::string operator()(const IdealIntervalF& iv) const {
      return iv.to_string();
    }
  };
  return std::visit(V{}, l);
}

const char* to_string(BaseKind k) {
  switch (k) {
    case BaseKind::ReducedBase: return "ReducedBase";
    case BaseKind::FullBase: return "FullBase";
    case BaseKind::ReducedIdeal: return "ReducedIdeal";
    case BaseKind::FullIdeal: return "FullIdeal";
  }
  return "?";
}

SimplicialModel SimplicialModel::reduced_base(std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("SimplicialModel: bound >= 1");
  return SimplicialModel(BaseKind::ReducedBase, bound, std::nullopt);
}

SimplicialModel SimplicialModel::full_base(std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("SimplicialModel: bound >= 1");
  return SimplicialModel(BaseKind::FullBase, bound, std::nullopt);
}

SimplicialModel SimplicialModel::reduced_ideal(const QuadField& K) {
  return SimplicialModel(BaseKind::ReducedIdeal, K.bound, K);
}

SimplicialModel SimplicialModel::full_ideal(const QuadField& K) {
  return SimplicialModel(BaseKind::FullIdeal, K.bound, K);
}

const QuadField& SimplicialModel::field() const {
  if (!field_) throw std::logic_error("SimplicialModel: no field attached");
  return *field_;
}

bool operator==(const SimplicialModel& a, const SimplicialModel& b) {
  if (a.kind_ != b.kind_ || a.bound_ != b.bound_) return false;
  if (a.field_.has_value() != b.field_.has_value()) return false;
  return !a.field_ || a.field_->disc == b.field_->disc;
}

std::vector<Label> SimplicialModel::one_simplices() const {
  std::vector<Label> out;
  switch (kind_) {
    case BaseKind::ReducedBase:
      for (std::int64_t n = 1; n <= bound_; ++n) out.emplace_back(n);
      break;
    case BaseKind::FullBase:
      for (std::int64_t a = 1; a <= bound_; ++a)
        for (std::int64_t b = a; b <= bound_; b += a)
          out.emplace_back(NumInterval{a, b});
      break;
    case BaseKind::ReducedIdeal:
      for (std::int64_t n = 1; n <= bound_; ++n)
        for (auto& id : enumerate_ideals(*field_, n)) out.emplace_back(std::move(id));
      break;
    case BaseKind::FullIdeal:
      for (std::int64_t b = 1; b <= bound_; ++b)
        for (std::int64_t a : divisors(b))
          for (auto& iv : enumerate_ideal_intervals(*field_, a, b))
            out.emplace_back(std::move(iv));
      break;
  }
  return out;
}

std::vector<Label> SimplicialModel::degenerate_one_simplices() const {
  std::vector<Label> out;
  switch (kind_) {
    case BaseKind::ReducedBase:
      out.emplace_back(std::int64_t{1});
      break;
    case BaseKind::FullBase:
      for (std::int64_t a = 1; a <= bound_; ++a)
        out.emplace_back(NumInterval{a, a});
      break;
    case BaseKind::ReducedIdeal:
      out.emplace_back(IdealF::unit());
      break;
    case BaseKind::FullIdeal:
      for (std::int64_t n = 1; n <= bound_; ++n)
        for (auto& id : enumerate_ideals(*field_, n))
          out.emplace_back(IdealIntervalF(id, id));
      break;
  }
  return out;
}

bool SimplicialModel::valid_label(const Label& l) const {
  switch (kind_) {
    case BaseKind::ReducedBase: {
      const auto* n = std::get_if<std::int64_t>(&l);
      return n && *n >= 1 && *n <= bound_;
    }
    case BaseKind::FullBase: {
      const auto* iv = std::get_if<NumInterval>(&l);
      return iv && iv->lo >= 1 && iv->hi <= bound_ && iv->hi % iv->lo == 0;
    }
    case BaseKind::ReducedIdeal: {
      const auto* a = std::get_if<IdealF>(&l);
      return a && a->norm() <= bound_;
    }
    case BaseKind::FullIdeal: {
      const auto* iv = std::get_if<IdealIntervalF>(&l);
      return iv && iv->hi.norm() <= bound_ && iv->lo.divides(iv->hi);
    }
  }
  return false;
}

std::optional<Label> SimplicialModel::compose(const Label& d2,
                                              const Label& d0) const {
  if (!valid_label(d2) || !valid_label(d0)) return std::nullopt;
  switch (kind_) {
    case BaseKind::ReducedBase: {
      const auto a = std::get<std::int64_t>(d2);
      const auto b = std::get<std::int64_t>(d0);
      if (a > bound_ / b) return std::nullopt;
      return Label(a * b);
    }
    case BaseKind::FullBase: {
      const auto& x = std::get<NumInterval>(d2);
      const auto& y = std::get<NumInterval>(d0);
      if (x.hi != y.lo) return std::nullopt;
      return Label(NumInterval{x.lo, y.hi});
    }
    case BaseKind::ReducedIdeal: {
      const auto& a = std::get<IdealF>(d2);
      const auto& b = std::get<IdealF>(d0);
      if (a.norm() > bound_ / b.norm()) return std::nullopt;
      return Label(a.times(b));
    }
    case BaseKind::FullIdeal: {
      const auto& x = std::get<IdealIntervalF>(d2);
      const auto& y = std::get<IdealIntervalF>(d0);
      if (!(x.hi == y.lo)) return std::nullopt;
      return Label(IdealIntervalF(x.lo, y.hi));
    }
  }
  return std::nullopt;
}

std::vector<std::pair<Label, Label>> SimplicialModel::two_simplices_over(
    const Label& d1) const {
  if (!valid_label(d1))
    throw std::domain_error("two_simplices_over: label not in model: " +
                            label_to_string(d1));
  std::vector<std::pair<Label, Label>> out;
  switch (kind_) {
    case BaseKind::ReducedBase: {
      const auto n = std::get<std::int64_t>(d1);
      for (std::int64_t a : divisors(n)) out.emplace_back(Label(a), Label(n / a));
      break;
    }
    case BaseKind::FullBase: {
      const auto& iv = std::get<NumInterval>(d1);
      for (std::int64_t e : divisors(iv.hi / iv.lo)) {
        const std::int64_t d = iv.lo * e;
        out.emplace_back(Label(NumInterval{iv.lo, d}), Label(NumInterval{d, iv.hi}));
      }
      break;
    }
    case BaseKind::ReducedIdeal: {
      const auto& c = std::get<IdealF>(d1);
      for (const IdealF& a : ideal_divisors(c))
        out.emplace_back(Label(a), Label(c.divided_by(a)));
      break;
    }
    case BaseKind::FullIdeal: {
      const auto& iv = std::get<IdealIntervalF>(d1);
      for (const IdealF& q : ideal_divisors(iv.hi.divided_by(iv.lo))) {
        IdealF mid = iv.lo.times(q);
        out.emplace_back(Label(IdealIntervalF(iv.lo, mid)),
                         Label(IdealIntervalF(mid, iv.hi)));
      }
      break;
    }
  }
  return out;
}

SpanVec SpanVec::objective_zeta(const SimplicialModel& base) {
  SpanVec v(base);
  for (auto& l : base.one_simplices()) {
    std::string payload = "z[" + label_to_string(l) + "]";
    v.apex_.push_back(ApexElem{std::move(l), std::move(payload)});
  }
  return v;
}

SpanVec SpanVec::objective_delta(const SimplicialModel& base) {
  SpanVec v(base);
  for (auto& l : base.degenerate_one_simplices()) {
    std::string payload = "d[" + label_to_string(l) + "]";
    v.apex_.push_back(ApexElem{std::move(l), std::move(payload)});
  }
  return v;
}

void SpanVec::push(Label label, std::string payload) {
  if (!base_.valid_label(label))
    throw std::out_of_range("SpanVec::push: label not in base: " +
                            label_to_string(label));
  apex_.push_back(ApexElem{std::move(label), std::move(payload)});
}

std::map<Label, Int> SpanVec::fiber_cardinalities() const {
  std::map<Label, Int> out;
  for (const auto& e : apex_) out[e.label] += 1;
  return out;
}

Int SpanVec::fiber_cardinality(const Label& l) const {
  Int c = 0;
  for (const auto& e : apex_)
    if (e.label == l) ++c;
  return c;
}

bool SpanVec::has_unique_payloads() const {
  std::unordered_set<std::string> seen;
  for (const auto& e : apex_)
    if (!seen.insert(e.payload).second) return false;
  return true;
}

ReducedFn SpanVec::cardinality_reduced() const {
  if (base_.kind() != BaseKind::ReducedBase)
    throw std::domain_error("cardinality_reduced: base is not ReducedBase");
  ReducedFn f(base_.bound());
  for (const auto& e : apex_) {
    const auto n = std::get<std::int64_t>(e.label);
    f.set(n, f.at(n) + 1);
  }
  return f;
}

IntervalFn SpanVec::cardinality_full() const {
  if (base_.kind() != BaseKind::FullBase)
    throw std::domain_error("cardinality_full: base is not FullBase");
  IntervalFn f(base_.bound());
  for (const auto& e : apex_) {
    const auto& iv = std::get<NumInterval>(e.label);
    f.set(iv.lo, iv.hi, f.at(iv.lo, iv.hi) + 1);
  }
  return f;
}

SpanVec add(const SpanVec& u, const SpanVec& v) {
  if (!(u.base() == v.base()))
    throw std::domain_error("add(SpanVec): base mismatch");
  std::unordered_set<std::string> seen;
  bool collision = false;
  for (const auto& e : u.apex()) seen.insert(e.payload);
  for (const auto& e : v.apex())
    if (seen.count(e.payload)) {
      collision = true;
      break;
    }
  SpanVec out(u.base());
  for (const auto& e : u.apex())
    out.push(e.label, collision ? "l:" + e.payload : e.payload);
  for (const auto& e : v.apex())
    out.push(e.label, collision ? "r:" + e.payload : e.payload);
  return out;
}

SpanVec convolve(const SpanVec& f, const SpanVec& g) {
  if (!(f.base() == g.base()))
    throw std::domain_error("convolve(SpanVec): base mismatch");
  // Group apexes by label; 2-simplices are the composable label pairs.
  std::map<Label, std::vector<const ApexElem*>> fs, gs;
  for (const auto& e : f.apex()) fs[e.label].push_back(&e);
  for (const auto& e : g.apex()) gs[e.label].push_back(&e);

  SpanVec out(f.base());
  for (const auto& [xl, xs] : fs) {
    for (const auto& [yl, ys] : gs) {
      const auto d1 = f.base().compose(xl, yl);
      if (!d1) continue;
      for (const ApexElem* x : xs)
        for (const ApexElem* y : ys)
          out.push(*d1, "(" + x->payload + "." + y->payload + ")");
    }
  }
  return out;
}

SpanVec pushforward(const SpanVec& v, const SimplicialModel& target,
                    const std::function<Label(const Label&)>& map) {
  SpanVec out(target);
  for (const auto& e : v.apex()) {
    Label image = map(e.label);
    if (!target.valid_label(image))
      throw std::out_of_range("pushforward: image out of bound: " +
                              label_to_string(image));
    out.push(std::move(image), e.payload);
  }
  return out;
}

SpanVec pushforward_norm(const SpanVec& v) {
  const auto kind = v.base().kind();
  if (kind == BaseKind::ReducedIdeal) {
    return pushforward(v, SimplicialModel::reduced_base(v.base().bound()),
                       [](const Label& l) -> Label {
                         return std::get<IdealF>(l).norm();
                       });
  }
  if (kind == BaseKind::FullIdeal) {
    return pushforward(v, SimplicialModel::full_base(v.base().bound()),
                       [](const Label& l) -> Label {
                         const auto& iv = std::get<IdealIntervalF>(l);
                         return NumInterval{iv.lo.norm(), iv.hi.norm()};
                       });
  }
  throw std::domain_error("pushforward_norm: base has no norm map");
}

SpanVec reduce_initial(const SpanVec& v) {
  if (v.base().kind() != BaseKind::FullBase)
    throw std::domain_error("reduce_initial: base is not FullBase");
  SpanVec out(SimplicialModel::reduced_base(v.base().bound()));
  for (const auto& e : v.apex()) {
    const auto& iv = std::get<NumInterval>(e.label);
    if (iv.lo == 1) out.push(iv.hi, e.payload);
  }
  return out;
}

bool BijectionWitness::valid() const {
  if (!leftover_left.empty() || !leftover_right.empty()) return false;
  for (const auto& [l, r] : pairs)
    if (!(l.label == r.label)) return false;
  return true;
}

std::map<Label, std::pair<Int, Int>> BijectionWitness::fiber_sizes() const {
  std::map<Label, std::pair<Int, Int>> out;
  for (const auto& [l, r] : pairs) {
    out[l.label].first += 1;
    out[r.label].second += 1;
  }
  for (const auto& e : leftover_left) out[e.label].first += 1;
  for (const auto& e : leftover_right) out[e.label].second += 1;
  return out;
}

BijectionWitness check_equivalence(const SpanVec& u, const SpanVec& v) {
  if (!(u.base() == v.base()))
    throw std::domain_error("check_equivalence: base mismatch");
  std::map<Label, std::vector<const ApexElem*>> us, vs;
  for (const auto& e : u.apex()) us[e.label].push_back(&e);
  for (const auto& e : v.apex()) vs[e.label].push_back(&e);

  BijectionWitness w;
  auto ui = us.begin();
  auto vi = vs.begin();
  while (ui != us.end() || vi != vs.end()) {
    if (vi == vs.end() || (ui != us.end() && ui->first < vi->first)) {
      for (const ApexElem* e : ui->second) w.leftover_left.push_back(*e);
      ++ui;
    } else if (ui == us.end() || vi->first < ui->first) {
      for (const ApexElem* e : vi->second) w.leftover_right.push_back(*e);
      ++vi;
    } else {
      const auto& ue = ui->second;
      const auto& ve = vi->second;
      const std::size_t k = std::min(ue.size(), ve.size());
      for (std::size_t i = 0; i < k; ++i) w.pairs.emplace_back(*ue[i], *ve[i]);
      for (std::size_t i = k; i < ue.size(); ++i) w.leftover_left.push_back(*ue[i]);
      for (std::size_t i = k; i < ve.size(); ++i) w.leftover_right.push_back(*ve[i]);
      ++ui;
      ++vi;
    }
  }
  return w;
}

BijectionWitness pair_by_payload(
    const std::vector<ApexElem>& left, const std::vector<ApexElem>& right,
    const std::vector<std::pair<std::string, std::string>>& pairing) {
  std::map<std::string, const ApexElem*> ul, vr;
  for (const auto& e : left)
    if (!ul.emplace(e.payload, &e).second)
      throw std::invalid_argument("pair_by_payload: duplicate left payload " +
                                  e.payload);
  for (const auto& e : right)
    if (!vr.emplace(e.payload, &e).second)
      throw std::invalid_argument("pair_by_payload: duplicate right payload " +
                                  e.payload);

  BijectionWitness w;
  std::unordered_set<std::string> used_left, used_right;
  for (const auto& [lp, rp] : pairing) {
    auto li = ul.find(lp);
    auto ri = vr.find(rp);
    if (li == ul.end() || ri == vr.end())
      throw std::invalid_argument("pair_by_payload: pairing references unknown payload");
    if (!used_left.insert(lp).second || !used_right.insert(rp).second)
      throw std::invalid_argument("pair_by_payload: payload paired twice");
    w.pairs.emplace_back(*li->second, *ri->second);
  }
  for (const auto& e : left)
    if (!used_left.count(e.payload)) w.leftover_left.push_back(e);
  for (const auto& e : right)
    if (!used_right.count(e.payload)) w.leftover_right.push_back(e);
  return w;
}

BijectionWitness check_equivalence(
    const SpanVec& u, const SpanVec& v,
    const std::vector<std::pair<std::string, std::string>>& pairing) {
  if (!(u.base() == v.base()))
    throw std::domain_error("check_equivalence: base mismatch");
  return pair_by_payload(u.apex(), v.apex(), pairing);
}

}  // namespace zetaspan
