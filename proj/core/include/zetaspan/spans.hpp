#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zetaspan/field.hpp"
#include "zetaspan/incidence.hpp"

namespace zetaspan {

// Interval [lo, hi] in the division poset of the positive integers.
struct NumInterval {
  std::int64_t lo = 1;
  std::int64_t hi = 1;
  friend auto operator<=>(const NumInterval&, const NumInterval&) = default;
};

// p^e kept in factored form, for labels in the local submonoid at p where
// the plain integer value can exceed 64 bits.
struct PrimePower {
  std::int64_t p = 2;
  int e = 0;
  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

// A 1-simplex of one of the simplicial models. The variant order fixes a
// deterministic total order on labels.
using Label = std::variant<std::int64_t, PrimePower, NumInterval, IdealF,
                           IdealIntervalF>;

std::string label_to_string(const Label& l);

enum class BaseKind { ReducedBase, FullBase, ReducedIdeal, FullIdeal };

const char* to_string(BaseKind k);

// Finite truncated model of one of the four simplicial sets:
//   ReducedBase  - multiplicative monoid of positive integers
//   FullBase     - division poset of positive integers
//   ReducedIdeal - ideal monoid of a quadratic field
//   FullIdeal    - ideal division poset of a quadratic field
// 1-simplices are graded by the d1 label (the integer, respectively the
// upper endpoint / its norm) and enumerated only within the bound, so
// fibers over in-bound labels are exact, not approximate.
class SimplicialModel {
 public:
  static SimplicialModel reduced_base(std::int64_t bound);
  static SimplicialModel full_base(std::int64_t bound);
  static SimplicialModel reduced_ideal(const QuadField& K);
  static SimplicialModel full_ideal(const QuadField& K);

  BaseKind kind() const { return kind_; }
  std::int64_t bound() const { return bound_; }
  const QuadField& field() const;

  // All 1-simplices, deterministic order.
  std::vector<Label> one_simplices() const;
  // Degenerate 1-simplices (the support of the counit).
  std::vector<Label> degenerate_one_simplices() const;
  bool valid_label(const Label& l) const;

  // d1 of the 2-simplex with faces (d2, d0) when the pair is composable and
  // the composite is within bound. In every model the 2-simplices are
  // exactly the composable pairs of 1-simplices.
  std::optional<Label> compose(const Label& d2, const Label& d0) const;

  // All (d2, d0) with d1 = label.
  std::vector<std::pair<Label, Label>> two_simplices_over(const Label& d1) const;

  friend bool operator==(const SimplicialModel& a, const SimplicialModel& b);

 private:
  SimplicialModel(BaseKind kind, std::int64_t bound, std::optional<QuadField> K)
      : kind_(kind), bound_(bound), field_(std::move(K)) {}

  BaseKind kind_;
  std::int64_t bound_;
  std::optional<QuadField> field_;
};

struct ApexElem {
  Label label;
  std::string payload;  // provenance token, unique within a vector
  friend bool operator==(const ApexElem&, const ApexElem&) = default;
};

// An objective dual vector: a finite multiset of apex elements over the
// 1-simplices of the base. Cardinality per fiber recovers the numerical
// incidence-algebra element.
class SpanVec {
 public:
  explicit SpanVec(SimplicialModel base) : base_(std::move(base)) {}

  // One apex element per 1-simplex.
  static SpanVec objective_zeta(const SimplicialModel& base);
  // One apex element per degenerate 1-simplex.
  static SpanVec objective_delta(const SimplicialModel& base);

  const SimplicialModel& base() const { return base_; }
  const std::vector<ApexElem>& apex() const { return apex_; }
  std::size_t size() const { return apex_.size(); }

  void push(Label label, std::string payload);

  std::map<Label, Int> fiber_cardinalities() const;
  Int fiber_cardinality(const Label& l) const;
  bool has_unique_payloads() const;
  ReducedFn cardinality_reduced() const;  // ReducedBase vectors only
  IntervalFn cardinality_full() const;    // FullBase vectors only

 private:
  SimplicialModel base_;
  std::vector<ApexElem> apex_;
};

// Disjoint union of apexes. Payloads are prefixed "l:" / "r:" only when the
// two operands collide, so summing with the empty vector is the identity.
SpanVec add(const SpanVec& u, const SpanVec& v);

// Convolution by pullback along (d2, d0): apex elements are the pairs
// (x, y) with x in f over d2(sigma), y in g over d0(sigma), labeled by
// d1(sigma), for the 2-simplices sigma of the base.
SpanVec convolve(const SpanVec& f, const SpanVec& g);

// Relabels apex elements along a label map into the target base; the apex
// is unchanged as a set. Throws if an image is not a valid target label.
SpanVec pushforward(const SpanVec& v, const SimplicialModel& target,
                    const std::function<Label(const Label&)>& map);

// Pushforward along the ideal norm: ReducedIdeal -> ReducedBase or
// FullIdeal -> FullBase.
SpanVec pushforward_norm(const SpanVec& v);

// The reduction functor on vectors over FullBase: keep the apex elements
// labeled by initial intervals [1, n], relabeled to n over ReducedBase.
SpanVec reduce_initial(const SpanVec& v);

// An explicit pairing between two labeled finite sets. Valid when nothing
// is left over and every pair is label-compatible.
struct BijectionWitness {
  std::vector<std::pair<ApexElem, ApexElem>> pairs;
  std::vector<ApexElem> leftover_left;
  std::vector<ApexElem> leftover_right;

  bool valid() const;
  // Per-label (left count, right count), leftovers included.
  std::map<Label, std::pair<Int, Int>> fiber_sizes() const;
};

// Greedy fiberwise matching by cardinality; mismatches become leftovers.
BijectionWitness check_equivalence(const SpanVec& u, const SpanVec& v);

// Verifies an explicit pairing given as (left payload, right payload);
// unreferenced elements become leftovers. Unknown payloads throw.
BijectionWitness check_equivalence(
    const SpanVec& u, const SpanVec& v,
    const std::vector<std::pair<std::string, std::string>>& pairing);

// Same verification on bare element lists (for fibers that live outside the
// four bounded models, like the local submonoid at a prime).
BijectionWitness pair_by_payload(
    const std::vector<ApexElem>& left, const std::vector<ApexElem>& right,
    const std::vector<std::pair<std::string, std::string>>& pairing);

}  // namespace zetaspan
