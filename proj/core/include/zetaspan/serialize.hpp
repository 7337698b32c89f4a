#pragma once

#include <string>

#include <json.hpp>

#include "zetaspan/incidence.hpp"
#include "zetaspan/spans.hpp"
#include "zetaspan/theorems.hpp"

namespace zetaspan {

// JSON schemas. Every integer is a decimal string so 53-bit consumers
// cannot truncate anything.
//
//   ReducedFn / IntervalFn: { "kind", "bound", "entries": [{index, value}] }
//     where index is "n" at the reduced level and "a|b" at the full level.
//   SpanVec:          { "base", "bound", "apex": [{label, payload}] }
//   BijectionWitness: { "valid", "pairs": [{left, right}],
//                       "leftover_left", "leftover_right" }
//   FidelityRecord:   { "construction", "variant", "verdict",
//                       "counterexample": null | {label, left_card, right_card} }
nlohmann::ordered_json to_json(const ReducedFn& f);
nlohmann::ordered_json to_json(const IntervalFn& f);
nlohmann::ordered_json to_json(const SpanVec& v);
nlohmann::ordered_json to_json(const BijectionWitness& w);
nlohmann::ordered_json to_json(const FidelityRecord& r);

// CSV projections, columns: index,value.
std::string to_csv(const ReducedFn& f);
std::string to_csv(const IntervalFn& f);

}  // namespace zetaspan
