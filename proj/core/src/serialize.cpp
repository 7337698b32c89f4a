#include "zetaspan/serialize.hpp"

namespace zetaspan {

namespace {

nlohmann::ordered_json elem_json(const ApexElem& e) {
  return {{"label", label_to_string(e.label)}, {"payload", e.payload}};
}

}  // namespace

nlohmann::ordered_json to_json(const ReducedFn& f) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& [n, v] : f.support())
    entries.push_back({{"index", std::to_string(n)}, {"value", to_decimal(v)}});
  return {{"kind", "reduced"},
          {"bound", std::to_string(f.bound())},
          {"entries", entries}};
}

nlohmann::ordered_json to_json(const IntervalFn& f) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& [key, v] : f.support()) {
    const auto [a, q] = key;
    entries.push_back({{"index", std::to_string(a) + "|" + std::to_string(a * q)},
                       {"value", to_decimal(v)}});
  }
  return {{"kind", "full"},
          {"bound", std::to_string(f.bound())},
          {"entries", entries}};
}

nlohmann::ordered_json to_json(const SpanVec& v) {
  nlohmann::ordered_json apex = nlohmann::ordered_json::array();
  for (const auto& e : v.apex()) apex.push_back(elem_json(e));
  return {{"base", to_string(v.base().kind())},
          {"bound", std::to_string(v.base().bound())},
          {"apex", apex}};
}

nlohmann::ordered_json to_json(const BijectionWitness& w) {
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (const auto& [l, r] : w.pairs)
    pairs.push_back({{"left", elem_json(l)}, {"right", elem_json(r)}});
  nlohmann::ordered_json ll = nlohmann::ordered_json::array();
  for (const auto& e : w.leftover_left) ll.push_back(elem_json(e));
  nlohmann::ordered_json lr = nlohmann::ordered_json::array();
  for (const auto& e : w.leftover_right) lr.push_back(elem_json(e));
  return {{"valid", w.valid()},
          {"pairs", pairs},
          {"leftover_left", ll},
          {"leftover_right", lr}};
}

nlohmann::ordered_json to_json(const FidelityRecord& r) {
  nlohmann::ordered_json ce;
  if (r.counterexample) {
    ce = {{"label", r.counterexample->label},
          {"left_card", to_decimal(r.counterexample->left)},
          {"right_card", to_decimal(r.counterexample->right)}};
  } else {
    ce = nullptr;
  }
  return {{"construction", r.construction},
          {"variant", r.variant},
          {"verdict", to_string(r.verdict)},
          {"counterexample", ce}};
}

std::string to_csv(const ReducedFn& f) {
  std::string out = "index,value\n";
  for (const auto& [n, v] : f.support())
    out += std::to_string(n) + "," + to_decimal(v) + "\n";
  return out;
}

std::string to_csv(const IntervalFn& f) {
  std::string out = "index,value\n";
  for (const auto& [key, v] : f.support()) {
    const auto [a, q] = key;
    out += std::to_string(a) + "|" + std::to_string(a * q) + "," + to_decimal(v) +
           "\n";
  }
  return out;
}

}  // namespace zetaspan
