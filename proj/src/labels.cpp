#include "spectrum/labels.hpp"

#include "spectrum/error.hpp"

namespace spectrum {

const LabelScheme& six_way() {
  static const LabelScheme s{
      SchemeKind::SixWay,
      6,
      {{"A", "Absolutely must be false"},
       {"B", "Is more likely to be false"},
       {"C", "Has strong reasons to be true and strong reasons to be false"},
       {"D", "Has no reasons to be either true or false"},
       {"E", "Is more likely to be true"},
       {"F", "Absolutely must be true"}}};
  return s;
}

const LabelScheme& three_way() {
  static const LabelScheme s{SchemeKind::ThreeWay,
                             3,
                             {{"Contradiction", "s2 contradicts s1"},
                              {"Neutral",
                               "Cannot pick either of the above or both are "
                               "likely"},
                              {"Entailment", "s2 entails s1"}}};
  return s;
}

const LabelScheme& scheme_by_kind(SchemeKind kind) {
  return kind == SchemeKind::SixWay ? six_way() : three_way();
}

std::string scheme_name(SchemeKind kind) {
  return kind == SchemeKind::SixWay ? "6way" : "3way";
}

SchemeKind scheme_from_name(const std::string& name) {
  if (name == "6way" || name == "6-way" || name == "six") {
    return SchemeKind::SixWay;
  }
  if (name == "3way" || name == "3-way" || name == "three") {
    return SchemeKind::ThreeWay;
  }
  throw ConfigError("unknown label scheme: " + name);
}

int ordinal_of(const std::string& label, const LabelScheme& scheme) {
  for (int i = 0; i < scheme.size; ++i) {
    if (scheme.labels[i].code == label) return i + 1;
  }
  throw InvalidLabelError("label '" + label + "' is not in the " +
                          scheme_name(scheme.kind) + " scheme");
}

const std::string& label_at(int ordinal, const LabelScheme& scheme) {
  if (ordinal < 1 || ordinal > scheme.size) {
    throw InvalidLabelError("ordinal " + std::to_string(ordinal) +
                            " out of range for " + scheme_name(scheme.kind));
  }
  return scheme.labels[ordinal - 1].code;
}

std::string map_6to3(const std::string& label6) {
  int ord = ordinal_of(label6, six_way());  // throws for non-6-way input
  if (ord <= 2) return "Contradiction";
  if (ord <= 4) return "Neutral";
  return "Entailment";
}

}  // namespace spectrum
