#pragma once

#include <string>
#include <vector>

namespace spectrum {

enum class SchemeKind { SixWay, ThreeWay };

struct LabelDef {
  std::string code;  // "A".."F" or "Contradiction"/"Neutral"/"Entailment"
  std::string text;  // display text shown to annotators / models
};

// An ordered, ordinal label scheme. Ordinals are 1-based: the i-th label of
// the scheme has ordinal i.
struct LabelScheme {
  SchemeKind kind;
  int size;  // k: 6 or 3
  std::vector<LabelDef> labels;

  bool operator==(const LabelScheme& o) const { return kind == o.kind; }
  bool operator!=(const LabelScheme& o) const { return kind != o.kind; }
};

// The six-category scheme, A ("Absolutely must be false") through
// F ("Absolutely must be true").
const LabelScheme& six_way();

// Classic contradiction / neutral / entailment.
const LabelScheme& three_way();

const LabelScheme& scheme_by_kind(SchemeKind kind);

// Scheme name used in configs and CLI flags: "6way" / "3way".
std::string scheme_name(SchemeKind kind);
SchemeKind scheme_from_name(const std::string& name);

// 1-based ordinal of a label code within a scheme. Throws InvalidLabelError
// for codes that do not belong to the scheme.
int ordinal_of(const std::string& label, const LabelScheme& scheme);

// Label code at a 1-based ordinal.
const std::string& label_at(int ordinal, const LabelScheme& scheme);

// Collapse a six-way label onto the three-way scheme:
// {A,B} -> Contradiction, {C,D} -> Neutral, {E,F} -> Entailment.
std::string map_6to3(const std::string& label6);

}  // namespace spectrum
