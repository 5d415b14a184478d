#pragma once

#include <array>
#include <string>
#include <vector>

#include "spectrum/core.hpp"

namespace spectrum {

// Big Five trait codes in fixed order. Weight vectors, persona vote lists
// and JSON keys all follow this order.
inline constexpr int kNumTraits = 10;
const std::array<std::string, kNumTraits>& trait_codes();

// One-sentence persona description for a trait code.
// Throws InvalidTraitError for codes outside the catalog.
const std::string& persona_text(const std::string& trait);

// The task definition block for a scheme (the option list shown to the
// model). Option lines are newline separated; no trailing newline.
const std::string& task_definition(const LabelScheme& scheme);

// System prompt for plain zero-shot voting:
// "{task definition} Pick exactly one option and write it on the first
// line. Do not write anything else."
std::string build_base_prompt(const LabelScheme& scheme);

// System prompt asking the model to adopt a persona before voting.
std::string build_personality_prompt(const std::string& trait,
                                     const LabelScheme& scheme);

// User prompt: "s1: {premise}\ns2: {conclusion}".
std::string build_user_prompt(const Item& item);

// Extracts a label from a model response. Looks at the first nonempty line
// and accepts, case-insensitively and with surrounding punctuation stripped:
// a bare option code, "code. option text" / "code: option text", or the
// option text alone. Throws UnparseableResponseError when nothing matches.
std::string parse_vote(const std::string& response, const LabelScheme& scheme);

}  // namespace spectrum
