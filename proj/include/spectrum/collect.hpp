#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "spectrum/backend.hpp"
#include "spectrum/core.hpp"
#include "spectrum/prompts.hpp"

namespace spectrum {

inline constexpr int kVotesPerStyle = 10;   // completions per prompt style
inline constexpr int kParseRetries = 3;     // attempts per vote slot

struct CollectOptions {
  double temperature = 1.0;
  unsigned max_in_flight = 1;  // concurrent backend calls
};

struct TraitVotes {
  std::string trait;
  std::vector<std::string> samples;  // 10 raw labels
  std::string majority;              // smallest-ordinal tie break
};

// Raw samples plus per-prompt majorities for the ten personality prompts.
struct PersonaVotes {
  std::string item_id;
  std::array<TraitVotes, kNumTraits> traits;  // fixed trait order

  // the ten majority labels, one per trait, in trait order
  std::vector<std::string> majorities() const;
};

// Majority label with ties broken toward the smallest ordinal.
std::string majority_label(const std::vector<std::string>& labels,
                           const LabelScheme& scheme);

// Ten completions of the base prompt at the configured temperature, each
// parsed into a label. Unparseable completions are retried with a fresh
// seed up to kParseRetries attempts per slot, then raise CollectionError.
std::vector<std::string> collect_base_votes(const Backend& backend,
                                            const Item& item,
                                            const LabelScheme& scheme,
                                            std::uint64_t seed,
                                            const CollectOptions& options = {});

// Ten samples for each of the ten personality prompts plus per-trait
// majorities.
PersonaVotes collect_persona_votes(const Backend& backend, const Item& item,
                                   const LabelScheme& scheme,
                                   std::uint64_t seed,
                                   const CollectOptions& options = {});

}  // namespace spectrum
