#include "spectrum/collect.hpp"

#include "spectrum/error.hpp"
#include "spectrum/parallel.hpp"
#include "spectrum/rng.hpp"

namespace spectrum {

std::vector<std::string> PersonaVotes::majorities() const {
  std::vector<std::string> out;
  out.reserve(kNumTraits);
  for (const auto& t : traits) out.push_back(t.majority);
  return out;
}

std::string majority_label(const std::vector<std::string>& labels,
                           const LabelScheme& scheme) {
  VoteSet vs;
  vs.votes = labels;
  return gold_label(vs, scheme);
}

namespace {

std::uint64_t slot_seed(std::uint64_t base, const std::string& item_id,
                        const std::string& style, int slot, int attempt) {
  std::uint64_t h = fnv1a(item_id);
  h = fnv1a(style, h);
  h = fnv1a_mix(h, base);
  h = fnv1a_mix(h, static_cast<std::uint64_t>(slot));
  h = fnv1a_mix(h, static_cast<std::uint64_t>(attempt));
  return h;
}

// One parsed vote for one slot, retrying parse failures with fresh seeds.
std::string collect_slot(const Backend& backend, const Item& item,
                         const LabelScheme& scheme,
                         const std::string& system_prompt,
                         const std::string& style_tag, std::uint64_t seed,
                         int slot, const CollectOptions& options) {
  std::string user = build_user_prompt(item);
  std::string last_response;
  for (int attempt = 0; attempt < kParseRetries; ++attempt) {
    std::string response;
    try {
      response = backend.complete(
          system_prompt, user, options.temperature,
          slot_seed(seed, item.id, style_tag, slot, attempt));
    } catch (const Error& e) {
      throw BackendError("item '" + item.id + "' (" + style_tag +
                         "): " + e.what());
    }
    try {
      return parse_vote(response, scheme);
    } catch (const UnparseableResponseError&) {
      last_response = response;
    }
  }
  throw CollectionError("item '" + item.id + "' (" + style_tag + "): " +
                        std::to_string(kParseRetries) +
                        " unparseable responses for one slot; last was \"" +
                        last_response.substr(0, 80) + "\"");
}

std::vector<std::string> collect_style(const Backend& backend,
                                       const Item& item,
                                       const LabelScheme& scheme,
                                       const std::string& system_prompt,
                                       const std::string& style_tag,
                                       std::uint64_t seed,
                                       const CollectOptions& options) {
  return parallel_map_indexed<std::string>(
      kVotesPerStyle, options.max_in_flight, [&](std::size_t slot) {
        return collect_slot(backend, item, scheme, system_prompt, style_tag,
                            seed, static_cast<int>(slot), options);
      });
}

}  // namespace

std::vector<std::string> collect_base_votes(const Backend& backend,
                                            const Item& item,
                                            const LabelScheme& scheme,
                                            std::uint64_t seed,
                                            const CollectOptions& options) {
  return collect_style(backend, item, scheme, build_base_prompt(scheme),
                       "base", seed, options);
}

PersonaVotes collect_persona_votes(const Backend& backend, const Item& item,
                                   const LabelScheme& scheme,
                                   std::uint64_t seed,
                                   const CollectOptions& options) {
  PersonaVotes out;
  out.item_id = item.id;
  const auto& codes = trait_codes();
  for (int t = 0; t < kNumTraits; ++t) {
    TraitVotes tv;
    tv.trait = codes[t];
    try {
      tv.samples = collect_style(backend, item, scheme,
                                 build_personality_prompt(codes[t], scheme),
                                 codes[t], seed, options);
    } catch (const CollectionError& e) {
      throw CollectionError(std::string("trait ") + codes[t] + ": " +
                            e.what());
    }
    tv.majority = majority_label(tv.samples, scheme);
    out.traits[t] = std::move(tv);
  }
  return out;
}

}  // namespace spectrum
