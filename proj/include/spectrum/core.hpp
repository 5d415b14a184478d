#pragma once

#include <map>
#include <string>
#include <vector>

#include "spectrum/labels.hpp"

namespace spectrum {

enum class ItemType {
  StereoNLI,
  Fallacy,
  Syllogism,
  StereoSyllogism,
  EGuilt,
  CGuilt,
  PPrimacyRecency,
  NPrimacyRecency,
  AttentionCheck,
};

std::string item_type_name(ItemType t);
ItemType item_type_from_name(const std::string& name);

// One NLI stimulus. Metadata carries optional extras such as precomputed
// perplexities ("ppl_premise"/"ppl_conclusion") or generation transcripts;
// values are stored as strings (numbers in decimal form).
struct Item {
  std::string id;
  ItemType item_type = ItemType::StereoNLI;
  std::string premise;
  std::string conclusion;
  std::map<std::string, std::string> metadata;
};

// Throws InvalidInputError unless premise and conclusion are nonempty.
void validate_item(const Item& item);

enum class Phase { System1 = 1, System2 = 2 };

// Raw labels collected for one item in one phase (typically 30 per item).
struct VoteSet {
  std::string item_id;
  Phase phase = Phase::System1;
  std::vector<std::string> votes;
};

// Normalized probability vector over an ordered label scheme.
// probs[i] is the mass of the label with ordinal i+1.
struct VoteDistribution {
  LabelScheme scheme;
  std::vector<double> probs;
};

// Builds a distribution after checking nonnegativity and sum == 1 +- 1e-9.
VoteDistribution make_distribution(const LabelScheme& scheme,
                                   std::vector<double> probs);

VoteDistribution onehot(int ordinal, const LabelScheme& scheme);

// Modal label; ties broken toward the smallest ordinal.
std::string gold_label(const VoteSet& votes, const LabelScheme& scheme);

// Population variance (divide by n) of the ordinal values of the votes.
double ordinal_variance(const VoteSet& votes, const LabelScheme& scheme);

// Mean ordinal of the votes.
double ordinal_mean(const VoteSet& votes, const LabelScheme& scheme);

// Relative label frequencies, normalized to sum to 1.
VoteDistribution to_distribution(const VoteSet& votes,
                                 const LabelScheme& scheme);

// Per-label counts (index = ordinal - 1).
std::vector<long> vote_counts(const VoteSet& votes, const LabelScheme& scheme);

// Collapses a six-way distribution onto the three-way scheme by summing the
// mass of {A,B}, {C,D} and {E,F}.
VoteDistribution map_distribution_6to3(const VoteDistribution& d6);

// Maps every vote of a six-way vote set through map_6to3.
VoteSet map_votes_6to3(const VoteSet& votes6);

}  // namespace spectrum
