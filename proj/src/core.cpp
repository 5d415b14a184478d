#include "spectrum/core.hpp"

#include <cmath>

#include "spectrum/error.hpp"

namespace spectrum {

namespace {

const std::pair<ItemType, const char*> kItemTypeNames[] = {
    {ItemType::StereoNLI, "StereoNLI"},
    {ItemType::Fallacy, "Fallacy"},
    {ItemType::Syllogism, "Syllogism"},
    {ItemType::StereoSyllogism, "StereoSyllogism"},
    {ItemType::EGuilt, "EGuilt"},
    {ItemType::CGuilt, "CGuilt"},
    {ItemType::PPrimacyRecency, "PPrimacyRecency"},
    {ItemType::NPrimacyRecency, "NPrimacyRecency"},
    {ItemType::AttentionCheck, "AttentionCheck"},
};

}  // namespace

std::string item_type_name(ItemType t) {
  for (const auto& [type, name] : kItemTypeNames) {
    if (type == t) return name;
  }
  throw InvalidTypeError("unknown item type enum value");
}

ItemType item_type_from_name(const std::string& name) {
  for (const auto& [type, tname] : kItemTypeNames) {
    if (name == tname) return type;
  }
  throw InvalidTypeError("unknown item type: " + name);
}

void validate_item(const Item& item) {
  if (item.id.empty()) throw InvalidInputError("item id must be nonempty");
  if (item.premise.empty() || item.conclusion.empty()) {
    throw InvalidInputError("item '" + item.id +
                            "': premise and conclusion must be nonempty");
  }
}

VoteDistribution make_distribution(const LabelScheme& scheme,
                                   std::vector<double> probs) {
  if (static_cast<int>(probs.size()) != scheme.size) {
    throw InvalidDistributionError("distribution size does not match scheme");
  }
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) {
      throw InvalidDistributionError("distribution entries must be >= 0");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw InvalidDistributionError("distribution must sum to 1 (got " +
                                   std::to_string(sum) + ")");
  }
  return VoteDistribution{scheme, std::move(probs)};
}

VoteDistribution onehot(int ordinal, const LabelScheme& scheme) {
  label_at(ordinal, scheme);  // range check
  std::vector<double> p(scheme.size, 0.0);
  p[ordinal - 1] = 1.0;
  return VoteDistribution{scheme, std::move(p)};
}

std::vector<long> vote_counts(const VoteSet& votes,
                              const LabelScheme& scheme) {
  std::vector<long> counts(scheme.size, 0);
  for (const auto& v : votes.votes) counts[ordinal_of(v, scheme) - 1]++;
  return counts;
}

std::string gold_label(const VoteSet& votes, const LabelScheme& scheme) {
  if (votes.votes.empty()) {
    throw EmptyInputError("gold_label: empty vote set for item '" +
                          votes.item_id + "'");
  }
  auto counts = vote_counts(votes, scheme);
  int best = 0;
  for (int i = 1; i < scheme.size; ++i) {
    if (counts[i] > counts[best]) best = i;  // > keeps the smallest ordinal
  }
  return scheme.labels[best].code;
}

double ordinal_mean(const VoteSet& votes, const LabelScheme& scheme) {
  if (votes.votes.empty()) {
    throw EmptyInputError("ordinal_mean: empty vote set");
  }
  double sum = 0.0;
  for (const auto& v : votes.votes) sum += ordinal_of(v, scheme);
  return sum / static_cast<double>(votes.votes.size());
}

double ordinal_variance(const VoteSet& votes, const LabelScheme& scheme) {
  double mean = ordinal_mean(votes, scheme);  // throws on empty
  double ss = 0.0;
  for (const auto& v : votes.votes) {
    double d = ordinal_of(v, scheme) - mean;
    ss += d * d;
  }
  return ss / static_cast<double>(votes.votes.size());
}

VoteDistribution to_distribution(const VoteSet& votes,
                                 const LabelScheme& scheme) {
  if (votes.votes.empty()) {
    throw EmptyInputError("to_distribution: empty vote set for item '" +
                          votes.item_id + "'");
  }
  auto counts = vote_counts(votes, scheme);
  double n = static_cast<double>(votes.votes.size());
  std::vector<double> probs(scheme.size);
  for (int i = 0; i < scheme.size; ++i) {
    probs[i] = static_cast<double>(counts[i]) / n;
  }
  return VoteDistribution{scheme, std::move(probs)};
}

VoteDistribution map_distribution_6to3(const VoteDistribution& d6) {
  if (d6.scheme != six_way()) {
    throw SchemeMismatchError("map_distribution_6to3 expects a 6-way input");
  }
  std::vector<double> p(3);
  p[0] = d6.probs[0] + d6.probs[1];
  p[1] = d6.probs[2] + d6.probs[3];
  p[2] = d6.probs[4] + d6.probs[5];
  return VoteDistribution{three_way(), std::move(p)};
}

VoteSet map_votes_6to3(const VoteSet& votes6) {
  VoteSet out;
  out.item_id = votes6.item_id;
  out.phase = votes6.phase;
  out.votes.reserve(votes6.votes.size());
  for (const auto& v : votes6.votes) out.votes.push_back(map_6to3(v));
  return out;
}

}  // namespace spectrum
