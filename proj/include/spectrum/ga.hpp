#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spectrum/collect.hpp"
#include "spectrum/core.hpp"
#include "spectrum/distmath.hpp"

namespace spectrum {

// Ten raw genes in [0,1], one per trait. decode() projects onto the
// simplex; the all-zero gene vector decodes to equal weights.
struct WeightVector {
  std::array<double, kNumTraits> w{};

  std::array<double, kNumTraits> decode() const;
};

enum class SelectionKind { Tournament, RouletteWheel, Rank };
enum class CrossoverKind { SinglePoint, TwoPoint, Uniform };

std::string selection_name(SelectionKind s);
std::string crossover_name(CrossoverKind c);
SelectionKind selection_from_name(const std::string& name);
CrossoverKind crossover_from_name(const std::string& name);

struct GAConfig {
  int generations = 8;
  int population = 256;
  int mating_parents = 128;
  SelectionKind selection = SelectionKind::Tournament;
  int tournament_k = 4;
  CrossoverKind crossover = CrossoverKind::SinglePoint;
  double mutation_rate = 0.1;
  std::uint64_t seed = 0;
  unsigned eval_threads = 1;  // fitness evaluation; result is thread-count
                              // independent
};

void validate(const GAConfig& config);

enum class MixtureMode {
  MajorityOneHot,       // one-hot of each trait's majority vote
  SampleDistribution,   // each trait's full 10-sample distribution
};

// Weighted combination of the per-trait vote distributions.
VoteDistribution mixture_distribution(
    const WeightVector& weights, const PersonaVotes& persona,
    const LabelScheme& scheme, MixtureMode mode = MixtureMode::MajorityOneHot);

// Precomputed per-item data so GA fitness evaluation is cheap.
struct GaItem {
  std::string item_id;
  // trait_probs[t] is trait t's vote distribution (k entries)
  std::array<std::vector<double>, kNumTraits> trait_probs;
  std::vector<double> human_probs;
};

struct GaProblem {
  LabelScheme scheme;
  std::vector<GaItem> items;
};

// Assembles a GaProblem for the given item ids; every id must have persona
// votes and a human distribution, otherwise InvalidInputError.
GaProblem make_ga_problem(
    const std::vector<std::string>& item_ids,
    const std::map<std::string, PersonaVotes>& persona_by_item,
    const std::map<std::string, VoteDistribution>& human_dist_by_item,
    const LabelScheme& scheme, MixtureMode mode = MixtureMode::MajorityOneHot);

// Mean EMS between the weighted persona mixture and the human distribution
// over the problem's items.
double fitness(const WeightVector& weights, const GaProblem& problem);

// Convenience overload matching the map-based call sites.
double fitness(const WeightVector& weights,
               const std::vector<std::string>& train_items,
               const std::map<std::string, PersonaVotes>& persona_by_item,
               const std::map<std::string, VoteDistribution>& human_dist_by_item,
               const LabelScheme& scheme,
               MixtureMode mode = MixtureMode::MajorityOneHot);

struct GaResult {
  WeightVector best;
  double best_fitness = 0.0;
  std::vector<double> history;  // best fitness per generation, non-decreasing
};

// Evolves weight vectors against the problem. Deterministic given the seed;
// the generation best always survives, so history never decreases. The
// initial population contains the equal-weight genome, so the result is
// never worse than equal weighting.
GaResult run_ga(const GAConfig& config, const GaProblem& problem);

struct GridCell {
  SelectionKind selection = SelectionKind::Tournament;
  CrossoverKind crossover = CrossoverKind::SinglePoint;
};

// 3 selections x 3 crossovers, in declared order.
std::vector<GridCell> default_ga_grid();

struct GaGridResult {
  GridCell best_cell;
  std::size_t best_cell_index = 0;
  WeightVector weights;
  double train_fitness = 0.0;
  double test_ems = 0.0;
  std::vector<double> cell_train_fitness;  // one entry per grid cell
};

// Runs the GA once per grid cell on the training problem (each cell gets a
// cell-derived seed), picks the cell with the highest final training
// fitness (first cell wins ties), and evaluates its weights on the test
// problem.
GaGridResult grid_search_ga(const GaProblem& train, const GaProblem& test,
                            const std::vector<GridCell>& grid,
                            const GAConfig& base_config);

struct FoldPlan {
  int k = 5;
  std::uint64_t seed = 0;
  std::vector<std::vector<std::string>> train_ids;
  std::vector<std::vector<std::string>> test_ids;
};

// Seeded shuffle + contiguous chunking; folds are disjoint, exhaustive and
// size balanced (sizes differ by at most 1).
FoldPlan kfold_split(std::vector<std::string> item_ids, int k,
                     std::uint64_t seed);

}  // namespace spectrum
