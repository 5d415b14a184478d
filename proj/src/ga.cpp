#include "spectrum/ga.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spectrum/error.hpp"
#include "spectrum/parallel.hpp"
#include "spectrum/rng.hpp"

namespace spectrum {

std::array<double, kNumTraits> WeightVector::decode() const {
  double sum = 0.0;
  for (double g : w) sum += g;
  std::array<double, kNumTraits> out{};
  if (sum <= 0.0) {
    out.fill(1.0 / kNumTraits);
    return out;
  }
  for (int i = 0; i < kNumTraits; ++i) out[i] = w[i] / sum;
  return out;
}

std::string selection_name(SelectionKind s) {
  switch (s) {
    case SelectionKind::Tournament:
      return "tournament";
    case SelectionKind::RouletteWheel:
      return "roulette_wheel";
    case SelectionKind::Rank:
      return "rank";
  }
  return "?";
}

std::string crossover_name(CrossoverKind c) {
  switch (c) {
    case CrossoverKind::SinglePoint:
      return "single_point";
    case CrossoverKind::TwoPoint:
      return "two_point";
    case CrossoverKind::Uniform:
      return "uniform";
  }
  return "?";
}

SelectionKind selection_from_name(const std::string& name) {
  if (name == "tournament") return SelectionKind::Tournament;
  if (name == "roulette_wheel") return SelectionKind::RouletteWheel;
  if (name == "rank") return SelectionKind::Rank;
  throw ConfigError("unknown selection type: " + name);
}

CrossoverKind crossover_from_name(const std::string& name) {
  if (name == "single_point") return CrossoverKind::SinglePoint;
  if (name == "two_point") return CrossoverKind::TwoPoint;
  if (name == "uniform") return CrossoverKind::Uniform;
  throw ConfigError("unknown crossover type: " + name);
}

void validate(const GAConfig& config) {
  if (config.generations < 1) {
    throw ConfigError("ga: generations must be >= 1");
  }
  if (config.mating_parents < 2 ||
      config.population < config.mating_parents) {
    throw ConfigError("ga: need population >= mating_parents >= 2");
  }
  if (config.mutation_rate < 0.0 || config.mutation_rate > 1.0) {
    throw ConfigError("ga: mutation_rate must be within [0,1]");
  }
  if (config.selection == SelectionKind::Tournament &&
      config.tournament_k < 1) {
    throw ConfigError("ga: tournament_k must be >= 1");
  }
}

namespace {

std::vector<double> trait_distribution(const TraitVotes& tv,
                                       const LabelScheme& scheme,
                                       MixtureMode mode) {
  std::vector<double> probs(scheme.size, 0.0);
  if (mode == MixtureMode::MajorityOneHot) {
    probs[ordinal_of(tv.majority, scheme) - 1] = 1.0;
  } else {
    if (tv.samples.empty()) {
      throw InvalidInputError("persona trait " + tv.trait +
                              " has no samples");
    }
    for (const auto& s : tv.samples) {
      probs[ordinal_of(s, scheme) - 1] +=
          1.0 / static_cast<double>(tv.samples.size());
    }
  }
  return probs;
}

void check_persona(const PersonaVotes& persona) {
  const auto& codes = trait_codes();
  for (int t = 0; t < kNumTraits; ++t) {
    if (persona.traits[t].trait != codes[t] ||
        persona.traits[t].majority.empty()) {
      throw InvalidInputError("persona votes for item '" + persona.item_id +
                              "' are missing trait " + codes[t]);
    }
  }
}

}  // namespace

VoteDistribution mixture_distribution(const WeightVector& weights,
                                      const PersonaVotes& persona,
                                      const LabelScheme& scheme,
                                      MixtureMode mode) {
  check_persona(persona);
  auto decoded = weights.decode();
  std::vector<double> probs(scheme.size, 0.0);
  for (int t = 0; t < kNumTraits; ++t) {
    auto tp = trait_distribution(persona.traits[t], scheme, mode);
    for (int i = 0; i < scheme.size; ++i) probs[i] += decoded[t] * tp[i];
  }
  return VoteDistribution{scheme, std::move(probs)};
}

GaProblem make_ga_problem(
    const std::vector<std::string>& item_ids,
    const std::map<std::string, PersonaVotes>& persona_by_item,
    const std::map<std::string, VoteDistribution>& human_dist_by_item,
    const LabelScheme& scheme, MixtureMode mode) {
  GaProblem problem{scheme, {}};
  problem.items.reserve(item_ids.size());
  for (const auto& id : item_ids) {
    auto pit = persona_by_item.find(id);
    if (pit == persona_by_item.end()) {
      throw InvalidInputError("item '" + id + "' has no persona votes");
    }
    auto hit = human_dist_by_item.find(id);
    if (hit == human_dist_by_item.end()) {
      throw InvalidInputError("item '" + id + "' has no human distribution");
    }
    if (hit->second.scheme != scheme) {
      throw SchemeMismatchError("item '" + id +
                                "': human distribution scheme mismatch");
    }
    check_persona(pit->second);
    GaItem gi;
    gi.item_id = id;
    for (int t = 0; t < kNumTraits; ++t) {
      gi.trait_probs[t] =
          trait_distribution(pit->second.traits[t], scheme, mode);
    }
    gi.human_probs = hit->second.probs;
    problem.items.push_back(std::move(gi));
  }
  return problem;
}

double fitness(const WeightVector& weights, const GaProblem& problem) {
  if (problem.items.empty()) {
    throw EmptyInputError("ga fitness: no items");
  }
  auto decoded = weights.decode();
  int k = problem.scheme.size;
  double total = 0.0;
  std::vector<double> mix(k);
  for (const auto& item : problem.items) {
    std::fill(mix.begin(), mix.end(), 0.0);
    for (int t = 0; t < kNumTraits; ++t) {
      double wt = decoded[t];
      const auto& tp = item.trait_probs[t];
      for (int i = 0; i < k; ++i) mix[i] += wt * tp[i];
    }
    // EMD via running CDF difference against the human distribution
    double acc = 0.0;
    double dist = 0.0;
    for (int i = 0; i + 1 < k; ++i) {
      acc += mix[i] - item.human_probs[i];
      dist += std::abs(acc);
    }
    total += ems_from_emd(dist);
  }
  return total / static_cast<double>(problem.items.size());
}

double fitness(const WeightVector& weights,
               const std::vector<std::string>& train_items,
               const std::map<std::string, PersonaVotes>& persona_by_item,
               const std::map<std::string, VoteDistribution>& human_dist_by_item,
               const LabelScheme& scheme, MixtureMode mode) {
  return fitness(weights, make_ga_problem(train_items, persona_by_item,
                                          human_dist_by_item, scheme, mode));
}

namespace {

using Genome = std::array<double, kNumTraits>;

std::vector<std::size_t> select_parents(const std::vector<double>& fit,
                                        const GAConfig& config, Rng& rng) {
  std::size_t pop_n = fit.size();
  std::size_t want = static_cast<std::size_t>(config.mating_parents);
  std::vector<std::size_t> picked;
  picked.reserve(want);
  switch (config.selection) {
    case SelectionKind::Tournament: {
      for (std::size_t i = 0; i < want; ++i) {
        std::size_t best = rng.uniform_int(pop_n);
        for (int j = 1; j < config.tournament_k; ++j) {
          std::size_t c = rng.uniform_int(pop_n);
          if (fit[c] > fit[best]) best = c;
        }
        picked.push_back(best);
      }
      break;
    }
    case SelectionKind::RouletteWheel: {
      // fitness is EMS-based, so strictly positive
      std::vector<double> cum(pop_n);
      double acc = 0.0;
      for (std::size_t i = 0; i < pop_n; ++i) {
        acc += fit[i];
        cum[i] = acc;
      }
      for (std::size_t i = 0; i < want; ++i) {
        double r = rng.uniform01() * acc;
        picked.push_back(std::lower_bound(cum.begin(), cum.end(), r) -
                         cum.begin());
      }
      break;
    }
    case SelectionKind::Rank: {
      std::vector<std::size_t> order(pop_n);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) {
                         return fit[a] < fit[b];
                       });
      // rank r (1 = worst) gets probability proportional to r
      std::vector<double> cum(pop_n);
      double acc = 0.0;
      for (std::size_t r = 0; r < pop_n; ++r) {
        acc += static_cast<double>(r + 1);
        cum[r] = acc;
      }
      for (std::size_t i = 0; i < want; ++i) {
        double x = rng.uniform01() * acc;
        std::size_t r = std::lower_bound(cum.begin(), cum.end(), x) -
                        cum.begin();
        picked.push_back(order[std::min(r, pop_n - 1)]);
      }
      break;
    }
  }
  return picked;
}

Genome crossover(const Genome& a, const Genome& b, CrossoverKind kind,
                 Rng& rng) {
  Genome child{};
  switch (kind) {
    case CrossoverKind::SinglePoint: {
      std::size_t cut = 1 + rng.uniform_int(kNumTraits - 1);
      for (int i = 0; i < kNumTraits; ++i) {
        child[i] = static_cast<std::size_t>(i) < cut ? a[i] : b[i];
      }
      break;
    }
    case CrossoverKind::TwoPoint: {
      std::size_t c1 = 1 + rng.uniform_int(kNumTraits - 1);
      std::size_t c2 = 1 + rng.uniform_int(kNumTraits - 1);
      if (c1 > c2) std::swap(c1, c2);
      for (int i = 0; i < kNumTraits; ++i) {
        auto u = static_cast<std::size_t>(i);
        child[i] = (u >= c1 && u < c2) ? b[i] : a[i];
      }
      break;
    }
    case CrossoverKind::Uniform: {
      for (int i = 0; i < kNumTraits; ++i) {
        child[i] = rng.uniform01() < 0.5 ? a[i] : b[i];
      }
      break;
    }
  }
  return child;
}

}  // namespace

GaResult run_ga(const GAConfig& config, const GaProblem& problem) {
  validate(config);
  if (problem.items.empty()) {
    throw EmptyInputError("run_ga: empty training set");
  }

  Rng rng(fnv1a_mix(fnv1a("ga"), config.seed));
  std::size_t pop_n = static_cast<std::size_t>(config.population);
  std::size_t parents_n = static_cast<std::size_t>(config.mating_parents);

  std::vector<Genome> pop(pop_n);
  for (auto& g : pop) {
    for (double& v : g) v = rng.uniform01();
  }
  // the equal-weight genome is always reachable, so the fitted result can
  // never fall below the equal-weight ensemble
  pop[0].fill(0.5);

  GaResult result;
  result.history.reserve(config.generations);

  for (int gen = 0; gen < config.generations; ++gen) {
    std::vector<double> fit = parallel_map_indexed<double>(
        pop_n, config.eval_threads, [&](std::size_t i) {
          return fitness(WeightVector{pop[i]}, problem);
        });
    std::size_t best_i = 0;
    for (std::size_t i = 1; i < pop_n; ++i) {
      if (fit[i] > fit[best_i]) best_i = i;
    }
    result.history.push_back(fit[best_i]);
    result.best = WeightVector{pop[best_i]};
    result.best_fitness = fit[best_i];

    if (gen + 1 == config.generations) break;

    std::vector<std::size_t> parent_idx = select_parents(fit, config, rng);
    // parents survive; make sure the generation best is among them so the
    // best fitness can only improve
    bool has_best = false;
    for (auto i : parent_idx) {
      if (pop[i] == pop[best_i]) {
        has_best = true;
        break;
      }
    }
    if (!has_best) {
      std::size_t worst = 0;
      for (std::size_t i = 1; i < parent_idx.size(); ++i) {
        if (fit[parent_idx[i]] < fit[parent_idx[worst]]) worst = i;
      }
      parent_idx[worst] = best_i;
    }

    std::vector<Genome> next;
    next.reserve(pop_n);
    for (auto i : parent_idx) next.push_back(pop[i]);
    while (next.size() < pop_n) {
      const Genome& pa = next[rng.uniform_int(parents_n)];
      const Genome& pb = next[rng.uniform_int(parents_n)];
      Genome child = crossover(pa, pb, config.crossover, rng);
      for (double& v : child) {
        if (rng.uniform01() < config.mutation_rate) v = rng.uniform01();
      }
      next.push_back(child);
    }
    pop = std::move(next);
  }
  return result;
}

std::vector<GridCell> default_ga_grid() {
  std::vector<GridCell> grid;
  for (auto sel : {SelectionKind::Tournament, SelectionKind::RouletteWheel,
                   SelectionKind::Rank}) {
    for (auto xo : {CrossoverKind::SinglePoint, CrossoverKind::TwoPoint,
                    CrossoverKind::Uniform}) {
      grid.push_back(GridCell{sel, xo});
    }
  }
  return grid;
}

GaGridResult grid_search_ga(const GaProblem& train, const GaProblem& test,
                            const std::vector<GridCell>& grid,
                            const GAConfig& base_config) {
  if (grid.empty()) throw InvalidInputError("grid_search_ga: empty grid");
  GaGridResult out;
  std::vector<GaResult> runs;
  runs.reserve(grid.size());
  for (std::size_t c = 0; c < grid.size(); ++c) {
    GAConfig config = base_config;
    config.selection = grid[c].selection;
    config.crossover = grid[c].crossover;
    std::uint64_t h = fnv1a(selection_name(config.selection));
    h = fnv1a(crossover_name(config.crossover), h);
    config.seed = fnv1a_mix(h, base_config.seed);
    try {
      runs.push_back(run_ga(config, train));
    } catch (const Error& e) {
      throw ConfigError("grid cell " + selection_name(config.selection) +
                        "/" + crossover_name(config.crossover) + ": " +
                        e.what());
    }
    out.cell_train_fitness.push_back(runs.back().best_fitness);
  }
  std::size_t best = 0;
  for (std::size_t c = 1; c < grid.size(); ++c) {
    if (out.cell_train_fitness[c] > out.cell_train_fitness[best]) best = c;
  }
  out.best_cell = grid[best];
  out.best_cell_index = best;
  out.weights = runs[best].best;
  out.train_fitness = runs[best].best_fitness;
  out.test_ems = test.items.empty() ? 0.0 : fitness(out.weights, test);
  return out;
}

FoldPlan kfold_split(std::vector<std::string> item_ids, int k,
                     std::uint64_t seed) {
  if (k < 2) throw InvalidInputError("kfold_split: k must be >= 2");
  if (item_ids.size() < static_cast<std::size_t>(k)) {
    throw InvalidInputError("kfold_split: fewer items than folds");
  }
  Rng rng(fnv1a_mix(fnv1a("kfold"), seed));
  // Fisher-Yates
  for (std::size_t i = item_ids.size() - 1; i > 0; --i) {
    std::size_t j = rng.uniform_int(i + 1);
    std::swap(item_ids[i], item_ids[j]);
  }
  FoldPlan plan;
  plan.k = k;
  plan.seed = seed;
  std::size_t n = item_ids.size();
  std::size_t base = n / k;
  std::size_t extra = n % k;
  std::size_t pos = 0;
  for (int f = 0; f < k; ++f) {
    std::size_t len = base + (static_cast<std::size_t>(f) < extra ? 1 : 0);
    std::vector<std::string> test(item_ids.begin() + pos,
                                  item_ids.begin() + pos + len);
    std::vector<std::string> train;
    train.reserve(n - len);
    train.insert(train.end(), item_ids.begin(), item_ids.begin() + pos);
    train.insert(train.end(), item_ids.begin() + pos + len, item_ids.end());
    plan.test_ids.push_back(std::move(test));
    plan.train_ids.push_back(std::move(train));
    pos += len;
  }
  return plan;
}

}  // namespace spectrum
