#include "leximin/blackbox.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace leximin {

namespace {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 step over seed + index
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

double weighted_welfare(std::span<const double> weights, const StateRecord& s) {
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    total += weights[i] * s.utilities[i];
  }
  return total;
}

int compute_repetitions(double p, long long k) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw InvariantError("compute_repetitions: p out of (0,1]");
  }
  if (k < 1) throw InvariantError("compute_repetitions: k must be >= 1");
  if (p == 1.0) return 1;  // deterministic solver needs one call
  const double q = std::ceil(std::log(1.0 / static_cast<double>(k)) / std::log(1.0 - p) + 1.0);
  return std::max(1, static_cast<int>(q));
}

StateRecord boosted_solve(const Solver& base, std::span<const double> weights, int q,
                          std::uint64_t seed) {
  if (q < 1) throw InvariantError("boosted_solve: q must be >= 1");
  StateRecord best = base.solve(weights, derive_seed(seed, 0));
  double best_value = weighted_welfare(weights, best);
  for (int j = 1; j < q; ++j) {
    StateRecord s = base.solve(weights, derive_seed(seed, static_cast<std::uint64_t>(j)));
    const double value = weighted_welfare(weights, s);
    if (value > best_value || (value == best_value && s.handle < best.handle)) {
      best = std::move(s);
      best_value = value;
    }
  }
  return best;
}

std::vector<int> knapsack_exact(std::span<const double> values,
                                std::span<const long long> weights, long long capacity) {
  const std::size_t n = values.size();
  if (weights.size() != n) throw InvariantError("knapsack: values/weights length mismatch");
  if (capacity < 0) throw InvariantError("knapsack: negative capacity");
  for (long long w : weights) {
    if (w < 0) throw InvariantError("knapsack: negative weight");
  }
  const std::size_t cap = static_cast<std::size_t>(capacity);
  // table[i][w]: best value using items < i with weight budget w
  std::vector<std::vector<double>> table(n + 1, std::vector<double>(cap + 1, 0.0));
  for (std::size_t i = 1; i <= n; ++i) {
    const double v = std::max(0.0, values[i - 1]);
    const std::size_t w = static_cast<std::size_t>(weights[i - 1]);
    for (std::size_t c = 0; c <= cap; ++c) {
      table[i][c] = table[i - 1][c];
      if (w <= c && values[i - 1] > 0.0) {
        table[i][c] = std::max(table[i][c], table[i - 1][c - w] + v);
      }
    }
  }
  std::vector<int> picked;
  std::size_t c = cap;
  for (std::size_t i = n; i > 0; --i) {
    if (table[i][c] != table[i - 1][c]) {
      picked.push_back(static_cast<int>(i - 1));
      c -= static_cast<std::size_t>(weights[i - 1]);
    }
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

std::vector<int> knapsack_fptas(std::span<const double> values,
                                std::span<const long long> weights, long long capacity,
                                double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw InvariantError("knapsack_fptas: eps out of (0,1)");
  const std::size_t n = values.size();
  if (weights.size() != n) throw InvariantError("knapsack: values/weights length mismatch");
  if (capacity < 0) throw InvariantError("knapsack: negative capacity");
  double vmax = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (weights[i] < 0) throw InvariantError("knapsack: negative weight");
    if (weights[i] <= capacity) vmax = std::max(vmax, values[i]);
  }
  if (vmax <= 0.0 || n == 0) return {};
  const double scale = eps * vmax / static_cast<double>(n);
  std::vector<long long> scaled_values(n, 0);
  long long value_cap = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i] > 0.0 && weights[i] <= capacity) {
      scaled_values[i] = static_cast<long long>(std::floor(values[i] / scale));
    }
    value_cap += scaled_values[i];
  }
  if (value_cap > 4'000'000) {
    throw SolverError("knapsack_fptas: scaled value range too large");
  }
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  // min_weight[i][v]: lightest subset of items < i with scaled value exactly v
  const std::size_t vc = static_cast<std::size_t>(value_cap);
  std::vector<std::vector<long long>> min_weight(n + 1,
                                                 std::vector<long long>(vc + 1, kInf));
  min_weight[0][0] = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const long long sv = scaled_values[i - 1];
    for (std::size_t v = 0; v <= vc; ++v) {
      min_weight[i][v] = min_weight[i - 1][v];
      if (sv > 0 && static_cast<long long>(v) >= sv) {
        const long long cand = min_weight[i - 1][v - static_cast<std::size_t>(sv)];
        if (cand < kInf && cand + weights[i - 1] < min_weight[i][v]) {
          min_weight[i][v] = cand + weights[i - 1];
        }
      }
    }
  }
  std::size_t best_v = 0;
  for (std::size_t v = vc + 1; v > 0; --v) {
    if (min_weight[n][v - 1] <= capacity) {
      best_v = v - 1;
      break;
    }
  }
  std::vector<int> picked;
  std::size_t v = best_v;
  for (std::size_t i = n; i > 0; --i) {
    if (min_weight[i][v] != min_weight[i - 1][v]) {
      picked.push_back(static_cast<int>(i - 1));
      v -= static_cast<std::size_t>(scaled_values[i - 1]);
    }
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

StateRecord greedy_additive_allocate(const AllocationInstance& a, const Instance& inst,
                                     std::span<const double> weights) {
  if (!a.additive()) {
    throw InvariantError("greedy_additive_allocate: additive utilities required");
  }
  const auto& v = std::get<AdditiveUtilities>(a.utilities).values;
  StatePayload payload{StatePayload::Kind::Allocation,
                       std::vector<int>(static_cast<std::size_t>(a.goods), 0)};
  for (int g = 0; g < a.goods; ++g) {
    int best = 0;
    double best_value = weights[0] * v[0][static_cast<std::size_t>(g)];
    for (int i = 1; i < a.agents; ++i) {
      const double value =
          weights[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)][static_cast<std::size_t>(g)];
      if (value > best_value) {
        best = i;
        best_value = value;
      }
    }
    payload.data[static_cast<std::size_t>(g)] = best;
  }
  return make_state(inst, payload);
}

StateRecord greedy_submodular_allocate(const AllocationInstance& a, const Instance& inst,
                                       std::span<const double> weights) {
  StatePayload payload{StatePayload::Kind::Allocation,
                       std::vector<int>(static_cast<std::size_t>(a.goods), 0)};
  std::vector<std::vector<char>> bundles(
      static_cast<std::size_t>(a.agents),
      std::vector<char>(static_cast<std::size_t>(a.goods), 0));
  std::vector<double> current(static_cast<std::size_t>(a.agents), 0.0);
  for (int g = 0; g < a.goods; ++g) {
    int best = 0;
    double best_gain = -1.0;
    for (int i = 0; i < a.agents; ++i) {
      auto& bundle = bundles[static_cast<std::size_t>(i)];
      bundle[static_cast<std::size_t>(g)] = 1;
      const double with_g = a.bundle_utility(i, bundle);
      bundle[static_cast<std::size_t>(g)] = 0;
      const double gain =
          weights[static_cast<std::size_t>(i)] * (with_g - current[static_cast<std::size_t>(i)]);
      if (gain > best_gain) {
        best = i;
        best_gain = gain;
      }
    }
    bundles[static_cast<std::size_t>(best)][static_cast<std::size_t>(g)] = 1;
    current[static_cast<std::size_t>(best)] =
        a.bundle_utility(best, bundles[static_cast<std::size_t>(best)]);
    payload.data[static_cast<std::size_t>(g)] = best;
  }
  return make_state(inst, payload);
}

ExhaustiveSolver::ExhaustiveSolver(std::vector<StateRecord> states)
    : states_(std::move(states)) {
  if (states_.empty()) throw InvariantError("ExhaustiveSolver: empty state list");
  std::sort(states_.begin(), states_.end(),
            [](const StateRecord& a, const StateRecord& b) { return a.handle < b.handle; });
}

StateRecord ExhaustiveSolver::solve(std::span<const double> weights, std::uint64_t) const {
  const StateRecord* best = &states_.front();
  double best_value = weighted_welfare(weights, *best);
  for (const StateRecord& s : states_) {
    const double value = weighted_welfare(weights, s);
    if (value > best_value) {
      best = &s;
      best_value = value;
    }
  }
  return *best;
}

BlackBoxSpec ExhaustiveSolver::spec() const { return {1.0, 1.0, "exhaustive"}; }

GreedyAdditiveSolver::GreedyAdditiveSolver(Instance inst) : inst_(std::move(inst)) {
  const auto* a = std::get_if<AllocationInstance>(&inst_);
  if (a == nullptr || !a->additive()) {
    throw InvariantError("greedy-additive solver requires an additive allocation instance");
  }
}

StateRecord GreedyAdditiveSolver::solve(std::span<const double> weights, std::uint64_t) const {
  return greedy_additive_allocate(std::get<AllocationInstance>(inst_), inst_, weights);
}

BlackBoxSpec GreedyAdditiveSolver::spec() const { return {1.0, 1.0, "greedy-additive"}; }

GreedySubmodularSolver::GreedySubmodularSolver(Instance inst) : inst_(std::move(inst)) {
  if (!std::holds_alternative<AllocationInstance>(inst_)) {
    throw InvariantError("greedy-submodular solver requires an allocation instance");
  }
}

StateRecord GreedySubmodularSolver::solve(std::span<const double> weights,
                                          std::uint64_t) const {
  return greedy_submodular_allocate(std::get<AllocationInstance>(inst_), inst_, weights);
}

BlackBoxSpec GreedySubmodularSolver::spec() const { return {0.5, 1.0, "greedy-submodular"}; }

KnapsackSolver::KnapsackSolver(Instance inst, std::optional<double> fptas_eps)
    : inst_(std::move(inst)), fptas_eps_(fptas_eps) {
  if (const auto* g = std::get_if<GiveawayInstance>(&inst_)) {
    item_weights_ = g->sizes;
    capacity_ = g->capacity;
  } else if (const auto* b = std::get_if<BudgetInstance>(&inst_)) {
    item_weights_ = b->costs;
    capacity_ = b->budget;
  } else {
    throw InvariantError("knapsack solver requires a giveaway or budget instance");
  }
}

StateRecord KnapsackSolver::solve(std::span<const double> weights, std::uint64_t) const {
  std::vector<double> values;
  StatePayload::Kind kind;
  if (std::holds_alternative<GiveawayInstance>(inst_)) {
    values.assign(weights.begin(), weights.end());
    kind = StatePayload::Kind::GroupSet;
  } else {
    const auto& b = std::get<BudgetInstance>(inst_);
    values.assign(static_cast<std::size_t>(b.projects), 0.0);
    for (int p = 0; p < b.projects; ++p) {
      for (int i = 0; i < b.agents; ++i) {
        values[static_cast<std::size_t>(p)] +=
            weights[static_cast<std::size_t>(i)] *
            b.utilities[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
      }
    }
    kind = StatePayload::Kind::ProjectSet;
  }
  const std::vector<int> picked =
      fptas_eps_ ? knapsack_fptas(values, item_weights_, capacity_, *fptas_eps_)
                 : knapsack_exact(values, item_weights_, capacity_);
  return make_state(inst_, StatePayload{kind, picked});
}

BlackBoxSpec KnapsackSolver::spec() const {
  if (fptas_eps_) return {1.0 - *fptas_eps_, 1.0, "knapsack-fptas"};
  return {1.0, 1.0, "knapsack-exact"};
}

SimulatedRandomizedSolver::SimulatedRandomizedSolver(std::shared_ptr<const Solver> inner,
                                                     double p, int agents,
                                                     std::optional<double> claimed_alpha)
    : inner_(std::move(inner)), p_(p), agents_(agents) {
  if (!(p_ > 0.0 && p_ <= 1.0)) {
    throw InvariantError("simulated solver: success probability out of (0,1]");
  }
  alpha_ = claimed_alpha.value_or(inner_->spec().alpha);
  alpha_ = std::min(alpha_, inner_->spec().alpha);
}

StateRecord SimulatedRandomizedSolver::solve(std::span<const double> weights,
                                             std::uint64_t seed) const {
  std::mt19937_64 rng(derive_seed(seed, 0x5151));
  std::bernoulli_distribution success(p_);
  if (!success(rng)) return degenerate_state(agents_);
  return inner_->solve(weights, derive_seed(seed, 1));
}

BlackBoxSpec SimulatedRandomizedSolver::spec() const {
  return {alpha_, p_, "simulated(" + inner_->spec().kind + ")"};
}

BoostedSolver::BoostedSolver(std::shared_ptr<const Solver> inner, int q)
    : inner_(std::move(inner)), q_(q) {
  if (q_ < 1) throw InvariantError("BoostedSolver: q must be >= 1");
}

StateRecord BoostedSolver::solve(std::span<const double> weights, std::uint64_t seed) const {
  return boosted_solve(*inner_, weights, q_, seed);
}

BlackBoxSpec BoostedSolver::spec() const {
  BlackBoxSpec s = inner_->spec();
  s.success_probability = 1.0 - std::pow(1.0 - s.success_probability, q_);
  s.kind = "boosted(" + s.kind + ")";
  return s;
}

}  // namespace leximin
