#pragma once

#include <memory>
#include <optional>
#include <span>

#include "leximin/core.hpp"
#include "leximin/instance.hpp"

namespace leximin {

// Guarantees carried by a utilitarian-welfare solver: given non-negative
// weights c, solve() returns a state whose weighted welfare is at least
// alpha times the maximum, with probability >= success_probability.
struct BlackBoxSpec {
  double alpha = 1.0;
  double success_probability = 1.0;
  std::string kind;
};

// Stateless utilitarian-welfare black-box; all randomness is a pure function
// of the seed, so concurrent calls with distinct seeds are permitted.
class Solver {
 public:
  virtual ~Solver() = default;
  virtual StateRecord solve(std::span<const double> weights, std::uint64_t seed) const = 0;
  virtual BlackBoxSpec spec() const = 0;
};

// Number of repetitions q so that (1 - (1-p)^q)^k >= p.
int compute_repetitions(double p, long long k);

// Best of q independent base calls, by weighted welfare; ties by lowest handle.
StateRecord boosted_solve(const Solver& base, std::span<const double> weights, int q,
                          std::uint64_t seed);

// 0/1 knapsack, exact DP over capacity. Returns the selected index set.
std::vector<int> knapsack_exact(std::span<const double> values,
                                std::span<const long long> weights, long long capacity);

// Value-scaling FPTAS; achieved value >= (1 - eps) * OPT.
std::vector<int> knapsack_fptas(std::span<const double> values,
                                std::span<const long long> weights, long long capacity,
                                double eps);

// Each good to the agent with the highest weighted value; exact for additive.
StateRecord greedy_additive_allocate(const AllocationInstance&, const Instance& inst,
                                     std::span<const double> weights);

// Item-by-item greedy on weighted marginal gains; 1/2-approximation for
// monotone submodular utilities.
StateRecord greedy_submodular_allocate(const AllocationInstance&, const Instance& inst,
                                       std::span<const double> weights);

// Exact solver that scans an explicit list of states (desk scale only).
class ExhaustiveSolver : public Solver {
 public:
  explicit ExhaustiveSolver(std::vector<StateRecord> states);
  StateRecord solve(std::span<const double> weights, std::uint64_t seed) const override;
  BlackBoxSpec spec() const override;

 private:
  std::vector<StateRecord> states_;  // sorted by handle
};

class GreedyAdditiveSolver : public Solver {
 public:
  explicit GreedyAdditiveSolver(Instance inst);
  StateRecord solve(std::span<const double> weights, std::uint64_t seed) const override;
  BlackBoxSpec spec() const override;

 private:
  Instance inst_;
};

class GreedySubmodularSolver : public Solver {
 public:
  explicit GreedySubmodularSolver(Instance inst);
  StateRecord solve(std::span<const double> weights, std::uint64_t seed) const override;
  BlackBoxSpec spec() const override;

 private:
  Instance inst_;
};

// Knapsack-shaped welfare (giveaway and budgeting); exact DP, or FPTAS when
// fptas_eps is set.
class KnapsackSolver : public Solver {
 public:
  KnapsackSolver(Instance inst, std::optional<double> fptas_eps);
  StateRecord solve(std::span<const double> weights, std::uint64_t seed) const override;
  BlackBoxSpec spec() const override;

 private:
  Instance inst_;
  std::optional<double> fptas_eps_;
  std::vector<long long> item_weights_;
  long long capacity_ = 0;
};

// Wraps a deterministic solver; with probability 1-p the call fails and
// returns the degenerate state. Failure is a pure function of the seed.
class SimulatedRandomizedSolver : public Solver {
 public:
  SimulatedRandomizedSolver(std::shared_ptr<const Solver> inner, double p, int agents,
                            std::optional<double> claimed_alpha = {});
  StateRecord solve(std::span<const double> weights, std::uint64_t seed) const override;
  BlackBoxSpec spec() const override;

 private:
  std::shared_ptr<const Solver> inner_;
  double p_;
  int agents_;
  double alpha_;
};

class BoostedSolver : public Solver {
 public:
  BoostedSolver(std::shared_ptr<const Solver> inner, int q);
  StateRecord solve(std::span<const double> weights, std::uint64_t seed) const override;
  BlackBoxSpec spec() const override;
  int repetitions() const { return q_; }

 private:
  std::shared_ptr<const Solver> inner_;
  int q_;
};

double weighted_welfare(std::span<const double> weights, const StateRecord& s);

}  // namespace leximin
