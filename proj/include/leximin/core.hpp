#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace leximin {

// Error classes; the CLI maps them to distinct exit codes.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Slack allowed when checking that probabilities sum to 1.
inline constexpr double kDistTolerance = 1e-7;
// Default equality band for leximin comparisons of real-valued expectations.
inline constexpr double kLeximinTolerance = 1e-9;

// Handle of the degenerate state (all-zero utilities).
inline constexpr std::string_view kDegenerateHandle = "d";

// Decoded outcome carried by a state. `data` holds, per kind:
// the agent index per good, the admitted group ids, or the funded project ids.
struct StatePayload {
  enum class Kind { Degenerate, Allocation, GroupSet, ProjectSet };
  Kind kind = Kind::Degenerate;
  std::vector<int> data;

  friend bool operator==(const StatePayload&, const StatePayload&) = default;
};

// One deterministic state: canonical handle, per-agent utilities, decoded payload.
struct StateRecord {
  std::string handle;
  std::vector<double> utilities;
  StatePayload payload;

  bool degenerate() const { return handle == kDegenerateHandle; }
};

StateRecord degenerate_state(int agents);

enum class LeximinOrder { StrictlyDispreferred = -1, Equivalent = 0, StrictlyPreferred = 1 };

// v sorted in non-decreasing order.
std::vector<double> sorted_ascending(std::span<const double> v);

// Compares the sorted vectors entrywise; the first index where they differ by
// more than tol decides. Entries within tol are treated as equal.
LeximinOrder leximin_compare(std::span<const double> v, std::span<const double> u,
                             double tol = kLeximinTolerance);

std::vector<double> scaled(std::span<const double> v, double factor);
std::vector<double> shifted(std::span<const double> v, double delta);

// Definition used throughout: candidate is an alpha-leximin-approximation iff
// its expected vector is weakly leximin-preferred over alpha times the optimum.
bool verify_alpha_leximin_approx(std::span<const double> candidate,
                                 std::span<const double> optimal, double alpha,
                                 double tol = kLeximinTolerance);

// Hartman-style approximation: true iff no member of all_vectors is
// alpha-preferred over the candidate.
bool hartman_approx(std::span<const double> candidate,
                    const std::vector<std::vector<double>>& all_vectors, double alpha);

// Coordinate-wise approximation against the sorted optimum.
bool elementwise_approx(std::span<const double> candidate,
                        std::span<const double> optimal, double alpha);

// Probability distribution over states, stored sparsely. Weighted handles
// always resolve in the registry; probabilities are non-negative and sum to 1
// within tau (validate()).
class SparseDistribution {
 public:
  SparseDistribution() = default;
  explicit SparseDistribution(int agents) : agents_(agents) {}

  static SparseDistribution point_mass(StateRecord s);
  static SparseDistribution degenerate_point_mass(int agents);

  void set(const StateRecord& s, double probability);
  double probability(const std::string& handle) const;
  const std::map<std::string, double>& weights() const { return weights_; }
  const StateRecord& record(const std::string& handle) const;
  bool contains(const std::string& handle) const;

  int agents() const { return agents_; }
  std::size_t support_size() const { return weights_.size(); }
  double total_mass() const;
  double non_degenerate_mass() const;
  void drop_zero_weights(double threshold = 0.0);

  // Checks non-negativity, mass within tau of 1, and registry resolution.
  void validate(double tau = kDistTolerance) const;

  std::vector<double> expected_utilities() const;

 private:
  int agents_ = 0;
  std::map<std::string, double> weights_;
  std::map<std::string, StateRecord> registry_;
};

std::vector<double> expected_utilities(const SparseDistribution& x);

// Scales non-degenerate weights by alpha and parks the remainder on the
// degenerate state; E(downgrade(x, alpha)) = alpha * E(x).
SparseDistribution downgrade(const SparseDistribution& x, double alpha);

// Inverse of downgrade; requires non-degenerate mass <= alpha (+ tau).
SparseDistribution upgrade(const SparseDistribution& x, double alpha,
                           double tau = kDistTolerance);

}  // namespace leximin
