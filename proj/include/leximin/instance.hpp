#pragma once

#include <variant>

#include "leximin/core.hpp"

namespace leximin {

// Additive utilities: values[i][g] is agent i's value for good g.
struct AdditiveUtilities {
  std::vector<std::vector<double>> values;
};

// Weighted coverage utilities: good g covers covers[g] (element ids of a
// shared ground set); agent i's utility for a bundle is the total weight of
// the covered elements under weights[i]. Monotone and submodular.
struct CoverageUtilities {
  int ground_set = 0;
  std::vector<std::vector<int>> covers;
  std::vector<std::vector<double>> weights;
};

struct AllocationInstance {
  int agents = 0;
  int goods = 0;
  std::variant<AdditiveUtilities, CoverageUtilities> utilities;

  bool additive() const { return std::holds_alternative<AdditiveUtilities>(utilities); }
  // bundle[g] != 0 marks good g as part of the bundle.
  double bundle_utility(int agent, const std::vector<char>& bundle) const;
};

struct GiveawayInstance {
  int agents = 0;
  std::vector<long long> sizes;
  long long capacity = 0;
};

struct BudgetInstance {
  int agents = 0;
  int projects = 0;
  std::vector<long long> costs;
  long long budget = 0;
  std::vector<std::vector<double>> utilities;  // agents x projects
};

using Instance = std::variant<AllocationInstance, GiveawayInstance, BudgetInstance>;

int agent_count(const Instance&);
std::string instance_kind(const Instance&);

// Throws InvariantError with a field-level message on violation.
void validate_instance(const Instance&);

// Canonical byte encoding of a payload; injective per application.
// Empty group/project sets map onto the degenerate handle.
std::string canonical_handle(const StatePayload&);

// Normalizes a payload (sorts set members; empty sets become degenerate).
StatePayload normalize_payload(StatePayload payload);

bool payload_feasible(const Instance&, const StatePayload&);

std::vector<double> payload_utilities(const Instance&, const StatePayload&);

// Builds the full StateRecord (handle + utility column) for a payload.
StateRecord make_state(const Instance&, StatePayload payload);

}  // namespace leximin
