#include "leximin/instance.hpp"

#include <algorithm>
#include <numeric>

namespace leximin {

double AllocationInstance::bundle_utility(int agent, const std::vector<char>& bundle) const {
  if (additive()) {
    const auto& v = std::get<AdditiveUtilities>(utilities).values;
    double total = 0.0;
    for (int g = 0; g < goods; ++g) {
      if (bundle[static_cast<std::size_t>(g)]) {
        total += v[static_cast<std::size_t>(agent)][static_cast<std::size_t>(g)];
      }
    }
    return total;
  }
  const auto& cov = std::get<CoverageUtilities>(utilities);
  std::vector<char> covered(static_cast<std::size_t>(cov.ground_set), 0);
  for (int g = 0; g < goods; ++g) {
    if (!bundle[static_cast<std::size_t>(g)]) continue;
    for (int e : cov.covers[static_cast<std::size_t>(g)]) {
      covered[static_cast<std::size_t>(e)] = 1;
    }
  }
  double total = 0.0;
  for (int e = 0; e < cov.ground_set; ++e) {
    if (covered[static_cast<std::size_t>(e)]) {
      total += cov.weights[static_cast<std::size_t>(agent)][static_cast<std::size_t>(e)];
    }
  }
  return total;
}

int agent_count(const Instance& inst) {
  return std::visit([](const auto& i) { return i.agents; }, inst);
}

std::string instance_kind(const Instance& inst) {
  struct Visitor {
    std::string operator()(const AllocationInstance&) const { return "allocation"; }
    std::string operator()(const GiveawayInstance&) const { return "giveaway"; }
    std::string operator()(const BudgetInstance&) const { return "budget"; }
  };
  return std::visit(Visitor{}, inst);
}

namespace {

void check_non_negative(const std::vector<std::vector<double>>& values,
                        const char* field) {
  for (const auto& row : values) {
    for (double v : row) {
      if (v < 0.0) {
        throw InvariantError(std::string(field) + ": negative value");
      }
    }
  }
}

void validate(const AllocationInstance& a) {
  if (a.agents < 1) throw InvariantError("agents: must be >= 1");
  if (a.goods < 0) throw InvariantError("goods: must be >= 0");
  if (a.additive()) {
    const auto& v = std::get<AdditiveUtilities>(a.utilities).values;
    if (static_cast<int>(v.size()) != a.agents) {
      throw InvariantError("utilities.values: need one row per agent");
    }
    for (const auto& row : v) {
      if (static_cast<int>(row.size()) != a.goods) {
        throw InvariantError("utilities.values: row length must equal goods");
      }
    }
    check_non_negative(v, "utilities.values");
  } else {
    const auto& c = std::get<CoverageUtilities>(a.utilities);
    if (c.ground_set < 0) throw InvariantError("utilities.ground_set: must be >= 0");
    if (static_cast<int>(c.covers.size()) != a.goods) {
      throw InvariantError("utilities.covers: need one entry per good");
    }
    for (const auto& cov : c.covers) {
      for (int e : cov) {
        if (e < 0 || e >= c.ground_set) {
          throw InvariantError("utilities.covers: element out of range");
        }
      }
    }
    if (static_cast<int>(c.weights.size()) != a.agents) {
      throw InvariantError("utilities.weights: need one row per agent");
    }
    for (const auto& row : c.weights) {
      if (static_cast<int>(row.size()) != c.ground_set) {
        throw InvariantError("utilities.weights: row length must equal ground_set");
      }
    }
    check_non_negative(c.weights, "utilities.weights");
  }
}

void validate(const GiveawayInstance& g) {
  if (g.agents < 1) throw InvariantError("agents: must be >= 1");
  if (static_cast<int>(g.sizes.size()) != g.agents) {
    throw InvariantError("sizes: need one entry per group");
  }
  if (g.capacity < 1) throw InvariantError("capacity: must be >= 1");
  long long total = 0;
  for (std::size_t i = 0; i < g.sizes.size(); ++i) {
    if (g.sizes[i] < 1) {
      throw InvariantError("sizes[" + std::to_string(i) + "]: must be >= 1");
    }
    if (g.sizes[i] > g.capacity) {
      throw InvariantError("sizes[" + std::to_string(i) + "]: group exceeds capacity");
    }
    total += g.sizes[i];
  }
  if (total <= g.capacity) {
    throw InvariantError("sizes: total group size must exceed capacity");
  }
}

void validate(const BudgetInstance& b) {
  if (b.agents < 1) throw InvariantError("agents: must be >= 1");
  if (b.projects < 0) throw InvariantError("projects: must be >= 0");
  if (static_cast<int>(b.costs.size()) != b.projects) {
    throw InvariantError("costs: need one entry per project");
  }
  if (b.budget < 1) throw InvariantError("budget: must be >= 1");
  for (std::size_t p = 0; p < b.costs.size(); ++p) {
    if (b.costs[p] < 1) {
      throw InvariantError("costs[" + std::to_string(p) + "]: must be >= 1");
    }
  }
  if (static_cast<int>(b.utilities.size()) != b.agents) {
    throw InvariantError("utilities: need one row per voter");
  }
  for (const auto& row : b.utilities) {
    if (static_cast<int>(row.size()) != b.projects) {
      throw InvariantError("utilities: row length must equal projects");
    }
  }
  check_non_negative(b.utilities, "utilities");
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

void validate_instance(const Instance& inst) {
  std::visit([](const auto& i) { validate(i); }, inst);
}

StatePayload normalize_payload(StatePayload payload) {
  using Kind = StatePayload::Kind;
  if (payload.kind == Kind::GroupSet || payload.kind == Kind::ProjectSet) {
    std::sort(payload.data.begin(), payload.data.end());
    payload.data.erase(std::unique(payload.data.begin(), payload.data.end()),
                       payload.data.end());
    if (payload.data.empty()) {
      payload = StatePayload{Kind::Degenerate, {}};
    }
  }
  if (payload.kind == Kind::Degenerate) payload.data.clear();
  return payload;
}

std::string canonical_handle(const StatePayload& payload) {
  using Kind = StatePayload::Kind;
  switch (payload.kind) {
    case Kind::Degenerate:
      return std::string(kDegenerateHandle);
    case Kind::Allocation:
      return "a:" + join_ints(payload.data);
    case Kind::GroupSet:
      return "g:" + join_ints(payload.data);
    case Kind::ProjectSet:
      return "p:" + join_ints(payload.data);
  }
  throw InvariantError("canonical_handle: unknown payload kind");
}

bool payload_feasible(const Instance& inst, const StatePayload& payload) {
  using Kind = StatePayload::Kind;
  if (payload.kind == Kind::Degenerate) return true;
  if (const auto* a = std::get_if<AllocationInstance>(&inst)) {
    if (payload.kind != Kind::Allocation) return false;
    if (static_cast<int>(payload.data.size()) != a->goods) return false;
    for (int owner : payload.data) {
      if (owner < 0 || owner >= a->agents) return false;
    }
    return true;
  }
  if (const auto* g = std::get_if<GiveawayInstance>(&inst)) {
    if (payload.kind != Kind::GroupSet) return false;
    long long load = 0;
    for (int i : payload.data) {
      if (i < 0 || i >= g->agents) return false;
      load += g->sizes[static_cast<std::size_t>(i)];
    }
    return load <= g->capacity;
  }
  const auto& b = std::get<BudgetInstance>(inst);
  if (payload.kind != Kind::ProjectSet) return false;
  long long cost = 0;
  for (int p : payload.data) {
    if (p < 0 || p >= b.projects) return false;
    cost += b.costs[static_cast<std::size_t>(p)];
  }
  return cost <= b.budget;
}

std::vector<double> payload_utilities(const Instance& inst, const StatePayload& payload) {
  using Kind = StatePayload::Kind;
  const int n = agent_count(inst);
  std::vector<double> u(static_cast<std::size_t>(n), 0.0);
  if (payload.kind == Kind::Degenerate) return u;
  if (const auto* a = std::get_if<AllocationInstance>(&inst)) {
    for (int i = 0; i < n; ++i) {
      std::vector<char> bundle(static_cast<std::size_t>(a->goods), 0);
      for (int g = 0; g < a->goods; ++g) {
        if (payload.data[static_cast<std::size_t>(g)] == i) {
          bundle[static_cast<std::size_t>(g)] = 1;
        }
      }
      u[static_cast<std::size_t>(i)] = a->bundle_utility(i, bundle);
    }
    return u;
  }
  if (std::holds_alternative<GiveawayInstance>(inst)) {
    for (int i : payload.data) u[static_cast<std::size_t>(i)] = 1.0;
    return u;
  }
  const auto& b = std::get<BudgetInstance>(inst);
  for (int i = 0; i < n; ++i) {
    double total = 0.0;
    for (int p : payload.data) {
      total += b.utilities[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
    }
    u[static_cast<std::size_t>(i)] = total;
  }
  return u;
}

StateRecord make_state(const Instance& inst, StatePayload payload) {
  payload = normalize_payload(std::move(payload));
  if (!payload_feasible(inst, payload)) {
    throw InvariantError("make_state: payload infeasible for instance");
  }
  StateRecord s;
  s.payload = payload;
  s.handle = canonical_handle(payload);
  s.utilities = payload_utilities(inst, payload);
  return s;
}

}  // namespace leximin
