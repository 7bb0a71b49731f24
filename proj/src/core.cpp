#include "leximin/core.hpp"

#include <algorithm>
#include <cmath>

namespace leximin {

StateRecord degenerate_state(int agents) {
  StateRecord s;
  s.handle = std::string(kDegenerateHandle);
  s.utilities.assign(static_cast<std::size_t>(agents), 0.0);
  s.payload = StatePayload{StatePayload::Kind::Degenerate, {}};
  return s;
}

std::vector<double> sorted_ascending(std::span<const double> v) {
  std::vector<double> out(v.begin(), v.end());
  std::stable_sort(out.begin(), out.end());
  return out;
}

LeximinOrder leximin_compare(std::span<const double> v, std::span<const double> u,
                             double tol) {
  if (v.size() != u.size()) {
    throw InvariantError("leximin_compare: length mismatch");
  }
  const std::vector<double> vs = sorted_ascending(v);
  const std::vector<double> us = sorted_ascending(u);
  for (std::size_t k = 0; k < vs.size(); ++k) {
    const double d = vs[k] - us[k];
    if (d > tol) return LeximinOrder::StrictlyPreferred;
    if (d < -tol) return LeximinOrder::StrictlyDispreferred;
  }
  return LeximinOrder::Equivalent;
}

std::vector<double> scaled(std::span<const double> v, double factor) {
  std::vector<double> out(v.begin(), v.end());
  for (double& x : out) x *= factor;
  return out;
}

std::vector<double> shifted(std::span<const double> v, double delta) {
  std::vector<double> out(v.begin(), v.end());
  for (double& x : out) x += delta;
  return out;
}

bool verify_alpha_leximin_approx(std::span<const double> candidate,
                                 std::span<const double> optimal, double alpha,
                                 double tol) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InvariantError("verify_alpha_leximin_approx: alpha out of (0,1]");
  }
  const std::vector<double> target = scaled(optimal, alpha);
  return leximin_compare(candidate, target, tol) != LeximinOrder::StrictlyDispreferred;
}

bool hartman_approx(std::span<const double> candidate,
                    const std::vector<std::vector<double>>& all_vectors, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InvariantError("hartman_approx: alpha out of (0,1]");
  }
  const std::vector<double> cs = sorted_ascending(candidate);
  for (const auto& other : all_vectors) {
    if (other.size() != cs.size()) {
      throw InvariantError("hartman_approx: length mismatch");
    }
    const std::vector<double> os = sorted_ascending(other);
    bool prefix_ok = true;  // os[i] >= cs[i] for all i < k
    for (std::size_t k = 0; k < cs.size() && prefix_ok; ++k) {
      if (os[k] > cs[k] / alpha) {
        return false;  // other is alpha-preferred at position k
      }
      prefix_ok = os[k] >= cs[k];
    }
  }
  return true;
}

bool elementwise_approx(std::span<const double> candidate,
                        std::span<const double> optimal, double alpha) {
  if (candidate.size() != optimal.size()) {
    throw InvariantError("elementwise_approx: length mismatch");
  }
  const std::vector<double> cs = sorted_ascending(candidate);
  const std::vector<double> os = sorted_ascending(optimal);
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs[k] < alpha * os[k]) return false;
  }
  return true;
}

SparseDistribution SparseDistribution::point_mass(StateRecord s) {
  SparseDistribution x(static_cast<int>(s.utilities.size()));
  x.set(s, 1.0);
  return x;
}

SparseDistribution SparseDistribution::degenerate_point_mass(int agents) {
  return point_mass(degenerate_state(agents));
}

void SparseDistribution::set(const StateRecord& s, double probability) {
  if (agents_ == 0) {
    agents_ = static_cast<int>(s.utilities.size());
  }
  if (static_cast<int>(s.utilities.size()) != agents_) {
    throw InvariantError("SparseDistribution: utility vector length mismatch");
  }
  weights_[s.handle] = probability;
  registry_.insert_or_assign(s.handle, s);
}

double SparseDistribution::probability(const std::string& handle) const {
  auto it = weights_.find(handle);
  return it == weights_.end() ? 0.0 : it->second;
}

const StateRecord& SparseDistribution::record(const std::string& handle) const {
  auto it = registry_.find(handle);
  if (it == registry_.end()) {
    throw InvariantError("SparseDistribution: unknown handle " + handle);
  }
  return it->second;
}

bool SparseDistribution::contains(const std::string& handle) const {
  return weights_.count(handle) > 0;
}

double SparseDistribution::total_mass() const {
  double m = 0.0;
  for (const auto& [h, w] : weights_) m += w;
  return m;
}

double SparseDistribution::non_degenerate_mass() const {
  double m = 0.0;
  for (const auto& [h, w] : weights_) {
    if (h != kDegenerateHandle) m += w;
  }
  return m;
}

void SparseDistribution::drop_zero_weights(double threshold) {
  for (auto it = weights_.begin(); it != weights_.end();) {
    if (it->second <= threshold) {
      registry_.erase(it->first);
      it = weights_.erase(it);
    } else {
      ++it;
    }
  }
}

void SparseDistribution::validate(double tau) const {
  for (const auto& [h, w] : weights_) {
    if (w < -tau) {
      throw InvariantError("SparseDistribution: negative probability on " + h);
    }
    auto it = registry_.find(h);
    if (it == registry_.end()) {
      throw InvariantError("SparseDistribution: unresolved handle " + h);
    }
    for (double u : it->second.utilities) {
      if (u < 0.0) {
        throw InvariantError("SparseDistribution: negative utility in state " + h);
      }
    }
  }
  if (std::abs(total_mass() - 1.0) > tau) {
    throw InvariantError("SparseDistribution: probabilities sum to " +
                         std::to_string(total_mass()));
  }
}

std::vector<double> SparseDistribution::expected_utilities() const {
  std::vector<double> e(static_cast<std::size_t>(agents_), 0.0);
  for (const auto& [h, w] : weights_) {
    const StateRecord& s = record(h);
    for (int i = 0; i < agents_; ++i) {
      e[static_cast<std::size_t>(i)] += w * s.utilities[static_cast<std::size_t>(i)];
    }
  }
  return e;
}

std::vector<double> expected_utilities(const SparseDistribution& x) {
  return x.expected_utilities();
}

SparseDistribution downgrade(const SparseDistribution& x, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InvariantError("downgrade: alpha out of (0,1]");
  }
  SparseDistribution out(x.agents());
  double non_deg = 0.0;
  for (const auto& [h, w] : x.weights()) {
    if (h == kDegenerateHandle) continue;
    out.set(x.record(h), alpha * w);
    non_deg += w;
  }
  out.set(degenerate_state(x.agents()), 1.0 - alpha * non_deg);
  return out;
}

SparseDistribution upgrade(const SparseDistribution& x, double alpha, double tau) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InvariantError("upgrade: alpha out of (0,1]");
  }
  const double non_deg = x.non_degenerate_mass();
  if (non_deg > alpha + tau) {
    throw InvariantError("upgrade: non-degenerate mass exceeds alpha");
  }
  SparseDistribution out(x.agents());
  double scaled_mass = 0.0;
  for (const auto& [h, w] : x.weights()) {
    if (h == kDegenerateHandle) continue;
    out.set(x.record(h), w / alpha);
    scaled_mass += w / alpha;
  }
  out.set(degenerate_state(x.agents()), std::max(0.0, 1.0 - scaled_mass));
  return out;
}

}  // namespace leximin
