#include "adspace/ptas.hpp"

#include <algorithm>
#include <bit>

#include "adspace/classify.hpp"
#include "adspace/errors.hpp"
#include "adspace/greedy.hpp"

namespace adspace {

namespace {

// 1/epsilon as a machine integer; the cap values range over 0..1/epsilon.
std::int64_t inverse_epsilon(const Rational& epsilon) {
  if (epsilon <= 0) {
    throw ValidationError(-1, "epsilon", "epsilon must be positive");
  }
  Rational inverse = Rational(1) / epsilon;
  if (denominator(inverse) != 1) {
    throw ValidationError(-1, "epsilon",
                          "1/epsilon must be an integer, got " +
                              to_string(inverse));
  }
  BigInt n = numerator(inverse);
  if (n > 1'000'000'000) {
    throw BudgetExceededError("1/epsilon = " + n.str() +
                              " is too large to enumerate cap values");
  }
  return n.convert_to<std::int64_t>();
}

}  // namespace

int type_cardinality(TypeMask type) { return std::popcount(type); }

bool type_contains(TypeMask type, int slot) {
  return (type >> (slot - 1)) & 1u;
}

bool type_compatible(const Ad& ad, TypeMask type) {
  if (type_cardinality(type) != ad.frequency) return false;
  // All slots inside [release, deadline].
  TypeMask window = ((TypeMask(1) << ad.deadline) - 1) &
                    ~((TypeMask(1) << (ad.release - 1)) - 1);
  return (type & ~window) == 0;
}

std::vector<int> type_slots(TypeMask type, int slot_count) {
  std::vector<int> slots;
  for (int j = 1; j <= slot_count; ++j) {
    if (type_contains(type, j)) slots.push_back(j);
  }
  return slots;
}

Schedule configuration_schedule(const Configuration& config, int slot_count) {
  Schedule schedule(slot_count);
  for (const auto& [id, type] : config.placements) {
    for (int j : type_slots(type, slot_count)) {
      schedule.slots[j - 1].push_back(id);
    }
  }
  return schedule;
}

std::vector<Rational> residual_capacities(const Configuration& config) {
  std::vector<Rational> residual(config.slot_load.size());
  for (std::size_t j = 0; j < residual.size(); ++j) {
    residual[j] = 1 - config.slot_load[j];
  }
  return residual;
}

void Budget::charge(const char* what) {
  if (++used > limit) {
    throw BudgetExceededError(std::string(what) + " enumeration exceeded " +
                              std::to_string(limit) + " steps");
  }
}

void for_each_configuration(
    const std::vector<Ad>& wide_ads, int slot_count, Budget& budget,
    const std::function<void(const Configuration&)>& emit) {
  const int n = (int)wide_ads.size();
  std::vector<std::vector<TypeMask>> compatible(n);
  for (int i = 0; i < n; ++i) {
    for (TypeMask t = 0; t < (TypeMask(1) << slot_count); ++t) {
      if (type_compatible(wide_ads[i], t)) compatible[i].push_back(t);
    }
  }

  Configuration config;
  config.slot_load.assign(slot_count, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      budget.charge("configuration");
      emit(config);
      return;
    }
    self(self, i + 1);  // unassigned first
    for (TypeMask t : compatible[i]) {
      bool fits = true;
      for (int j = 1; j <= slot_count; ++j) {
        if (type_contains(t, j) &&
            config.slot_load[j - 1] + wide_ads[i].size > 1) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      for (int j = 1; j <= slot_count; ++j) {
        if (type_contains(t, j)) config.slot_load[j - 1] += wide_ads[i].size;
      }
      config.placements.emplace_back(wide_ads[i].id, t);
      self(self, i + 1);
      config.placements.pop_back();
      for (int j = 1; j <= slot_count; ++j) {
        if (type_contains(t, j)) config.slot_load[j - 1] -= wide_ads[i].size;
      }
    }
  };
  rec(rec, 0);
}

std::vector<Configuration> enumerate_configurations(
    const std::vector<Ad>& wide_ads, int slot_count, std::uint64_t budget) {
  Budget counter(budget);
  std::vector<Configuration> out;
  for_each_configuration(wide_ads, slot_count, counter,
                         [&](const Configuration& c) { out.push_back(c); });
  return out;
}

void for_each_capacity_vector(
    const std::vector<Rational>& residual, const Rational& epsilon,
    const std::vector<char>& usable, Budget& budget,
    const std::function<void(const CapacityVector&)>& emit) {
  const int slot_count = (int)residual.size();
  const std::size_t type_count = std::size_t(1) << slot_count;
  if (usable.size() != type_count) {
    throw ValidationError(-1, "usable",
                          "usable must have one flag per type mask");
  }
  const std::int64_t max_count = inverse_epsilon(epsilon);

  CapacityVector caps;
  caps.count.assign(type_count, 0);
  std::vector<Rational> used(slot_count, 0);
  auto rec = [&](auto&& self, std::size_t t) -> void {
    if (t == type_count) {
      budget.charge("capacity vector");
      emit(caps);
      return;
    }
    if (!usable[t]) {
      caps.count[t] = 0;
      self(self, t + 1);
      return;
    }
    std::vector<int> slots = type_slots((TypeMask)t, slot_count);
    for (std::int64_t c = 0; c <= max_count; ++c) {
      caps.count[t] = (int)c;
      Rational share = epsilon * c;
      bool fits = true;
      for (int j : slots) {
        if (used[j - 1] + share > residual[j - 1]) {
          fits = false;
          break;
        }
      }
      if (!fits) break;  // larger counts only use more
      for (int j : slots) used[j - 1] += share;
      self(self, t + 1);
      for (int j : slots) used[j - 1] -= share;
    }
    caps.count[t] = 0;
  };
  rec(rec, 0);
}

std::vector<CapacityVector> enumerate_capacity_vectors(
    const std::vector<Rational>& residual, const Rational& epsilon,
    std::uint64_t budget) {
  Budget counter(budget);
  std::vector<char> usable(std::size_t(1) << residual.size(), 1);
  std::vector<CapacityVector> out;
  for_each_capacity_vector(residual, epsilon, usable, counter,
                           [&](const CapacityVector& c) { out.push_back(c); });
  return out;
}

SmallFlowNetwork build_flow_network(const std::vector<Ad>& narrow_ads,
                                    const CapacityVector& caps,
                                    const Rational& epsilon, int slot_count,
                                    const FlowOptions& options) {
  const std::size_t type_count = std::size_t(1) << slot_count;
  if (caps.count.size() != type_count) {
    throw ValidationError(-1, "caps",
                          "capacity vector must have one entry per type mask");
  }

  SmallFlowNetwork net;
  net.slot_count = slot_count;
  const int n = (int)narrow_ads.size();
  // Node layout: 0 source, 1 sink, 2..2+n-1 ads, then one node per type.
  net.network.node_count = 2 + n + (int)type_count;
  net.network.source = 0;
  net.network.sink = 1;

  Rational unbounded = 1;  // larger than any ad's total mass
  for (const Ad& ad : narrow_ads) unbounded += ad.size * ad.frequency;

  for (int i = 0; i < n; ++i) {
    const Ad& ad = narrow_ads[i];
    net.ad_ids.push_back(ad.id);
    net.network.edges.push_back({0, 2 + i, ad.size * ad.frequency});
    net.edge_labels.push_back(std::nullopt);
  }
  for (int i = 0; i < n; ++i) {
    for (TypeMask t = 0; t < type_count; ++t) {
      if (!type_compatible(narrow_ads[i], t)) continue;
      net.network.edges.push_back({2 + i, 2 + n + (int)t, unbounded});
      net.edge_labels.push_back(std::make_pair(narrow_ads[i].id, t));
    }
  }
  for (TypeMask t = 0; t < type_count; ++t) {
    Rational cap = Rational(type_cardinality(t)) * caps.count[t];
    if (!options.sink_capacity_no_eps) cap *= epsilon;
    net.network.edges.push_back({2 + n + (int)t, 1, cap});
    net.edge_labels.push_back(std::nullopt);
  }
  return net;
}

Rational FlowAssignment::value() const {
  Rational sum = 0;
  for (const auto& [key, amount] : flow) sum += amount;
  return sum;
}

std::vector<TypeMask> FlowAssignment::support(int ad_id) const {
  std::vector<TypeMask> types;
  for (const auto& [key, amount] : flow) {
    if (key.first == ad_id && amount > 0) types.push_back(key.second);
  }
  return types;
}

FlowAssignment max_flow(const SmallFlowNetwork& network) {
  MaxFlowResult raw = max_flow(network.network);
  FlowAssignment assignment;
  for (std::size_t e = 0; e < network.network.edges.size(); ++e) {
    if (network.edge_labels[e] && raw.flow[e] > 0) {
      assignment.flow[*network.edge_labels[e]] = raw.flow[e];
    }
  }
  return assignment;
}

FlowAssignment rounding(const FlowAssignment& fractional,
                        const std::vector<Ad>& narrow_ads) {
  std::map<int, const Ad*> ads_by_id;
  for (const Ad& ad : narrow_ads) ads_by_id.emplace(ad.id, &ad);

  // Group ads by support; the key's bit t stands for type mask t, so map
  // order is increasing support-set order.
  std::map<BigInt, std::vector<int>> groups;
  std::map<int, std::vector<TypeMask>> supports;
  for (const auto& [key, amount] : fractional.flow) {
    if (amount <= 0) continue;
    supports[key.first].push_back(key.second);
  }
  for (const auto& [id, types] : supports) {
    BigInt group_key = 0;
    for (TypeMask t : types) boost::multiprecision::bit_set(group_key, t);
    groups[group_key].push_back(id);  // ids ascend within each group
  }

  FlowAssignment integral;
  for (const auto& [group_key, members] : groups) {
    std::vector<int> remaining = members;
    // Types of this group's support, ascending.
    std::vector<TypeMask> types = supports.at(members.front());
    for (TypeMask t : types) {
      Rational group_mass = 0;
      for (int id : remaining) {
        auto it = fractional.flow.find({id, t});
        if (it != fractional.flow.end()) group_mass += it->second;
      }
      Rational assigned_sizes = 0;  // total size of ads snapped onto t
      std::vector<int> still_remaining;
      for (int id : remaining) {
        auto ad_it = ads_by_id.find(id);
        if (ad_it == ads_by_id.end()) {
          throw UnknownAdError("rounding: flow references unknown ad id " +
                               std::to_string(id));
        }
        const Ad& ad = *ad_it->second;
        if (Rational(type_cardinality(t)) * assigned_sizes +
                ad.size * ad.frequency <=
            group_mass) {
          assigned_sizes += ad.size;
          integral.flow[{id, t}] = ad.size * ad.frequency;
        } else {
          still_remaining.push_back(id);
        }
      }
      remaining = std::move(still_remaining);
    }
  }
  return integral;
}

SolveSmallResult solve_small(const std::vector<Ad>& narrow_ads,
                             const CapacityVector& caps,
                             const Rational& epsilon, int slot_count,
                             const FlowOptions& options) {
  SmallFlowNetwork net =
      build_flow_network(narrow_ads, caps, epsilon, slot_count, options);
  SolveSmallResult result;
  result.fractional = max_flow(net);
  result.integral = rounding(result.fractional, narrow_ads);
  result.fragment = Schedule(slot_count);
  for (const auto& [key, amount] : result.integral.flow) {
    for (int j : type_slots(key.second, slot_count)) {
      result.fragment.slots[j - 1].push_back(key.first);
    }
  }
  result.value = result.integral.value();
  return result;
}

PtasResult ptas(const Instance& instance, const PtasOptions& options) {
  const int k = instance.slot_count;
  if (options.eps_prime <= 0) {
    throw ValidationError(-1, "eps_prime", "eps_prime must be positive");
  }

  PtasResult result;

  // Internal accuracy: eps_prime / (6 * 2^K * K), snapped down to a unit
  // fraction so cap values stay integral.
  Rational eps = options.internal_eps_override
                     ? *options.internal_eps_override
                     : options.eps_prime /
                           Rational(BigInt(6) * (BigInt(1) << k) * k);
  if (eps <= 0) {
    throw ValidationError(-1, "internal_eps", "epsilon must be positive");
  }
  eps = Rational(1) / Rational(rational_ceil(Rational(1) / eps));
  result.internal_eps = eps;

  FirstFitResult baseline = first_fit(instance);
  result.schedule = baseline.schedule;
  result.value = total_fullness(instance, baseline.schedule);
  if (baseline.complete) {
    result.first_fit_complete = true;
    return result;
  }

  PtasPartition parts = classify_ptas(instance.ads, eps, k);

  const std::size_t type_count = std::size_t(1) << k;
  std::vector<char> usable(type_count, 0);
  for (TypeMask t = 1; t < type_count; ++t) {
    for (const Ad& ad : parts.small) {
      if (type_compatible(ad, t)) {
        usable[t] = 1;
        break;
      }
    }
  }

  Budget budget(options.budget);
  try {
    for_each_configuration(
        parts.large, k, budget, [&](const Configuration& config) {
          ++result.configurations;
          Rational config_value = 0;
          for (const Rational& load : config.slot_load) config_value += load;
          std::vector<Rational> residual = residual_capacities(config);
          for_each_capacity_vector(
              residual, eps, usable, budget, [&](const CapacityVector& caps) {
                ++result.capacity_vectors;
                SolveSmallResult narrow =
                    solve_small(parts.small, caps, eps, k, options.flow);
                Rational candidate_value = config_value + narrow.value;
                if (candidate_value > result.value) {
                  Schedule merged = configuration_schedule(config, k);
                  for (int j = 0; j < k; ++j) {
                    for (int id : narrow.fragment.slots[j]) {
                      merged.slots[j].push_back(id);
                    }
                  }
                  result.schedule = std::move(merged);
                  result.value = candidate_value;
                }
              });
        });
  } catch (const BudgetExceededError&) {
    result.guarantee_void = true;
  }
  return result;
}

}  // namespace adspace
