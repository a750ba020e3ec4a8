#include "adspace/dp_large.hpp"

#include <algorithm>
#include <numeric>

#include "adspace/errors.hpp"

namespace adspace {

DpResult dp_large(const std::vector<Ad>& large_ads, int slot_count,
                  const DpOptions& options) {
  const int k = slot_count;
  const Rational half(1, 2);
  for (const Ad& ad : large_ads) {
    if (ad.size <= half) {
      throw ClassViolationError("dp_large: ad " + std::to_string(ad.id) +
                                " has size " + to_string(ad.size) +
                                ", needs size > 1/2");
    }
    if (!options.allow_deadlines && ad.deadline != k) {
      throw ClassViolationError(
          "dp_large: ad " + std::to_string(ad.id) + " has deadline " +
          std::to_string(ad.deadline) + " before the last slot " +
          std::to_string(k) + "; set allow_deadlines to accept it");
    }
  }

  std::vector<int> order(large_ads.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Ad& x = large_ads[a];
    const Ad& y = large_ads[b];
    return x.release != y.release ? x.release < y.release : x.id < y.id;
  });

  const int n = (int)order.size();
  std::vector<std::vector<Rational>> value(n + 1,
                                           std::vector<Rational>(k + 1, 0));
  std::vector<std::vector<char>> take(n + 1, std::vector<char>(k + 1, 0));

  for (int i = 1; i <= n; ++i) {
    const Ad& ad = large_ads[order[i - 1]];
    const int earliest_end = ad.release + ad.frequency - 1;
    const Rational gain = ad.size * ad.frequency;
    for (int j = 1; j <= k; ++j) {
      value[i][j] = value[i - 1][j];
      const int end = options.allow_deadlines ? std::min(j, ad.deadline) : j;
      if (end >= earliest_end) {
        Rational taken = value[i - 1][end - ad.frequency] + gain;
        if (taken > value[i][j]) {
          value[i][j] = taken;
          take[i][j] = 1;
        }
      }
    }
  }

  Schedule schedule(k);
  int j = k;
  for (int i = n; i >= 1 && j > 0; --i) {
    // Slide to the first slot prefix achieving this value so taken ads land
    // in their earliest valid ending position.
    while (j > 0 && value[i][j - 1] == value[i][j]) --j;
    if (j == 0) break;
    if (!take[i][j]) continue;
    const Ad& ad = large_ads[order[i - 1]];
    const int end = options.allow_deadlines ? std::min(j, ad.deadline) : j;
    for (int slot = end - ad.frequency + 1; slot <= end; ++slot) {
      schedule.slots[slot - 1].push_back(ad.id);
    }
    j = end - ad.frequency;
  }

  return {std::move(schedule), value[n][k]};
}

}  // namespace adspace
