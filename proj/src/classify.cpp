#include "adspace/classify.hpp"

#include "adspace/errors.hpp"

namespace adspace {

ThirdsPartition classify_thirds(const std::vector<Ad>& ads) {
  const Rational half(1, 2);
  const Rational quarter(1, 4);
  ThirdsPartition parts;
  for (const Ad& ad : ads) {
    if (ad.size > half) {
      parts.large.push_back(ad);
    } else if (ad.size > quarter) {
      parts.medium.push_back(ad);
    } else {
      parts.small.push_back(ad);
    }
  }
  return parts;
}

Rational ptas_threshold(const Rational& epsilon, int slot_count) {
  if (epsilon <= 0) {
    throw ValidationError(-1, "epsilon", "epsilon must be positive");
  }
  if (slot_count < 1) {
    throw ValidationError(-1, "slot_count", "slot count must be at least 1");
  }
  // 2^(2^K) has 2^K + 1 bits; past K = 20 that is over a megabit per value,
  // which no caller legitimately needs.
  if (slot_count > 20) {
    throw OverflowGuardError("slot count " + std::to_string(slot_count) +
                             " makes 2^(2^K) unmanageably wide");
  }
  BigInt tower = BigInt(1) << (std::size_t(1) << slot_count);
  BigInt denom = tower * (BigInt(1) << slot_count) * slot_count;
  return epsilon / Rational(denom);
}

PtasPartition classify_ptas(const std::vector<Ad>& ads,
                            const Rational& epsilon, int slot_count) {
  const Rational threshold = ptas_threshold(epsilon, slot_count);
  PtasPartition parts;
  for (const Ad& ad : ads) {
    if (ad.size >= threshold) {
      parts.large.push_back(ad);
    } else {
      parts.small.push_back(ad);
    }
  }
  return parts;
}

}  // namespace adspace
