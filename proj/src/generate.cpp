#include "adspace/generate.hpp"

#include <random>

#include "adspace/classify.hpp"
#include "adspace/errors.hpp"

namespace adspace {

namespace {

// Modulo draw: a hair biased but identical everywhere, which matters more
// here than uniformity in the last decimal.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + (std::int64_t)(rng() % (std::uint64_t)(hi - lo + 1));
}

Rational draw_size_uniform(std::mt19937_64& rng) {
  std::int64_t q = draw(rng, 2, 1000);
  std::int64_t p = draw(rng, 1, q);
  return Rational(p) / Rational(q);
}

// band: 0 large, 1 medium, 2 small.
Rational draw_size_band(std::mt19937_64& rng, int band) {
  if (band == 0) {
    std::int64_t q = draw(rng, 2, 1000);
    std::int64_t p = draw(rng, q / 2 + 1, q);
    return Rational(p) / Rational(q);
  }
  if (band == 1) {
    std::int64_t q = draw(rng, 4, 1000);
    std::int64_t p = draw(rng, q / 4 + 1, q / 2);
    return Rational(p) / Rational(q);
  }
  std::int64_t q = draw(rng, 4, 1000);
  std::int64_t p = draw(rng, 1, q / 4);
  return Rational(p) / Rational(q);
}

std::vector<Rational> draw_sizes(std::mt19937_64& rng,
                                 const GenerateParams& params) {
  const int n = params.ad_count;
  std::vector<Rational> sizes(n);
  switch (params.distribution) {
    case SizeDistribution::Uniform:
      for (int i = 0; i < n; ++i) sizes[i] = draw_size_uniform(rng);
      return sizes;
    case SizeDistribution::ThirdsMix: {
      while (true) {
        bool hit[3] = {false, false, false};
        for (int i = 0; i < n; ++i) {
          int band = (int)draw(rng, 0, 2);
          hit[band] = true;
          sizes[i] = draw_size_band(rng, band);
        }
        if (n < 6 || (hit[0] && hit[1] && hit[2])) return sizes;
      }
    }
    case SizeDistribution::PtasSmall: {
      Rational threshold =
          ptas_threshold(params.ptas_epsilon, params.slot_count);
      // Smallest q with 1/q < threshold, i.e. floor(1/threshold) + 1.
      Rational inverse = Rational(1) / threshold;
      BigInt min_q = numerator(inverse) / denominator(inverse) + 1;
      if (min_q > 1000) {
        throw ValidationError(
            -1, "ptas_epsilon",
            "threshold " + to_string(threshold) +
                " leaves no sizes with denominator at most 1000");
      }
      std::int64_t lo = min_q.convert_to<std::int64_t>();
      for (int i = 0; i < n; ++i) {
        sizes[i] = Rational(1) / Rational(draw(rng, lo, 1000));
      }
      return sizes;
    }
  }
  throw ValidationError(-1, "distribution", "unknown size distribution");
}

}  // namespace

Instance generate(const GenerateParams& params) {
  if (params.ad_count < 0) {
    throw ValidationError(-1, "ad_count", "ad count must be nonnegative");
  }
  if (params.slot_count < 1) {
    throw ValidationError(-1, "slot_count", "slot count must be at least 1");
  }

  std::mt19937_64 rng(params.seed);
  Instance instance;
  instance.slot_count = params.slot_count;
  instance.slot_height = 1;
  instance.variant = params.variant;

  std::vector<Rational> sizes = draw_sizes(rng, params);
  for (int i = 0; i < params.ad_count; ++i) {
    Ad ad;
    ad.id = i;
    ad.size = sizes[i];
    ad.release = params.variant == Variant::MaxSpace
                     ? 1
                     : (int)draw(rng, 1, params.slot_count);
    ad.deadline = params.variant == Variant::MaxSpaceRD
                      ? (int)draw(rng, ad.release, params.slot_count)
                      : params.slot_count;
    ad.frequency = (int)draw(rng, 1, ad.deadline - ad.release + 1);
    instance.ads.push_back(std::move(ad));
  }

  validate_instance(instance);
  return instance;
}

}  // namespace adspace
