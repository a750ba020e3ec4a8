#include "adspace/instance.hpp"

#include "adspace/errors.hpp"

namespace adspace {

std::string_view variant_name(Variant variant) {
  switch (variant) {
    case Variant::MaxSpace:
      return "maxspace";
    case Variant::MaxSpaceR:
      return "maxspace-r";
    case Variant::MaxSpaceRD:
      return "maxspace-rd";
  }
  return "";
}

std::optional<Variant> variant_from_name(std::string_view name) {
  if (name == "maxspace") return Variant::MaxSpace;
  if (name == "maxspace-r") return Variant::MaxSpaceR;
  if (name == "maxspace-rd") return Variant::MaxSpaceRD;
  return std::nullopt;
}

void validate_instance(const Instance& instance) {
  auto fail = [](int ad_id, const char* constraint, std::string message) {
    throw ValidationError(ad_id, constraint, std::move(message));
  };

  if (instance.slot_count < 1) {
    fail(-1, "slot_count", "slot count must be at least 1");
  }
  if (instance.slot_height <= 0) {
    fail(-1, "slot_height", "slot height must be positive");
  }

  const int k = instance.slot_count;
  for (std::size_t i = 0; i < instance.ads.size(); ++i) {
    const Ad& ad = instance.ads[i];
    const std::string tag = "ad " + std::to_string(ad.id);
    if (ad.id != (int)i) {
      fail(ad.id, "id",
           tag + ": id must equal its position " + std::to_string(i));
    }
    if (ad.size <= 0) fail(ad.id, "size", tag + ": size must be positive");
    if (ad.size > 1) {
      fail(ad.id, "size", tag + ": size exceeds the slot height");
    }
    if (ad.release < 1 || ad.release > k) {
      fail(ad.id, "release", tag + ": release outside [1, K]");
    }
    if (ad.deadline < ad.release || ad.deadline > k) {
      fail(ad.id, "deadline", tag + ": deadline outside [release, K]");
    }
    if (ad.frequency < 1) {
      fail(ad.id, "frequency", tag + ": frequency must be at least 1");
    }
    if (ad.frequency > ad.deadline - ad.release + 1) {
      fail(ad.id, "frequency",
           tag + ": frequency exceeds the admissible window");
    }
    switch (instance.variant) {
      case Variant::MaxSpace:
        if (ad.release != 1) {
          fail(ad.id, "release", tag + ": release must be 1 for maxspace");
        }
        if (ad.deadline != k) {
          fail(ad.id, "deadline", tag + ": deadline must be K for maxspace");
        }
        break;
      case Variant::MaxSpaceR:
        if (ad.deadline != k) {
          fail(ad.id, "deadline", tag + ": deadline must be K for maxspace-r");
        }
        break;
      case Variant::MaxSpaceRD:
        break;
    }
  }
}

}  // namespace adspace
