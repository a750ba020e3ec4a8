#include "adspace/io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "adspace/errors.hpp"

namespace adspace {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

struct Line {
  int number;  // 1-based
  std::vector<Token> tokens;
};

// Comment-stripped, tokenized, non-blank lines.
std::vector<Line> logical_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' &&
             raw[j] != '\r') {
        ++j;
      }
      line.tokens.push_back({std::string(raw.substr(i, j - i)), (int)i + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

int parse_int(const Line& line, const Token& token, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(
      token.text.data(), token.text.data() + token.text.size(), value);
  if (ec != std::errc() || ptr != token.text.data() + token.text.size()) {
    throw ParseError(line.number, token.column,
                     std::string("expected an integer ") + what + ", got \"" +
                         token.text + "\"");
  }
  return value;
}

Rational parse_rational_token(const Line& line, const Token& token,
                              const char* what) {
  try {
    return parse_rational(token.text);
  } catch (const std::invalid_argument&) {
    throw ParseError(line.number, token.column,
                     std::string("expected a rational ") + what +
                         " (p/q or integer), got \"" + token.text + "\"");
  }
}

const Line& expect_line(const std::vector<Line>& lines, std::size_t index,
                        const char* what) {
  if (index >= lines.size()) {
    int last = lines.empty() ? 1 : lines.back().number;
    throw ParseError(last, 1,
                     std::string("unexpected end of input, expected ") + what);
  }
  return lines[index];
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::vector<Line> lines = logical_lines(text);
  std::size_t at = 0;

  const Line& header = expect_line(lines, at++, "a header line");
  if (header.tokens.size() != 2) {
    throw ParseError(header.number, header.tokens[0].column,
                     "header must be \"<variant> <version>\"");
  }
  auto variant = variant_from_name(header.tokens[0].text);
  if (!variant) {
    throw ParseError(header.number, header.tokens[0].column,
                     "unknown variant \"" + header.tokens[0].text +
                         "\", expected maxspace, maxspace-r or maxspace-rd");
  }
  if (header.tokens[1].text != "1") {
    throw ParseError(header.number, header.tokens[1].column,
                     "unsupported format version \"" + header.tokens[1].text +
                         "\"");
  }

  auto keyed_line = [&](const char* key) -> const Line& {
    const Line& line = expect_line(lines, at++, key);
    if (line.tokens.size() != 2 || line.tokens[0].text != key) {
      throw ParseError(line.number, line.tokens[0].column,
                       std::string("expected \"") + key + " <value>\"");
    }
    return line;
  };

  Instance instance;
  instance.variant = *variant;
  {
    const Line& line = keyed_line("K");
    instance.slot_count = parse_int(line, line.tokens[1], "slot count");
  }
  {
    const Line& line = keyed_line("L");
    instance.slot_height =
        parse_rational_token(line, line.tokens[1], "slot height");
    if (instance.slot_height <= 0) {
      throw ParseError(line.number, line.tokens[1].column,
                       "slot height must be positive");
    }
  }
  int ad_count = 0;
  {
    const Line& line = keyed_line("ads");
    ad_count = parse_int(line, line.tokens[1], "ad count");
    if (ad_count < 0) {
      throw ParseError(line.number, line.tokens[1].column,
                       "ad count must be nonnegative");
    }
  }

  for (int i = 0; i < ad_count; ++i) {
    const Line& line = expect_line(lines, at++, "an ad line");
    Ad ad;
    ad.id = parse_int(line, line.tokens[0], "ad id");
    if (ad.id != i) {
      throw ParseError(line.number, line.tokens[0].column,
                       "ad id " + std::to_string(ad.id) +
                           " out of order, expected " + std::to_string(i));
    }

    std::optional<Rational> size;
    std::optional<int> frequency, release, deadline;
    for (std::size_t f = 1; f < line.tokens.size(); ++f) {
      const Token& token = line.tokens[f];
      auto eq = token.text.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw ParseError(line.number, token.column,
                         "expected a key=value field, got \"" + token.text +
                             "\"");
      }
      std::string key = token.text.substr(0, eq);
      Token value{token.text.substr(eq + 1), token.column + (int)eq + 1};
      auto reject_duplicate = [&](bool present) {
        if (present) {
          throw ParseError(line.number, token.column,
                           "duplicate field \"" + key + "\"");
        }
      };
      if (key == "s") {
        reject_duplicate(size.has_value());
        size = parse_rational_token(line, value, "size");
      } else if (key == "w") {
        reject_duplicate(frequency.has_value());
        frequency = parse_int(line, value, "frequency");
      } else if (key == "r") {
        if (instance.variant != Variant::MaxSpaceRD &&
            instance.variant != Variant::MaxSpaceR) {
          throw ParseError(line.number, token.column,
                           "field r= is not allowed for maxspace (release is "
                           "implied 1)");
        }
        reject_duplicate(release.has_value());
        release = parse_int(line, value, "release");
      } else if (key == "d") {
        if (instance.variant != Variant::MaxSpaceRD) {
          throw ParseError(line.number, token.column,
                           "field d= is only allowed for maxspace-rd "
                           "(deadline is implied K)");
        }
        reject_duplicate(deadline.has_value());
        deadline = parse_int(line, value, "deadline");
      } else {
        throw ParseError(line.number, token.column,
                         "unknown field \"" + key + "\"");
      }
    }

    if (!size) {
      throw ParseError(line.number, line.tokens[0].column,
                       "ad line is missing s=");
    }
    if (!frequency) {
      throw ParseError(line.number, line.tokens[0].column,
                       "ad line is missing w=");
    }
    if (instance.variant != Variant::MaxSpace && !release) {
      throw ParseError(line.number, line.tokens[0].column,
                       "ad line is missing r=");
    }
    if (instance.variant == Variant::MaxSpaceRD && !deadline) {
      throw ParseError(line.number, line.tokens[0].column,
                       "ad line is missing d=");
    }

    ad.size = *size / instance.slot_height;
    ad.frequency = *frequency;
    ad.release = release.value_or(1);
    ad.deadline = deadline.value_or(instance.slot_count);
    instance.ads.push_back(std::move(ad));
  }

  if (at != lines.size()) {
    const Line& extra = lines[at];
    throw ParseError(extra.number, extra.tokens[0].column,
                     "unexpected content after the last ad line");
  }

  validate_instance(instance);
  return instance;
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  out << variant_name(instance.variant) << " 1\n";
  out << "K " << instance.slot_count << "\n";
  out << "L " << to_string(instance.slot_height) << "\n";
  out << "ads " << instance.ads.size() << "\n";
  for (const Ad& ad : instance.ads) {
    out << ad.id << " s=" << to_string(ad.size * instance.slot_height)
        << " w=" << ad.frequency;
    if (instance.variant != Variant::MaxSpace) out << " r=" << ad.release;
    if (instance.variant == Variant::MaxSpaceRD) out << " d=" << ad.deadline;
    out << "\n";
  }
  return out.str();
}

Schedule parse_schedule(std::string_view text, const Instance& instance) {
  std::vector<Line> lines = logical_lines(text);
  Schedule schedule(instance.slot_count);
  std::size_t at = 0;
  for (int j = 1; j <= instance.slot_count; ++j) {
    const Line& line = expect_line(lines, at++, "a slot line");
    if (line.tokens[0].text != "slot" || line.tokens.size() < 2) {
      throw ParseError(line.number, line.tokens[0].column,
                       "expected \"slot <index>: <ids>\"");
    }
    std::string index_text = line.tokens[1].text;
    if (index_text.empty() || index_text.back() != ':') {
      throw ParseError(line.number, line.tokens[1].column,
                       "slot index must end with ':'");
    }
    Token index_token{index_text.substr(0, index_text.size() - 1),
                      line.tokens[1].column};
    int index = parse_int(line, index_token, "slot index");
    if (index != j) {
      throw ParseError(line.number, line.tokens[1].column,
                       "slot " + std::to_string(index) +
                           " out of order, expected " + std::to_string(j));
    }
    for (std::size_t f = 2; f < line.tokens.size(); ++f) {
      int id = parse_int(line, line.tokens[f], "ad id");
      if (id < 0) {
        throw ParseError(line.number, line.tokens[f].column,
                         "ad ids are nonnegative");
      }
      schedule.slots[j - 1].push_back(id);
    }
  }
  if (at < lines.size()) {
    const Line& line = lines[at];
    if (line.tokens[0].text == "value" && line.tokens.size() == 2) {
      parse_rational_token(line, line.tokens[1], "value");
      ++at;
    }
  }
  if (at != lines.size()) {
    const Line& extra = lines[at];
    throw ParseError(extra.number, extra.tokens[0].column,
                     "unexpected content after the schedule");
  }
  return schedule;
}

std::string format_schedule(const Instance& instance,
                            const Schedule& schedule) {
  std::ostringstream out;
  for (int j = 1; j <= schedule.slot_count(); ++j) {
    out << "slot " << j << ":";
    for (int id : schedule.slots[j - 1]) out << " " << id;
    out << "\n";
  }
  out << "value " << to_string(total_fullness(instance, schedule)) << "\n";
  return out.str();
}

}  // namespace adspace
