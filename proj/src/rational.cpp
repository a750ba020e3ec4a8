#include "adspace/rational.hpp"

#include <stdexcept>

namespace adspace {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto fail = [&](const char* why) {
    throw std::invalid_argument(std::string(why) + ": \"" + std::string(text) +
                                "\"");
  };

  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }

  std::string_view num = body;
  std::string_view den;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
    if (!all_digits(den)) fail("expected a positive integer denominator");
  }
  if (!all_digits(num)) {
    fail("expected an integer or p/q rational (decimals are not accepted)");
  }

  BigInt n{std::string(num)};
  BigInt d = den.empty() ? BigInt(1) : BigInt(std::string(den));
  if (d == 0) fail("denominator must be nonzero");
  if (negative) n = -n;
  // Division canonicalizes to lowest terms with a positive denominator.
  return Rational(n) / Rational(d);
}

std::string to_string(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

std::string to_decimal_string(const Rational& value, int places) {
  BigInt num = numerator(value);
  BigInt den = denominator(value);
  bool negative = num < 0;
  if (negative) num = -num;

  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;

  BigInt scaled = num * scale;
  BigInt whole = scaled / den;
  BigInt rem = scaled % den;
  if (rem * 2 >= den) ++whole;

  std::string digits = whole.str();
  if ((int)digits.size() <= places) {
    digits.insert(0, places + 1 - digits.size(), '0');
  }
  std::string out = negative && whole != 0 ? "-" : "";
  out += digits.substr(0, digits.size() - places);
  if (places > 0) {
    out += '.';
    out += digits.substr(digits.size() - places);
  }
  return out;
}

BigInt rational_ceil(const Rational& value) {
  BigInt num = numerator(value);
  BigInt den = denominator(value);  // always positive
  BigInt q = num / den;             // truncates toward zero
  if (num > q * den) ++q;
  return q;
}

}  // namespace adspace
