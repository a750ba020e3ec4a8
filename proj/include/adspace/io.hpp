#pragma once

#include <string>
#include <string_view>

#include "adspace/instance.hpp"
#include "adspace/schedule.hpp"

namespace adspace {

/// Parses the line-oriented instance format:
///
///   maxspace-rd 1
///   K 5
///   L 1
///   ads 3
///   0 s=1/3 w=2 r=1 d=4
///   ...
///
/// `#` starts a comment anywhere in a line; blank lines are skipped. The
/// header names the variant and format version, then slot count, slot
/// height, and the ad count. Each ad line carries its id (which must equal
/// its position), a rational size in raw units, a frequency, and the window
/// fields the variant allows: maxspace forbids r= and d= (implied 1 and K),
/// maxspace-r forbids d= (implied K), maxspace-rd requires both. Sizes are
/// normalized by L on the way in. Throws ParseError for malformed text and
/// ValidationError for well-formed text violating instance constraints.
Instance parse_instance(std::string_view text);

/// Canonical text form; parse_instance(serialize_instance(x)) reproduces x
/// exactly, and serializing a parsed canonical file reproduces its bytes.
std::string serialize_instance(const Instance& instance);

/// Parses the schedule format emitted by format_schedule: one
/// "slot <j>: <id> <id> ..." line per slot in ascending order, optionally
/// followed by a "value <rational>" line, which is ignored (verification
/// recomputes it). Comments and blank lines as in parse_instance.
Schedule parse_schedule(std::string_view text, const Instance& instance);

/// "slot <j>: ..." lines followed by "value <total fullness>".
std::string format_schedule(const Instance& instance,
                            const Schedule& schedule);

}  // namespace adspace
