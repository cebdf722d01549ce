#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace stick {

/// A position on a circle in exact fixed point: one full turn is
/// `Turn::kPerTurn` ticks. Decimal input with at most 12 fractional digits
/// converts without rounding.
struct Turn {
  static constexpr std::int64_t kPerTurn = 1'000'000'000'000;
  std::int64_t ticks = 0;

  static constexpr Turn fraction(std::int64_t num, std::int64_t den) { return {kPerTurn / den * num}; }

  friend bool operator==(Turn, Turn) = default;
  friend auto operator<=>(Turn, Turn) = default;
};

/// "0.25" -> a quarter turn. Throws ParseError on anything but a plain
/// non-negative decimal.
Turn parse_turn(std::string_view text);

/// Shortest decimal that parses back to the same value.
std::string to_string(Turn t);

}  // namespace stick
