#include "stick/turn.hpp"

#include <cctype>

#include "stick/graph.hpp"

namespace stick {

Turn parse_turn(std::string_view text) {
  const std::string shown(text);
  std::size_t k = 0;
  std::int64_t whole = 0;
  bool digits = false;
  for (; k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])); ++k) {
    if (whole > 1'000'000) throw ParseError("position out of range: " + shown);
    whole = whole * 10 + (text[k] - '0');
    digits = true;
  }
  std::int64_t frac = 0, scale = Turn::kPerTurn;
  if (k < text.size() && text[k] == '.') {
    for (++k; k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])); ++k) {
      if (scale == 1) throw ParseError("more than 12 decimal places: " + shown);
      scale /= 10;
      frac += (text[k] - '0') * scale;
      digits = true;
    }
  }
  if (!digits || k != text.size()) throw ParseError("bad position '" + shown + "'");
  return {whole * Turn::kPerTurn + frac};
}

std::string to_string(Turn t) {
  std::string out = std::to_string(t.ticks / Turn::kPerTurn);
  std::int64_t frac = t.ticks % Turn::kPerTurn;
  if (frac == 0) return out;
  std::string digits = std::to_string(frac);
  digits.insert(0, 12 - digits.size(), '0');
  while (digits.back() == '0') digits.pop_back();
  return out + "." + digits;
}

}  // namespace stick
