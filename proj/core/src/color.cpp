#include "tjoin/color.hpp"

#include <array>

namespace tjoin {

namespace {

constexpr std::array<std::string_view, kColorCount> kNames = {"alpha", "beta",    "gamma",
                                                              "delta", "epsilon", "phi"};
constexpr std::array<std::string_view, kColorCount> kGreek = {"α", "β", "γ", "δ", "ε", "φ"};

}  // namespace

std::string_view color_name(Color c) { return kNames[index(c)]; }

std::optional<Color> parse_color(std::string_view text) {
  for (int i = 0; i < kColorCount; ++i)
    if (text == kNames[i] || text == kGreek[i]) return color_at(i);
  if (text == "ϕ" || text == "varphi") return Color::phi;
  if (text == "varepsilon" || text == "ϵ") return Color::epsilon;
  if (text.size() == 1 && text[0] >= '0' && text[0] < '0' + kColorCount)
    return color_at(text[0] - '0');
  return std::nullopt;
}

}  // namespace tjoin
