#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string_view>
#include <vector>

namespace tjoin {

inline constexpr int kColorCount = 6;

/// The six edge colours, written alpha..phi as in the usual Greek naming.
enum class Color : std::uint8_t { alpha, beta, gamma, delta, epsilon, phi };

constexpr int index(Color c) { return static_cast<int>(c); }
constexpr Color color_at(int i) { return static_cast<Color>(i); }

std::string_view color_name(Color c);

/// Accepts "alpha".."phi", the Greek letters, and the digits 0-5.
std::optional<Color> parse_color(std::string_view text);

/// Subset of the six colours.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint8_t bits) : bits_(bits & 0x3f) {}
  constexpr ColorSet(std::initializer_list<Color> colors) {
    for (Color c : colors) insert(c);
  }

  static constexpr ColorSet all() { return ColorSet(0x3f); }

  constexpr bool contains(Color c) const { return (bits_ >> index(c)) & 1U; }
  constexpr void insert(Color c) { bits_ |= static_cast<std::uint8_t>(1U << index(c)); }
  constexpr void erase(Color c) { bits_ &= static_cast<std::uint8_t>(~(1U << index(c))); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }

  /// Smallest member; undefined on an empty set.
  constexpr Color first() const { return color_at(std::countr_zero(bits_)); }

  constexpr ColorSet operator&(ColorSet o) const { return ColorSet(bits_ & o.bits_); }
  constexpr ColorSet operator|(ColorSet o) const { return ColorSet(bits_ | o.bits_); }
  constexpr ColorSet operator~() const { return ColorSet(static_cast<std::uint8_t>(~bits_)); }
  constexpr bool operator==(const ColorSet&) const = default;

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (int i = 0; i < kColorCount; ++i)
      if ((bits_ >> i) & 1U) f(color_at(i));
  }

 private:
  std::uint8_t bits_ = 0;
};

/// Total colouring indexed by edge id.
using EdgeColoring = std::vector<Color>;

}  // namespace tjoin
