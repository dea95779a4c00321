#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace lazyarith {

/// Rungs of the precision ladder, ordered from fastest to widest.
enum class PrecisionLevel : std::uint8_t { Fixed64, Fixed128, Extended };

constexpr bool is_fixed(PrecisionLevel level) noexcept {
  return level != PrecisionLevel::Extended;
}

/// Machine word size in bits; 0 stands for "unbounded".
constexpr int word_size(PrecisionLevel level) noexcept {
  switch (level) {
    case PrecisionLevel::Fixed64:
      return 64;
    case PrecisionLevel::Fixed128:
      return 128;
    case PrecisionLevel::Extended:
      break;
  }
  return 0;
}

/// The rung above `level`, or nullopt at the top of the ladder.
constexpr std::optional<PrecisionLevel> next_level(PrecisionLevel level) noexcept {
  switch (level) {
    case PrecisionLevel::Fixed64:
      return PrecisionLevel::Fixed128;
    case PrecisionLevel::Fixed128:
      return PrecisionLevel::Extended;
    case PrecisionLevel::Extended:
      break;
  }
  return std::nullopt;
}

constexpr std::string_view level_name(PrecisionLevel level) noexcept {
  switch (level) {
    case PrecisionLevel::Fixed64:
      return "Fixed64";
    case PrecisionLevel::Fixed128:
      return "Fixed128";
    case PrecisionLevel::Extended:
      break;
  }
  return "Extended";
}

constexpr std::optional<PrecisionLevel> parse_level_name(std::string_view name) noexcept {
  for (auto level : {PrecisionLevel::Fixed64, PrecisionLevel::Fixed128, PrecisionLevel::Extended}) {
    if (level_name(level) == name) return level;
  }
  return std::nullopt;
}

}  // namespace lazyarith
