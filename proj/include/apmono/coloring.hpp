#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace apmono {

/// Red is color 0, blue is color 1.
enum class Color : std::uint8_t { Red = 0, Blue = 1 };

enum class GroupKind { Cyclic, Interval };

/// A 2-coloring of Z_n (indices 0..n-1) or of [n] (elements 1..n stored at 0..n-1).
class Coloring {
 public:
  Coloring() = default;
  Coloring(GroupKind kind, std::vector<std::uint8_t> bits);

  static Coloring constant(GroupKind kind, std::size_t n, Color color);

  GroupKind kind() const { return kind_; }
  std::size_t size() const { return bits_.size(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  std::size_t count(Color color) const;
  std::size_t red_count() const { return count(Color::Red); }

  /// Same bits viewed over the other group kind.
  Coloring as(GroupKind kind) const { return Coloring(kind, bits_); }

  /// Compact form: a string of '0'/'1'.
  std::string str() const;

  friend bool operator==(const Coloring& a, const Coloring& b) { return a.bits_ == b.bits_ && a.kind_ == b.kind_; }
  /// Lexicographic on the bit sequence.
  friend std::strong_ordering operator<=>(const Coloring& a, const Coloring& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  GroupKind kind_ = GroupKind::Cyclic;
  std::vector<std::uint8_t> bits_;
};

/// Parses '0'/'1' text; '(', ')', ',' and whitespace are ignored.
/// Throws std::invalid_argument on an illegal character or a length other than n.
Coloring parse_coloring(std::string_view text, GroupKind kind, std::size_t n);

/// Same, taking n from the text.
Coloring parse_coloring(std::string_view text, GroupKind kind);

/// Packs bits into little-endian 64-bit words (bit i of the coloring is bit i%64 of word i/64).
std::vector<std::uint64_t> pack_bits(std::span<const std::uint8_t> bits);

}  // namespace apmono
