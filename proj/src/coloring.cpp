#include "apmono/coloring.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace apmono {

Coloring::Coloring(GroupKind kind, std::vector<std::uint8_t> bits) : kind_(kind), bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("coloring must have at least one element");
  for (auto b : bits_)
    if (b > 1) throw std::invalid_argument("coloring bits must be 0 or 1");
}

Coloring Coloring::constant(GroupKind kind, std::size_t n, Color color) {
  return Coloring(kind, std::vector<std::uint8_t>(n, static_cast<std::uint8_t>(color)));
}

std::size_t Coloring::count(Color color) const {
  auto want = static_cast<std::uint8_t>(color);
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), want));
}

std::string Coloring::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

Coloring parse_coloring(std::string_view text, GroupKind kind) {
  std::vector<std::uint8_t> bits;
  for (char ch : text) {
    if (ch == '0' || ch == '1') {
      bits.push_back(static_cast<std::uint8_t>(ch - '0'));
    } else if (ch == '(' || ch == ')' || ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      continue;
    } else {
      throw std::invalid_argument(std::string("illegal character '") + ch + "' in coloring");
    }
  }
  if (bits.empty()) throw std::invalid_argument("empty coloring");
  return Coloring(kind, std::move(bits));
}

Coloring parse_coloring(std::string_view text, GroupKind kind, std::size_t n) {
  Coloring c = parse_coloring(text, kind);
  if (c.size() != n)
    throw std::invalid_argument("coloring has length " + std::to_string(c.size()) + ", expected " +
                                std::to_string(n));
  return c;
}

std::vector<std::uint64_t> pack_bits(std::span<const std::uint8_t> bits) {
  std::vector<std::uint64_t> words((bits.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) words[i / 64] |= std::uint64_t{1} << (i % 64);
  return words;
}

}  // namespace apmono
