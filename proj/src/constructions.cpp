#include "apmono/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "apmono/apcount.hpp"

namespace apmono {
namespace {

constexpr std::string_view kB20 = "11101101110001001000";
constexpr std::string_view kB22 = "1110110100011101001000";
constexpr std::string_view kB74 =
    "1111011100001011001010100110100001110"
    "1111011100001011001000100110100001110";
constexpr std::string_view kB11 = "11101*01000";
constexpr std::string_view kB37 = "11110111000010110010*0100110100001110";

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return out;
}

}  // namespace

BlockTemplate::BlockTemplate(std::vector<std::int8_t> slots) : slots_(std::move(slots)) {
  if (slots_.empty()) throw std::invalid_argument("empty block template");
  for (auto s : slots_)
    if (s != 0 && s != 1 && s != kStar) throw std::invalid_argument("template slots must be 0, 1 or *");
}

BlockTemplate BlockTemplate::parse(std::string_view text) {
  std::vector<std::int8_t> slots;
  for (char ch : text) {
    if (ch == '0' || ch == '1')
      slots.push_back(static_cast<std::int8_t>(ch - '0'));
    else if (ch == '*')
      slots.push_back(kStar);
    else if (ch == '(' || ch == ')' || ch == ',' || std::isspace(static_cast<unsigned char>(ch)))
      continue;
    else
      throw std::invalid_argument(std::string("illegal character '") + ch + "' in block template");
  }
  return BlockTemplate(std::move(slots));
}

std::vector<std::size_t> BlockTemplate::star_positions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < slots_.size(); ++i)
    if (slots_[i] == kStar) out.push_back(i);
  return out;
}

Coloring BlockTemplate::filled(std::uint8_t bit) const {
  std::vector<std::uint8_t> bits(slots_.size());
  for (std::size_t i = 0; i < slots_.size(); ++i)
    bits[i] = slots_[i] == kStar ? bit : static_cast<std::uint8_t>(slots_[i]);
  return Coloring(GroupKind::Cyclic, std::move(bits));
}

std::string BlockTemplate::str() const {
  std::string s;
  for (auto v : slots_) s.push_back(v == kStar ? '*' : static_cast<char>('0' + v));
  return s;
}

Coloring builtin_coloring(BuiltinColoring which) {
  switch (which) {
    case BuiltinColoring::B20: return parse_coloring(kB20, GroupKind::Cyclic, 20);
    case BuiltinColoring::B22: return parse_coloring(kB22, GroupKind::Cyclic, 22);
    case BuiltinColoring::B74: return parse_coloring(kB74, GroupKind::Cyclic, 74);
  }
  throw std::invalid_argument("unknown builtin coloring");
}

BlockTemplate builtin_template(BuiltinTemplate which) {
  return BlockTemplate::parse(which == BuiltinTemplate::B11 ? kB11 : kB37);
}

bool lookup_builtin_coloring(std::string_view name, Coloring& out) {
  const std::string u = upper(name);
  if (u == "B20") out = builtin_coloring(BuiltinColoring::B20);
  else if (u == "B22") out = builtin_coloring(BuiltinColoring::B22);
  else if (u == "B74") out = builtin_coloring(BuiltinColoring::B74);
  else return false;
  return true;
}

bool lookup_builtin_template(std::string_view name, BlockTemplate& out) {
  const std::string u = upper(name);
  if (u == "B11") out = builtin_template(BuiltinTemplate::B11);
  else if (u == "B37") out = builtin_template(BuiltinTemplate::B37);
  else return false;
  return true;
}

Coloring ltimes(const BlockTemplate& tmpl, const Coloring& inner) {
  auto stars = tmpl.star_positions();
  if (stars.empty()) throw std::invalid_argument("template has no star slot");
  if (stars.size() != 1) throw std::invalid_argument("template must have exactly one star slot");
  const std::size_t b = tmpl.size(), t = inner.size();
  std::vector<std::uint8_t> bits;
  bits.reserve(b * t);
  for (std::size_t copy = 0; copy < t; ++copy)
    for (std::size_t i = 0; i < b; ++i)
      bits.push_back(i == stars[0] ? inner[copy] : static_cast<std::uint8_t>(tmpl.slots()[i]));
  return Coloring(GroupKind::Cyclic, std::move(bits));
}

bool check_template_star_property(const BlockTemplate& tmpl, std::size_t k) {
  if (tmpl.star_positions().size() != 1) throw std::invalid_argument("template must have exactly one star slot");
  for (std::uint8_t bit : {0, 1})
    if (count_mono_cyclic(tmpl.filled(bit), k, MonoFilter::NonDegenerateOnly) != 0) return false;
  return true;
}

Coloring tower_coloring(const TowerSpec& spec, std::size_t k) {
  if (!check_template_star_property(spec.tmpl, k))
    throw std::invalid_argument("template " + spec.tmpl.str() + " fails the star property for k=" +
                                std::to_string(k));
  Coloring c = spec.base.as(GroupKind::Cyclic);
  for (std::size_t level = 0; level < spec.depth; ++level) c = ltimes(spec.tmpl, c);
  return c;
}

std::uint64_t tower_predicted_count(const TowerSpec& spec, std::size_t k) {
  if (!check_template_star_property(spec.tmpl, k))
    throw std::invalid_argument("template " + spec.tmpl.str() + " fails the star property for k=" +
                                std::to_string(k));
  const std::uint64_t fixed_slots = spec.tmpl.size() - 1;
  std::uint64_t t = spec.base.size();
  std::uint64_t count = count_mono_cyclic(spec.base.as(GroupKind::Cyclic), k);
  for (std::size_t level = 0; level < spec.depth; ++level) {
    count = fixed_slots * t * t + count;
    t *= spec.tmpl.size();
  }
  return count;
}

}  // namespace apmono
