#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "apmono/coloring.hpp"

namespace apmono {

/// A block over {0, 1, *}; the '*' slots are filled from an inner coloring.
class BlockTemplate {
 public:
  static constexpr std::int8_t kStar = -1;

  explicit BlockTemplate(std::vector<std::int8_t> slots);
  /// Accepts '0', '1', '*' with the same separators as colorings.
  static BlockTemplate parse(std::string_view text);

  std::size_t size() const { return slots_.size(); }
  const std::vector<std::int8_t>& slots() const { return slots_; }
  std::vector<std::size_t> star_positions() const;

  /// The block with every star set to `bit`.
  Coloring filled(std::uint8_t bit) const;
  std::string str() const;

 private:
  std::vector<std::int8_t> slots_;
};

enum class BuiltinColoring { B20, B22, B74 };
enum class BuiltinTemplate { B11, B37 };

Coloring builtin_coloring(BuiltinColoring which);
BlockTemplate builtin_template(BuiltinTemplate which);

/// Resolves "B20", "B22", "B74" (case-insensitive); returns false otherwise.
bool lookup_builtin_coloring(std::string_view name, Coloring& out);
bool lookup_builtin_template(std::string_view name, BlockTemplate& out);

/// t copies of the template; the star of copy j takes inner[j]. The template
/// must contain exactly one star.
Coloring ltimes(const BlockTemplate& tmpl, const Coloring& inner);

/// True iff, for both fills of the single star, the block has no
/// non-degenerate monochromatic k-AP.
bool check_template_star_property(const BlockTemplate& tmpl, std::size_t k);

struct TowerSpec {
  BlockTemplate tmpl;
  std::size_t depth = 1;
  Coloring base;
};

/// tmpl ⋉ (tmpl ⋉ (... ⋉ base)) with `depth` applications.
/// Throws std::invalid_argument if the template fails the star property for k.
Coloring tower_coloring(const TowerSpec& spec, std::size_t k);

/// count(b t) = (b-1) t^2 + count(t) applied once per level, starting from the
/// directly counted base.
std::uint64_t tower_predicted_count(const TowerSpec& spec, std::size_t k);

}  // namespace apmono
