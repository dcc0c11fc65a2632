#include "apmono/periodic.hpp"

#include <stdexcept>

#include "apmono/apcount.hpp"
#include "apmono/kernels.hpp"

namespace apmono {
namespace {

void require_area_k(std::size_t k) {
  if (k != 4 && k != 5) throw std::invalid_argument("region areas are tabulated for k = 4 and k = 5 only");
}

// Offsets j*d - r*(x_1 + ... + x_j) mod b for j = 0..k-1.
void pattern_offsets(std::size_t d, std::size_t b, std::size_t r, const WrapClass& pattern,
                     std::vector<std::size_t>& out) {
  const std::size_t k = pattern.bits.size() + 1;
  out.resize(k);
  std::size_t shift = 0;
  out[0] = 0;
  for (std::size_t j = 1; j < k; ++j) {
    shift = (shift + pattern.bits[j - 1] * r) % b;
    out[j] = (j * d % b + b - shift) % b;
  }
}

void check_pattern(const Coloring& block, std::size_t k, const WrapClass& pattern, std::size_t r) {
  if (block.kind() != GroupKind::Cyclic) throw std::invalid_argument("block must be a coloring of Z_b");
  if (pattern.bits.size() + 1 != k) throw std::invalid_argument("wrap pattern must have k-1 bits");
  if (r >= block.size()) throw std::invalid_argument("offset r must lie in [0, b)");
}

}  // namespace

unsigned WrapClass::index() const {
  unsigned idx = 0;
  for (auto b : bits) idx = (idx << 1) | b;
  return idx;
}

std::string WrapClass::str() const {
  std::string s;
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

WrapClass WrapClass::from_index(unsigned index, std::size_t k) {
  WrapClass w;
  w.bits.resize(k - 1);
  for (std::size_t j = 0; j + 1 < k; ++j) w.bits[j] = (index >> (k - 2 - j)) & 1U;
  return w;
}

WrapClass wrap_class(std::size_t a, std::size_t d, std::size_t n, std::size_t k) {
  if (a >= n || d >= n) throw std::invalid_argument("wrap_class requires 0 <= a, d < n");
  WrapClass w;
  w.bits.resize(k - 1);
  std::size_t prev = a / n;
  for (std::size_t j = 1; j < k; ++j) {
    std::size_t cur = (a + j * d) / n;
    w.bits[j - 1] = cur > prev;
    prev = cur;
  }
  return w;
}

std::map<unsigned, Ratio> region_area_table(std::size_t k) {
  require_area_k(k);
  if (k == 4) {
    const Ratio six(1, 6), twelve(1, 12);
    return {{0, six}, {1, twelve}, {2, six}, {3, twelve}, {4, twelve}, {5, six}, {6, twelve}, {7, six}};
  }
  const Ratio eighth(1, 8), twelfth(1, 12), t24(1, 24);
  return {{0, eighth},   {1, t24},      {2, twelfth}, {4, twelfth}, {5, twelfth},
          {6, t24},      {7, t24},      {8, t24},     {9, t24},     {10, twelfth},
          {11, twelfth}, {13, twelfth}, {14, t24},    {15, eighth}};
}

std::uint64_t generalized_mono_count(const Coloring& block, std::size_t k, const WrapClass& pattern, std::size_t r) {
  check_pattern(block, k, pattern, r);
  const std::size_t b = block.size();
  kernels::CyclicPacked packed(block.bits());
  std::uint64_t total = 0;
  const auto bb = static_cast<std::int64_t>(b);
#pragma omp parallel reduction(+ : total)
  {
    std::vector<std::size_t> offsets;
#pragma omp for schedule(static)
    for (std::int64_t d = 0; d < bb; ++d) {
      pattern_offsets(static_cast<std::size_t>(d), b, r, pattern, offsets);
      total += packed.mono(offsets).total();
    }
  }
  return total;
}

std::uint64_t generalized_mono_count_serial(const Coloring& block, std::size_t k, const WrapClass& pattern,
                                            std::size_t r) {
  check_pattern(block, k, pattern, r);
  const std::size_t b = block.size();
  std::uint64_t total = 0;
  std::vector<std::size_t> offsets;
  for (std::size_t d = 0; d < b; ++d) {
    pattern_offsets(d, b, r, pattern, offsets);
    total += kernels::cyclic_offsets_serial(block.bits(), offsets).total();
  }
  return total;
}

std::map<unsigned, std::uint64_t> class_counts(const Coloring& block, std::size_t k, std::size_t r) {
  std::map<unsigned, std::uint64_t> out;
  for (const auto& [idx, area] : region_area_table(k))
    out[idx] = generalized_mono_count(block, k, WrapClass::from_index(idx, k), r);
  return out;
}

Ratio density_upper_bound(const Coloring& block, std::size_t k, std::size_t r) {
  require_area_k(k);
  if (block.kind() != GroupKind::Cyclic) throw std::invalid_argument("block must be a coloring of Z_b");
  const auto b = static_cast<std::int64_t>(block.size());
  if (r >= block.size()) throw std::invalid_argument("offset r must lie in [0, b)");
  if (r == 0) return Ratio(static_cast<std::int64_t>(count_mono_cyclic(block, k)), b * b);
  const auto areas = region_area_table(k);
  Ratio sum(0);
  for (const auto& [idx, count] : class_counts(block, k, r))
    sum += areas.at(idx) * Ratio(static_cast<std::int64_t>(count));
  return sum / Ratio(b * b);
}

Coloring assemble_periodic(const Coloring& block, std::size_t n, const std::vector<std::uint8_t>& tail,
                           GroupKind kind) {
  const std::size_t b = block.size();
  if (tail.size() != n % b)
    throw std::invalid_argument("tail has length " + std::to_string(tail.size()) + ", expected n mod b = " +
                                std::to_string(n % b));
  std::vector<std::uint8_t> bits;
  bits.reserve(n);
  for (std::size_t copy = 0; copy < n / b; ++copy) bits.insert(bits.end(), block.bits().begin(), block.bits().end());
  bits.insert(bits.end(), tail.begin(), tail.end());
  return Coloring(kind, std::move(bits));
}

Coloring assemble_periodic(const Coloring& block, std::size_t n, const Coloring* tail, GroupKind kind) {
  std::vector<std::uint8_t> t;
  if (tail != nullptr) t.assign(tail->bits().begin(), tail->bits().end());
  return assemble_periodic(block, n, t, kind);
}

}  // namespace apmono
