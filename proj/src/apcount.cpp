#include "apmono/apcount.hpp"

#include <numeric>
#include <stdexcept>

#include "apmono/kernels.hpp"

namespace apmono {
namespace {

void require_kind(const Coloring& c, GroupKind kind) {
  if (c.kind() != kind)
    throw std::invalid_argument(kind == GroupKind::Cyclic ? "expected a coloring of Z_n"
                                                          : "expected a coloring of [n]");
}

void require_k(std::size_t k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
}

}  // namespace

std::vector<std::int64_t> kap_terms(const APParam& p, GroupKind kind, std::size_t n) {
  require_k(p.k);
  const auto nn = static_cast<std::int64_t>(n);
  const auto last = static_cast<std::int64_t>(p.k - 1);
  std::vector<std::int64_t> terms;
  terms.reserve(p.k);
  if (kind == GroupKind::Cyclic) {
    for (std::int64_t j = 0; j <= last; ++j) terms.push_back((((p.a + j * p.d) % nn) + nn) % nn);
    return terms;
  }
  if (p.a < 1 || p.d < 1 || p.a + last * p.d > nn)
    throw std::out_of_range("increasing progression does not fit inside [n]");
  for (std::int64_t j = 0; j <= last; ++j) terms.push_back(p.a + j * p.d);
  return terms;
}

bool is_degenerate_difference(std::size_t d, std::size_t n, std::size_t k) {
  for (std::size_t j = 1; j < k; ++j)
    if ((j * d) % n == 0) return true;
  return false;
}

std::vector<std::uint64_t> count_mono_cyclic_by_difference(const Coloring& c, std::size_t k) {
  require_kind(c, GroupKind::Cyclic);
  require_k(k);
  return kernels::cyclic_by_difference_parallel(c.bits(), k);
}

std::uint64_t count_mono_cyclic(const Coloring& c, std::size_t k, MonoFilter filter) {
  auto by_d = count_mono_cyclic_by_difference(c, k);
  std::uint64_t total = 0;
  for (std::size_t d = 0; d < by_d.size(); ++d)
    if (filter == MonoFilter::All || !is_degenerate_difference(d, c.size(), k)) total += by_d[d];
  return total;
}

std::uint64_t count_mono_interval(const Coloring& c, std::size_t k) {
  require_kind(c, GroupKind::Interval);
  require_k(k);
  auto by_d = kernels::interval_by_difference_parallel(c.bits(), k);
  return std::accumulate(by_d.begin(), by_d.end(), std::uint64_t{0});
}

std::uint64_t total_increasing_aps(std::size_t n, std::size_t k) {
  require_k(k);
  std::uint64_t total = 0;
  for (std::size_t d = 1; (k - 1) * d < n; ++d) total += n - (k - 1) * d;
  return total;
}

std::uint64_t UVector::sum() const { return std::accumulate(u.begin(), u.end(), std::uint64_t{0}); }

UVector u_vector(const Coloring& c, std::size_t k) {
  require_kind(c, GroupKind::Cyclic);
  require_k(k);
  const std::size_t n = c.size();
  UVector out;
  out.u.assign(k + 1, 0);
  for (std::size_t d = 0; d < n; ++d)
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t reds = 0;
      for (std::size_t j = 0; j < k; ++j) reds += c[(a + j * d) % n] == 0;
      ++out.u[reds];
    }
  return out;
}

ColorProfile color_profile(const Coloring& c, std::size_t modulus, Color color) {
  if (modulus == 0) throw std::invalid_argument("modulus must be positive");
  ColorProfile p;
  p.residues.assign(modulus, 0);
  const auto want = static_cast<std::uint8_t>(color);
  for (std::size_t z = 0; z < c.size(); ++z)
    if (c[z] == want) {
      ++p.total;
      ++p.residues[z % modulus];
    }
  return p;
}

std::uint64_t pair_intersection(const Coloring& c, std::size_t k, std::size_t i, std::size_t j, Color color,
                                IntersectMode mode) {
  require_kind(c, GroupKind::Cyclic);
  if (i < 1 || i >= j || j > k) throw std::invalid_argument("pair_intersection requires 1 <= i < j <= k");
  const std::size_t n = c.size();
  if (mode == IntersectMode::Formula) {
    const std::size_t r = std::gcd(j - i, n);
    auto profile = color_profile(c, r, color);
    std::uint64_t sq = 0;
    for (auto x : profile.residues) sq += x * x;
    return r * sq;
  }
  const auto want = static_cast<std::uint8_t>(color);
  std::uint64_t count = 0;
  for (std::size_t d = 0; d < n; ++d)
    for (std::size_t a = 0; a < n; ++a)
      count += c[(a + (i - 1) * d) % n] == want && c[(a + (j - 1) * d) % n] == want;
  return count;
}

PatternSet::PatternSet(std::size_t k, const std::vector<std::string>& patterns) : k_(k) {
  if (k == 0 || k > 20) throw std::invalid_argument("pattern length out of range");
  table_.assign(std::size_t{1} << k, 0);
  for (const auto& p : patterns) {
    if (p.size() != k) throw std::invalid_argument("pattern '" + p + "' does not have length " + std::to_string(k));
    std::uint32_t code = 0;
    for (char ch : p) {
      if (ch != '0' && ch != '1') throw std::invalid_argument("pattern '" + p + "' is not a bit string");
      code = (code << 1) | static_cast<std::uint32_t>(ch - '0');
    }
    table_[code] = 1;
  }
}

std::size_t PatternSet::size() const { return static_cast<std::size_t>(std::accumulate(table_.begin(), table_.end(), 0)); }

std::vector<std::string> PatternSet::patterns() const {
  std::vector<std::string> out;
  for (std::uint32_t code = 0; code < table_.size(); ++code) {
    if (!table_[code]) continue;
    std::string s(k_, '0');
    for (std::size_t j = 0; j < k_; ++j)
      if (code >> (k_ - 1 - j) & 1U) s[j] = '1';
    out.push_back(s);
  }
  return out;
}

const PatternSet& frame_pattern_set() {
  static const PatternSet f(5, {"11111", "10011", "10101", "11001", "00000", "01100", "01010", "00110"});
  return f;
}

std::uint64_t count_frame_patterns(const Coloring& c, const PatternSet& p) {
  require_kind(c, GroupKind::Interval);
  const std::size_t n = c.size(), k = p.k();
  if (k < 2) throw std::invalid_argument("pattern length must be at least 2");
  std::uint64_t count = 0;
  for (std::size_t d = 1; (k - 1) * d < n; ++d)
    for (std::size_t a = 0; a + (k - 1) * d < n; ++a) {
      std::uint32_t code = 0;
      for (std::size_t j = 0; j < k; ++j) code = (code << 1) | c[a + j * d];
      count += p.contains(code);
    }
  return count;
}

}  // namespace apmono
