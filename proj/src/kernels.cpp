#include "apmono/kernels.hpp"

#include <bit>
#include <stdexcept>

#include <omp.h>

namespace apmono::kernels {
namespace {

int resolve_workers(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

}  // namespace

PackedBits::PackedBits(std::span<const std::uint8_t> bits, bool complement, bool doubled) {
  const std::size_t n = bits.size();
  const std::size_t total = doubled ? 2 * n : n;
  words_.assign(total / 64 + 2, 0);
  for (std::size_t i = 0; i < total; ++i) {
    std::uint8_t b = bits[i % n] ^ static_cast<std::uint8_t>(complement);
    if (b) words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

std::uint64_t PackedBits::word_at(std::size_t offset, std::size_t i) const {
  const std::size_t q = offset / 64 + i;
  const unsigned r = offset % 64;
  std::uint64_t lo = words_[q] >> r;
  if (r == 0) return lo;
  return lo | (words_[q + 1] << (64 - r));
}

std::uint64_t PackedBits::and_count(std::span<const std::size_t> offsets, std::size_t len) const {
  if (len == 0) return 0;
  const std::size_t nw = (len + 63) / 64;
  const unsigned tail = len % 64;
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < nw; ++i) {
    std::uint64_t w = ~std::uint64_t{0};
    for (std::size_t off : offsets) w &= word_at(off, i);
    if (i + 1 == nw && tail != 0) w &= (std::uint64_t{1} << tail) - 1;
    count += static_cast<std::uint64_t>(std::popcount(w));
  }
  return count;
}

CyclicPacked::CyclicPacked(std::span<const std::uint8_t> bits)
    : n_(bits.size()), blue_(bits, false, true), red_(bits, true, true) {}

MonoSplit CyclicPacked::mono(std::span<const std::size_t> offsets) const {
  return {red_.and_count(offsets, n_), blue_.and_count(offsets, n_)};
}

MonoSplit cyclic_offsets_serial(std::span<const std::uint8_t> bits, std::span<const std::size_t> offsets) {
  const std::size_t n = bits.size();
  MonoSplit out;
  for (std::size_t a = 0; a < n; ++a) {
    const std::uint8_t first = bits[(a + offsets[0]) % n];
    bool mono = true;
    for (std::size_t j = 1; j < offsets.size() && mono; ++j) mono = bits[(a + offsets[j]) % n] == first;
    if (mono) (first ? out.blue : out.red)++;
  }
  return out;
}

std::vector<std::uint64_t> cyclic_by_difference_serial(std::span<const std::uint8_t> bits, std::size_t k) {
  const std::size_t n = bits.size();
  std::vector<std::uint64_t> by_d(n, 0);
  for (std::size_t d = 0; d < n; ++d)
    for (std::size_t a = 0; a < n; ++a) {
      const std::uint8_t first = bits[a];
      bool mono = true;
      for (std::size_t j = 1; j < k && mono; ++j) mono = bits[(a + j * d) % n] == first;
      by_d[d] += mono;
    }
  return by_d;
}

std::vector<std::uint64_t> cyclic_by_difference_parallel(std::span<const std::uint8_t> bits, std::size_t k,
                                                         int workers) {
  const std::size_t n = bits.size();
  CyclicPacked packed(bits);
  std::vector<std::uint64_t> by_d(n, 0);
  const auto nn = static_cast<std::int64_t>(n);
#pragma omp parallel num_threads(resolve_workers(workers))
  {
    std::vector<std::size_t> offsets(k);
#pragma omp for schedule(static)
    for (std::int64_t d = 0; d < nn; ++d) {
      for (std::size_t j = 0; j < k; ++j) offsets[j] = (j * static_cast<std::size_t>(d)) % n;
      by_d[static_cast<std::size_t>(d)] = packed.mono(offsets).total();
    }
  }
  return by_d;
}

std::vector<std::uint64_t> interval_by_difference_serial(std::span<const std::uint8_t> bits, std::size_t k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  const std::size_t n = bits.size();
  std::vector<std::uint64_t> by_d(n, 0);
  for (std::size_t d = 1; (k - 1) * d < n; ++d)
    for (std::size_t a = 0; a + (k - 1) * d < n; ++a) {
      const std::uint8_t first = bits[a];
      bool mono = true;
      for (std::size_t j = 1; j < k && mono; ++j) mono = bits[a + j * d] == first;
      by_d[d] += mono;
    }
  return by_d;
}

std::vector<std::uint64_t> interval_by_difference_parallel(std::span<const std::uint8_t> bits, std::size_t k,
                                                           int workers) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  const std::size_t n = bits.size();
  PackedBits blue(bits, false, false), red(bits, true, false);
  std::vector<std::uint64_t> by_d(n, 0);
  const auto max_d = static_cast<std::int64_t>((n - 1) / (k - 1));
#pragma omp parallel num_threads(resolve_workers(workers))
  {
    std::vector<std::size_t> offsets(k);
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t d = 1; d <= max_d; ++d) {
      const auto ud = static_cast<std::size_t>(d);
      const std::size_t len = n - (k - 1) * ud;
      for (std::size_t j = 0; j < k; ++j) offsets[j] = j * ud;
      by_d[ud] = blue.and_count(offsets, len) + red.and_count(offsets, len);
    }
  }
  return by_d;
}

}  // namespace apmono::kernels
