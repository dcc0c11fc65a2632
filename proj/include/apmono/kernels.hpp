#pragma once

// Counting kernels. Each has a plain serial reference (direct enumeration
// with a color lookup) and a bit-parallel version that tests 64 start
// points per word operation and spreads the difference loop over OpenMP
// threads. The two paths must agree exactly; tests/test_kernels.cpp gates it.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace apmono::kernels {

struct MonoSplit {
  std::uint64_t red = 0;
  std::uint64_t blue = 0;
  std::uint64_t total() const { return red + blue; }
};

/// Packed bit string with one zero word of padding, supporting unaligned
/// window reads.
class PackedBits {
 public:
  PackedBits() = default;
  /// When `doubled` is set the sequence is stored twice back to back so
  /// windows can wrap cyclically.
  PackedBits(std::span<const std::uint8_t> bits, bool complement, bool doubled);

  /// popcount of AND over windows [off, off+len) for each off in `offsets`.
  std::uint64_t and_count(std::span<const std::size_t> offsets, std::size_t len) const;

 private:
  std::uint64_t word_at(std::size_t offset, std::size_t i) const;

  std::vector<std::uint64_t> words_;
};

/// Both colors of a cyclic coloring, ready for window queries.
class CyclicPacked {
 public:
  explicit CyclicPacked(std::span<const std::uint8_t> bits);
  std::size_t size() const { return n_; }
  /// #a in Z_n with c(a+off_j) equal for every j; offsets must lie in [0, n).
  MonoSplit mono(std::span<const std::size_t> offsets) const;

 private:
  std::size_t n_;
  PackedBits blue_;
  PackedBits red_;
};

// ---- generic offset patterns over Z_n ----

MonoSplit cyclic_offsets_serial(std::span<const std::uint8_t> bits, std::span<const std::size_t> offsets);

// ---- ordinary k-APs over Z_n, indexed by difference d in [0, n) ----

std::vector<std::uint64_t> cyclic_by_difference_serial(std::span<const std::uint8_t> bits, std::size_t k);
/// workers <= 0 means the OpenMP default.
std::vector<std::uint64_t> cyclic_by_difference_parallel(std::span<const std::uint8_t> bits, std::size_t k,
                                                         int workers = 0);

// ---- increasing k-APs over [n], indexed by d (entry 0 unused) ----

std::vector<std::uint64_t> interval_by_difference_serial(std::span<const std::uint8_t> bits, std::size_t k);
std::vector<std::uint64_t> interval_by_difference_parallel(std::span<const std::uint8_t> bits, std::size_t k,
                                                           int workers = 0);

}  // namespace apmono::kernels
