#pragma once

// Progress file for long minimum-pattern searches over [n].
//
// Plain text, one record per line:
//
//   apmono-checkpoint 1
//   patterns <comma-separated sorted pattern list>
//   split <prefix length used for task splitting>
//   minimum <m> <value> <witness bits>        proven minimum for [m]
//   found <m> <value> <witness bits>          a coloring of [m] with that count
//   done <m> <prefix bits> <value>            every coloring of [m] extending
//                                             the prefix has count >= value
//
// Lines starting with '#' are ignored. found/done records for a length are
// dropped once its minimum is written.

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace apmono {

struct CheckpointMinimum {
  std::uint64_t value = 0;
  std::string witness;
};

struct CheckpointState {
  std::string patterns;
  std::size_t split = 0;
  std::map<std::size_t, CheckpointMinimum> minima;
  /// found records per length.
  std::map<std::size_t, std::vector<CheckpointMinimum>> found;
  /// done prefixes per length -> lower bound.
  std::map<std::size_t, std::map<std::string, std::uint64_t>> done;
};

/// Parses a checkpoint; throws std::runtime_error on malformed content.
CheckpointState parse_checkpoint(const std::string& text);
std::string format_checkpoint_header(const std::string& patterns, std::size_t split);

class CheckpointWriter {
 public:
  /// Opens (creating if needed) the file at `path`. If it exists it must
  /// carry the same patterns and split; its state is returned by state().
  CheckpointWriter(std::string path, const std::string& patterns, std::size_t split);

  const CheckpointState& state() const { return state_; }

  void record_found(std::size_t m, std::uint64_t value, const std::string& witness);
  void record_done(std::size_t m, const std::string& prefix, std::uint64_t lower_bound);
  /// Stores the minimum and compacts the file.
  void record_minimum(std::size_t m, std::uint64_t value, const std::string& witness);

 private:
  void append(const std::string& line);
  void rewrite();

  std::string path_;
  CheckpointState state_;
  std::mutex mu_;
};

}  // namespace apmono
