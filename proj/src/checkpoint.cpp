#include "apmono/checkpoint.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace apmono {
namespace {

[[noreturn]] void malformed(std::size_t line_no, const std::string& why) {
  throw std::runtime_error("checkpoint line " + std::to_string(line_no) + ": " + why);
}

}  // namespace

std::string format_checkpoint_header(const std::string& patterns, std::size_t split) {
  return "apmono-checkpoint 1\npatterns " + patterns + "\nsplit " + std::to_string(split) + "\n";
}

CheckpointState parse_checkpoint(const std::string& text) {
  CheckpointState st;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool saw_magic = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "apmono-checkpoint") {
      int version = 0;
      fields >> version;
      if (version != 1) malformed(line_no, "unsupported version");
      saw_magic = true;
    } else if (tag == "patterns") {
      fields >> st.patterns;
    } else if (tag == "split") {
      if (!(fields >> st.split)) malformed(line_no, "bad split");
    } else if (tag == "minimum" || tag == "found") {
      std::size_t m = 0;
      CheckpointMinimum rec;
      if (!(fields >> m >> rec.value >> rec.witness) || rec.witness.size() != m)
        malformed(line_no, "bad " + tag + " record");
      if (tag == "minimum")
        st.minima[m] = rec;
      else
        st.found[m].push_back(rec);
    } else if (tag == "done") {
      std::size_t m = 0;
      std::string prefix;
      std::uint64_t value = 0;
      if (!(fields >> m >> prefix >> value) || prefix.size() > m) malformed(line_no, "bad done record");
      st.done[m][prefix] = value;
    } else {
      malformed(line_no, "unknown record '" + tag + "'");
    }
  }
  if (!text.empty() && !saw_magic) throw std::runtime_error("not an apmono checkpoint file");
  for (const auto& [m, rec] : st.minima) {
    st.found.erase(m);
    st.done.erase(m);
  }
  return st;
}

CheckpointWriter::CheckpointWriter(std::string path, const std::string& patterns, std::size_t split)
    : path_(std::move(path)) {
  if (std::filesystem::exists(path_)) {
    std::ifstream in(path_);
    std::stringstream buf;
    buf << in.rdbuf();
    state_ = parse_checkpoint(buf.str());
    if (!buf.str().empty()) {
      if (state_.patterns != patterns) throw std::runtime_error("checkpoint was written for a different pattern set");
      if (state_.split != split) throw std::runtime_error("checkpoint was written with a different split depth");
    }
  }
  state_.patterns = patterns;
  state_.split = split;
  rewrite();
}

void CheckpointWriter::append(const std::string& line) {
  std::ofstream out(path_, std::ios::app);
  out << line << '\n';
  out.flush();
  if (!out) throw std::runtime_error("cannot write checkpoint " + path_);
}

void CheckpointWriter::rewrite() {
  const std::string tmp = path_ + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << format_checkpoint_header(state_.patterns, state_.split);
    for (const auto& [m, rec] : state_.minima) out << "minimum " << m << ' ' << rec.value << ' ' << rec.witness << '\n';
    for (const auto& [m, recs] : state_.found)
      for (const auto& rec : recs) out << "found " << m << ' ' << rec.value << ' ' << rec.witness << '\n';
    for (const auto& [m, prefixes] : state_.done)
      for (const auto& [prefix, value] : prefixes) out << "done " << m << ' ' << prefix << ' ' << value << '\n';
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
  }
  std::filesystem::rename(tmp, path_);
}

void CheckpointWriter::record_found(std::size_t m, std::uint64_t value, const std::string& witness) {
  std::lock_guard lock(mu_);
  state_.found[m].push_back({value, witness});
  append("found " + std::to_string(m) + ' ' + std::to_string(value) + ' ' + witness);
}

void CheckpointWriter::record_done(std::size_t m, const std::string& prefix, std::uint64_t lower_bound) {
  std::lock_guard lock(mu_);
  state_.done[m][prefix] = lower_bound;
  append("done " + std::to_string(m) + ' ' + prefix + ' ' + std::to_string(lower_bound));
}

void CheckpointWriter::record_minimum(std::size_t m, std::uint64_t value, const std::string& witness) {
  std::lock_guard lock(mu_);
  state_.minima[m] = {value, witness};
  state_.found.erase(m);
  state_.done.erase(m);
  rewrite();
}

}  // namespace apmono
