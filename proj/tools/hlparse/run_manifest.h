#ifndef HLPARSE_TOOLS_RUN_MANIFEST_H_
#define HLPARSE_TOOLS_RUN_MANIFEST_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace hlparse::cli {

inline constexpr int kSchemaVersion = 1;

// Hex SHA-256 of a file's bytes. Throws std::runtime_error if unreadable.
std::string Sha256File(const std::string& path);

// Record of one invocation: what ran, with which flags and inputs.
class RunManifest {
 public:
  explicit RunManifest(std::string subcommand);

  void SetFlag(const std::string& name, nlohmann::json value) { flags_[name] = std::move(value); }
  void AddInput(const std::string& path);
  void AddOutput(const std::string& path) { outputs_.push_back(path); }
  void SetSeed(std::uint64_t seed) { seed_ = seed; }

  nlohmann::json ToJson() const;
  // Writes to path, or to stderr as one JSON line when path is empty.
  void Write(const std::string& path) const;

 private:
  std::string subcommand_;
  nlohmann::json flags_ = nlohmann::json::object();
  nlohmann::json inputs_ = nlohmann::json::array();
  std::vector<std::string> outputs_;
  std::optional<std::uint64_t> seed_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace hlparse::cli

#endif  // HLPARSE_TOOLS_RUN_MANIFEST_H_
