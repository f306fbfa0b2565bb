#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hamcon {

inline constexpr const char* kToolkitVersion = "hamcon 1.0.0";

// Line-oriented key=value record describing one command run: inputs (as
// content hashes), outcome, witnesses and counts. Deterministic reruns
// reproduce the outcome kind and every count field.
class Certificate {
 public:
  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, std::uint64_t value);
  void set(const std::string& key, int value);
  void set(const std::string& key, double value);

  const std::vector<std::pair<std::string, std::string>>& fields() const {
    return fields_;
  }
  std::string to_text() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

// FNV-1a 64-bit content hash, rendered as fixed-width hex.
std::uint64_t fnv1a(const void* data, std::size_t len);
std::string fnv1a_hex(const std::string& content);
std::string hash_file(const std::string& path);  // "fnv1a:<hex>"

}  // namespace hamcon
