#pragma once

#include <stdexcept>
#include <string>

namespace pas {

// Invalid parameters, infeasible layouts, malformed configuration.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data (file sizes, parse failures, length mismatches).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Inverse-shaping failures; these signal an upstream decoding failure and
// are handled (not fatal) inside the frame decoder.
class DmError : public std::runtime_error {
 public:
  enum class Kind { outside_sphere, unaddressed, composition_violation };

  DmError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace pas
