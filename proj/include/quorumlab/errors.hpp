#pragma once

#include <stdexcept>
#include <string>

namespace quorumlab {

// Malformed or inconsistent input: width mismatches, bad JSON, invalid games.
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// An exhaustive operation was asked to run above the configured player cap.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace quorumlab
