#pragma once

#include <stdexcept>
#include <string>

namespace formation {

// Bad or inconsistent input: malformed files, invalid geometry, unknown ids.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured resource cap (state count, oracle enumeration size) was hit.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Polygon-level validation failure. `polygon_index` is -1 for the border,
// otherwise the obstacle index.
class MapError : public InputError {
 public:
  MapError(int polygon_index, const std::string& what)
      : InputError(describe(polygon_index) + ": " + what), polygon_index_(polygon_index) {}

  int polygon_index() const { return polygon_index_; }

 private:
  static std::string describe(int index) {
    return index < 0 ? std::string("border") : "obstacle " + std::to_string(index);
  }

  int polygon_index_;
};

}  // namespace formation
