#pragma once
#include <array>
#include <stdexcept>
#include <string>

namespace pcspan {

// Thrown when an algorithm that requires a host with no monochromatic
// triangle stumbles over one; carries the witness triple.
struct MonoTriangleError : std::runtime_error {
  std::array<int, 3> triangle;
  explicit MonoTriangleError(std::array<int, 3> t)
      : std::runtime_error("monochromatic triangle (" + std::to_string(t[0]) + "," +
                           std::to_string(t[1]) + "," + std::to_string(t[2]) + ")"),
        triangle(t) {}
};

// A constructive routine could not complete. `step` names the point in the
// pipeline that ran out of room, e.g. "spider/case2/legs-dont-fit". This is
// the legitimate not-found channel (CLI exit 1), expected below the size
// guarantees and never on inputs that meet them.
struct ConstructiveFailure : std::runtime_error {
  std::string step;
  ConstructiveFailure(std::string s, const std::string& detail)
      : std::runtime_error(s + (detail.empty() ? "" : ": " + detail)), step(std::move(s)) {}
};

// An internal invariant that should hold on every reachable path was
// violated (CLI exit 3).
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace pcspan
