#pragma once

#include <stdexcept>
#include <string>

namespace dwt2d {

// filesystem-level failure (open/read/write), as opposed to format errors
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dwt2d
