#pragma once

#include <stdexcept>
#include <string>

namespace christoffel {

/// Raised when an operation is called outside its domain (bad letter, out-of-range
/// parameter, non-coprime pair, ...). The CLI maps it to exit status 3.
class precondition_error : public std::invalid_argument {
  public:
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace christoffel
