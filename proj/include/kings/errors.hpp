#ifndef KINGS_ERRORS_HPP
#define KINGS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kings {

// Thrown when a computation would exceed a documented size limit
// (expansion term caps, grid enumeration caps, search-state width).
// Distinct from std::domain_error so callers can tell "your input is
// outside the mathematical domain" from "this request is too big".
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kings

#endif
