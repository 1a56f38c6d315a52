#ifndef DEDESUM_ERRORS_HPP
#define DEDESUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dedesum {

// Thrown when an exact value that must be rational is not; carries the
// canonically reduced representation for diagnostics.
struct NotRational : std::runtime_error {
  explicit NotRational(std::string reduced_repr)
      : std::runtime_error("value is not rational: " + reduced_repr),
        reduced(std::move(reduced_repr)) {}
  std::string reduced;
};

// No rule determines the Hasse unit index Q and no override was supplied.
struct UndeterminedUnitIndex : std::runtime_error {
  explicit UndeterminedUnitIndex(const std::string& what)
      : std::runtime_error(what) {}
};

// An exact identity that must hold failed; indicates a bug, not bad input.
struct InternalInconsistency : std::runtime_error {
  explicit InternalInconsistency(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace dedesum

#endif
