#pragma once

#include <stdexcept>
#include <string>

namespace ccalc {

// Domain-rule violation: well-formed request, no defined result.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (formula, lattice file, script, machine file).
struct parse_error : std::runtime_error {
  parse_error(const std::string& what, int line, int col)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", col " +
                           std::to_string(col)),
        line(line),
        col(col) {}
  int line = 0;
  int col = 0;
};

}  // namespace ccalc
