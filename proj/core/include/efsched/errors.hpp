// SPDX-License-Identifier: Apache-2.0
#ifndef EFSCHED_ERRORS_HPP
#define EFSCHED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace efsched {

/// Malformed or inconsistent external input (JSON, CSV, CLI files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A desk-scale guard was exceeded (size caps, enumeration bounds).
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every injective bundle-to-machine placement has infinite total cost.
class InfeasibleAssignmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A machine's own bundle costs it infinity while some other bundle is
/// finite for it; no payment vector can remove that envy.
class InherentlyEnviousError : public std::runtime_error {
 public:
  InherentlyEnviousError(int machine, int finite_alternative, const std::string& what)
      : std::runtime_error(what), machine(machine), finite_alternative(finite_alternative) {}

  int machine;             // 0-based
  int finite_alternative;  // 0-based machine whose bundle is finite for `machine`
};

}  // namespace efsched

#endif  // EFSCHED_ERRORS_HPP
