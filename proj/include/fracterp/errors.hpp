#pragma once

#include <stdexcept>
#include <string>

namespace fracterp {

// Error taxonomy shared by the library and the CLI exit-code mapping.
// Precondition violations throw; slow convergence does not (it is reported
// through Convergence diagnostics on the result instead).

class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Spectrum outside the requested region, ill-conditioned eigenbasis, or an
// eigenvalue too close to the branch cut for the requested order.
class certificate_error : public std::runtime_error {
public:
  explicit certificate_error(const std::string& what) : std::runtime_error(what) {}
};

// Input outside an operation's mathematical domain (|x-1| >= 1, Re(alpha) <= 0,
// pole of an identity, degenerate rotation angle, incommensurate grid, ...).
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fracterp
