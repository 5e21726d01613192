#pragma once

#include <stdexcept>
#include <string>

namespace jastrow1d {

// Precondition violations: bad sizes, out-of-range parameters, unsupported
// combinations. The CLI maps these to exit code 2 when raised during parsing.
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Eigensolver non-convergence, vanishing normalization and similar.
class NumericalFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Raised when a quantity is requested exactly on a node of the wavefunction.
class NodeSingularity : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

} // namespace jastrow1d
