#ifndef EPDA_ERRORS_HPP
#define EPDA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace epda {

/// Requested parameters violate a construction's feasibility condition.
class ParameterInfeasible : public std::invalid_argument {
   public:
    explicit ParameterInfeasible(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed array text; message carries field/position diagnostics.
class FormatError : public std::runtime_error {
   public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// Integer label absent from the array it was looked up in.
class UnknownInteger : public std::domain_error {
   public:
    explicit UnknownInteger(const std::string& what) : std::domain_error(what) {}
};

/// Operation requires an array that passes verification, and it does not.
class InvalidEpda : public std::invalid_argument {
   public:
    explicit InvalidEpda(const std::string& what) : std::invalid_argument(what) {}
};

/// Dimension disagreement between cooperating objects (array vs. library).
class ShapeMismatch : public std::invalid_argument {
   public:
    explicit ShapeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Channel realization too close to singular for zero-forcing.
class DegenerateChannel : public std::runtime_error {
   public:
    explicit DegenerateChannel(const std::string& what) : std::runtime_error(what) {}
};

/// Strict-mode simulation: a recovered subfile missed the error tolerance.
class DecodeFailure : public std::runtime_error {
   public:
    explicit DecodeFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace epda

#endif
