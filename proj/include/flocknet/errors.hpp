#pragma once

#include <stdexcept>
#include <string>

namespace flocknet {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A graph operation that requires connectivity was called on a disconnected graph.
class DisconnectedGraphError : public Error {
public:
    explicit DisconnectedGraphError(const std::string& msg) : Error(msg) {}
};

// A theorem hypothesis failed where the computation cannot proceed without it.
// The message names the violated condition.
class HypothesisError : public Error {
public:
    explicit HypothesisError(const std::string& msg) : Error(msg) {}
};

// Adaptive quadrature ran out of subdivisions before reaching the requested
// tolerance; `achieved` is the error estimate it could certify.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& msg, double achieved_tol)
        : Error(msg), achieved(achieved_tol) {}
    double achieved;
};

// A realization produced a non-finite coordinate.
class BlowUpError : public Error {
public:
    BlowUpError(const std::string& msg, double at_time) : Error(msg), time(at_time) {}
    double time;
};

// Config or input file problem; message carries file/line/field context.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace flocknet
