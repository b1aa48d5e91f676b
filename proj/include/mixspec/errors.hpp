#pragma once

#include <stdexcept>
#include <string>

namespace mixspec {

// Caller passed a value outside an operation's documented domain.
struct InvalidInput : std::invalid_argument {
    explicit InvalidInput(const std::string& msg) : std::invalid_argument(msg) {}
};

// Power-series reciprocal of a series with vanishing constant term.
struct SingularSeries : std::runtime_error {
    explicit SingularSeries(const std::string& msg) : std::runtime_error(msg) {}
};

// A solver or eigenroutine failed to produce a usable result.
struct NumericalFailure : std::runtime_error {
    explicit NumericalFailure(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed external input (CSV/JSON), with location context in the message.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// A linear system is too badly conditioned to invert meaningfully.
struct IllConditioned : std::runtime_error {
    explicit IllConditioned(const std::string& msg) : std::runtime_error(msg) {}
};

// A sample moment sequence admits no discrete measure of the requested order.
struct InfeasibleMoments : std::runtime_error {
    explicit InfeasibleMoments(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mixspec
