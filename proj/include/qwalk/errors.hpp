#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

// Edge-list text could not be parsed; line() is 1-based (0 = whole input).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

// Graph failed structural validation (isolated or out-of-range nodes).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dense operator requested for a graph above the configured arc-count cap.
class DenseCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qwalk
