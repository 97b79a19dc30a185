#pragma once

#include <stdexcept>
#include <string>

namespace barber {

/// Raised when a request exceeds what a simulator or oracle can hold in memory
/// (statevector, density matrix or dense unitary width caps).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised for invalid experiment configuration (unknown names, bad fields).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised for malformed OpenQASM input. Carries the 1-based source position.
class QasmError : public std::runtime_error {
public:
    QasmError(const std::string& message, int line, int column, std::string token)
        : std::runtime_error(format(message, line, column, token)),
          line_(line),
          column_(column),
          token_(std::move(token)) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& token() const noexcept { return token_; }

private:
    static std::string format(const std::string& message, int line, int column,
                              const std::string& token) {
        return "qasm:" + std::to_string(line) + ":" + std::to_string(column) + ": " + message +
               " (at '" + token + "')";
    }

    int line_;
    int column_;
    std::string token_;
};

}  // namespace barber
