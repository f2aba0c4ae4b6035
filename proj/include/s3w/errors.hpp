#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace s3w {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class LengthMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ShapeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnknownId : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Failure inside one decision level; the message carries the level index.
class LevelError : public std::runtime_error {
public:
    LevelError(std::size_t level, const std::string& what)
        : std::runtime_error("level " + std::to_string(level) + ": " + what), level_(level) {}

    std::size_t level() const noexcept { return level_; }

private:
    std::size_t level_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace s3w
