#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mllcd {

using node_id = std::uint32_t;
using layer_id = std::uint32_t;

// Malformed input file. `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line_no, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + message),
          line_(line_no) {}

    // Whole-input problem with no single offending line.
    explicit ParseError(const std::string& message)
        : std::runtime_error(message), line_(0) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// File could not be opened.
class FileError : public std::runtime_error {
public:
    explicit FileError(const std::string& path)
        : std::runtime_error("cannot open file: " + path) {}
};

}  // namespace mllcd
