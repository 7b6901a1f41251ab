#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringlab {

// Raised when a ring expression or element literal fails to parse.
// `offset` is the byte position in the input where parsing stopped.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Raised when a requested ring exceeds the enumeration cap.
// `cardinality` carries the exact cardinality as a decimal string,
// which may not fit in any machine integer.
class cap_error : public std::runtime_error {
public:
    cap_error(const std::string& what, std::string cardinality)
        : std::runtime_error(what), cardinality_(std::move(cardinality)) {}

    const std::string& cardinality() const noexcept { return cardinality_; }

private:
    std::string cardinality_;
};

// Raised when an exhaustive or sampled check finds a counterexample to an
// identity that is expected to hold universally.  Reaching this is a bug in
// the library (or a genuinely false claim), never a user error.
class falsification_error : public std::runtime_error {
public:
    explicit falsification_error(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace ringlab
