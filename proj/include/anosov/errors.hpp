#ifndef ANOSOV_ERRORS_HPP
#define ANOSOV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace anosov {

// Bad data handed to the library: out-of-range vertices, malformed input
// text, parameters outside a function's documented domain.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid request that exceeds what this build is willing to
// compute (problem size over a documented cutoff).
class capability_error : public std::runtime_error {
public:
    explicit capability_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace anosov

#endif
