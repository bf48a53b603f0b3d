#ifndef ORTHOSMITH_ERRORS_HPP
#define ORTHOSMITH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orthosmith {

// Malformed or contradictory input: bad matrix files, dimension mismatches,
// non-orthogonal matrices where orthogonality is required.  CLI exit code 1.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

// Structurally valid input outside a guard: state spaces too large to
// enumerate, parameters outside a formula's stated range.  CLI exit code 2.
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

} // namespace orthosmith

#endif
