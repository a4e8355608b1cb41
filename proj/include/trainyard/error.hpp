#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trainyard {

/// Malformed textual input. `position` is a 0-based character offset.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A violated operation precondition (bad horizon, non-unit constant term,
/// gcd(s,t) != 1, enumeration cap exceeded, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace trainyard
