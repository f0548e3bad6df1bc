#pragma once

#include <stdexcept>

namespace pienc {

// A mathematical precondition was violated (division by an interval
// containing zero, square root of a negative interval).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A string that was supposed to denote a rational could not be read at all.
// Subtype of DomainError so callers may treat both uniformly.
struct ParseError : DomainError {
    using DomainError::DomainError;
};

// Two enclosures that must both contain the same real value turned out to
// be disjoint. If this ever fires on genuine data, some bound is unsound.
struct InconsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace pienc
