#pragma once

#include <stdexcept>
#include <string>

namespace yzq {

/// Thrown by series division and negative powers when the divisor is not a
/// unit (its lowest known nonzero coefficient sits at a higher degree than
/// the dividend's, or it is identically zero through its order).
struct DivisionByNonUnit : std::domain_error {
    explicit DivisionByNonUnit(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when an operation needs more known coefficients than the input
/// series carries.
struct InsufficientOrder : std::invalid_argument {
    explicit InsufficientOrder(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown by the invariant-family catalog for an unregistered id.
struct UnknownFamily : std::invalid_argument {
    explicit UnknownFamily(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown by the odd-part ODE solver when the normalized coefficient series
/// fails the low-degree cancellations that make the recursion well posed.
struct MalformedOde : std::logic_error {
    explicit MalformedOde(const std::string& what) : std::logic_error(what) {}
};

} // namespace yzq
