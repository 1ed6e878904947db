#pragma once

#include <stdexcept>
#include <string>

namespace monoratio {

/// Argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A series or quadrature failed to reach its tolerance within the hard limits.
class nonconvergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// B'(t) (or G'(x)) is numerically zero, so H is undefined at that point.
class degeneracy_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No sign change of the turning-point function over the scan range.
class bracket_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A sampled function threw while the oracle was evaluating it.
class evaluation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace monoratio
