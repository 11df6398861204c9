#pragma once

#include <stdexcept>
#include <string>

namespace lqa {

// A partition does not fit the rank it is used at, or a weight is malformed.
class invalid_weight : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The call is outside the regime in which the requested formula holds.
class out_of_regime : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An operation expecting a rank-free (universal) character got a finite-rank one.
class not_universal : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A persisted cache failed its version or checksum test.
class corrupt_cache : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace lqa
