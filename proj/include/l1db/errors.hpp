#pragma once

#include <stdexcept>
#include <string>

namespace l1db {

// Base class for all library errors so callers can catch everything at once.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad vertex lists, non-rectilinear edges, self-intersection.
struct input_error : error {
    using error::error;
};

// Parameter outside its mathematical domain (e.g. area ratio not in (0,1]).
struct domain_error : error {
    using error::error;
};

// A configuration violates one of its defining side constraints.
struct constraint_error : error {
    using error::error;
};

// Random generation failed to produce a usable instance within the retry budget.
struct generation_error : error {
    using error::error;
};

// An input falls outside the cases the normalization pipeline handles.
struct unsupported_case_error : error {
    using error::error;
};

} // namespace l1db
