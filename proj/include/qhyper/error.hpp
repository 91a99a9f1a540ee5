#pragma once

#include <stdexcept>
#include <string>

namespace qhyper {

// Precondition violations: bad sizes, arity mismatches, out-of-range axes.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation at a point where a denominator vanishes, or an odd power of v
// at a non-square rational.
struct eval_error : domain_error {
    using domain_error::domain_error;
};

} // namespace qhyper
