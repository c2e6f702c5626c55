#pragma once

#include <stdexcept>
#include <string>

namespace macd {

struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// vanishing denominator factor
struct PoleError : MathError {
    using MathError::MathError;
};
struct SingularError : MathError {
    using MathError::MathError;
};
// zero norm during Gram-Schmidt
struct DegenerateError : MathError {
    using MathError::MathError;
};
struct PrecisionError : MathError {
    using MathError::MathError;
};
struct ConvergenceError : MathError {
    using MathError::MathError;
};
struct LengthError : MathError {
    using MathError::MathError;
};
struct NotSymmetricError : MathError {
    using MathError::MathError;
};
struct SupportError : MathError {
    using MathError::MathError;
};

}  // namespace macd
