#pragma once

#include <stdexcept>

namespace qdot {

// Each failure mode carries the name of the violated contract. All derive
// from std::runtime_error so callers may also catch broadly.

struct TraceError : std::runtime_error { using std::runtime_error::runtime_error; };
struct NegativeDiagonal : std::runtime_error { using std::runtime_error::runtime_error; };
struct BlockNotPSD : std::runtime_error { using std::runtime_error::runtime_error; };
struct DomainError : std::runtime_error { using std::runtime_error::runtime_error; };
struct BasisNotOrthonormal : std::runtime_error { using std::runtime_error::runtime_error; };
struct TemperatureTooSmall : std::runtime_error { using std::runtime_error::runtime_error; };
struct NoConvergence : std::runtime_error { using std::runtime_error::runtime_error; };
struct NumericalFailure : std::runtime_error { using std::runtime_error::runtime_error; };
struct EmptySweep : std::runtime_error { using std::runtime_error::runtime_error; };

}  // namespace qdot
