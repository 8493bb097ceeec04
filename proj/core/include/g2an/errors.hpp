#pragma once

#include <stdexcept>
#include <string>

namespace g2an {

// Base class for every numeric failure the engine can signal.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition violations: mismatched series centers, i == j where a pair of
// distinct indices is required, out-of-table residue arguments, bad input.
struct DomainError : Error {
    using Error::Error;
};

// An iteration (Aberth, Newton polish, Newton inversion) hit its cap without
// meeting its residual bound.
struct NonConvergenceError : Error {
    using Error::Error;
};

// Two polynomial roots closer than the caustic threshold.
struct RootClusterError : Error {
    using Error::Error;
};

// Parameter point lies on (or too close to) the caustic: critical points of
// the superpotential collide.
struct CausticError : Error {
    using Error::Error;
};

struct SingularJacobianError : Error {
    using Error::Error;
};

// The admissible-point sampler gave up after its attempt budget.
struct RejectionExhaustedError : Error {
    using Error::Error;
};

} // namespace g2an
