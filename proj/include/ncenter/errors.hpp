#pragma once

#include <stdexcept>
#include <string>

namespace ncenter {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact
struct MalformedRational : Error { using Error::Error; };
struct ZeroDenominator : Error { using Error::Error; };

// model
struct InvalidConfig : Error { using Error::Error; };
struct SingularPoint : Error { using Error::Error; };
struct BranchPointHit : Error { using Error::Error; };

// homothetic solvers.  best_residual is the smallest residual any retry
// reached, so callers can tell a stall from a near-miss.
struct NoIsotropicPoint : Error {
    double best_residual;
    NoIsotropicPoint(const std::string& msg, double best)
        : Error(msg), best_residual(best) {}
};
struct DegenerateConfiguration : Error { using Error::Error; };
struct NoAdmissibleDirection : Error {
    double best_residual;
    NoAdmissibleDirection(const std::string& msg, double best)
        : Error(msg), best_residual(best) {}
};
struct GaugeDegenerate : Error { using Error::Error; };
struct RootFindingFailed : Error { using Error::Error; };

// certify
struct AlphaNotInTable : Error { using Error::Error; };
struct CertificationAborted : Error { using Error::Error; };

// simulate
struct NearCollision : Error {
    double time;
    NearCollision(const std::string& msg, double t) : Error(msg), time(t) {}
};
struct StepUnderflow : Error { using Error::Error; };
struct BranchApproach : Error { using Error::Error; };

}  // namespace ncenter
