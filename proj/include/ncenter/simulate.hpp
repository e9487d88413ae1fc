#pragma once

#include "ncenter/homothetic.hpp"
#include "ncenter/model.hpp"

namespace ncenter {

struct Trajectory {
    std::vector<double> times;
    std::vector<PhaseState> states;
    double energy_drift = 0.0;  // max relative |H(t) - H(0)| / |H(0)|
};

struct ScalarTrajectory {
    std::vector<double> times;
    std::vector<Complex> g;
    std::vector<Complex> dg;
    // E(t) = (g')^2/2 + (2C/alpha) g^{-alpha/2}, max relative drift
    double energy_drift = 0.0;
};

// Adaptive embedded Runge-Kutta 5(4) trajectory of the physical flow
//   dq/dt = p, dp/dt = force(q).
// Halts with NearCollision when a state comes within min_center_distance of
// a center, StepUnderflow when the controller collapses the step.
Trajectory integrate_flow(const Configuration& config, const PhaseState& state0,
                          double t_final, double rel_tol,
                          double min_center_distance = 1e-6);

// The scalar equation g'' = C / g^{(alpha+2)/2} (complex g admitted,
// principal branch).  BranchApproach when |g| < 1e-8.
ScalarTrajectory integrate_kepler_scalar(Complex C, const Rational& alpha, Complex g0,
                                         Complex dg0, double t_final, double rel_tol);

// Integrates the complex auxiliary flow from (q,p) = (V,0) and the scalar
// equation from (g,g') = (1,0) with the same C; returns the max over the
// window of |q(t) - g(t) V| / |V|.
double cross_validate_homothetic(const Configuration& config,
                                 const HomotheticData& hdata, double t_final,
                                 double rel_tol);

struct SectionSpec {
    int axis = 1;       // coordinate index defining the section q[axis] = value
    double value = 0.0;
    int direction = 1;  // +1 increasing, -1 decreasing, 0 both
};

struct SectionPoint {
    int trajectory = 0;  // input order, 0-based
    double t = 0.0;
    double coordinate = 0.0;  // the other coordinate
    double momentum = 0.0;    // its conjugate momentum
};

struct SectionResult {
    std::vector<SectionPoint> points;
    int completed = 0;                  // trajectories that reached t_final
    std::vector<std::string> failures;  // per-trajectory events, input order
};

// Planar (n = 2) Poincare section: transversal crossings of q[axis] = value
// detected by sign change and refined by bisection to 1e-10 in time.
// Near-collisions drop the trajectory and the run continues.
SectionResult poincare_section(const Configuration& config, double energy,
                               const SectionSpec& section,
                               const std::vector<PhaseState>& initial_conditions,
                               double t_final, double rel_tol,
                               double min_center_distance = 1e-6);

}  // namespace ncenter
