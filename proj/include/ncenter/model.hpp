#pragma once

#include <vector>

#include "ncenter/linalg.hpp"
#include "ncenter/rational.hpp"

namespace ncenter {

// An N-center problem: H(q,p) = |p|^2/2 - sum_i m_i |q - c_i|^{-alpha},
// with fixed centers c_i in R^n, positive masses and rational alpha in (0,2)
// (the degree of the singularities).
class Configuration {
  public:
    Configuration(int n, std::vector<std::vector<double>> centers,
                  std::vector<double> masses, Rational alpha);

    int dimension() const { return n_; }
    int num_centers() const { return static_cast<int>(centers_.size()); }
    const std::vector<std::vector<double>>& centers() const { return centers_; }
    const std::vector<double>& masses() const { return masses_; }
    const Rational& alpha() const { return alpha_; }
    double alpha_value() const { return alpha_value_; }

  private:
    int n_;
    std::vector<std::vector<double>> centers_;
    std::vector<double> masses_;
    Rational alpha_;
    double alpha_value_;
};

struct PhaseState {
    std::vector<double> q;
    std::vector<double> p;
};

// -sum_i m_i |q - c_i|^{-alpha}.  Throws SingularPoint on a center.
double potential(const Configuration& config, const std::vector<double>& q);

// -grad(potential) = -sum_i alpha m_i (q - c_i) |q - c_i|^{-alpha-2}.
std::vector<double> force(const Configuration& config, const std::vector<double>& q);

double hamiltonian(const Configuration& config, const PhaseState& state);

// Right-hand side of the auxiliary (collision) system
//   dp/dt = sum_i m_i (e - c_i) / ( (alpha/2) [2 q.(e - c_i)]^{(alpha+2)/2} ),
// with the bilinear dot product and the principal branch of the complex
// power.  Throws BranchPointHit when some 2 q.(e - c_i) vanishes.
CVector aux_rhs(const Configuration& config, const CVector& e, const CVector& q);

// The N complex numbers (e - c_k).(e - c_k) (bilinear, no conjugation).
// The isotropy condition asks the first l of them to vanish and the rest
// to stay away from zero; the caller checks.
std::vector<Complex> isotropy_residuals(const Configuration& config, const CVector& e);

// Center position k as a complex vector.
CVector center_complex(const Configuration& config, int k);

}  // namespace ncenter
