#include "ncenter/model.hpp"

#include <cmath>
#include <string>

namespace ncenter {

namespace {

double dist2(const std::vector<double>& q, const std::vector<double>& c) {
    double s = 0.0;
    for (size_t i = 0; i < q.size(); ++i) {
        double d = q[i] - c[i];
        s += d * d;
    }
    return s;
}

}  // namespace

Configuration::Configuration(int n, std::vector<std::vector<double>> centers,
                             std::vector<double> masses, Rational alpha)
    : n_(n), centers_(std::move(centers)), masses_(std::move(masses)),
      alpha_(std::move(alpha)) {
    if (n_ < 2)
        throw InvalidConfig("dimension: must be at least 2");
    if (centers_.empty())
        throw InvalidConfig("centers: at least one center required");
    if (masses_.size() != centers_.size())
        throw InvalidConfig("masses: count must match centers");
    for (size_t i = 0; i < centers_.size(); ++i) {
        if (static_cast<int>(centers_[i].size()) != n_)
            throw InvalidConfig("centers: center " + std::to_string(i + 1) +
                                " has wrong dimension");
        if (!(masses_[i] > 0.0))
            throw InvalidConfig("masses: mass " + std::to_string(i + 1) +
                                " must be positive");
    }
    // exact comparison: coincident centers merge masses and are a user error
    for (size_t i = 0; i < centers_.size(); ++i)
        for (size_t j = i + 1; j < centers_.size(); ++j)
            if (centers_[i] == centers_[j])
                throw InvalidConfig("centers: centers " + std::to_string(i + 1) +
                                    " and " + std::to_string(j + 1) + " coincide");
    if (!(Rational(0) < alpha_) || !(alpha_ < Rational(2)))
        throw InvalidConfig("alpha: must lie in (0,2), got " + alpha_.str());
    alpha_value_ = alpha_.to_double();
}

double potential(const Configuration& config, const std::vector<double>& q) {
    const double alpha = config.alpha_value();
    double v = 0.0;
    for (int i = 0; i < config.num_centers(); ++i) {
        double r2 = dist2(q, config.centers()[i]);
        if (r2 < 1e-280)
            throw SingularPoint("potential: point coincides with center " +
                                std::to_string(i + 1));
        v -= config.masses()[i] * std::pow(r2, -alpha / 2.0);
    }
    return v;
}

std::vector<double> force(const Configuration& config, const std::vector<double>& q) {
    const double alpha = config.alpha_value();
    std::vector<double> f(q.size(), 0.0);
    for (int i = 0; i < config.num_centers(); ++i) {
        const auto& c = config.centers()[i];
        double r2 = dist2(q, c);
        if (r2 < 1e-280)
            throw SingularPoint("force: point coincides with center " +
                                std::to_string(i + 1));
        double w = config.masses()[i] * alpha * std::pow(r2, -(alpha + 2.0) / 2.0);
        for (size_t j = 0; j < q.size(); ++j)
            f[j] -= w * (q[j] - c[j]);
    }
    return f;
}

double hamiltonian(const Configuration& config, const PhaseState& state) {
    double kinetic = 0.0;
    for (double pj : state.p)
        kinetic += pj * pj;
    return 0.5 * kinetic + potential(config, state.q);
}

CVector center_complex(const Configuration& config, int k) {
    return to_complex(config.centers()[k]);
}

CVector aux_rhs(const Configuration& config, const CVector& e, const CVector& q) {
    const double alpha = config.alpha_value();
    const double expo = (alpha + 2.0) / 2.0;
    CVector out(config.dimension(), 0.0);
    for (int i = 0; i < config.num_centers(); ++i) {
        CVector ec = vec_sub(e, center_complex(config, i));
        Complex w = 2.0 * bilinear_dot(q, ec);
        if (std::abs(w) < 1e-280)
            throw BranchPointHit("aux_rhs: 2 q.(e - c_" + std::to_string(i + 1) +
                                 ") vanishes");
        Complex denom = (alpha / 2.0) * std::pow(w, Complex(expo, 0.0));
        Complex coeff = config.masses()[i] / denom;
        for (int j = 0; j < config.dimension(); ++j)
            out[j] += coeff * ec[j];
    }
    return out;
}

std::vector<Complex> isotropy_residuals(const Configuration& config, const CVector& e) {
    std::vector<Complex> res(config.num_centers());
    for (int k = 0; k < config.num_centers(); ++k) {
        CVector ec = vec_sub(e, center_complex(config, k));
        res[k] = bilinear_dot(ec, ec);
    }
    return res;
}

}  // namespace ncenter
