#include "ncenter/homothetic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ncenter/rng.hpp"

namespace ncenter {

namespace {

constexpr int kRetries = 64;
constexpr int kMaxIterations = 200;
constexpr double kConvergeTol = 1e-13;

double isotropy_scale(const Configuration& config, const CVector& e, int l) {
    double s = 0.0;
    for (int k = 0; k < l; ++k) {
        double d = vec_norm(vec_sub(e, center_complex(config, k)));
        s = std::max(s, d * d);
    }
    return 1.0 + s;
}

// max_k<=l |(e-c_k)^2| relative to the squared distances involved
double isotropy_residual_rel(const Configuration& config, const CVector& e, int l) {
    auto res = isotropy_residuals(config, e);
    double worst = 0.0;
    for (int k = 0; k < l; ++k)
        worst = std::max(worst, std::abs(res[k]));
    return worst / isotropy_scale(config, e, l);
}

// |(e-c_k)^2| >= 1e-6 for every k > l
bool margins_hold(const Configuration& config, const CVector& e, int l) {
    auto res = isotropy_residuals(config, e);
    for (int k = l; k < config.num_centers(); ++k)
        if (std::abs(res[k]) < 1e-6)
            return false;
    return true;
}

void check_l(const Configuration& config, int l) {
    if (l < 1 || l > config.num_centers())
        throw InvalidConfig("l: must be between 1 and the number of centers");
}

CVector closed_form_planar(const Configuration& config, int l, bool& saw_degenerate,
                           double& best_residual) {
    const auto& c1 = config.centers()[0];
    for (int branch = 0; branch < 2; ++branch) {
        const Complex unit_i(0.0, branch == 0 ? 1.0 : -1.0);
        const CVector dir = {Complex(1.0, 0.0), unit_i};

        auto candidate = [&](Complex t) {
            CVector e = to_complex(c1);
            e[0] += t * dir[0];
            e[1] += t * dir[1];
            return e;
        };

        if (l == 1) {
            // any t on the ray works; walk a ladder until the k > l margins hold
            for (int attempt = 1; attempt <= kRetries; ++attempt) {
                CVector e = candidate(Complex(attempt, 0.0));
                best_residual = std::min(best_residual, isotropy_residual_rel(config, e, l));
                if (margins_hold(config, e, l))
                    return e;
                saw_degenerate = true;
            }
        } else {
            // (e-c_2)^2 = |c_1-c_2|^2 + 2 t dir.(c_1-c_2) is linear in t
            const auto& c2 = config.centers()[1];
            Complex delta0(c1[0] - c2[0], 0.0);
            Complex delta1(c1[1] - c2[1], 0.0);
            Complex quad = delta0 * delta0 + delta1 * delta1;
            Complex lin = 2.0 * (dir[0] * delta0 + dir[1] * delta1);
            if (std::abs(lin) == 0.0)
                continue;
            CVector e = candidate(-quad / lin);
            double res = isotropy_residual_rel(config, e, l);
            best_residual = std::min(best_residual, res);
            if (res <= 1e-12) {
                if (margins_hold(config, e, l))
                    return e;
                saw_degenerate = true;
            }
        }
    }
    return {};
}

}  // namespace

const char* gauge_name(Gauge g) {
    return g == Gauge::CFixedToOne ? "c-fixed-to-one" : "unit-bilinear-norm";
}

const char* convention_name(ExponentConvention c) {
    return c == ExponentConvention::PaperLiteral ? "paper-literal" : "hessian-consistent";
}

CVector find_isotropic_point_newton(const Configuration& config, int l,
                                    std::uint64_t seed) {
    check_l(config, l);
    const int n = config.dimension();

    double spread = 0.0;
    for (const auto& c : config.centers())
        for (double x : c)
            spread = std::max(spread, std::fabs(x));
    const double scale = 1.0 + spread;

    CVector centroid(n, 0.0);
    for (int k = 0; k < l; ++k) {
        CVector c = center_complex(config, k);
        for (int j = 0; j < n; ++j)
            centroid[j] += c[j] / static_cast<double>(l);
    }

    DetRng rng(seed);
    double best_residual = std::numeric_limits<double>::infinity();
    bool saw_degenerate = false;

    for (int retry = 0; retry < kRetries; ++retry) {
        CVector e(n);
        for (int j = 0; j < n; ++j)
            e[j] = centroid[j] + rng.complex_box(scale);

        double res = isotropy_residual_rel(config, e, l);
        bool converged = false;
        for (int iter = 0; iter < kMaxIterations && !converged; ++iter) {
            best_residual = std::min(best_residual, res);
            if (res <= kConvergeTol) {
                converged = true;
                break;
            }
            auto residuals = isotropy_residuals(config, e);
            CVector f(l);
            for (int k = 0; k < l; ++k)
                f[k] = -residuals[k];
            CMatrix jac(l, n);
            for (int k = 0; k < l; ++k) {
                CVector ec = vec_sub(e, center_complex(config, k));
                for (int j = 0; j < n; ++j)
                    jac(k, j) = 2.0 * ec[j];
            }
            CVector step;
            try {
                step = min_norm_solve(jac, f);
            } catch (const Error&) {
                break;
            }
            double damping = 1.0;
            bool improved = false;
            for (int halvings = 0; halvings < 40; ++halvings) {
                CVector trial(n);
                for (int j = 0; j < n; ++j)
                    trial[j] = e[j] + damping * step[j];
                double trial_res = isotropy_residual_rel(config, trial, l);
                if (trial_res < res) {
                    e = std::move(trial);
                    res = trial_res;
                    improved = true;
                    break;
                }
                damping *= 0.5;
            }
            if (!improved)
                break;
        }
        if (res <= kConvergeTol)
            best_residual = std::min(best_residual, res);
        if (res <= kConvergeTol || isotropy_residual_rel(config, e, l) <= kConvergeTol) {
            if (margins_hold(config, e, l))
                return e;
            saw_degenerate = true;
        }
    }

    if (saw_degenerate)
        throw DegenerateConfiguration(
            "find_isotropic_point: every solution violates a k > l nondegeneracy "
            "condition");
    throw NoIsotropicPoint("find_isotropic_point: Newton failed from " +
                               std::to_string(kRetries) + " starts (best residual " +
                               std::to_string(best_residual) + ")",
                           best_residual);
}

CVector find_isotropic_point(const Configuration& config, int l, std::uint64_t seed) {
    check_l(config, l);
    if (config.dimension() == 2) {
        bool saw_degenerate = false;
        double best_residual = std::numeric_limits<double>::infinity();
        CVector e = closed_form_planar(config, l, saw_degenerate, best_residual);
        if (!e.empty())
            return e;
        if (saw_degenerate)
            throw DegenerateConfiguration(
                "find_isotropic_point: every isotropic ray through the first "
                "centers violates a k > l nondegeneracy condition");
        throw NoIsotropicPoint(
            "find_isotropic_point: no planar isotropic point for l = " +
                std::to_string(l) + " (best residual " + std::to_string(best_residual) +
                ")",
            best_residual);
    }
    return find_isotropic_point_newton(config, l, seed);
}

namespace {

void check_isotropic(const Configuration& config, const CVector& e, int l) {
    if (static_cast<int>(e.size()) != config.dimension())
        throw InvalidConfig("e: dimension mismatch");
    auto res = isotropy_residuals(config, e);
    double enorm = vec_norm(e);
    double tol = 1e-10 * (1.0 + enorm * enorm);
    for (int k = 0; k < l; ++k)
        if (std::abs(res[k]) > tol)
            throw InvalidConfig("e: (e-c_" + std::to_string(k + 1) +
                                ")^2 does not vanish");
    for (int k = l; k < config.num_centers(); ++k)
        if (std::abs(res[k]) < 1e-6)
            throw InvalidConfig("e: (e-c_" + std::to_string(k + 1) +
                                ")^2 is too close to zero for k > l");
}

// relative residual of C.V = aux_rhs(V); infinity on branch points
double direction_res_or_inf(const Configuration& config, const CVector& e,
                            const CVector& v, Complex c) {
    try {
        CVector lhs = vec_scale(c, v);
        CVector rhs = aux_rhs(config, e, v);
        double denom = std::max(vec_norm(lhs), 1e-12);
        return vec_dist(lhs, rhs) / denom;
    } catch (const Error&) {
        return std::numeric_limits<double>::infinity();
    }
}

// d(aux_rhs)/dV = -(2/alpha) * A_hessian_consistent(V)
CMatrix aux_jacobian(const Configuration& config, const CVector& e, const CVector& v) {
    CMatrix a = variational_matrix(config, e, v, ExponentConvention::HessianConsistent);
    double factor = -2.0 / config.alpha_value();
    for (auto& x : a.a)
        x *= factor;
    return a;
}

std::pair<CVector, Complex> solve_direction_c1(const Configuration& config,
                                               const CVector& e, std::uint64_t seed,
                                               double& best_residual) {
    const int n = config.dimension();
    DetRng rng(seed);
    best_residual = std::numeric_limits<double>::infinity();

    for (int retry = 0; retry < kRetries; ++retry) {
        CVector v(n);
        for (int j = 0; j < n; ++j)
            v[j] = rng.complex_box(2.0);

        double res = direction_res_or_inf(config, e, v, 1.0);
        for (int iter = 0; iter < kMaxIterations; ++iter) {
            best_residual = std::min(best_residual, res);
            if (res <= kConvergeTol)
                return {v, Complex(1.0, 0.0)};

            CMatrix jac;
            CVector g;
            try {
                jac = aux_jacobian(config, e, v);
                for (int i = 0; i < n; ++i)
                    jac(i, i) -= 1.0;
                CVector rhs = aux_rhs(config, e, v);
                g.resize(n);
                for (int i = 0; i < n; ++i)
                    g[i] = v[i] - rhs[i];  // -(aux - V)
            } catch (const Error&) {
                break;
            }

            CVector step;
            try {
                step = solve_linear(std::move(jac), std::move(g));
            } catch (const Error&) {
                break;
            }

            double damping = 1.0;
            bool improved = false;
            for (int halvings = 0; halvings < 40; ++halvings) {
                CVector trial(n);
                for (int j = 0; j < n; ++j)
                    trial[j] = v[j] + damping * step[j];
                double trial_res = direction_res_or_inf(config, e, trial, 1.0);
                if (trial_res < res) {
                    v = std::move(trial);
                    res = trial_res;
                    improved = true;
                    break;
                }
                damping *= 0.5;
            }
            if (!improved)
                break;
        }
    }
    throw NoAdmissibleDirection(
        "solve_direction: Newton failed from " + std::to_string(kRetries) +
            " starts (best residual " + std::to_string(best_residual) + ")",
        best_residual);
}

std::pair<CVector, Complex> solve_direction_unit(const Configuration& config,
                                                 const CVector& e, std::uint64_t seed,
                                                 double& best_residual) {
    const int n = config.dimension();
    DetRng rng(seed);
    best_residual = std::numeric_limits<double>::infinity();

    auto residual = [&](const CVector& v, Complex c) {
        double head = direction_res_or_inf(config, e, v, c);
        double tail = std::abs(bilinear_dot(v, v) - 1.0);
        return std::max(head, tail);
    };

    for (int retry = 0; retry < kRetries; ++retry) {
        CVector v(n);
        for (int j = 0; j < n; ++j)
            v[j] = rng.complex_box(2.0);
        Complex vv = bilinear_dot(v, v);
        if (std::abs(vv) > 1e-12) {
            Complex s = std::sqrt(vv);
            for (auto& x : v)
                x /= s;
        }
        Complex c;
        try {
            CVector rhs = aux_rhs(config, e, v);
            c = bilinear_dot(rhs, v) / bilinear_dot(v, v);
        } catch (const Error&) {
            continue;
        }

        double res = residual(v, c);
        for (int iter = 0; iter < kMaxIterations; ++iter) {
            best_residual = std::min(best_residual, res);
            if (res <= kConvergeTol)
                return {v, c};

            CMatrix jac(n + 1, n + 1);
            CVector g(n + 1);
            try {
                CMatrix ja = aux_jacobian(config, e, v);
                CVector rhs = aux_rhs(config, e, v);
                for (int i = 0; i < n; ++i) {
                    for (int j = 0; j < n; ++j)
                        jac(i, j) = ja(i, j);
                    jac(i, i) -= c;
                    jac(i, n) = -v[i];
                    jac(n, i) = 2.0 * v[i];
                    g[i] = c * v[i] - rhs[i];  // -(aux - CV)
                }
                jac(n, n) = 0.0;
                g[n] = -(bilinear_dot(v, v) - 1.0);
            } catch (const Error&) {
                break;
            }

            CVector step;
            try {
                step = solve_linear(std::move(jac), std::move(g));
            } catch (const Error&) {
                break;
            }

            double damping = 1.0;
            bool improved = false;
            for (int halvings = 0; halvings < 40; ++halvings) {
                CVector trial(n);
                for (int j = 0; j < n; ++j)
                    trial[j] = v[j] + damping * step[j];
                Complex trial_c = c + damping * step[n];
                double trial_res = residual(trial, trial_c);
                if (trial_res < res) {
                    v = std::move(trial);
                    c = trial_c;
                    res = trial_res;
                    improved = true;
                    break;
                }
                damping *= 0.5;
            }
            if (!improved)
                break;
        }
    }

    // distinguish a structurally empty family from a gauge that cannot be
    // normalized: if C = 1 succeeds but V.V = 0, the unit gauge is degenerate
    try {
        double ignored;
        auto [v, c] = solve_direction_c1(config, e, seed, ignored);
        (void)c;
        double vnorm = vec_norm(v);
        if (std::abs(bilinear_dot(v, v)) <= 1e-8 * vnorm * vnorm)
            throw GaugeDegenerate("solve_direction: V.V = 0, unit bilinear norm "
                                  "gauge is degenerate");
    } catch (const NoAdmissibleDirection&) {
    }
    throw NoAdmissibleDirection(
        "solve_direction: Newton failed from " + std::to_string(kRetries) +
            " starts (best residual " + std::to_string(best_residual) + ")",
        best_residual);
}

}  // namespace

std::pair<CVector, Complex> solve_direction(const Configuration& config,
                                            const CVector& e, int l, Gauge gauge,
                                            std::uint64_t seed) {
    check_l(config, l);
    check_isotropic(config, e, l);
    double best = 0.0;
    if (gauge == Gauge::CFixedToOne)
        return solve_direction_c1(config, e, seed, best);
    return solve_direction_unit(config, e, seed, best);
}

CMatrix variational_matrix(const Configuration& config, const CVector& e,
                           const CVector& v, ExponentConvention convention) {
    const int n = config.dimension();
    const double alpha = config.alpha_value();
    const double expo = convention == ExponentConvention::PaperLiteral
                            ? (alpha + 2.0) / 2.0
                            : (alpha + 4.0) / 2.0;
    CMatrix a(n, n);
    for (int k = 0; k < config.num_centers(); ++k) {
        CVector ec = vec_sub(e, center_complex(config, k));
        Complex w = 2.0 * bilinear_dot(v, ec);
        if (std::abs(w) < 1e-280)
            throw BranchPointHit("variational_matrix: 2 V.(e - c_" +
                                 std::to_string(k + 1) + ") vanishes");
        Complex coeff =
            (alpha + 2.0) * config.masses()[k] / std::pow(w, Complex(expo, 0.0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a(i, j) += coeff * ec[i] * ec[j];
    }
    return a;
}

double direction_residual(const Configuration& config, const CVector& e,
                          const CVector& v, Complex c) {
    CVector lhs = vec_scale(c, v);
    CVector rhs = aux_rhs(config, e, v);
    return vec_dist(lhs, rhs) / std::max(vec_norm(lhs), 1e-300);
}

double homothetic_residual(const Configuration& config, const CVector& e,
                           const CVector& v, Complex c,
                           const std::vector<double>& g_samples) {
    const double alpha = config.alpha_value();
    const double denom = std::max(vec_norm(vec_scale(c, v)), 1e-300);
    double worst = 0.0;
    for (double g : g_samples) {
        if (!(g > 0.0))
            throw InvalidConfig("g_samples: samples must be positive");
        Complex lhs_scale = c / std::pow(g, (alpha + 2.0) / 2.0);
        CVector lhs = vec_scale(lhs_scale, v);
        CVector rhs = aux_rhs(config, e, vec_scale(Complex(g, 0.0), v));
        worst = std::max(worst, vec_dist(lhs, rhs) / denom);
    }
    return worst;
}

HomotheticData build_homothetic_data(const Configuration& config,
                                     const HomotheticOptions& options) {
    HomotheticData data;
    data.l = options.l > 0 ? options.l
                           : std::min(config.num_centers(), config.dimension());
    data.gauge = options.gauge;
    data.convention = options.convention;

    if (options.isotropic_point) {
        check_isotropic(config, *options.isotropic_point, data.l);
        data.e = *options.isotropic_point;
    } else {
        data.e = find_isotropic_point(config, data.l, options.seed);
    }

    auto res = isotropy_residuals(config, data.e);
    for (int k = 0; k < data.l; ++k)
        data.isotropy_residual = std::max(data.isotropy_residual, std::abs(res[k]));

    auto [v, c] = solve_direction(config, data.e, data.l, data.gauge, options.seed);
    data.V = std::move(v);
    data.C = c;
    data.direction_residual = direction_residual(config, data.e, data.V, data.C);
    if (data.direction_residual > 1e-10)
        throw NoAdmissibleDirection("build_homothetic_data: accepted direction "
                                    "misses the residual bound",
                                    data.direction_residual);

    data.A = variational_matrix(config, data.e, data.V, data.convention);
    data.eigenvalues = eigenvalues(data.A);
    return data;
}

}  // namespace ncenter
