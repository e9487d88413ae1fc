#include "ncenter/polyroots.hpp"

#include <algorithm>
#include <cmath>

namespace ncenter {

std::vector<Complex> characteristic_polynomial(const CMatrix& a) {
    const int n = a.rows;
    std::vector<Complex> c(n + 1, 0.0);
    c[0] = 1.0;
    CMatrix m = a;
    c[1] = -trace(m);
    for (int k = 2; k <= n; ++k) {
        // M_k = A (M_{k-1} + c_{k-1} I)
        CMatrix shifted = m;
        for (int i = 0; i < n; ++i)
            shifted(i, i) += c[k - 1];
        m = mat_mul(a, shifted);
        c[k] = -trace(m) / static_cast<double>(k);
    }
    return c;
}

Complex polynomial_eval(const std::vector<Complex>& coeffs, Complex x) {
    Complex v = coeffs[0];
    for (size_t k = 1; k < coeffs.size(); ++k)
        v = v * x + coeffs[k];
    return v;
}

namespace {

Complex polynomial_deriv_eval(const std::vector<Complex>& coeffs, Complex x) {
    const int deg = static_cast<int>(coeffs.size()) - 1;
    Complex v = coeffs[0] * static_cast<double>(deg);
    for (int k = 1; k < deg; ++k)
        v = v * x + coeffs[k] * static_cast<double>(deg - k);
    return v;
}

std::vector<Complex> durand_kerner(const std::vector<Complex>& coeffs) {
    const int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg == 1)
        return {-coeffs[1]};

    double radius = 0.0;
    for (int k = 1; k <= deg; ++k)
        radius = std::max(radius, std::pow(std::abs(coeffs[k]), 1.0 / k));
    radius = 1.0 + radius;

    std::vector<Complex> z(deg);
    for (int j = 0; j < deg; ++j) {
        double ang = 2.0 * M_PI * j / deg + 0.4;
        z[j] = radius * Complex(std::cos(ang), std::sin(ang));
    }

    const int max_iter = 500;
    bool converged = false;
    for (int iter = 0; iter < max_iter && !converged; ++iter) {
        double worst = 0.0;
        for (int j = 0; j < deg; ++j) {
            Complex denom = 1.0;
            for (int k = 0; k < deg; ++k)
                if (k != j)
                    denom *= z[j] - z[k];
            if (denom == 0.0) {
                z[j] += Complex(1e-8, 1e-8);
                worst = 1.0;
                continue;
            }
            Complex dz = polynomial_eval(coeffs, z[j]) / denom;
            z[j] -= dz;
            worst = std::max(worst, std::abs(dz) / (1.0 + std::abs(z[j])));
        }
        converged = worst <= 1e-12;
    }
    if (!converged)
        throw RootFindingFailed("polynomial_roots: Durand-Kerner did not converge "
                                "within 500 iterations");

    // Newton polish; skipped near multiple roots where p' is tiny.
    for (int j = 0; j < deg; ++j) {
        for (int it = 0; it < 4; ++it) {
            Complex dp = polynomial_deriv_eval(coeffs, z[j]);
            if (std::abs(dp) < 1e-14)
                break;
            z[j] -= polynomial_eval(coeffs, z[j]) / dp;
        }
    }
    return z;
}

}  // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
    const int deg = static_cast<int>(coeffs.size()) - 1;

    double scale = 1.0;
    for (int k = 1; k <= deg; ++k)
        scale = std::max(scale, std::pow(std::abs(coeffs[k]), 1.0 / k));

    // trailing coefficients at rounding level: exact zero roots
    int effective = deg;
    double tol = 1e-13;
    while (effective > 0 &&
           std::abs(coeffs[effective]) <= tol * std::pow(scale, effective))
        --effective;

    std::vector<Complex> roots;
    roots.reserve(deg);
    for (int j = effective; j < deg; ++j)
        roots.push_back(0.0);

    if (effective > 0) {
        std::vector<Complex> reduced(coeffs.begin(), coeffs.begin() + effective + 1);
        auto found = durand_kerner(reduced);
        roots.insert(roots.end(), found.begin(), found.end());
    }
    return roots;
}

std::vector<Complex> eigenvalues(const CMatrix& a) {
    const int n = a.rows;
    auto roots = polynomial_roots(characteristic_polynomial(a));

    double norm = std::max(1.0, frobenius_norm(a));
    double bound = 1e-8 * std::pow(norm, n);
    for (const auto& r : roots) {
        CMatrix shifted = a;
        for (int i = 0; i < n; ++i)
            shifted(i, i) -= r;
        if (std::abs(determinant(std::move(shifted))) > bound)
            throw RootFindingFailed("eigenvalues: root fails the determinant residual bound");
    }

    std::sort(roots.begin(), roots.end(), [](const Complex& x, const Complex& y) {
        if (x.real() != y.real())
            return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return roots;
}

}  // namespace ncenter
