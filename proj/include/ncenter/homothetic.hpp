#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "ncenter/model.hpp"
#include "ncenter/polyroots.hpp"

namespace ncenter {

// Scaling freedom of the direction relation: (V, C) -> (sV, s^{-(alpha+4)/2} C).
// CFixedToOne pins C = 1; UnitBilinearNorm pins V.V = 1 and reports the
// induced C.
enum class Gauge { CFixedToOne, UnitBilinearNorm };

// Exponent in the variational matrix denominator [2V.(e-c_k)]^E:
// PaperLiteral uses E = (alpha+2)/2 as printed, HessianConsistent uses
// E = (alpha+4)/2, the unique exponent that makes a_k/C gauge-invariant
// (it is the actual derivative of the auxiliary flow's right-hand side).
enum class ExponentConvention { PaperLiteral, HessianConsistent };

const char* gauge_name(Gauge g);
const char* convention_name(ExponentConvention c);

struct HomotheticData {
    CVector e;
    int l = 0;
    CVector V;
    Complex C;
    CMatrix A;                         // under `convention`
    std::vector<Complex> eigenvalues;  // of A, (Re, Im) lexicographic
    Gauge gauge = Gauge::CFixedToOne;
    ExponentConvention convention = ExponentConvention::PaperLiteral;

    double isotropy_residual = 0.0;   // max |(e-c_k)^2| over k <= l
    double direction_residual = 0.0;  // |CV - aux_rhs(V)| / |CV|
};

// A point e with (e-c_k)^2 = 0 for k <= l and |(e-c_k)^2| >= 1e-6 for k > l.
// Closed form for n = 2 (isotropic rays e = c_1 + t(1, +-i)); damped Newton
// from seeded random starts otherwise.
CVector find_isotropic_point(const Configuration& config, int l, std::uint64_t seed);

// The Newton path regardless of dimension; the closed form is checked
// against it in tests.
CVector find_isotropic_point_newton(const Configuration& config, int l,
                                    std::uint64_t seed);

// Solves C.V = aux_rhs(V) under the chosen gauge by damped Newton from 64
// seeded random starts (first converged start wins, so the result does not
// depend on scheduling).
std::pair<CVector, Complex> solve_direction(const Configuration& config,
                                            const CVector& e, int l, Gauge gauge,
                                            std::uint64_t seed);

// A_ij = sum_k (alpha+2) m_k (e_i - c_i^k)(e_j - c_j^k) / [2V.(e-c_k)]^E.
// Complex symmetric exactly by construction.
CMatrix variational_matrix(const Configuration& config, const CVector& e,
                           const CVector& V, ExponentConvention convention);

double direction_residual(const Configuration& config, const CVector& e,
                          const CVector& V, Complex C);

// max over sampled g of |(C/g^{(alpha+2)/2}) V - aux_rhs(e, gV)| / |CV|.
// Zero (up to rounding) exactly when q(t) = g(t)V solves the auxiliary
// system whenever g'' = C g^{-(alpha+2)/2}.
double homothetic_residual(const Configuration& config, const CVector& e,
                           const CVector& V, Complex C,
                           const std::vector<double>& g_samples);

struct HomotheticOptions {
    int l = 0;  // 0: use min(N, n)
    Gauge gauge = Gauge::CFixedToOne;
    ExponentConvention convention = ExponentConvention::PaperLiteral;
    std::uint64_t seed = 1;
    std::optional<CVector> isotropic_point;  // skip the solver, validate instead
};

// Full pipeline: isotropic point, direction, matrix, eigenvalues, with all
// residual invariants checked.
HomotheticData build_homothetic_data(const Configuration& config,
                                     const HomotheticOptions& options);

}  // namespace ncenter
