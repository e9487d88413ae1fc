#pragma once

#include <optional>
#include <string>

#include "ncenter/arithmetic_set.hpp"
#include "ncenter/homothetic.hpp"

namespace ncenter {

// The quantities compared against the criteria table:
//   lambda = -alpha - 1, mu = 1 - alpha/2,
//   nu = +-sqrt((3 alpha/2 + 1)^2 - 4 alpha ratio),  ratio = a_k / C.
// Exact fields are filled when the ratio and the relevant roots are rational.
struct ExponentData {
    Rational lambda;
    Rational mu;
    Complex ratio{};
    std::optional<Rational> ratio_exact;
    Complex radicand{};
    std::optional<Rational> radicand_exact;
    Complex nu{};                     // principal branch; both signs tested downstream
    std::optional<Rational> nu_exact; // present when the radicand is a perfect square
};

ExponentData exponent_differences(const Rational& alpha, Complex ratio);
ExponentData exponent_differences_exact(const Rational& alpha, const Rational& ratio);

// One row of the criteria table.  The radical value is
//   radical_scale * sqrt(radical_constant - radical_coefficient * ratio)
// and relates to nu by radical = nu_scale * nu (nu_scale is 1 except for
// the alpha = 2/3 row, where it is 1/2).
struct CriterionRow {
    int index = 0;
    Rational alpha;
    Rational radical_scale;
    Rational radical_constant;
    Rational radical_coefficient;
    Rational nu_scale;
    ArithmeticSet set;
    std::string radical_text;  // canonical rendering, e.g. "sqrt(25/4 - 4 r)"
    std::string set_text;      // canonical rendering, e.g. "1/2+Z"
};

// The seven rows, indexed 1..7.
const std::vector<CriterionRow>& criterion_table();

// The unique row with matching alpha, absent otherwise.
std::optional<CriterionRow> table_row(const Rational& alpha);

struct CheckDetail {
    bool satisfied = false;
    int matched_sign = 0;           // +1 / -1 when a signed root is in the set
    Complex radical_value{};        // numeric value of the row radical
    std::optional<Rational> radical_exact;
    std::optional<Rational> radicand_exact;  // row radicand (before scale)
    bool exact_path = false;
    std::string summary;
};

// Exact path: the row radicand must be a nonnegative perfect rational square
// whose root (either sign, including the row prefactor) lies in the row set.
// Throws AlphaNotInTable.
CheckDetail check_criterion_exact(const Rational& alpha, const Rational& ratio);

// Numeric path with the principal branch of the square root; membership via
// set_contains_numeric for either sign.
CheckDetail check_criterion_numeric(const Rational& alpha, Complex ratio, double tol);

// Continued-fraction reconstruction: the rational p/q with q <= max_den
// reproducing x within tol, if any.
std::optional<Rational> reconstruct_rational(double x, long long max_den, double tol);

// Asserts that the alpha = 1 path reproduces the Newtonian criterion
// sqrt(25/4 - 4 rho/C) in 1/2+Z, formula by formula, over sampled rational
// ratios.
bool newtonian_specialization_check(std::uint64_t seed = 20260810, int samples = 100);

enum class VerdictKind { NonIntegrable, Inconclusive, AlphaExcluded };

const char* verdict_kind_name(VerdictKind k);

// Outcome of the criteria check for a single eigenvalue index k.
struct KCriterion {
    int k = 0;  // 1-based
    Complex ratio{};
    ExponentData exponents;
    CheckDetail check;
};

struct Witness {
    int k = 0;
    std::string reason;
};

struct CertifyOptions {
    int l = 0;  // 0: min(N, n)
    Gauge gauge = Gauge::CFixedToOne;
    ExponentConvention convention = ExponentConvention::PaperLiteral;
    double tol = 1e-9;
    std::uint64_t seed = 1;
    std::optional<CVector> isotropic_point;
};

// A Verdict never claims integrability: the table holds necessary
// conditions only, so the positive outcome is Inconclusive.
struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::string reason;  // "alpha-excluded" | "criterion-violated" | "all-criteria-satisfied"
    std::vector<Witness> witnesses;
    std::optional<CriterionRow> row;
    std::optional<HomotheticData> homothetic;
    std::vector<KCriterion> checks;      // under options.convention
    std::vector<KCriterion> checks_alt;  // under the other convention
    std::vector<Complex> eigenvalues_alt;
    CertifyOptions options;
};

// Full pipeline: table lookup, homothetic data, per-k criteria.  Solver
// failures surface as CertificationAborted, never as a verdict.
Verdict certify(const Configuration& config, const CertifyOptions& options);

// Test hook: run the per-k checks on externally supplied ratios a_k/C.
Verdict certify_with_ratios(const Rational& alpha, const std::vector<Complex>& ratios,
                            double tol);

// Reduced fractions p/q in (0, 2) with q <= den_max, each marked true when
// criteria exist for it (it is one of the seven table values).
std::vector<std::pair<Rational, bool>> scan_alphas(int den_max);

}  // namespace ncenter
