#include "ncenter/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "ncenter/rng.hpp"

namespace ncenter {

namespace {

std::string progression_text(const Progression& p) {
    // follow the table's own notation: odd integers stay "2Z+1", pure
    // lattices "(q)Z", everything else "offset+periodZ"
    if (p.offset == Rational(1) && p.period == Rational(2))
        return "2Z+1";
    if (p.offset.is_zero())
        return "(" + p.period.str() + ")Z";
    if (p.period == Rational(1))
        return p.offset.str() + "+Z";
    return p.offset.str() + "+" + p.period.str() + "Z";
}

std::string set_canonical_text(const ArithmeticSet& s) {
    if (s.progressions.size() == 1)
        return progression_text(s.progressions.front());
    std::string out;
    for (size_t i = 0; i < s.progressions.size(); ++i) {
        std::string t = progression_text(s.progressions[i]);
        if (t.front() != '(')
            t = "(" + t + ")";
        if (i)
            out += " u ";
        out += t;
    }
    return out;
}

std::string radical_canonical_text(const Rational& scale, const Rational& constant,
                                   const Rational& coefficient) {
    std::string inner = "sqrt(" + constant.str() + " - " + coefficient.str() + " r)";
    if (scale == Rational(1))
        return inner;
    return "(" + scale.str() + ") " + inner;
}

CriterionRow make_row(int index, Rational alpha, Rational scale, Rational constant,
                      Rational coefficient, Rational nu_scale,
                      std::vector<Progression> progressions) {
    CriterionRow row;
    row.index = index;
    row.alpha = std::move(alpha);
    row.radical_scale = std::move(scale);
    row.radical_constant = std::move(constant);
    row.radical_coefficient = std::move(coefficient);
    row.nu_scale = std::move(nu_scale);
    row.set.progressions = std::move(progressions);
    row.radical_text =
        radical_canonical_text(row.radical_scale, row.radical_constant,
                               row.radical_coefficient);
    row.set_text = set_canonical_text(row.set);
    return row;
}

std::string complex_brief(Complex z) {
    std::ostringstream os;
    os.precision(6);
    if (std::fabs(z.imag()) < 1e-13 * (1.0 + std::fabs(z.real()))) {
        os << z.real();
    } else {
        os << z.real() << (z.imag() < 0 ? " - " : " + ")
           << std::fabs(z.imag()) << "i";
    }
    return os.str();
}

}  // namespace

const std::vector<CriterionRow>& criterion_table() {
    static const std::vector<CriterionRow> rows = [] {
        std::vector<CriterionRow> t;
        t.push_back(make_row(1, Rational(1), Rational(1), Rational(25, 4), Rational(4),
                             Rational(1), {{Rational(1, 2), Rational(1)}}));
        t.push_back(make_row(2, Rational(4, 3), Rational(1), Rational(9),
                             Rational(16, 3), Rational(1),
                             {{Rational(1), Rational(2)},
                              {Rational(4, 3), Rational(2)},
                              {Rational(6, 5), Rational(2)}}));
        t.push_back(make_row(3, Rational(2, 3), Rational(1), Rational(1),
                             Rational(2, 3), Rational(1, 2),
                             {{Rational(0), Rational(1, 2)},
                              {Rational(1, 3), Rational(2)},
                              {Rational(1, 5), Rational(2)}}));
        t.push_back(make_row(4, Rational(1, 2), Rational(1), Rational(49, 16),
                             Rational(2), Rational(1), {{Rational(1, 2), Rational(1)}}));
        t.push_back(make_row(5, Rational(3, 2), Rational(1), Rational(169, 16),
                             Rational(6), Rational(1),
                             {{Rational(1, 3), Rational(1)},
                              {Rational(1, 2), Rational(1)}}));
        t.push_back(make_row(6, Rational(4, 5), Rational(1, 5), Rational(121),
                             Rational(80), Rational(1),
                             {{Rational(1, 3), Rational(2)}}));
        t.push_back(make_row(7, Rational(8, 5), Rational(1), Rational(289, 25),
                             Rational(32, 5), Rational(1),
                             {{Rational(3, 2), Rational(2)}}));
        return t;
    }();
    return rows;
}

std::optional<CriterionRow> table_row(const Rational& alpha) {
    for (const auto& row : criterion_table())
        if (row.alpha == alpha)
            return row;
    return std::nullopt;
}

ExponentData exponent_differences(const Rational& alpha, Complex ratio) {
    ExponentData d;
    d.lambda = -alpha - Rational(1);
    d.mu = Rational(1) - alpha / Rational(2);
    double a = alpha.to_double();
    double base = 1.5 * a + 1.0;
    d.ratio = ratio;
    d.radicand = Complex(base * base, 0.0) - 4.0 * a * ratio;
    d.nu = std::sqrt(d.radicand);
    return d;
}

ExponentData exponent_differences_exact(const Rational& alpha, const Rational& ratio) {
    ExponentData d = exponent_differences(alpha, Complex(ratio.to_double(), 0.0));
    d.ratio_exact = ratio;
    Rational base = Rational(3, 2) * alpha + Rational(1);
    Rational radicand = base * base - Rational(4) * alpha * ratio;
    d.radicand_exact = radicand;
    d.radicand = Complex(radicand.to_double(), 0.0);
    if (auto root = rat_sqrt(radicand)) {
        d.nu_exact = root;
        d.nu = Complex(root->to_double(), 0.0);
    } else {
        d.nu = std::sqrt(d.radicand);
    }
    return d;
}

CheckDetail check_criterion_exact(const Rational& alpha, const Rational& ratio) {
    auto row = table_row(alpha);
    if (!row)
        throw AlphaNotInTable("check_criterion: alpha " + alpha.str() +
                              " has no table row");

    CheckDetail d;
    d.exact_path = true;
    Rational radicand = row->radical_constant - row->radical_coefficient * ratio;
    d.radicand_exact = radicand;

    if (radicand.is_negative()) {
        d.satisfied = false;
        d.radical_value = Complex(row->radical_scale.to_double(), 0.0) *
                          std::sqrt(Complex(radicand.to_double(), 0.0));
        d.summary = "violated (radicand " + radicand.str() + " < 0)";
        return d;
    }
    auto root = rat_sqrt(radicand);
    if (!root) {
        d.satisfied = false;
        d.radical_value = row->radical_scale.to_double() *
                          std::sqrt(radicand.to_double());
        d.summary =
            "violated (radicand " + radicand.str() + " is not a rational square)";
        return d;
    }
    Rational value = row->radical_scale * *root;
    d.radical_exact = value;
    d.radical_value = Complex(value.to_double(), 0.0);

    for (const auto& prog : row->set.progressions) {
        if (progression_contains(value, prog)) {
            d.satisfied = true;
            d.matched_sign = 1;
            d.summary =
                "satisfied (" + value.str() + " in " + progression_text(prog) + ")";
            return d;
        }
        if (progression_contains(-value, prog)) {
            d.satisfied = true;
            d.matched_sign = -1;
            d.summary = "satisfied (" + (-value).str() + " in " +
                        progression_text(prog) + ")";
            return d;
        }
    }
    d.satisfied = false;
    d.summary = "violated (nu root " + value.str() + " not in " + row->set_text + ")";
    return d;
}

CheckDetail check_criterion_numeric(const Rational& alpha, Complex ratio, double tol) {
    auto row = table_row(alpha);
    if (!row)
        throw AlphaNotInTable("check_criterion: alpha " + alpha.str() +
                              " has no table row");
    if (!(tol > 0.0))
        throw InvalidConfig("tol: must be positive");

    CheckDetail d;
    d.exact_path = false;
    Complex radicand = Complex(row->radical_constant.to_double(), 0.0) -
                       row->radical_coefficient.to_double() * ratio;
    Complex value = row->radical_scale.to_double() * std::sqrt(radicand);
    d.radical_value = value;

    bool plus = set_contains_numeric(value, row->set, tol);
    bool minus = set_contains_numeric(-value, row->set, tol);
    d.satisfied = plus || minus;
    d.matched_sign = plus ? 1 : (minus ? -1 : 0);
    if (d.satisfied) {
        d.summary = "satisfied (" + complex_brief(plus ? value : -value) + " in " +
                    row->set_text + ")";
    } else if (std::fabs(value.imag()) > tol) {
        d.summary = "violated (nu root " + complex_brief(value) + " is not real)";
    } else {
        d.summary = "violated (nu root " + complex_brief(value) + " not in " +
                    row->set_text + ")";
    }
    return d;
}

std::optional<Rational> reconstruct_rational(double x, long long max_den, double tol) {
    if (!std::isfinite(x) || std::fabs(x) > 1e15)
        return std::nullopt;
    // continued-fraction convergents h/k of x
    double frac = x;
    long long h_prev = 1, h = static_cast<long long>(std::floor(frac));
    long long k_prev = 0, k = 1;
    frac -= std::floor(frac);
    for (int iter = 0; iter < 64; ++iter) {
        double approx = static_cast<double>(h) / static_cast<double>(k);
        if (std::fabs(x - approx) <= tol * std::max(1.0, std::fabs(x)))
            return Rational(h, k);
        if (frac < 1e-18)
            break;
        frac = 1.0 / frac;
        double whole = std::floor(frac);
        if (whole > 4e18)
            break;
        long long a = static_cast<long long>(whole);
        frac -= whole;
        long long h_next = a * h + h_prev;
        long long k_next = a * k + k_prev;
        if (k_next > max_den || k_next <= 0 || h_next == std::numeric_limits<long long>::min())
            break;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    return std::nullopt;
}

bool newtonian_specialization_check(std::uint64_t seed, int samples) {
    DetRng rng(seed);
    const Rational one(1);
    for (int i = 0; i < samples; ++i) {
        long long p = static_cast<long long>(rng.bits() % 401) - 200;
        long long q = static_cast<long long>(rng.bits() % 50) + 1;
        Rational ratio(p, q);

        // general path at alpha = 1
        ExponentData d = exponent_differences_exact(one, ratio);

        // the Newtonian criterion written out directly
        Rational newtonian_radicand = Rational(25, 4) - Rational(4) * ratio;
        if (*d.radicand_exact != newtonian_radicand)
            return false;

        bool newtonian_satisfied = false;
        if (!newtonian_radicand.is_negative()) {
            if (auto root = rat_sqrt(newtonian_radicand)) {
                Progression half_integers{Rational(1, 2), Rational(1)};
                newtonian_satisfied = progression_contains(*root, half_integers) ||
                                      progression_contains(-*root, half_integers);
            }
        }
        if (check_criterion_exact(one, ratio).satisfied != newtonian_satisfied)
            return false;
    }
    return true;
}

const char* verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::NonIntegrable: return "NonIntegrable";
        case VerdictKind::Inconclusive: return "Inconclusive";
        case VerdictKind::AlphaExcluded: return "AlphaExcluded";
    }
    return "?";
}

namespace {

KCriterion evaluate_ratio(const Rational& alpha, int k, Complex ratio, double tol) {
    KCriterion out;
    out.k = k;
    out.ratio = ratio;

    // exact path when the ratio is (numerically) a small rational
    std::optional<Rational> exact;
    if (std::fabs(ratio.imag()) <= 1e-12 * (1.0 + std::abs(ratio)))
        exact = reconstruct_rational(ratio.real(), 10000, 1e-12);

    if (exact) {
        out.exponents = exponent_differences_exact(alpha, *exact);
        out.check = check_criterion_exact(alpha, *exact);
    } else {
        out.exponents = exponent_differences(alpha, ratio);
        out.check = check_criterion_numeric(alpha, ratio, tol);
    }
    return out;
}

std::vector<KCriterion> evaluate_all(const Rational& alpha,
                                     const std::vector<Complex>& ratios, double tol) {
    std::vector<KCriterion> checks;
    checks.reserve(ratios.size());
    for (size_t i = 0; i < ratios.size(); ++i)
        checks.push_back(evaluate_ratio(alpha, static_cast<int>(i) + 1, ratios[i], tol));
    return checks;
}

void fill_verdict_from_checks(Verdict& verdict) {
    verdict.witnesses.clear();
    for (const auto& c : verdict.checks)
        if (!c.check.satisfied)
            verdict.witnesses.push_back({c.k, c.check.summary});
    if (verdict.witnesses.empty()) {
        verdict.kind = VerdictKind::Inconclusive;
        verdict.reason = "all-criteria-satisfied";
    } else {
        verdict.kind = VerdictKind::NonIntegrable;
        verdict.reason = "criterion-violated";
    }
}

}  // namespace

Verdict certify_with_ratios(const Rational& alpha, const std::vector<Complex>& ratios,
                            double tol) {
    Verdict verdict;
    verdict.options.tol = tol;
    verdict.row = table_row(alpha);
    if (!verdict.row) {
        verdict.kind = VerdictKind::NonIntegrable;
        verdict.reason = "alpha-excluded";
        return verdict;
    }
    verdict.checks = evaluate_all(alpha, ratios, tol);
    fill_verdict_from_checks(verdict);
    return verdict;
}

Verdict certify(const Configuration& config, const CertifyOptions& options) {
    Verdict verdict;
    verdict.options = options;
    verdict.row = table_row(config.alpha());
    if (!verdict.row) {
        // no eigenvalue computation: the theorem excludes this alpha outright
        verdict.kind = VerdictKind::NonIntegrable;
        verdict.reason = "alpha-excluded";
        return verdict;
    }

    HomotheticOptions hopts;
    hopts.l = options.l;
    hopts.gauge = options.gauge;
    hopts.convention = options.convention;
    hopts.seed = options.seed;
    hopts.isotropic_point = options.isotropic_point;

    try {
        verdict.homothetic = build_homothetic_data(config, hopts);

        std::vector<Complex> ratios;
        for (const auto& a : verdict.homothetic->eigenvalues)
            ratios.push_back(a / verdict.homothetic->C);
        verdict.checks = evaluate_all(config.alpha(), ratios, options.tol);

        // the other exponent convention, side by side
        ExponentConvention alt =
            options.convention == ExponentConvention::PaperLiteral
                ? ExponentConvention::HessianConsistent
                : ExponentConvention::PaperLiteral;
        CMatrix a_alt = variational_matrix(config, verdict.homothetic->e,
                                           verdict.homothetic->V, alt);
        verdict.eigenvalues_alt = eigenvalues(a_alt);
        std::vector<Complex> ratios_alt;
        for (const auto& a : verdict.eigenvalues_alt)
            ratios_alt.push_back(a / verdict.homothetic->C);
        verdict.checks_alt = evaluate_all(config.alpha(), ratios_alt, options.tol);
    } catch (const Error& err) {
        throw CertificationAborted(std::string("certification aborted: ") + err.what());
    }

    fill_verdict_from_checks(verdict);
    return verdict;
}

std::vector<std::pair<Rational, bool>> scan_alphas(int den_max) {
    if (den_max < 1)
        throw InvalidConfig("den-max: must be at least 1");
    std::vector<std::pair<Rational, bool>> out;
    for (long long q = 1; q <= den_max; ++q)
        for (long long p = 1; p < 2 * q; ++p) {
            if (std::gcd(p, q) != 1)
                continue;
            Rational alpha(p, q);
            out.emplace_back(alpha, table_row(alpha).has_value());
        }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace ncenter
