#include "ncenter/arithmetic_set.hpp"

#include <cmath>
#include <limits>

namespace ncenter {

bool progression_contains(const Rational& x, const Progression& p) {
    Rational steps = (x - p.offset) / p.period;
    return steps.is_integer();
}

bool set_contains_exact(const Rational& x, const ArithmeticSet& s) {
    for (const auto& p : s.progressions)
        if (progression_contains(x, p))
            return true;
    return false;
}

double set_distance(double x, const ArithmeticSet& s) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : s.progressions) {
        double period = p.period.to_double();
        double d = x - p.offset.to_double();
        // nearest lattice point via rounding
        double dist = std::fabs(d - period * std::round(d / period));
        best = std::min(best, dist);
    }
    return best;
}

bool set_contains_numeric(std::complex<double> z, const ArithmeticSet& s, double tol) {
    if (std::fabs(z.imag()) > tol)
        return false;
    return set_distance(z.real(), s) <= tol;
}

}  // namespace ncenter
