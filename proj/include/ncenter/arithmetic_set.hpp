#pragma once

#include <complex>
#include <vector>

#include "ncenter/rational.hpp"

namespace ncenter {

// The set { offset + period*m : m integer }, period > 0.
struct Progression {
    Rational offset;
    Rational period;
};

// Finite union of progressions; contains(x) is the disjunction over members.
struct ArithmeticSet {
    std::vector<Progression> progressions;
};

// True iff (x - offset)/period is an integer.
bool progression_contains(const Rational& x, const Progression& p);

bool set_contains_exact(const Rational& x, const ArithmeticSet& s);

// Floating-point companion: true iff |Im z| <= tol and Re z is within tol of
// the nearest element of some member progression.
bool set_contains_numeric(std::complex<double> z, const ArithmeticSet& s, double tol);

// Distance from x to the nearest element of the set (real line).
double set_distance(double x, const ArithmeticSet& s);

}  // namespace ncenter
