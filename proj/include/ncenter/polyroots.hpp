#pragma once

#include "ncenter/linalg.hpp"

namespace ncenter {

// Monic characteristic polynomial of A via the Faddeev-LeVerrier recurrence.
// Returns coefficients c[0..n] with c[0] = 1, so
// p(x) = c[0] x^n + c[1] x^{n-1} + ... + c[n].
std::vector<Complex> characteristic_polynomial(const CMatrix& a);

// All roots of a monic polynomial by simultaneous Durand-Kerner iteration
// (Gauss-Seidel update, Newton polish).  Trailing coefficients below
// rounding scale are deflated into exact zero roots first, which keeps
// rank-deficient inputs (multiple zero eigenvalues) accurate.
// Throws RootFindingFailed if the iteration does not settle.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

// Eigenvalues of A (n <= 8, desk scale): characteristic polynomial roots,
// validated with |det(A - a I)| <= 1e-8 * max(1,|A|_F)^n and returned in
// (Re, Im) lexicographic order.
std::vector<Complex> eigenvalues(const CMatrix& a);

Complex polynomial_eval(const std::vector<Complex>& coeffs, Complex x);

}  // namespace ncenter
