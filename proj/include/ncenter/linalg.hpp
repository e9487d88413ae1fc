#pragma once

#include <complex>
#include <vector>

#include "ncenter/errors.hpp"

namespace ncenter {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

// Small dense complex matrix, row-major.  Everything in this project is
// desk scale (n <= 8 plus a gauge row), so no clever storage.
struct CMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Complex> a;

    CMatrix() = default;
    CMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Complex& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Complex& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static CMatrix identity(int n);
};

// Bilinear form sum_i u_i v_i, no conjugation.  The isotropy condition
// (e - c)^2 = 0 only makes sense bilinearly.
Complex bilinear_dot(const CVector& u, const CVector& v);

double vec_norm(const CVector& u);                 // euclidean norm of moduli
CVector vec_sub(const CVector& u, const CVector& v);
CVector vec_scale(Complex s, const CVector& u);
double vec_dist(const CVector& u, const CVector& v);

CVector to_complex(const std::vector<double>& v);

double frobenius_norm(const CMatrix& m);
Complex trace(const CMatrix& m);
CMatrix mat_mul(const CMatrix& a, const CMatrix& b);
CVector mat_vec(const CMatrix& m, const CVector& v);

// Gaussian elimination with partial pivoting.  Throws Error on a singular
// system.
CVector solve_linear(CMatrix a, CVector b);

Complex determinant(CMatrix a);

// Minimum-norm solution of the underdetermined system J x = b
// (J has full row rank <= cols): x = J^H (J J^H)^{-1} b.
CVector min_norm_solve(const CMatrix& j, const CVector& b);

}  // namespace ncenter
