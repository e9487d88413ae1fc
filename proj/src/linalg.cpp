#include "ncenter/linalg.hpp"

#include <cmath>

namespace ncenter {

CMatrix CMatrix::identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

Complex bilinear_dot(const CVector& u, const CVector& v) {
    Complex s = 0.0;
    for (size_t i = 0; i < u.size(); ++i)
        s += u[i] * v[i];
    return s;
}

double vec_norm(const CVector& u) {
    double s = 0.0;
    for (const auto& x : u)
        s += std::norm(x);
    return std::sqrt(s);
}

CVector vec_sub(const CVector& u, const CVector& v) {
    CVector r(u.size());
    for (size_t i = 0; i < u.size(); ++i)
        r[i] = u[i] - v[i];
    return r;
}

CVector vec_scale(Complex s, const CVector& u) {
    CVector r(u.size());
    for (size_t i = 0; i < u.size(); ++i)
        r[i] = s * u[i];
    return r;
}

double vec_dist(const CVector& u, const CVector& v) {
    return vec_norm(vec_sub(u, v));
}

CVector to_complex(const std::vector<double>& v) {
    CVector r(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        r[i] = v[i];
    return r;
}

double frobenius_norm(const CMatrix& m) {
    double s = 0.0;
    for (const auto& x : m.a)
        s += std::norm(x);
    return std::sqrt(s);
}

Complex trace(const CMatrix& m) {
    Complex t = 0.0;
    for (int i = 0; i < m.rows; ++i)
        t += m(i, i);
    return t;
}

CMatrix mat_mul(const CMatrix& a, const CMatrix& b) {
    CMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            Complex aik = a(i, k);
            if (aik == 0.0)
                continue;
            for (int j = 0; j < b.cols; ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

CVector mat_vec(const CMatrix& m, const CVector& v) {
    CVector r(m.rows, 0.0);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            r[i] += m(i, j) * v[j];
    return r;
}

CVector solve_linear(CMatrix a, CVector b) {
    const int n = a.rows;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(a(col, col));
        for (int r = col + 1; r < n; ++r) {
            double v = std::abs(a(r, col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0.0)
            throw Error("linalg: singular linear system");
        if (pivot != col) {
            for (int j = col; j < n; ++j)
                std::swap(a(pivot, j), a(col, j));
            std::swap(b[pivot], b[col]);
        }
        for (int r = col + 1; r < n; ++r) {
            Complex f = a(r, col) / a(col, col);
            if (f == 0.0)
                continue;
            a(r, col) = 0.0;
            for (int j = col + 1; j < n; ++j)
                a(r, j) -= f * a(col, j);
            b[r] -= f * b[col];
        }
    }
    CVector x(n);
    for (int i = n - 1; i >= 0; --i) {
        Complex s = b[i];
        for (int j = i + 1; j < n; ++j)
            s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

Complex determinant(CMatrix a) {
    const int n = a.rows;
    Complex det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(a(col, col));
        for (int r = col + 1; r < n; ++r) {
            double v = std::abs(a(r, col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0.0)
            return 0.0;
        if (pivot != col) {
            for (int j = col; j < n; ++j)
                std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (int r = col + 1; r < n; ++r) {
            Complex f = a(r, col) / a(col, col);
            if (f == 0.0)
                continue;
            for (int j = col; j < n; ++j)
                a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

CVector min_norm_solve(const CMatrix& j, const CVector& b) {
    const int rows = j.rows;
    const int cols = j.cols;
    // gram = J J^H (Hermitian)
    CMatrix gram(rows, rows);
    for (int a = 0; a < rows; ++a)
        for (int c = 0; c < rows; ++c) {
            Complex s = 0.0;
            for (int k = 0; k < cols; ++k)
                s += j(a, k) * std::conj(j(c, k));
            gram(a, c) = s;
        }
    CVector y = solve_linear(gram, b);
    CVector x(cols, 0.0);
    for (int k = 0; k < cols; ++k)
        for (int a = 0; a < rows; ++a)
            x[k] += std::conj(j(a, k)) * y[a];
    return x;
}

}  // namespace ncenter
