#include "diffmod/matrix.hpp"

namespace diffmod {

RatFuncMatrix to_ratfunc(const PolyMatrix& m) {
    RatFuncMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = RatFunc(m(i, j));
    return r;
}

RatFuncMatrix shift_matrix(const RatFuncMatrix& m, const Rat& s) {
    RatFuncMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).shift(s);
    return r;
}

RatFuncMatrix reflect_matrix(const RatFuncMatrix& m) {
    RatFuncMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).reflect();
    return r;
}

Poly denominator_lcm(const RatFuncMatrix& m) {
    Poly d(Rat(1));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) d = lcm(d, m(i, j).den());
    return d;
}

PolyMatrix clear_denominators(const RatFuncMatrix& m, Poly* den_out) {
    Poly d = denominator_lcm(m);
    PolyMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            r(i, j) = m(i, j).num() * Poly::div_exact(d, m(i, j).den());
        }
    if (den_out) *den_out = d;
    return r;
}

RatFunc det(const RatFuncMatrix& m) {
    assert(m.rows() == m.cols());
    int n = m.rows();
    RatFuncMatrix a(m);
    RatFunc d(Rat(1));
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!a(i, k).is_zero()) { piv = i; break; }
        if (piv < 0) return RatFunc();
        if (piv != k) {
            a.swap_rows(piv, k);
            d = -d;
        }
        d *= a(k, k);
        RatFunc inv = a(k, k).inverse();
        for (int i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            RatFunc f = a(i, k) * inv;
            for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return d;
}

RatFuncMatrix inverse(const RatFuncMatrix& m) {
    assert(m.rows() == m.cols());
    int n = m.rows();
    RatFuncMatrix a(m);
    RatFuncMatrix r = RatFuncMatrix::identity(n, RatFunc(Rat(1)));
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!a(i, k).is_zero()) { piv = i; break; }
        if (piv < 0) throw SingularMatrix("matrix inverse of a singular matrix");
        if (piv != k) {
            a.swap_rows(piv, k);
            r.swap_rows(piv, k);
        }
        RatFunc inv = a(k, k).inverse();
        for (int j = 0; j < n; ++j) {
            a(k, j) *= inv;
            r(k, j) *= inv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || a(i, k).is_zero()) continue;
            RatFunc f = a(i, k);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                r(i, j) -= f * r(k, j);
            }
        }
    }
    return r;
}

int rank(const RatMatrix& m) {
    RatMatrix a(m);
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) a.swap_rows(piv, r);
        Rat inv = Rat(1) / a(r, c);
        for (int j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

RatMatrix mat_pow(const RatMatrix& m, int e) {
    assert(m.rows() == m.cols());
    RatMatrix r = RatMatrix::identity(m.rows(), Rat(1));
    for (int i = 0; i < e; ++i) r = r * m;
    return r;
}

} // namespace diffmod
