#include "diffmod/smith.hpp"

#include <algorithm>

namespace diffmod {

namespace {

// One in-place Smith reduction; transforms are optional.
void smith_reduce(PolyMatrix& a, PolyMatrix* u, PolyMatrix* v) {
    const int m = a.rows(), n = a.cols();
    int t = 0;
    const int tmax = std::min(m, n);
    while (t < tmax) {
        // minimal-degree nonzero entry in the trailing submatrix, row-major ties
        int pi = -1, pj = -1, best = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                const Poly& e = a(i, j);
                if (e.is_zero()) continue;
                if (best < 0 || e.degree() < best) {
                    best = e.degree();
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break; // trailing submatrix is zero
        if (pi != t) {
            a.swap_rows(pi, t);
            if (u) u->swap_rows(pi, t);
        }
        if (pj != t) {
            a.swap_cols(pj, t);
            if (v) v->swap_cols(pj, t);
        }

        bool clean = true;
        for (int i = t + 1; i < m; ++i) {
            if (a(i, t).is_zero()) continue;
            Poly q = Poly::divrem(a(i, t), a(t, t)).first;
            for (int j = 0; j < n; ++j) a(i, j) -= q * a(t, j);
            if (u)
                for (int j = 0; j < m; ++j) (*u)(i, j) -= q * (*u)(t, j);
            if (!a(i, t).is_zero()) clean = false;
        }
        for (int j = t + 1; j < n; ++j) {
            if (a(t, j).is_zero()) continue;
            Poly q = Poly::divrem(a(t, j), a(t, t)).first;
            for (int i = 0; i < m; ++i) a(i, j) -= q * a(i, t);
            if (v)
                for (int i = 0; i < n; ++i) (*v)(i, j) -= q * (*v)(i, t);
            if (!a(t, j).is_zero()) clean = false;
        }
        if (!clean) continue; // smaller-degree entries appeared; re-pivot

        // pivot divides its row and column; enforce divisibility on the rest
        bool fixed = false;
        for (int i = t + 1; i < m && !fixed; ++i)
            for (int j = t + 1; j < n && !fixed; ++j) {
                if (a(i, j).is_zero()) continue;
                if (!Poly::divrem(a(i, j), a(t, t)).second.is_zero()) {
                    for (int k = 0; k < n; ++k) a(t, k) += a(i, k);
                    if (u)
                        for (int k = 0; k < m; ++k) (*u)(t, k) += (*u)(i, k);
                    fixed = true;
                }
            }
        if (fixed) continue;

        // normalize pivot monic
        Rat l = a(t, t).lc();
        if (l != 1) {
            Rat s = Rat(1) / l;
            for (int j = 0; j < n; ++j) a(t, j) = a(t, j) * s;
            if (u)
                for (int j = 0; j < m; ++j) (*u)(t, j) = (*u)(t, j) * s;
        }
        ++t;
    }
}

} // namespace

SmithForm smith_normal_form(const PolyMatrix& m) {
    SmithForm f;
    f.U = PolyMatrix::identity(m.rows(), Poly(Rat(1)));
    f.V = PolyMatrix::identity(m.cols(), Poly(Rat(1)));
    f.D = m;
    smith_reduce(f.D, &f.U, &f.V);
    return f;
}

std::vector<Poly> smith_invariant_factors(const PolyMatrix& m) {
    PolyMatrix a(m);
    smith_reduce(a, nullptr, nullptr);
    std::vector<Poly> d;
    const int k = std::min(m.rows(), m.cols());
    d.reserve(k);
    for (int i = 0; i < k; ++i) d.push_back(a(i, i));
    return d;
}

PolyMatrix polynomial_matrix_kernel(const PolyMatrix& m) {
    SmithForm f = smith_normal_form(m);
    const int n = m.cols();
    int r = 0;
    while (r < std::min(m.rows(), n) && !f.D(r, r).is_zero()) ++r;
    PolyMatrix ker(n, n - r);
    for (int j = r; j < n; ++j)
        for (int i = 0; i < n; ++i) ker(i, j - r) = f.V(i, j);
    return ker;
}

std::map<Rat, std::vector<int>> local_elementary_divisors_multi(
    const RatFuncMatrix& m, const std::vector<Rat>& points) {
    if (m.rows() != m.cols())
        throw SingularMatrix("local elementary divisors need a square matrix");
    Poly den;
    PolyMatrix p = clear_denominators(m, &den);
    std::vector<Poly> f = smith_invariant_factors(p);
    for (const Poly& fi : f)
        if (fi.is_zero()) throw SingularMatrix("local elementary divisors of a singular matrix");
    std::map<Rat, std::vector<int>> out;
    for (const Rat& a : points) {
        int vd = den.valuation_at(a);
        std::vector<int> d;
        d.reserve(f.size());
        for (const Poly& fi : f) d.push_back(fi.valuation_at(a) - vd);
        out[a] = std::move(d); // nondecreasing: f_i | f_{i+1}
    }
    return out;
}

std::vector<int> local_elementary_divisors(const RatFuncMatrix& m, const Rat& a) {
    return local_elementary_divisors_multi(m, {a}).at(a);
}

PolyMatrix hermite_column_basis(const PolyMatrix& m) {
    const int n = m.rows(), cols = m.cols();
    PolyMatrix h(m);
    for (int row = 0; row < n; ++row) {
        for (;;) {
            int jmin = -1, best = -1;
            for (int j = row; j < cols; ++j) {
                if (h(row, j).is_zero()) continue;
                if (best < 0 || h(row, j).degree() < best) {
                    best = h(row, j).degree();
                    jmin = j;
                }
            }
            if (jmin < 0)
                throw SingularMatrix("hermite_column_basis: input does not have full row rank");
            if (jmin != row) h.swap_cols(jmin, row);
            bool clean = true;
            for (int j = row + 1; j < cols; ++j) {
                if (h(row, j).is_zero()) continue;
                Poly q = Poly::divrem(h(row, j), h(row, row)).first;
                for (int i = 0; i < n; ++i) h(i, j) -= q * h(i, row);
                if (!h(row, j).is_zero()) clean = false;
            }
            if (clean) break;
        }
    }
    // normalize: monic diagonal, reduced off-diagonals
    for (int r = 0; r < n; ++r) {
        Rat l = h(r, r).lc();
        if (l != 1) {
            Rat s = Rat(1) / l;
            for (int i = 0; i < n; ++i) h(i, r) = h(i, r) * s;
        }
        for (int c = 0; c < r; ++c) {
            if (h(r, c).is_zero()) continue;
            Poly q = Poly::divrem(h(r, c), h(r, r)).first;
            if (q.is_zero()) continue;
            for (int i = 0; i < n; ++i) h(i, c) -= q * h(i, r);
        }
    }
    return h.submatrix(0, 0, n, n);
}

} // namespace diffmod
