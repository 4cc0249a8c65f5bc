#include "diffmod/birkhoff.hpp"

#include <algorithm>

namespace diffmod {

namespace {

long max_precision(const LaurentMatrix& b) {
    long p = 0;
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) p = std::max(p, b(i, j).prec());
    return p;
}

long min_valuation(const LaurentMatrix& b) {
    long v = 0;
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            if (!b(i, j).known_zero()) v = std::min(v, b(i, j).valuation());
    return v;
}

} // namespace

BirkhoffFactors birkhoff_factor(const LaurentMatrix& b) {
    if (b.rows() != b.cols() || b.rows() == 0)
        throw SingularInput("factorization needs a nonempty square matrix");
    const int n = b.rows();
    const Rat pt = b(0, 0).point();
    // generous starting precision for the exactly-known identity entries
    const long id_prec = max_precision(b) + 2 * n * (-min_valuation(b)) + 8;

    LaurentMatrix t = b;
    LaurentMatrix a(n, n, LaurentTrunc::zero(pt, id_prec));
    for (int i = 0; i < n; ++i) a(i, i) = LaurentTrunc::constant(pt, Rat(1), id_prec);

    // Phase 1: integral row operations to upper triangular form.
    for (int j = 0; j < n; ++j) {
        int piv = -1;
        long best = 0;
        long unknown_prec = -1; // min precision among uncertified entries
        for (int i = j; i < n; ++i) {
            const LaurentTrunc& e = t(i, j);
            if (e.known_zero()) {
                if (unknown_prec < 0 || e.prec() < unknown_prec) unknown_prec = e.prec();
            } else if (piv < 0 || e.valuation() < best) {
                piv = i;
                best = e.valuation();
            }
        }
        if (piv < 0)
            throw SingularInput("pivot column vanishes through the stored order");
        if (unknown_prec >= 0 && unknown_prec < best)
            throw InsufficientPrecision(
                "cannot certify the minimal-valuation pivot at the stored order");
        if (piv != j) {
            t.swap_rows(piv, j);
            a.swap_cols(piv, j);
        }
        LaurentTrunc pinv = t(j, j).inverse();
        for (int i = j + 1; i < n; ++i) {
            if (t(i, j).known_zero()) continue;
            LaurentTrunc f = t(i, j) * pinv; // valuation >= 0: integral factor
            for (int k = 0; k < n; ++k) t(i, k) -= f * t(j, k);
            for (int k = 0; k < n; ++k) a(k, j) += f * a(k, i);
        }
    }

    // Phase 2: normalize the diagonal to exact powers of pi.
    std::vector<long> vdiag(n);
    for (int j = 0; j < n; ++j) {
        long v = t(j, j).valuation();
        vdiag[j] = v;
        LaurentTrunc unit = t(j, j).shift_exponent(-v); // valuation-0 unit
        LaurentTrunc uinv = unit.inverse();
        for (int k = 0; k < n; ++k) t(j, k) = t(j, k) * uinv;
        for (int k = 0; k < n; ++k) a(k, j) = a(k, j) * unit;
    }

    // Phase 3: clear above-diagonal entries down to Laurent polynomials
    // (exponents below the pivot valuation of their column).
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            const LaurentTrunc& e = t(i, j);
            if (e.known_zero()) continue;
            if (e.prec() < vdiag[j])
                throw InsufficientPrecision("entry precision below the pivot valuation");
            // integral multiplier carrying the exponents >= vdiag[j]
            long lo = std::max(e.valuation(), vdiag[j]);
            std::vector<Rat> hc;
            for (long k = lo; k < e.prec(); ++k) hc.push_back(e.coeff(k));
            LaurentTrunc g(pt, lo - vdiag[j], std::move(hc), e.prec() - vdiag[j]);
            if (g.known_zero()) continue;
            for (int k = 0; k < n; ++k) t(i, k) -= g * t(j, k);
            for (int k = 0; k < n; ++k) a(k, j) += g * a(k, i);
        }
    }

    BirkhoffFactors out;
    out.series = a;
    out.laurent = LaurentPolyMatrix(n, n);
    long vdet = 0;
    for (int j = 0; j < n; ++j) {
        vdet += vdiag[j];
        out.laurent(j, j) = LaurentPoly::monomial(vdiag[j], Rat(1));
        for (int i = 0; i < j; ++i) {
            const LaurentTrunc& e = t(i, j);
            if (e.known_zero()) continue;
            std::map<long, Rat> terms;
            for (long k = e.valuation(); k < std::min(e.prec(), vdiag[j]); ++k) {
                Rat c = e.coeff(k);
                if (c != 0) terms[k] = c;
            }
            out.laurent(i, j) = LaurentPoly(std::move(terms));
        }
    }
    out.val_det_laurent = vdet;

    // integrality of the series factor
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!out.series(i, j).known_zero() && out.series(i, j).valuation() < 0)
                throw InsufficientPrecision("series factor lost integrality; raise the order");
    return out;
}

BirkhoffFactors birkhoff_factor_rational(const RatFuncMatrix& m, const Rat& a, long n_terms) {
    LaurentMatrix b(m.rows(), m.cols(), LaurentTrunc::zero(a, n_terms));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) b(i, j) = laurent_expand(m(i, j), a, n_terms);
    return birkhoff_factor(b);
}

bool birkhoff_product_matches(const BirkhoffFactors& f, const LaurentMatrix& b) {
    const int n = b.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            LaurentTrunc s = LaurentTrunc::zero(b(0, 0).point(), f.series(i, 0).prec());
            for (int k = 0; k < n; ++k) {
                const LaurentPoly& c = f.laurent(k, j);
                if (c.is_zero()) continue;
                s += f.series(i, k) * c.to_trunc(b(0, 0).point(), f.series(i, k).prec());
            }
            if (!s.agrees_with(b(i, j))) return false;
        }
    return true;
}

} // namespace diffmod
