#include "diffmod/mellin_local.hpp"

#include <algorithm>

namespace diffmod {

RegSingModule::RegSingModule(RatMatrix c, Orbit orb) : matrix(std::move(c)), orbit(orb) {
    if (matrix.rows() != matrix.cols() || matrix.rows() == 0)
        throw SingularMatrix("regular-singular data must be a nonempty square matrix");
}

Poly characteristic_polynomial(const RatMatrix& c) {
    const int m = c.rows();
    RatFuncMatrix a(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Poly e = i == j ? Poly::variable() - Poly(c(i, j)) : Poly(-c(i, j));
            a(i, j) = RatFunc(e);
        }
    RatFunc d = det(a);
    if (!d.is_polynomial())
        throw SingularMatrix("characteristic polynomial computation failed");
    return d.num() * (Rat(1) / d.den().lc());
}

std::vector<long> jordan_partition_at(const RatMatrix& c, const Rat& lambda) {
    const int m = c.rows();
    RatMatrix e = c;
    for (int i = 0; i < m; ++i) e(i, i) -= lambda;
    std::vector<long> kernel_dims; // dim ker (C - lambda)^k
    RatMatrix pw = RatMatrix::identity(m, Rat(1));
    long prev = 0;
    for (int k = 1; k <= m; ++k) {
        pw = pw * e;
        long dk = m - rank(pw);
        if (dk == prev) break;
        kernel_dims.push_back(dk);
        prev = dk;
    }
    std::vector<long> parts;
    for (std::size_t k = 0; k < kernel_dims.size(); ++k) {
        long ge_k = kernel_dims[k] - (k == 0 ? 0 : kernel_dims[k - 1]);
        long ge_k1 = k + 1 < kernel_dims.size()
                         ? kernel_dims[k + 1] - kernel_dims[k]
                         : 0;
        for (long i = 0; i < ge_k - ge_k1; ++i) parts.push_back(static_cast<long>(k + 1));
    }
    std::sort(parts.begin(), parts.end(), std::greater<long>());
    return parts;
}

FiniteLengthModule local_mellin(const RegSingModule& f) {
    Poly cp = characteristic_polynomial(f.matrix);
    RationalRoots rr = rational_roots(cp);
    if (rr.cofactor.degree() > 0)
        throw IrrationalEigenvalue("characteristic polynomial has the irrational factor " +
                                   rr.cofactor.to_string());
    std::vector<long> parts;
    for (const auto& [lambda, mult] : rr.roots) {
        if (!f.orbit.contains(lambda)) continue;
        for (long k : jordan_partition_at(f.matrix, lambda)) parts.push_back(k);
    }
    return FiniteLengthModule(std::move(parts), f.orbit);
}

FiniteLengthModule local_mellin_infinity(const RatMatrix& c, const Rat& p) {
    FiniteLengthModule res = local_mellin(RegSingModule(c, Orbit(Rat(-p))));
    return FiniteLengthModule(res.partition, Orbit(p));
}

TruncatedTauModule::TruncatedTauModule(FiniteLengthModule base, long window)
    : base_(std::move(base)), window_(window) {
    if (window_ < 1) throw WindowTooSmall("tau-exponent window must be at least 1");
}

RatMatrix TruncatedTauModule::nilpotent() const {
    const long t = block_dim();
    RatMatrix p(static_cast<int>(t), static_cast<int>(t));
    long off = 0;
    for (long k : base_.partition) {
        for (long j = 0; j + 1 < k; ++j)
            p(static_cast<int>(off + j + 1), static_cast<int>(off + j)) = Rat(1);
        off += k;
    }
    return p;
}

RatMatrix TruncatedTauModule::z_block(long w) const {
    RatMatrix b = nilpotent();
    Rat c = base_.orbit.rep + Rat(w);
    for (int i = 0; i < b.rows(); ++i) b(i, i) += c;
    return b;
}

RatMatrix TruncatedTauModule::z_matrix() const {
    const long t = block_dim();
    const long d = dimension();
    RatMatrix z(static_cast<int>(d), static_cast<int>(d));
    for (long w = -window_; w <= window_; ++w) {
        RatMatrix b = z_block(w);
        long off = (w + window_) * t;
        for (long i = 0; i < t; ++i)
            for (long j = 0; j < t; ++j) z(static_cast<int>(off + i), static_cast<int>(off + j)) = b(static_cast<int>(i), static_cast<int>(j));
    }
    return z;
}

RatMatrix TruncatedTauModule::tau_matrix() const {
    const long t = block_dim();
    const long d = dimension();
    RatMatrix m(static_cast<int>(d), static_cast<int>(d));
    for (long w = -window_; w < window_; ++w) {
        long src = (w + window_) * t;
        long dst = (w + 1 + window_) * t;
        for (long i = 0; i < t; ++i) m(static_cast<int>(dst + i), static_cast<int>(src + i)) = Rat(1);
    }
    return m;
}

TruncatedTauModule iota_lower_shriek(const FiniteLengthModule& n, long window) {
    return TruncatedTauModule(n, window);
}

FiniteLengthModule iota_upper_shriek(const TruncatedTauModule& m, const Rat& p) {
    const Orbit target(p);
    if (!(target == m.base().orbit) || m.base().empty())
        return FiniteLengthModule({}, target);
    Rat off = p - m.base().orbit.rep;
    long w0 = to_long(off.get_num());
    if (std::abs(w0) > m.window())
        throw WindowTooSmall("the (z-p)-torsion sections sit outside the stored window");
    return FiniteLengthModule(jordan_partition_at(m.z_matrix(), p), target);
}

namespace {

// Evaluate P at cI + nilpotent by Horner.
RatMatrix eval_poly_at(const Poly& p, const Rat& c, const RatMatrix& nil) {
    const int t = nil.rows();
    RatMatrix a = nil;
    for (int i = 0; i < t; ++i) a(i, i) += c;
    RatMatrix r(t, t);
    for (int d = p.degree(); d >= 0; --d) {
        r = r * a;
        Rat cd = p.coeff(d);
        if (cd != 0)
            for (int i = 0; i < t; ++i) r(i, i) += cd;
    }
    return r;
}

long window_solution_dim(const DifferenceOperator& q, const FiniteLengthModule& n,
                         const Orbit& orbit, long k) {
    const long t = n.total();
    if (t == 0) return 0;
    const long nw = 2 * k + 1;
    TruncatedTauModule model(n, k);
    RatMatrix nil = model.nilpotent();
    const long ntau = q.max_tau(); // q normalized: powers 0..ntau
    // rows: output tau-degrees u in [-k, k]; unknowns v_w, w in [-k, k]
    RatMatrix sys(static_cast<int>(nw * t), static_cast<int>(nw * t));
    for (long u = -k; u <= k; ++u) {
        long row0 = (u + k) * t;
        for (long i = 0; i <= ntau; ++i) {
            Poly pi = q.coeff(i);
            if (pi.is_zero()) continue;
            long w = u - i;
            if (w < -k || w > k) continue; // below the Laurent cutoff: v_w = 0
            long col0 = (w + k) * t;
            RatMatrix blk = eval_poly_at(pi, orbit.rep + Rat(u), nil);
            for (long r = 0; r < t; ++r)
                for (long c = 0; c < t; ++c)
                    sys(static_cast<int>(row0 + r), static_cast<int>(col0 + c)) += blk(static_cast<int>(r), static_cast<int>(c));
        }
    }
    return nw * t - rank(sys);
}

} // namespace

long hom_dimension_oracle(const DifferenceOperator& q0, const FiniteLengthModule& n,
                          const Orbit& orbit, long window) {
    if (q0.is_zero()) throw NotNormalizable("zero operator");
    if (window < 1) throw WindowTooSmall("window must be at least 1");
    DifferenceOperator q = DifferenceOperator::tau(-q0.min_tau()) * q0;
    long d1 = window_solution_dim(q, n, orbit, window);
    long d2 = window_solution_dim(q, n, orbit, window + 4);
    if (d1 != d2)
        throw WindowTooSmall("solution dimension not stable under window growth");
    return d1;
}

} // namespace diffmod
