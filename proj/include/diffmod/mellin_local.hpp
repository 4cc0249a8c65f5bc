#pragma once

#include "diffmod/ore.hpp"
#include "diffmod/restriction.hpp"

namespace diffmod {

// Regular-singular differential module on the formal punctured disk in
// constant-matrix normal form: C is the action of x*dx on a fixed lattice
// basis.
struct RegSingModule {
    RatMatrix matrix;
    Orbit orbit; // the target orbit p + Z

    RegSingModule(RatMatrix c, Orbit orb);
    int dimension() const { return matrix.rows(); }
};

Poly characteristic_polynomial(const RatMatrix& c);

// Jordan block sizes of c at the eigenvalue lambda (empty if not an eigenvalue).
std::vector<long> jordan_partition_at(const RatMatrix& c, const Rat& lambda);

// Multiset of Jordan block sizes at the eigenvalues lying on the orbit.
// Throws IrrationalEigenvalue when the characteristic polynomial has an
// irreducible factor of degree >= 2.
FiniteLengthModule local_mellin(const RegSingModule& f);

// The infinity flavor: involution composed with local_mellin; eigenvalues
// are tested against -p + Z, the result is labeled with the orbit of p.
FiniteLengthModule local_mellin_infinity(const RatMatrix& c, const Rat& p);

// Truncated model of iota_{p!} N = Q((tau)) tensor N on the tau-exponent
// window [-K, K]; z acts on the tau^w component as (p + w) + pi.
class TruncatedTauModule {
public:
    TruncatedTauModule(FiniteLengthModule base, long window);

    const FiniteLengthModule& base() const { return base_; }
    long window() const { return window_; }
    long block_dim() const { return base_.total(); }
    long dimension() const { return block_dim() * (2 * window_ + 1); }

    RatMatrix nilpotent() const;          // pi on the base module
    RatMatrix z_block(long w) const;      // z on the tau^w component
    RatMatrix z_matrix() const;           // z on the whole window module
    RatMatrix tau_matrix() const;         // tau, truncated at the window edge

private:
    FiniteLengthModule base_;
    long window_;
};

TruncatedTauModule iota_lower_shriek(const FiniteLengthModule& n, long window);

// Sections with (z-p)-power torsion. Throws WindowTooSmall when p lies on
// the module's orbit but outside the stored window.
FiniteLengthModule iota_upper_shriek(const TruncatedTauModule& m, const Rat& p);

// dim_Q of { v in the truncated iota_{p!} N window : Q v = 0 }, certified by
// recomputation at window + 4 (throws WindowTooSmall on disagreement). By
// adjunction this equals dim Hom(Phi^l(D/DQ), N) = sum min(a_i, b_j).
long hom_dimension_oracle(const DifferenceOperator& q, const FiniteLengthModule& n,
                          const Orbit& orbit, long window);

} // namespace diffmod
