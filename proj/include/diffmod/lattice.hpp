#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "diffmod/smith.hpp"

namespace diffmod {

// Z-orbit p + Z, keyed by the representative with 0 <= p < 1.
struct Orbit {
    Rat rep;
    Orbit() : rep(0) {}
    explicit Orbit(const Rat& point) : rep(frac_rat(point)) {}
    bool contains(const Rat& point) const { return frac_rat(point) == rep; }
    bool operator==(const Orbit& o) const { return rep == o.rep; }
    bool operator<(const Orbit& o) const { return rep < o.rep; }
};

// Rank-n d-connection: invertible A(z) giving the tau-action on the
// generic fiber. The inverse is precomputed; construction validates
// det A != 0.
class DConnection {
public:
    explicit DConnection(RatFuncMatrix a);
    int rank() const { return a_.rows(); }
    const RatFuncMatrix& matrix() const { return a_; }
    const RatFuncMatrix& matrix_inverse() const { return ainv_; }

private:
    RatFuncMatrix a_, ainv_;
};

// Free full-rank Q[z]-lattice in Q(z)^n, stored in a canonical form
// (column Hermite basis of the cleared numerator over the minimal monic
// denominator), so span equality is matrix equality.
class Lattice {
public:
    // Accepts an n x m generator matrix of full row rank (m >= n).
    explicit Lattice(const RatFuncMatrix& generators);
    static Lattice standard(int n);

    int rank() const { return g_.rows(); }
    const RatFuncMatrix& generators() const { return g_; }

    Lattice scaled(const RatFunc& f) const; // span of f * columns
    bool operator==(const Lattice& o) const { return g_ == o.g_; }
    bool operator!=(const Lattice& o) const { return g_ != o.g_; }

private:
    Lattice() = default;
    RatFuncMatrix g_;
};

// Transition matrix expressing `inner`'s generators in `outer`'s basis.
RatFuncMatrix transition(const Lattice& outer, const Lattice& inner);

// inner <= outer as spans (transition integral).
bool is_sublattice(const Lattice& inner, const Lattice& outer);

// Local elementary divisors at a of the transition outer^-1 * inner;
// all >= 0 iff inner_a <= outer_a.
std::vector<int> inclusion_divisors_at(const Lattice& outer, const Lattice& inner, const Rat& a);

bool stalk_equal_at(const Lattice& l1, const Lattice& l2, const Rat& a);

// Lattice of tau^k L; k may be negative.
Lattice tau_shift_lattice(const DConnection& conn, const Lattice& l, long k);

Lattice lattice_sum(const Lattice& l1, const Lattice& l2);
Lattice lattice_intersection(const Lattice& l1, const Lattice& l2);

// Comparison matrix C_L(z) = G(z)^-1 A(z-1) G(z-1).
RatFuncMatrix comparison_matrix(const DConnection& conn, const Lattice& l);

// Per-point local elementary divisors of C_L, zero exponents dropped.
struct ZeroPoleProfile {
    std::map<Rat, std::vector<int>> points;

    bool empty() const { return points.empty(); }
    std::set<Rat> zeroes() const; // points with a positive exponent
    std::set<Rat> poles() const;  // points with a negative exponent

    // Integer offsets point - base for the points on the given orbit.
    std::map<long, std::vector<int>> orbit_positions(const Orbit& orbit, const Rat& base) const;
};

// Throws UnsupportedPoint when a singular point is irrational.
ZeroPoleProfile zero_pole_profile(const DConnection& conn, const Lattice& l);

std::vector<Orbit> singular_orbits(const DConnection& conn, const Lattice& l);
std::vector<Orbit> singular_orbits(const ZeroPoleProfile& profile);

// P_L cap (Z_L + Z_{>0}) = empty, restricted to the orbit.
bool austere_separated(const ZeroPoleProfile& profile, const Orbit& orbit);

struct AustereResult {
    Lattice lattice;
    int iterations = 0;
    std::vector<Lattice> trace; // trace[0] = input, trace.back() = result
};

// Iterates W -> tau^{-1} W cap W until the separation predicate holds on
// the orbit; the iteration bound (max pole - min zero + 1) is enforced.
AustereResult austere_reduce(const DConnection& conn, const Lattice& l, const Orbit& orbit);

// Lattice with the stalk of `x` at point a and the stalks of `base`
// everywhere else.
Lattice modify_lattice_at_point(const Lattice& base, const Lattice& x, const Rat& a);

// Stabilized sum over |k| <= bound of tau^k L.
Lattice tau_saturation(const DConnection& conn, const Lattice& l, long bound);

// Smallest K with every orbit profile point inside (base-K, base+K), plus 1.
long stabilization_bound(const ZeroPoleProfile& profile, const Orbit& orbit, const Rat& base);

// j_!* across the orbit: austere stalks on the orbit, saturated stalks off it.
Lattice intermediate_extension(const DConnection& conn, const Lattice& l, const Orbit& orbit);

// The z <-> -z, tau <-> tau^-1 involution at the matrix level.
DConnection involute(const DConnection& conn);
Lattice involute(const Lattice& l);
Orbit involute(const Orbit& orbit);

} // namespace diffmod
