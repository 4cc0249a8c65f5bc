#pragma once

#include <optional>

#include "diffmod/lattice.hpp"
#include "diffmod/ore.hpp"

namespace diffmod {

// Finite length module over Q[[pi]]: a partition [k1 >= k2 >= ...] encoding
// the direct sum of Q[pi]/(pi^{k_i}), attached to an orbit.
struct FiniteLengthModule {
    std::vector<long> partition; // weakly decreasing, entries >= 1
    Orbit orbit;

    FiniteLengthModule() = default;
    FiniteLengthModule(std::vector<long> parts, Orbit orb);
    long total() const;
    bool empty() const { return partition.empty(); }
    bool operator==(const FiniteLengthModule& o) const {
        return partition == o.partition && orbit == o.orbit;
    }
};

// Restriction of a module to the formal neighborhood of an orbit: the stalk
// data at the base point base = rep + shift, with the two distinguished
// submodules recording the behavior at +/- infinity along the orbit.
struct DiskTriple {
    Orbit orbit;
    long shift = 0;   // base point = orbit.rep + shift
    Rat base;
    int rank = 0;
    long stable_shift = 0; // the K with left = tau^K L, right = tau^-K L
    Lattice left, middle, right;
    std::vector<long> middle_torsion; // empty for d-connection generated modules
};

enum class Side { Left, Right };

DiskTriple restrict_to_orbit(const DConnection& conn, const Lattice& l, const Orbit& orbit,
                             long shift = 0);

// Partition of middle/side at the base point.
std::vector<long> side_partition(const DiskTriple& t, Side side);

FiniteLengthModule vanishing_cycles(const DConnection& conn, const Lattice& l,
                                    const Orbit& orbit, Side side);

// Partition at the orbit of the torsion module D/D P(z) (fiber partition at
// the representative; left and right cycles agree for torsion modules).
FiniteLengthModule torsion_vanishing_partition(const Poly& p, const Orbit& orbit);

// Vanishing cycles of the cyclic module D/DQ; routes rank-zero operators
// through the torsion partition.
struct OperatorCycles {
    FiniteLengthModule left, right;
};
OperatorCycles operator_vanishing_cycles(const DifferenceOperator& q, const Orbit& orbit);

struct Classification {
    bool fg_over_tau = false;
    bool fg_over_tau_inv = false;
    bool vector_bundle = false;
    std::map<Rat, std::pair<std::vector<long>, std::vector<long>>> per_orbit; // rep -> (left, right)
    std::optional<Lattice> witness; // tau^-1 W <= W, produced when fg_over_tau
};

Classification classify_module(const DConnection& conn, const Lattice& l);

// dim Ext^1 in the category of disk triples.
long ext1_dimension(const FiniteLengthModule& m, const FiniteLengthModule& n);
long ext1_dimension(const DiskTriple& m, const FiniteLengthModule& n);

// Glue a compatible disk triple onto the module of (conn, background) across
// the orbit: stalks on the orbit from the triple, elsewhere from background.
Lattice glue(const DConnection& conn, const Lattice& background, const DiskTriple& triple);

// F(G(M)) and G(F(M)) identities for (conn, l) at the orbit.
bool round_trip_check(const DConnection& conn, const Lattice& l, const Orbit& orbit,
                      long shift = 0);

} // namespace diffmod
