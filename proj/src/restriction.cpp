#include "diffmod/restriction.hpp"

#include <algorithm>

namespace diffmod {

FiniteLengthModule::FiniteLengthModule(std::vector<long> parts, Orbit orb)
    : partition(std::move(parts)), orbit(orb) {
    std::sort(partition.begin(), partition.end(), std::greater<long>());
    for (long k : partition)
        if (k < 1) throw DomainError("Overflow", "partition parts must be positive");
}

long FiniteLengthModule::total() const {
    long t = 0;
    for (long k : partition) t += k;
    return t;
}

DiskTriple restrict_to_orbit(const DConnection& conn, const Lattice& l, const Orbit& orbit,
                             long shift) {
    DiskTriple t;
    t.orbit = orbit;
    t.shift = shift;
    t.base = orbit.rep + Rat(shift);
    t.rank = conn.rank();
    ZeroPoleProfile prof = zero_pole_profile(conn, l);
    long k = stabilization_bound(prof, orbit, t.base);
    t.stable_shift = k;
    t.left = tau_shift_lattice(conn, l, k);
    t.right = tau_shift_lattice(conn, l, -k);
    t.middle = tau_saturation(conn, l, k);

    // stabilization check: one more shift must not move the stalk at base
    Lattice left2 = tau_shift_lattice(conn, t.left, 1);
    Lattice right2 = tau_shift_lattice(conn, t.right, -1);
    if (!stalk_equal_at(t.left, left2, t.base) || !stalk_equal_at(t.right, right2, t.base) ||
        !stalk_equal_at(t.middle, lattice_sum(t.middle, lattice_sum(left2, right2)), t.base))
        throw DomainError("Overflow", "restriction did not stabilize at the derived bound");
    return t;
}

std::vector<long> side_partition(const DiskTriple& t, Side side) {
    const Lattice& s = side == Side::Left ? t.left : t.right;
    std::vector<long> parts;
    for (int d : inclusion_divisors_at(t.middle, s, t.base)) {
        if (d < 0)
            throw IncompatibleTriple("side lattice is not contained in the middle at the base point");
        if (d > 0) parts.push_back(d);
    }
    std::sort(parts.begin(), parts.end(), std::greater<long>());
    return parts;
}

FiniteLengthModule vanishing_cycles(const DConnection& conn, const Lattice& l,
                                    const Orbit& orbit, Side side) {
    DiskTriple t = restrict_to_orbit(conn, l, orbit);
    return FiniteLengthModule(side_partition(t, side), orbit);
}

FiniteLengthModule torsion_vanishing_partition(const Poly& p, const Orbit& orbit) {
    if (p.is_zero()) throw SingularMatrix("torsion partition of the zero polynomial");
    std::vector<long> parts;
    if (!p.is_constant()) {
        RationalRoots rr = rational_roots(p);
        if (rr.cofactor.degree() > 0)
            throw UnsupportedPoint("torsion module supported at irrational roots of " +
                                   rr.cofactor.to_string());
        for (const auto& [a, m] : rr.roots)
            if (orbit.contains(a)) parts.push_back(m);
    }
    return FiniteLengthModule(std::move(parts), orbit);
}

OperatorCycles operator_vanishing_cycles(const DifferenceOperator& q, const Orbit& orbit) {
    OperatorCycles out;
    try {
        CompanionResult comp = companion_connection(q);
        DConnection conn(comp.connection);
        Lattice l(comp.lattice);
        out.left = vanishing_cycles(conn, l, orbit, Side::Left);
        out.right = vanishing_cycles(conn, l, orbit, Side::Right);
    } catch (const RankZero&) {
        Poly p0 = q.coeff(q.min_tau());
        out.left = torsion_vanishing_partition(p0, orbit);
        out.right = out.left;
    }
    return out;
}

Classification classify_module(const DConnection& conn, const Lattice& l) {
    Classification c;
    ZeroPoleProfile prof = zero_pole_profile(conn, l);
    c.fg_over_tau = true;
    c.fg_over_tau_inv = true;
    for (const Orbit& orb : singular_orbits(prof)) {
        DiskTriple t = restrict_to_orbit(conn, l, orb);
        auto left = side_partition(t, Side::Left);
        auto right = side_partition(t, Side::Right);
        if (!left.empty()) c.fg_over_tau = false;
        if (!right.empty()) c.fg_over_tau_inv = false;
        c.per_orbit[orb.rep] = {left, right};
    }
    c.vector_bundle = c.fg_over_tau && c.fg_over_tau_inv;
    if (c.fg_over_tau) {
        // grow L until it has no zeroes: W <- W + tau^-1 W
        long span = 0;
        for (const Orbit& orb : singular_orbits(prof)) {
            auto pos = prof.orbit_positions(orb, orb.rep);
            if (pos.empty()) continue;
            span = std::max(span, pos.rbegin()->first - pos.begin()->first);
        }
        Lattice w = l;
        for (long i = 0; i <= span + 2; ++i) {
            ZeroPoleProfile pw = zero_pole_profile(conn, w);
            if (pw.zeroes().empty()) {
                c.witness = w;
                break;
            }
            w = lattice_sum(w, tau_shift_lattice(conn, w, -1));
        }
    }
    return c;
}

long ext1_dimension(const FiniteLengthModule& m, const FiniteLengthModule& n) {
    long d = 0;
    for (long a : m.partition)
        for (long b : n.partition) d += std::min(a, b);
    return d;
}

long ext1_dimension(const DiskTriple& m, const FiniteLengthModule& n) {
    if (!m.middle_torsion.empty())
        throw MixedCaseUnsupported("Ext^1 for middles with both free and torsion parts");
    long sum_b = 0;
    for (long b : n.partition) sum_b += b;
    // maps killing M^l + M^r factor through the quotient by their sum
    Lattice s = lattice_sum(m.left, m.right);
    long pair = 0;
    for (int d : inclusion_divisors_at(m.middle, s, m.base)) {
        if (d < 0)
            throw IncompatibleTriple("side lattices not contained in the middle at the base point");
        for (long b : n.partition) pair += std::min(static_cast<long>(d), b);
    }
    return static_cast<long>(m.rank) * sum_b + pair;
}

Lattice glue(const DConnection& conn, const Lattice& background, const DiskTriple& triple) {
    if (!triple.middle_torsion.empty())
        throw MixedCaseUnsupported("gluing middles with torsion is not supported");
    DiskTriple computed = restrict_to_orbit(conn, background, triple.orbit, triple.shift);
    if (computed.rank != triple.rank)
        throw IncompatibleTriple("rank mismatch between triple and connection");
    if (!stalk_equal_at(computed.left, triple.left, triple.base) ||
        !stalk_equal_at(computed.right, triple.right, triple.base))
        throw IncompatibleTriple("triple sides disagree with the punctured-line restriction");
    for (int d : inclusion_divisors_at(triple.middle, triple.left, triple.base))
        if (d < 0) throw IncompatibleTriple("triple middle does not contain its left lattice");
    for (int d : inclusion_divisors_at(triple.middle, triple.right, triple.base))
        if (d < 0) throw IncompatibleTriple("triple middle does not contain its right lattice");

    // window of orbit points to patch
    long kmax = std::max(computed.stable_shift, triple.stable_shift);
    RatFuncMatrix t1 = transition(triple.middle, background);
    RatFuncMatrix t2 = transition(background, triple.middle);
    Poly prod = denominator_lcm(t1) * denominator_lcm(t2);
    if (!prod.is_constant()) {
        RationalRoots rr = rational_roots(prod);
        if (rr.cofactor.degree() > 0)
            throw UnsupportedPoint("gluing data singular at irrational points");
        for (const auto& [a, mult] : rr.roots) {
            if (!triple.orbit.contains(a)) continue;
            Rat off = a - triple.base;
            kmax = std::max(kmax, std::abs(to_long(off.get_num())));
        }
    }

    Lattice out = background;
    for (long i = -kmax; i <= kmax; ++i) {
        Lattice xi = tau_shift_lattice(conn, triple.middle, i);
        out = modify_lattice_at_point(out, xi, triple.base + Rat(i));
    }
    return out;
}

bool round_trip_check(const DConnection& conn, const Lattice& l, const Orbit& orbit, long shift) {
    DiskTriple t = restrict_to_orbit(conn, l, orbit, shift);
    Lattice glued = glue(conn, t.middle, t);
    if (glued != t.middle) return false; // F(G(M)) as the saturated representative
    DiskTriple t2 = restrict_to_orbit(conn, glued, orbit, shift);
    return stalk_equal_at(t2.left, t.left, t.base) &&
           stalk_equal_at(t2.middle, t.middle, t.base) &&
           stalk_equal_at(t2.right, t.right, t.base);
}

} // namespace diffmod
