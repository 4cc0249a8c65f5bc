#include "diffmod/lattice.hpp"

#include <algorithm>

namespace diffmod {

DConnection::DConnection(RatFuncMatrix a) : a_(std::move(a)) {
    if (a_.rows() != a_.cols() || a_.rows() == 0)
        throw SingularMatrix("d-connection matrix must be square and nonempty");
    ainv_ = inverse(a_); // throws SingularMatrix when det = 0
}

Lattice::Lattice(const RatFuncMatrix& generators) {
    const int n = generators.rows();
    if (generators.cols() < n)
        throw SingularMatrix("lattice generators must have full row rank");
    Poly d;
    PolyMatrix cleared = clear_denominators(generators, &d);
    PolyMatrix h = hermite_column_basis(cleared);
    g_ = RatFuncMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g_(i, j) = RatFunc(h(i, j), d);
}

Lattice Lattice::standard(int n) {
    return Lattice(RatFuncMatrix::identity(n, RatFunc(Rat(1))));
}

Lattice Lattice::scaled(const RatFunc& f) const {
    if (f.is_zero()) throw SingularMatrix("scaling a lattice by zero");
    RatFuncMatrix g(g_);
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) g(i, j) *= f;
    return Lattice(g);
}

RatFuncMatrix transition(const Lattice& outer, const Lattice& inner) {
    return inverse(outer.generators()) * inner.generators();
}

bool is_sublattice(const Lattice& inner, const Lattice& outer) {
    RatFuncMatrix t = transition(outer, inner);
    for (int i = 0; i < t.rows(); ++i)
        for (int j = 0; j < t.cols(); ++j)
            if (!t(i, j).is_polynomial()) return false;
    return true;
}

std::vector<int> inclusion_divisors_at(const Lattice& outer, const Lattice& inner, const Rat& a) {
    return local_elementary_divisors(transition(outer, inner), a);
}

bool stalk_equal_at(const Lattice& l1, const Lattice& l2, const Rat& a) {
    for (int d : inclusion_divisors_at(l1, l2, a))
        if (d != 0) return false;
    return true;
}

Lattice tau_shift_lattice(const DConnection& conn, const Lattice& l, long k) {
    RatFuncMatrix g = l.generators();
    for (long i = 0; i < k; ++i)
        g = shift_matrix(conn.matrix(), Rat(-1)) * shift_matrix(g, Rat(-1));
    for (long i = 0; i > k; --i)
        g = conn.matrix_inverse() * shift_matrix(g, Rat(1));
    return Lattice(g);
}

Lattice lattice_sum(const Lattice& l1, const Lattice& l2) {
    if (l1.rank() != l2.rank()) throw SingularMatrix("lattice sum of different ranks");
    return Lattice(l1.generators().hcat(l2.generators()));
}

Lattice lattice_intersection(const Lattice& l1, const Lattice& l2) {
    if (l1.rank() != l2.rank()) throw SingularMatrix("lattice intersection of different ranks");
    const int n = l1.rank();
    RatFuncMatrix pair = l1.generators().hcat(l2.generators().map([](const RatFunc& f) { return -f; }));
    PolyMatrix cleared = clear_denominators(pair);
    PolyMatrix ker = polynomial_matrix_kernel(cleared);
    if (ker.cols() != n)
        throw SingularMatrix("lattice intersection is not full rank");
    RatFuncMatrix x(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x(i, j) = RatFunc(ker(i, j));
    return Lattice(l1.generators() * x);
}

RatFuncMatrix comparison_matrix(const DConnection& conn, const Lattice& l) {
    const RatFuncMatrix& g = l.generators();
    return inverse(g) * shift_matrix(conn.matrix(), Rat(-1)) * shift_matrix(g, Rat(-1));
}

std::set<Rat> ZeroPoleProfile::zeroes() const {
    std::set<Rat> out;
    for (const auto& [a, ds] : points)
        for (int d : ds)
            if (d > 0) { out.insert(a); break; }
    return out;
}

std::set<Rat> ZeroPoleProfile::poles() const {
    std::set<Rat> out;
    for (const auto& [a, ds] : points)
        for (int d : ds)
            if (d < 0) { out.insert(a); break; }
    return out;
}

std::map<long, std::vector<int>> ZeroPoleProfile::orbit_positions(const Orbit& orbit,
                                                                  const Rat& base) const {
    std::map<long, std::vector<int>> out;
    for (const auto& [a, ds] : points) {
        if (!orbit.contains(a)) continue;
        Rat off = a - base;
        out[to_long(off.get_num())] = ds; // off is an integer: both on the orbit
    }
    return out;
}

namespace {

// Rational singular-point candidates of M: points where M or M^-1 could be
// non-integral. Throws UnsupportedPoint when an irrational one exists.
std::vector<Rat> singular_candidates(const RatFuncMatrix& m, const RatFuncMatrix& minv) {
    Poly prod = denominator_lcm(m) * denominator_lcm(minv);
    if (prod.is_constant()) return {};
    RationalRoots rr = rational_roots(prod);
    if (rr.cofactor.degree() > 0)
        throw UnsupportedPoint("singular points include irrational roots of " +
                               rr.cofactor.to_string());
    std::vector<Rat> pts;
    pts.reserve(rr.roots.size());
    for (const auto& [a, m_] : rr.roots) pts.push_back(a);
    return pts;
}

} // namespace

ZeroPoleProfile zero_pole_profile(const DConnection& conn, const Lattice& l) {
    RatFuncMatrix c = comparison_matrix(conn, l);
    RatFuncMatrix cinv = inverse(c);
    ZeroPoleProfile prof;
    std::vector<Rat> pts = singular_candidates(c, cinv);
    if (pts.empty()) return prof;
    auto divs = local_elementary_divisors_multi(c, pts);
    for (auto& [a, ds] : divs) {
        std::vector<int> nz;
        for (int d : ds)
            if (d != 0) nz.push_back(d);
        if (!nz.empty()) prof.points[a] = std::move(nz);
    }
    return prof;
}

std::vector<Orbit> singular_orbits(const ZeroPoleProfile& profile) {
    std::set<Orbit> orbs;
    for (const auto& [a, ds] : profile.points) orbs.insert(Orbit(a));
    return {orbs.begin(), orbs.end()};
}

std::vector<Orbit> singular_orbits(const DConnection& conn, const Lattice& l) {
    return singular_orbits(zero_pole_profile(conn, l));
}

bool austere_separated(const ZeroPoleProfile& profile, const Orbit& orbit) {
    auto pos = profile.orbit_positions(orbit, orbit.rep);
    bool have_zero = false;
    long min_zero = 0;
    for (const auto& [k, ds] : pos)
        for (int d : ds)
            if (d > 0) {
                if (!have_zero || k < min_zero) min_zero = k;
                have_zero = true;
                break;
            }
    if (!have_zero) return true;
    for (const auto& [k, ds] : pos)
        for (int d : ds)
            if (d < 0 && k > min_zero) return false;
    return true;
}

AustereResult austere_reduce(const DConnection& conn, const Lattice& l, const Orbit& orbit) {
    AustereResult res{l, 0, {l}};
    long bound = -1;
    for (;;) {
        ZeroPoleProfile prof = zero_pole_profile(conn, res.lattice);
        if (austere_separated(prof, orbit)) return res;
        auto pos = prof.orbit_positions(orbit, orbit.rep);
        long max_pole = 0, min_zero = 0;
        bool hz = false, hp = false;
        for (const auto& [k, ds] : pos)
            for (int d : ds) {
                if (d > 0 && (!hz || k < min_zero)) { min_zero = k; hz = true; }
                if (d < 0 && (!hp || k > max_pole)) { max_pole = k; hp = true; }
            }
        if (bound < 0) bound = max_pole - min_zero + 1;
        if (res.iterations >= bound)
            throw DomainError("Overflow", "austere reduction exceeded its derived iteration bound");
        res.lattice = lattice_intersection(tau_shift_lattice(conn, res.lattice, -1), res.lattice);
        res.trace.push_back(res.lattice);
        ++res.iterations;
    }
}

Lattice modify_lattice_at_point(const Lattice& base, const Lattice& x, const Rat& a) {
    RatFuncMatrix t = transition(x, base);
    std::vector<int> divs = local_elementary_divisors(t, a);
    int m = 1;
    for (int d : divs) m = std::max(m, std::abs(d) + 1);
    RatFunc s(Poly::power_of_linear(a, m));
    return lattice_sum(lattice_intersection(x, base.scaled(s.inverse())), base.scaled(s));
}

Lattice tau_saturation(const DConnection& conn, const Lattice& l, long bound) {
    Lattice acc = l;
    Lattice up = l, down = l;
    for (long k = 1; k <= bound; ++k) {
        up = tau_shift_lattice(conn, up, 1);
        down = tau_shift_lattice(conn, down, -1);
        acc = lattice_sum(lattice_sum(acc, up), down);
    }
    return acc;
}

long stabilization_bound(const ZeroPoleProfile& profile, const Orbit& orbit, const Rat& base) {
    long k = 0;
    for (const auto& [off, ds] : profile.orbit_positions(orbit, base))
        k = std::max(k, std::abs(off));
    return k + 1;
}

Lattice intermediate_extension(const DConnection& conn, const Lattice& l, const Orbit& orbit) {
    AustereResult red = austere_reduce(conn, l, orbit);
    ZeroPoleProfile prof = zero_pole_profile(conn, l);
    long bound = stabilization_bound(prof, orbit, orbit.rep);
    Lattice saturated = tau_saturation(conn, l, bound);

    // patch the austere stalks onto the saturated lattice along the orbit
    RatFuncMatrix t = transition(red.lattice, saturated);
    RatFuncMatrix tinv = transition(saturated, red.lattice);
    Lattice out = saturated;
    for (const Rat& a : singular_candidates(t, tinv)) {
        if (!orbit.contains(a)) continue;
        out = modify_lattice_at_point(out, red.lattice, a);
    }
    return out;
}

DConnection involute(const DConnection& conn) {
    return DConnection(inverse(reflect_matrix(conn.matrix())));
}

Lattice involute(const Lattice& l) {
    return Lattice(reflect_matrix(l.generators()));
}

Orbit involute(const Orbit& orbit) {
    return Orbit(Rat(-orbit.rep));
}

} // namespace diffmod
