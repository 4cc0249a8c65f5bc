#pragma once

#include <map>
#include <string>
#include <utility>

#include "diffmod/matrix.hpp"

namespace diffmod {

// Element of Q[z]<tau, tau^-1> with tau z = (z-1) tau, stored in normal form
// sum_i P_i(z) tau^i (coefficients left of the tau powers).
class DifferenceOperator {
public:
    DifferenceOperator() = default;
    static DifferenceOperator zero() { return {}; }
    static DifferenceOperator one() { return term(Poly(Rat(1)), 0); }
    static DifferenceOperator z() { return term(Poly::variable(), 0); }
    static DifferenceOperator tau(long k = 1) { return term(Poly(Rat(1)), k); }
    static DifferenceOperator term(const Poly& p, long tau_power);

    const std::map<long, Poly>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    long min_tau() const { return t_.begin()->first; }
    long max_tau() const { return t_.rbegin()->first; }
    Poly coeff(long k) const;

    DifferenceOperator operator+(const DifferenceOperator& o) const;
    DifferenceOperator operator-(const DifferenceOperator& o) const;
    DifferenceOperator operator*(const DifferenceOperator& o) const; // skew product
    DifferenceOperator operator-() const;
    DifferenceOperator scaled(const Rat& s) const;
    DifferenceOperator pow(int e) const;
    bool operator==(const DifferenceOperator& o) const { return t_ == o.t_; }

    // Action on Q(z) with (tau f)(z) = f(z-1); used by the normal-form tests.
    RatFunc apply(const RatFunc& f) const;

    std::string to_string() const;

private:
    std::map<long, Poly> t_;
};

// Element of Q[x, x^-1]<dx> with dx x - x dx = 1, normal form
// sum c_{k,j} x^k dx^j. Keys are (j = dx power, k = x power).
class DifferentialOperator {
public:
    DifferentialOperator() = default;
    static DifferentialOperator zero() { return {}; }
    static DifferentialOperator one() { return term(0, 0, Rat(1)); }
    static DifferentialOperator x(long k = 1) { return term(0, k, Rat(1)); }
    static DifferentialOperator dx() { return term(1, 0, Rat(1)); }
    static DifferentialOperator term(long dx_power, long x_power, const Rat& c);

    const std::map<std::pair<long, long>, Rat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    DifferentialOperator operator+(const DifferentialOperator& o) const;
    DifferentialOperator operator-(const DifferentialOperator& o) const;
    DifferentialOperator operator*(const DifferentialOperator& o) const;
    DifferentialOperator operator-() const;
    DifferentialOperator scaled(const Rat& s) const;
    DifferentialOperator pow(int e) const;
    bool operator==(const DifferentialOperator& o) const { return t_ == o.t_; }

    // Action on Laurent polynomials in x, for the normal-form tests.
    LaurentPoly apply(const LaurentPoly& f) const;

    std::string to_string() const;

private:
    std::map<std::pair<long, long>, Rat> t_;
};

// Ring isomorphism x -> tau, x dx -> z (so dx -> tau^-1 z) and its inverse.
DifferenceOperator mellin_operator(const DifferentialOperator& d);
DifferentialOperator inverse_mellin_operator(const DifferenceOperator& q);

struct CompanionResult {
    RatFuncMatrix connection; // rank-n companion matrix A(z), det != 0
    RatFuncMatrix lattice;    // standard lattice (identity generators)
    Poly leading;             // P_n after normalization
    Poly trailing;            // P_0
};

// Companion d-connection of the cyclic module D/DQ on the basis
// (s, tau s, ..., tau^{n-1} s). Throws NotNormalizable for Q = 0 and
// RankZero when Q normalizes to a pure polynomial in z.
CompanionResult companion_connection(const DifferenceOperator& q);

} // namespace diffmod
