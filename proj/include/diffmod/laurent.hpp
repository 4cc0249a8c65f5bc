#pragma once

#include <map>
#include <string>
#include <vector>

#include "diffmod/ratfunc.hpp"

namespace diffmod {

// Truncated Laurent series in pi = z - a: coefficients are stored for
// exponents [v, prec) and the series is known modulo pi^prec. When any
// stored coefficient is nonzero the leading one is nonzero, so v is the
// exact valuation; otherwise the series is zero through order prec.
class LaurentTrunc {
public:
    LaurentTrunc() : a_(0), v_(0), prec_(0) {}
    static LaurentTrunc zero(const Rat& a, long prec);
    static LaurentTrunc constant(const Rat& a, const Rat& c, long prec);
    // pi^e * c
    static LaurentTrunc monomial(const Rat& a, long e, const Rat& c, long prec);
    LaurentTrunc(const Rat& a, long v, std::vector<Rat> coeffs, long prec);

    const Rat& point() const { return a_; }
    long prec() const { return prec_; }
    bool known_zero() const { return c_.empty(); }     // zero through prec
    long valuation() const;                            // throws on known_zero
    long terms() const { return prec_ - v_; }          // the "N" of the spec
    Rat coeff(long e) const;                           // 0 inside window, throws past prec
    const std::vector<Rat>& coeffs() const { return c_; }
    long low() const { return v_; }

    LaurentTrunc operator-() const;
    LaurentTrunc operator+(const LaurentTrunc& o) const;
    LaurentTrunc operator-(const LaurentTrunc& o) const;
    LaurentTrunc operator*(const LaurentTrunc& o) const;
    LaurentTrunc& operator+=(const LaurentTrunc& o) { return *this = *this + o; }
    LaurentTrunc& operator-=(const LaurentTrunc& o) { return *this = *this - o; }
    LaurentTrunc inverse() const; // unit only; throws InsufficientPrecision when all-zero
    LaurentTrunc scale(const Rat& s) const;
    LaurentTrunc shift_exponent(long k) const; // multiply by pi^k
    LaurentTrunc truncated(long prec) const;

    // Exact coefficient-wise equality on the common known window.
    bool agrees_with(const LaurentTrunc& o) const;

    std::string to_string(const std::string& var = "pi") const;

private:
    void normalize();
    Rat a_;
    long v_;
    long prec_;
    std::vector<Rat> c_;
};

// Expansion of f at a with N terms starting at the exact valuation
// (prec = val + N). f = 0 gives the zero truncation with prec = N.
LaurentTrunc laurent_expand(const RatFunc& f, const Rat& a, long n_terms);

// Exact Laurent polynomial, used for the polynomial factor of the
// Birkhoff-type factorization.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::map<long, Rat> terms);
    static LaurentPoly monomial(long e, const Rat& c);

    const std::map<long, Rat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;

    // Truncation at the given point/precision, for product verification.
    LaurentTrunc to_trunc(const Rat& a, long prec) const;
    std::string to_string(const std::string& var = "pi") const;

private:
    std::map<long, Rat> t_;
};

} // namespace diffmod
