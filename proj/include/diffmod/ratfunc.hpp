#pragma once

#include <string>

#include "diffmod/poly.hpp"

namespace diffmod {

// Rational function num/den over Q(z); den monic, gcd(num, den) = 1,
// zero represented as 0/1.
class RatFunc {
public:
    RatFunc() : den_(Rat(1)) {}
    RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}
    RatFunc(long c) : num_(Rat(c)), den_(Rat(1)) {}
    RatFunc(const Poly& p) : num_(p), den_(Rat(1)) {}
    RatFunc(Poly num, Poly den);

    static RatFunc variable() { return RatFunc(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc inverse() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // Order of vanishing at a (negative at a pole). Undefined for 0.
    int valuation_at(const Rat& a) const;
    bool is_regular_at(const Rat& a) const { return den_.eval(a) != 0; }
    Rat eval(const Rat& a) const; // throws SingularMatrix on a pole

    RatFunc shift(const Rat& s) const { return RatFunc(num_.shift(s), den_.shift(s)); }
    RatFunc reflect() const { return RatFunc(num_.reflect(), den_.reflect()); }

    std::string to_string(const std::string& var = "z") const;

private:
    Poly num_, den_;
};

inline RatFunc operator*(const Rat& s, const RatFunc& f) { return RatFunc(s) * f; }

} // namespace diffmod
