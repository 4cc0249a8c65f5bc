#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "diffmod/rat.hpp"

namespace diffmod {

// Dense univariate polynomial over Q, coefficients indexed by degree.
// Invariant: no trailing zero coefficient (zero polynomial = empty vector).
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c);
    Poly(long c) : Poly(Rat(c)) {}
    explicit Poly(std::vector<Rat> coeffs);

    static Poly variable();                 // z
    static Poly linear(const Rat& root);    // z - root
    static Poly power_of_linear(const Rat& root, int e);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for 0
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const;
    Rat lc() const; // leading coefficient; 0 for the zero polynomial

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator*(const Rat& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    // Euclidean division; remainder has degree < deg(divisor).
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
    // Exact division; throws DomainError if the division leaves a remainder.
    static Poly div_exact(const Poly& a, const Poly& b);

    Poly monic() const;
    Rat eval(const Rat& x) const;
    Poly shift(const Rat& s) const;   // p(z + s)
    Poly reflect() const;             // p(-z)
    Poly derivative() const;

    // Multiplicity of a as a root (0 when p(a) != 0). Undefined for p = 0.
    int valuation_at(const Rat& a) const;

    std::string to_string(const std::string& var = "z") const;

private:
    void trim();
    std::vector<Rat> c_;
};

Poly gcd(const Poly& a, const Poly& b);       // monic gcd; gcd(0,0) = 0
Poly lcm(const Poly& a, const Poly& b);       // monic lcm

// All rational roots with multiplicities plus the (root-free) cofactor,
// normalized monic. p must be nonzero.
struct RationalRoots {
    std::map<Rat, int> roots;
    Poly cofactor; // monic, no rational roots
};
RationalRoots rational_roots(const Poly& p);

} // namespace diffmod
