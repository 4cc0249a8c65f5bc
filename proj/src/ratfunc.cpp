#include "diffmod/ratfunc.hpp"

namespace diffmod {

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw DomainError("DivisionByZero", "rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly(Rat(1));
        return;
    }
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
        num = Poly::div_exact(num, g);
        den = Poly::div_exact(den, g);
    }
    Rat l = den.lc();
    num_ = num * (Rat(1) / l);
    den_ = den * (Rat(1) / l);
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // reduce via gcd of denominators to curb degree growth
    Poly g = gcd(den_, o.den_);
    Poly da = Poly::div_exact(den_, g);
    Poly db = Poly::div_exact(o.den_, g);
    return RatFunc(num_ * db + o.num_ * da, da * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    // cross-reduce before multiplying
    Poly g1 = gcd(num_, o.den_);
    Poly g2 = gcd(o.num_, den_);
    Poly n1 = g1.degree() > 0 ? Poly::div_exact(num_, g1) : num_;
    Poly d2 = g1.degree() > 0 ? Poly::div_exact(o.den_, g1) : o.den_;
    Poly n2 = g2.degree() > 0 ? Poly::div_exact(o.num_, g2) : o.num_;
    Poly d1 = g2.degree() > 0 ? Poly::div_exact(den_, g2) : den_;
    return RatFunc(n1 * n2, d1 * d2);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DomainError("DivisionByZero", "inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

int RatFunc::valuation_at(const Rat& a) const {
    if (is_zero()) throw DomainError("Overflow", "valuation of zero rational function");
    return num_.valuation_at(a) - den_.valuation_at(a);
}

Rat RatFunc::eval(const Rat& a) const {
    Rat d = den_.eval(a);
    if (d == 0) throw SingularMatrix("evaluation at a pole: z = " + rat_to_string(a));
    return num_.eval(a) / d;
}

std::string RatFunc::to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    std::string n = num_.to_string(var);
    std::string d = den_.to_string(var);
    std::string r;
    if (num_.degree() > 0) r = "(" + n + ")";
    else r = n;
    r += "/(" + d + ")";
    return r;
}

} // namespace diffmod
