#include "diffmod/poly.hpp"

#include <algorithm>
#include <sstream>

namespace diffmod {

Poly::Poly(const Rat& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::variable() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

Poly Poly::linear(const Rat& root) { return Poly(std::vector<Rat>{-root, Rat(1)}); }

Poly Poly::power_of_linear(const Rat& root, int e) {
    Poly r(Rat(1));
    Poly l = linear(root);
    for (int i = 0; i < e; ++i) r *= l;
    return r;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[i];
}

Rat Poly::lc() const { return c_.empty() ? Rat(0) : c_.back(); }

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rat& s) const {
    if (s == 0) return Poly();
    Poly r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("DivisionByZero", "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rat> rem = a.c_;
    std::vector<Rat> quo(a.degree() - b.degree() + 1, Rat(0));
    const Rat inv_lc = Rat(1) / b.lc();
    for (int i = a.degree(); i >= b.degree(); --i) {
        Rat q = rem[i] * inv_lc;
        if (q == 0) continue;
        quo[i - b.degree()] = q;
        for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= q * b.c_[j];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw DomainError("InexactDivision", "polynomial division not exact");
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / lc());
}

Rat Poly::eval(const Rat& x) const {
    Rat r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Poly Poly::shift(const Rat& s) const {
    // Horner: p(z+s) built from the top coefficient down.
    Poly r;
    Poly zs(std::vector<Rat>{s, Rat(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * zs + Poly(*it);
    return r;
}

Poly Poly::reflect() const {
    Poly r(*this);
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(r));
}

int Poly::valuation_at(const Rat& a) const {
    if (is_zero()) throw DomainError("Overflow", "valuation of zero polynomial");
    int v = 0;
    Poly p = *this;
    Poly l = linear(a);
    while (p.eval(a) == 0) {
        p = div_exact(p, l);
        ++v;
    }
    return v;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rat c = c_[i];
        if (c == 0) continue;
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (i == 0) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

// Integer polynomial utilities for gcd / root finding.
struct ZPoly {
    std::vector<Int> c; // degree-indexed, trimmed
};

ZPoly to_primitive_zpoly(const Poly& p, Int* content_num = nullptr) {
    Int den_lcm(1);
    for (const Rat& q : p.coeffs()) {
        Int d = q.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    ZPoly r;
    r.c.reserve(p.coeffs().size());
    Int cont(0);
    for (const Rat& q : p.coeffs()) {
        Int v = q.get_num() * (den_lcm / q.get_den());
        r.c.push_back(v);
        mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), v.get_mpz_t());
    }
    if (cont > 1)
        for (auto& v : r.c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), cont.get_mpz_t());
    if (content_num) *content_num = cont;
    return r;
}

void ztrim(ZPoly& a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

void zprimitive(ZPoly& a) {
    Int g(0);
    for (const auto& v : a.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& v : a.c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b (deg a >= deg b), primitive part taken each
// round; bounded degrees here, so the primitive PRS is plenty.
ZPoly zprem(ZPoly a, const ZPoly& b) {
    int db = static_cast<int>(b.c.size()) - 1;
    const Int& lb = b.c.back();
    while (static_cast<int>(a.c.size()) - 1 >= db && !a.c.empty()) {
        int da = static_cast<int>(a.c.size()) - 1;
        Int la = a.c.back();
        for (int i = 0; i <= da; ++i) a.c[i] *= lb;
        for (int j = 0; j <= db; ++j) a.c[da - db + j] -= la * b.c[j];
        ztrim(a);
    }
    return a;
}

} // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    ZPoly x = to_primitive_zpoly(a);
    ZPoly y = to_primitive_zpoly(b);
    if (x.c.size() < y.c.size()) std::swap(x, y);
    while (!y.c.empty()) {
        ZPoly r = zprem(x, y);
        zprimitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rat> rc;
    rc.reserve(x.c.size());
    for (const auto& v : x.c) rc.emplace_back(v);
    return Poly(std::move(rc)).monic();
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    return Poly::div_exact(a * b, gcd(a, b)).monic();
}

RationalRoots rational_roots(const Poly& p) {
    if (p.is_zero()) throw DomainError("Overflow", "rational_roots of zero polynomial");
    RationalRoots out;
    Poly q = p.monic();
    if (q.is_constant()) {
        out.cofactor = Poly(Rat(1));
        return out;
    }
    // strip z^k
    int v0 = 0;
    while (q.coeff(0) == 0) {
        q = Poly::div_exact(q, Poly::variable());
        ++v0;
    }
    if (v0 > 0) out.roots[Rat(0)] = v0;
    while (!q.is_constant()) {
        ZPoly zp = to_primitive_zpoly(q);
        const Int lead = zp.c.back();
        const Int constant = zp.c.front();
        bool found = false;
        for (const Int& dn : divisors(constant)) {
            for (const Int& dd : divisors(lead)) {
                for (int sign = 0; sign < 2; ++sign) {
                    Rat cand(sign ? Int(-dn) : dn, dd);
                    cand.canonicalize();
                    if (out.roots.count(cand)) continue; // already fully divided out
                    if (q.eval(cand) == 0) {
                        int m = 0;
                        Poly l = Poly::linear(cand);
                        while (q.eval(cand) == 0) {
                            q = Poly::div_exact(q, l);
                            ++m;
                        }
                        out.roots[cand] = m;
                        found = true;
                    }
                    if (q.is_constant()) break;
                }
                if (q.is_constant()) break;
            }
            if (q.is_constant() || found) break; // restart candidate scan on new data
        }
        if (!found) break;
    }
    out.cofactor = q.monic();
    return out;
}

} // namespace diffmod
