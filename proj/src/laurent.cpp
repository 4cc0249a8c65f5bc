#include "diffmod/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace diffmod {

LaurentTrunc LaurentTrunc::zero(const Rat& a, long prec) {
    LaurentTrunc t;
    t.a_ = a;
    t.v_ = prec;
    t.prec_ = prec;
    return t;
}

LaurentTrunc LaurentTrunc::constant(const Rat& a, const Rat& c, long prec) {
    return monomial(a, 0, c, prec);
}

LaurentTrunc LaurentTrunc::monomial(const Rat& a, long e, const Rat& c, long prec) {
    if (c == 0 || e >= prec) return zero(a, prec);
    std::vector<Rat> cs(static_cast<std::size_t>(prec - e), Rat(0));
    cs[0] = c;
    return LaurentTrunc(a, e, std::move(cs), prec);
}

LaurentTrunc::LaurentTrunc(const Rat& a, long v, std::vector<Rat> coeffs, long prec)
    : a_(a), v_(v), prec_(prec), c_(std::move(coeffs)) {
    if (static_cast<long>(c_.size()) != prec_ - v_)
        throw DomainError("Overflow", "LaurentTrunc window size mismatch");
    normalize();
}

void LaurentTrunc::normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        v_ += static_cast<long>(lead);
    }
    if (c_.empty()) v_ = prec_;
}

long LaurentTrunc::valuation() const {
    if (known_zero())
        throw InsufficientPrecision("valuation of a series that is zero through order " +
                                    std::to_string(prec_));
    return v_;
}

Rat LaurentTrunc::coeff(long e) const {
    if (e >= prec_)
        throw InsufficientPrecision("coefficient past stored precision");
    if (e < v_) return Rat(0);
    return c_[static_cast<std::size_t>(e - v_)];
}

LaurentTrunc LaurentTrunc::operator-() const {
    LaurentTrunc r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

LaurentTrunc LaurentTrunc::operator+(const LaurentTrunc& o) const {
    if (a_ != o.a_) throw DomainError("Overflow", "adding series at different points");
    long prec = std::min(prec_, o.prec_);
    long lo = std::min(v_, o.v_);
    if (lo >= prec) return zero(a_, prec);
    std::vector<Rat> cs(static_cast<std::size_t>(prec - lo), Rat(0));
    for (long e = std::max(lo, v_); e < std::min(prec, prec_); ++e)
        cs[static_cast<std::size_t>(e - lo)] += coeff(e);
    for (long e = std::max(lo, o.v_); e < std::min(prec, o.prec_); ++e)
        cs[static_cast<std::size_t>(e - lo)] += o.coeff(e);
    return LaurentTrunc(a_, lo, std::move(cs), prec);
}

LaurentTrunc LaurentTrunc::operator-(const LaurentTrunc& o) const { return *this + (-o); }

LaurentTrunc LaurentTrunc::operator*(const LaurentTrunc& o) const {
    if (a_ != o.a_) throw DomainError("Overflow", "multiplying series at different points");
    // zero-through-precision times anything: only the precision survives
    if (known_zero() || o.known_zero()) {
        long vz = known_zero() ? prec_ : v_;
        long vo = o.known_zero() ? o.prec_ : o.v_;
        return zero(a_, std::min(prec_ + vo, o.prec_ + vz));
    }
    long prec = std::min(v_ + o.prec_, o.v_ + prec_);
    long lo = v_ + o.v_;
    std::vector<Rat> cs(static_cast<std::size_t>(prec - lo), Rat(0));
    for (long i = v_; i < prec_; ++i) {
        const Rat& ci = c_[static_cast<std::size_t>(i - v_)];
        if (ci == 0) continue;
        long jmax = std::min(o.prec_, prec - i);
        for (long j = o.v_; j < jmax; ++j)
            cs[static_cast<std::size_t>(i + j - lo)] += ci * o.c_[static_cast<std::size_t>(j - o.v_)];
    }
    return LaurentTrunc(a_, lo, std::move(cs), prec);
}

LaurentTrunc LaurentTrunc::inverse() const {
    if (known_zero())
        throw InsufficientPrecision("inverse of a series that is zero through stored order");
    // f = pi^v (c0 + c1 pi + ...), relative precision R = prec - v
    long r = prec_ - v_;
    std::vector<Rat> inv(static_cast<std::size_t>(r), Rat(0));
    Rat c0inv = Rat(1) / c_[0];
    inv[0] = c0inv;
    for (long k = 1; k < r; ++k) {
        Rat s(0);
        for (long j = 1; j <= k; ++j)
            s += c_[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
        inv[static_cast<std::size_t>(k)] = -s * c0inv;
    }
    return LaurentTrunc(a_, -v_, std::move(inv), -v_ + r);
}

LaurentTrunc LaurentTrunc::scale(const Rat& s) const {
    if (s == 0) return zero(a_, prec_);
    LaurentTrunc r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

LaurentTrunc LaurentTrunc::shift_exponent(long k) const {
    LaurentTrunc r(*this);
    r.v_ += k;
    r.prec_ += k;
    return r;
}

LaurentTrunc LaurentTrunc::truncated(long prec) const {
    if (prec >= prec_) return *this;
    if (prec <= v_) return zero(a_, prec);
    std::vector<Rat> cs(c_.begin(), c_.begin() + (prec - v_));
    return LaurentTrunc(a_, v_, std::move(cs), prec);
}

bool LaurentTrunc::agrees_with(const LaurentTrunc& o) const {
    if (a_ != o.a_) return false;
    long prec = std::min(prec_, o.prec_);
    long lo = std::min(known_zero() ? prec : v_, o.known_zero() ? prec : o.v_);
    for (long e = lo; e < prec; ++e)
        if (coeff(e) != o.coeff(e)) return false;
    return true;
}

std::string LaurentTrunc::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (long e = v_; e < prec_; ++e) {
        Rat c = coeff(e);
        if (c == 0) continue;
        if (!first) os << " + ";
        os << rat_to_string(c);
        if (e != 0) os << "*" << var << "^" << e;
        first = false;
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << prec_ << ")";
    return os.str();
}

LaurentTrunc laurent_expand(const RatFunc& f, const Rat& a, long n_terms) {
    if (n_terms < 1) throw DomainError("Overflow", "truncation order must be positive");
    if (f.is_zero()) return LaurentTrunc::zero(a, n_terms);
    int vn = f.num().valuation_at(a);
    int vd = f.den().valuation_at(a);
    long v = vn - vd;
    Poly nsh = f.num().shift(a); // numerator in pi, valuation vn at 0
    Poly dsh = f.den().shift(a);
    auto drop = [](const Poly& p, int k) {
        std::vector<Rat> c(p.coeffs().begin() + k, p.coeffs().end());
        return Poly(std::move(c));
    };
    Poly n0 = drop(nsh, vn);
    Poly d0 = drop(dsh, vd);
    // power series division to n_terms
    std::vector<Rat> cs(static_cast<std::size_t>(n_terms), Rat(0));
    Rat d0inv = Rat(1) / d0.coeff(0);
    for (long k = 0; k < n_terms; ++k) {
        Rat s = n0.coeff(static_cast<int>(k));
        for (long j = 1; j <= k; ++j) s -= d0.coeff(static_cast<int>(j)) * cs[static_cast<std::size_t>(k - j)];
        cs[static_cast<std::size_t>(k)] = s * d0inv;
    }
    return LaurentTrunc(a, v, std::move(cs), v + n_terms);
}

LaurentPoly::LaurentPoly(std::map<long, Rat> terms) : t_(std::move(terms)) {
    for (auto it = t_.begin(); it != t_.end();)
        it = (it->second == 0) ? t_.erase(it) : std::next(it);
}

LaurentPoly LaurentPoly::monomial(long e, const Rat& c) {
    LaurentPoly p;
    if (c != 0) p.t_[e] = c;
    return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    std::map<long, Rat> r = t_;
    for (const auto& [e, c] : o.t_) {
        Rat& x = r[e];
        x += c;
        if (x == 0) r.erase(e);
    }
    return LaurentPoly(std::move(r));
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    std::map<long, Rat> r;
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_) r[e1 + e2] += c1 * c2;
    return LaurentPoly(std::move(r));
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(*this);
    for (auto& [e, c] : p.t_) c = -c;
    return p;
}

LaurentTrunc LaurentPoly::to_trunc(const Rat& a, long prec) const {
    if (t_.empty()) return LaurentTrunc::zero(a, prec);
    long lo = t_.begin()->first;
    if (lo >= prec) return LaurentTrunc::zero(a, prec);
    std::vector<Rat> cs(static_cast<std::size_t>(prec - lo), Rat(0));
    for (const auto& [e, c] : t_)
        if (e < prec) cs[static_cast<std::size_t>(e - lo)] = c;
    return LaurentTrunc(a, lo, std::move(cs), prec);
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        if (!first) os << " + ";
        os << rat_to_string(c);
        if (e != 0) os << "*" << var << "^" << e;
        first = false;
    }
    return os.str();
}

} // namespace diffmod
