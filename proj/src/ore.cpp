#include "diffmod/ore.hpp"

#include <sstream>

namespace diffmod {

DifferenceOperator DifferenceOperator::term(const Poly& p, long tau_power) {
    DifferenceOperator q;
    if (!p.is_zero()) q.t_[tau_power] = p;
    return q;
}

Poly DifferenceOperator::coeff(long k) const {
    auto it = t_.find(k);
    return it == t_.end() ? Poly() : it->second;
}

DifferenceOperator DifferenceOperator::operator+(const DifferenceOperator& o) const {
    DifferenceOperator r(*this);
    for (const auto& [k, p] : o.t_) {
        Poly& q = r.t_[k];
        q += p;
        if (q.is_zero()) r.t_.erase(k);
    }
    return r;
}

DifferenceOperator DifferenceOperator::operator-() const {
    DifferenceOperator r(*this);
    for (auto& [k, p] : r.t_) p = -p;
    return r;
}

DifferenceOperator DifferenceOperator::operator-(const DifferenceOperator& o) const {
    return *this + (-o);
}

DifferenceOperator DifferenceOperator::operator*(const DifferenceOperator& o) const {
    // (P(z) tau^i)(Q(z) tau^j) = P(z) Q(z-i) tau^{i+j}
    DifferenceOperator r;
    for (const auto& [i, p] : t_)
        for (const auto& [j, q] : o.t_) {
            Poly c = p * q.shift(Rat(-i));
            if (c.is_zero()) continue;
            Poly& dst = r.t_[i + j];
            dst += c;
            if (dst.is_zero()) r.t_.erase(i + j);
        }
    return r;
}

DifferenceOperator DifferenceOperator::scaled(const Rat& s) const {
    if (s == 0) return {};
    DifferenceOperator r(*this);
    for (auto& [k, p] : r.t_) p = p * s;
    return r;
}

DifferenceOperator DifferenceOperator::pow(int e) const {
    DifferenceOperator r = one();
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

RatFunc DifferenceOperator::apply(const RatFunc& f) const {
    RatFunc r;
    for (const auto& [k, p] : t_) r += RatFunc(p) * f.shift(Rat(-k));
    return r;
}

std::string DifferenceOperator::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [k, p] = *it;
        // detect a single-monomial coefficient for inline printing
        int nterms = 0;
        for (const Rat& c : p.coeffs())
            if (c != 0) ++nterms;
        bool neg = false;
        Poly q = p;
        if (nterms == 1 && p.lc() < 0) {
            neg = true;
            q = -p;
        }
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        std::string coeff_str = q.to_string("z");
        bool coeff_is_one = (q == Poly(Rat(1)));
        if (k == 0) {
            os << (nterms > 1 ? coeff_str : coeff_str);
        } else {
            if (coeff_is_one) {
                // bare tau power
            } else if (nterms == 1) {
                os << coeff_str << "*";
            } else {
                os << "(" << coeff_str << ")*";
            }
            os << "T";
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

DifferentialOperator DifferentialOperator::term(long dx_power, long x_power, const Rat& c) {
    DifferentialOperator q;
    if (c != 0) q.t_[{dx_power, x_power}] = c;
    return q;
}

DifferentialOperator DifferentialOperator::operator+(const DifferentialOperator& o) const {
    DifferentialOperator r(*this);
    for (const auto& [k, c] : o.t_) {
        Rat& q = r.t_[k];
        q += c;
        if (q == 0) r.t_.erase(k);
    }
    return r;
}

DifferentialOperator DifferentialOperator::operator-() const {
    DifferentialOperator r(*this);
    for (auto& [k, c] : r.t_) c = -c;
    return r;
}

DifferentialOperator DifferentialOperator::operator-(const DifferentialOperator& o) const {
    return *this + (-o);
}

DifferentialOperator DifferentialOperator::operator*(const DifferentialOperator& o) const {
    // dx^j x^m = sum_s binom(j,s) m(m-1)...(m-s+1) x^{m-s} dx^{j-s}
    DifferentialOperator r;
    for (const auto& [k1, c1] : t_)
        for (const auto& [k2, c2] : o.t_) {
            long j1 = k1.first, m1 = k1.second;
            long j2 = k2.first, m2 = k2.second;
            Rat binom(1), falling(1);
            for (long s = 0; s <= j1; ++s) {
                if (s > 0) {
                    binom = binom * Rat(j1 - s + 1) / Rat(s);
                    falling *= Rat(m2 - s + 1);
                }
                Rat c = c1 * c2 * binom * falling;
                if (c == 0) continue;
                auto key = std::make_pair(j1 - s + j2, m1 + m2 - s);
                Rat& dst = r.t_[key];
                dst += c;
                if (dst == 0) r.t_.erase(key);
            }
        }
    return r;
}

DifferentialOperator DifferentialOperator::scaled(const Rat& s) const {
    if (s == 0) return {};
    DifferentialOperator r(*this);
    for (auto& [k, c] : r.t_) c *= s;
    return r;
}

DifferentialOperator DifferentialOperator::pow(int e) const {
    DifferentialOperator r = one();
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

LaurentPoly DifferentialOperator::apply(const LaurentPoly& f) const {
    LaurentPoly out;
    for (const auto& [k, c] : t_) {
        long j = k.first, m = k.second;
        LaurentPoly g = f;
        for (long s = 0; s < j; ++s) {
            // d/dx
            std::map<long, Rat> dg;
            for (const auto& [e, ce] : g.terms())
                if (e != 0) dg[e - 1] = ce * Rat(e);
            g = LaurentPoly(std::move(dg));
        }
        std::map<long, Rat> shifted;
        for (const auto& [e, ce] : g.terms()) shifted[e + m] = ce * c;
        out = out + LaurentPoly(std::move(shifted));
    }
    return out;
}

std::string DifferentialOperator::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        long j = it->first.first, k = it->first.second;
        Rat c = it->second;
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        bool printed = false;
        if (a != 1 || (j == 0 && k == 0)) {
            os << rat_to_string(a);
            printed = true;
        }
        if (k != 0) {
            if (printed) os << "*";
            os << "x";
            if (k != 1) os << "^" << k;
            printed = true;
        }
        if (j != 0) {
            if (printed) os << "*";
            os << "Dx";
            if (j != 1) os << "^" << j;
        }
    }
    return os.str();
}

DifferenceOperator mellin_operator(const DifferentialOperator& d) {
    // x -> tau, dx -> tau^-1 z
    static const DifferenceOperator dx_image =
        DifferenceOperator::tau(-1) * DifferenceOperator::z();
    DifferenceOperator out;
    std::map<long, DifferenceOperator> dx_pows;
    for (const auto& [k, c] : d.terms()) {
        long j = k.first, m = k.second;
        auto it = dx_pows.find(j);
        if (it == dx_pows.end())
            it = dx_pows.emplace(j, dx_image.pow(static_cast<int>(j))).first;
        out = out + (DifferenceOperator::tau(m) * it->second).scaled(c);
    }
    return out;
}

DifferentialOperator inverse_mellin_operator(const DifferenceOperator& q) {
    // tau -> x, z -> x dx
    static const DifferentialOperator z_image =
        DifferentialOperator::x() * DifferentialOperator::dx();
    DifferentialOperator out;
    std::map<int, DifferentialOperator> z_pows;
    z_pows[0] = DifferentialOperator::one();
    for (const auto& [k, p] : q.terms()) {
        DifferentialOperator coeff_img;
        for (int d = 0; d <= p.degree(); ++d) {
            if (p.coeff(d) == 0) continue;
            auto it = z_pows.find(d);
            if (it == z_pows.end())
                it = z_pows.emplace(d, z_image.pow(d)).first;
            coeff_img = coeff_img + it->second.scaled(p.coeff(d));
        }
        out = out + coeff_img * DifferentialOperator::x(k);
    }
    return out;
}

CompanionResult companion_connection(const DifferenceOperator& q0) {
    if (q0.is_zero()) throw NotNormalizable("zero operator has no companion connection");
    // clear the common tau power so that the trailing coefficient is at tau^0
    long imin = q0.min_tau();
    DifferenceOperator q = DifferenceOperator::tau(-imin) * q0;
    long n = q.max_tau();
    if (n == 0)
        throw RankZero("operator is polynomial in z after normalization; module is torsion");
    CompanionResult r;
    Poly pn = q.coeff(n);
    r.leading = pn;
    r.trailing = q.coeff(0);
    RatFunc pninv = RatFunc(pn).inverse();
    RatFuncMatrix a(static_cast<int>(n), static_cast<int>(n));
    for (long i = 0; i + 1 < n; ++i) a(static_cast<int>(i + 1), static_cast<int>(i)) = RatFunc(Rat(1));
    for (long i = 0; i < n; ++i)
        a(static_cast<int>(i), static_cast<int>(n - 1)) = -RatFunc(q.coeff(i)) * pninv;
    r.connection = a;
    r.lattice = RatFuncMatrix::identity(static_cast<int>(n), RatFunc(Rat(1)));
    return r;
}

} // namespace diffmod
