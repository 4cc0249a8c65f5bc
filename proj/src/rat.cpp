#include "diffmod/rat.hpp"

#include <algorithm>
#include <cctype>

namespace diffmod {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    std::string t;
    t.reserve(s.size());
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) throw ParseError("empty rational literal");
    // validate: [-+]?digits(/digits)?
    std::size_t i = 0;
    if (t[i] == '+' || t[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i, ++digits;
    if (digits == 0) throw ParseError("bad rational literal: " + s);
    if (i < t.size()) {
        if (t[i] != '/') throw ParseError("bad rational literal: " + s);
        ++i;
        std::size_t den_digits = 0;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i, ++den_digits;
        if (den_digits == 0 || i != t.size()) throw ParseError("bad rational literal: " + s);
    }
    Rat q(t);
    if (q.get_den() == 0) throw ParseError("zero denominator in rational literal: " + s);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

Int floor_rat(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
}

Rat frac_rat(const Rat& q) {
    Rat r = q - Rat(floor_rat(q));
    r.canonicalize();
    return r;
}

long to_long(const Int& n) {
    if (!n.fits_slong_p()) throw DomainError("Overflow", "integer does not fit in long: " + n.get_str());
    return n.get_si();
}

namespace {

bool is_probab_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

// Deterministic Pollard-Brent rho; n odd composite, not a perfect power of
// a found factor.  Cycles through fixed increments, so runs reproduce.
Int pollard_brent(const Int& n) {
    for (unsigned long c = 1;; ++c) {
        Int x(2), y(2), d(1);
        Int ys, q(1);
        unsigned long r = 1;
        auto f = [&](const Int& v) { return Int((v * v + c) % n); };
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                unsigned long lim = std::min<unsigned long>(128, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = f(y);
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r <<= 1;
        }
        if (d == n) {
            // backtrack
            d = 1;
            while (d == 1) {
                ys = f(ys);
                Int diff = abs(x - ys);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (d != n) return d;
    }
}

void factor_into(Int n, std::vector<std::pair<Int, int>>& out) {
    if (n <= 1) return;
    if (is_probab_prime(n)) {
        for (auto& [p, e] : out)
            if (p == n) { ++e; return; }
        out.emplace_back(n, 1);
        return;
    }
    Int d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::vector<Int> divisors(const Int& n0) {
    Int n = abs(n0);
    if (n == 0) throw DomainError("Overflow", "divisors of zero requested");
    std::vector<std::pair<Int, int>> fac;
    // trial division first
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e) fac.emplace_back(Int(p), e);
    }
    for (unsigned long p = 17; p < 100000 && n > 1; p += 2) {
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e) fac.emplace_back(Int(p), e);
    }
    factor_into(n, fac);
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : fac) {
        std::size_t sz = divs.size();
        Int pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace diffmod
