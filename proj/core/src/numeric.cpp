#include "tamefit/numeric.hpp"

#include <cstddef>

namespace tamefit {

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer odd_part(const Integer& n) {
    if (n == 0) throw std::domain_error("odd_part of zero");
    Integer m = abs(n);
    return m >> v2(m);
}

long v2(const Integer& n) {
    if (n == 0) throw std::domain_error("v2 of zero");
    Integer m = abs(n);
    return static_cast<long>(mpz_scan1(m.get_mpz_t(), 0));
}

long valuation(const Integer& n, const Integer& p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    if (p < 2) throw std::domain_error("valuation at a non-prime");
    Integer m = abs(n);
    long v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

long valuation(const Rational& x, const Integer& p) {
    return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

Rational rational_gcd(const Rational& x, const Rational& y) {
    if (x == 0) return abs(y);
    if (y == 0) return abs(x);
    Integer l = lcm(x.get_den(), y.get_den());
    Integer gx = x.get_num() * (l / x.get_den());
    Integer gy = y.get_num() * (l / y.get_den());
    Rational g(gcd(gx, gy), l);
    g.canonicalize();
    return g;
}

Rational parse_rational(std::string_view text) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos)
        throw ValidationError("empty rational literal");
    std::string body(text.substr(begin, end - begin + 1));
    try {
        Rational r(body);
        if (r.get_den() == 0)
            throw ValidationError("zero denominator in rational literal: '" + body + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ValidationError("malformed rational literal: '" + body + "'");
    }
}

std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const Integer& x) { return x.get_str(); }

Integer crt_combine(const Integer& r1, const Integer& m1, const Integer& r2,
                    const Integer& m2) {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t()) == 0)
        throw std::domain_error("crt_combine: moduli not coprime");
    Integer m = m1 * m2;
    Integer x = r1 + m1 * (((r2 - r1) * inv) % m2);
    x %= m;
    if (x < 0) x += m;
    return x;
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

bool is_squarefree(const Integer& n) {
    if (n == 0) return false;
    Integer m = abs(n);
    if (m % 4 == 0) return false;
    for (Integer d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            m /= d;
            if (m % d == 0) return false;
        }
    }
    return true;
}

Integer sigma1(const Integer& n) {
    if (n < 1) throw std::domain_error("sigma1 of a nonpositive integer");
    Integer m = n;
    Integer total = 1;
    for (Integer d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            Integer power = 1, geometric = 1;
            while (m % d == 0) {
                m /= d;
                power *= d;
                geometric += power;
            }
            total *= geometric;
        }
    }
    if (m > 1) total *= (1 + m);
    return total;
}

Integer pow2(long e) {
    if (e < 0) throw std::domain_error("pow2 with negative exponent");
    return Integer(1) << static_cast<unsigned long>(e);
}

}  // namespace tamefit
