#include "tamefit/ideal_lattice.hpp"

#include "tamefit/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace tamefit {

GroupRingIdeal GroupRingIdeal::unit_ideal() {
    GroupRingIdeal i;
    i.zero_ = false;
    i.a_ = i.c_ = 1;
    return i;
}

GroupRingIdeal GroupRingIdeal::principal(const GroupRingElement& g) {
    return from_generators({g});
}

GroupRingIdeal GroupRingIdeal::from_generators(const std::vector<GroupRingElement>& gens) {
    Integer den = 1;
    std::vector<GroupRingElement> closed;
    for (const GroupRingElement& g : gens) {
        if (g.is_zero()) continue;
        closed.push_back(g);
        closed.push_back(g.involution());
        den = lcm(den, lcm(g.coeff_one().get_den(), g.coeff_tau().get_den()));
    }
    if (closed.empty()) return zero();

    IntMat rows(closed.size(), 2);
    for (std::size_t i = 0; i < closed.size(); ++i) {
        Rational x = den * closed[i].coeff_one();
        Rational y = den * closed[i].coeff_tau();
        rows.at(i, 0) = x.get_num();
        rows.at(i, 1) = y.get_num();
    }
    IntMat h = row_hermite_form(rows);
    if (h.rows() < 2)
        throw std::invalid_argument(
            "from_generators: generators span a rank-1 lattice, which is not "
            "a finite-index ideal");

    GroupRingIdeal ideal;
    ideal.zero_ = false;
    ideal.den_ = den;
    ideal.a_ = h.at(0, 0);
    ideal.b_ = h.at(0, 1);
    ideal.c_ = h.at(1, 1);
    ideal.normalize();
    return ideal;
}

GroupRingIdeal GroupRingIdeal::from_hnf(Integer a, Integer b, Integer c, Integer den) {
    if (a == 0 && b == 0 && c == 0) return zero();
    if (a <= 0 || c <= 0 || b < 0 || b >= c || den <= 0)
        throw std::invalid_argument("from_hnf: not a reduced Hermite basis");
    // tau-stability of the lattice Z(a + b*tau) + Z(c*tau):
    //   c*1 in L            <=>  a | c  and  c | (c/a)*b
    //   tau*(a + b*tau) in L <=>  a | b  and  c | b*b/a - a
    if (!mpz_divisible_p(c.get_mpz_t(), a.get_mpz_t()) ||
        !mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()))
        throw std::invalid_argument("from_hnf: lattice is not tau-stable");
    Integer t1 = (c / a) * b;
    Integer t2 = (b * b) / a - a;
    if (t1 % c != 0 || t2 % c != 0)
        throw std::invalid_argument("from_hnf: lattice is not tau-stable");

    GroupRingIdeal ideal;
    ideal.zero_ = false;
    ideal.den_ = std::move(den);
    ideal.a_ = std::move(a);
    ideal.b_ = std::move(b);
    ideal.c_ = std::move(c);
    ideal.normalize();
    return ideal;
}

void GroupRingIdeal::normalize() {
    Integer g = gcd(gcd(a_, b_), gcd(c_, den_));
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
        den_ /= g;
    }
}

std::vector<GroupRingElement> GroupRingIdeal::basis() const {
    if (zero_) return {};
    Rational d(Integer(1), den_);
    d.canonicalize();
    return {GroupRingElement(d * a_, d * b_), GroupRingElement(Rational(0), d * c_)};
}

bool GroupRingIdeal::contains(const GroupRingElement& x) const {
    if (zero_) return x.is_zero();
    Rational sx = den_ * x.coeff_one();
    Rational sy = den_ * x.coeff_tau();
    if (!is_integer(sx) || !is_integer(sy)) return false;
    const Integer& u = sx.get_num();
    const Integer& v = sy.get_num();
    if (u % a_ != 0) return false;
    Integer k = u / a_;
    return (v - k * b_) % c_ == 0;
}

GroupRingIdeal GroupRingIdeal::scaled_by(const GroupRingElement& x) const {
    if (zero_ || x.is_zero()) return zero();
    ComponentPair c = x.components();
    if (c.plus == 0 || c.minus == 0)
        throw std::invalid_argument(
            "scaled_by: multiplier is a zero divisor; the image has rank 1");
    std::vector<GroupRingElement> gens;
    for (const GroupRingElement& b : basis()) gens.push_back(x * b);
    return from_generators(gens);
}

void GroupRingIdeal::require_nonzero(const char* op) const {
    if (zero_) throw std::domain_error(std::string(op) + ": zero ideal");
}

Integer GroupRingIdeal::index_in_group_ring() const {
    require_nonzero("index_in_group_ring");
    if (den_ != 1)
        throw std::domain_error("index_in_group_ring: fractional ideal");
    return a_ * c_;
}

ComponentPair GroupRingIdeal::extend_to_maximal_order() const {
    require_nonzero("extend_to_maximal_order");
    Rational d(Integer(1), den_);
    d.canonicalize();
    Rational g_plus = rational_gcd(d * (a_ + b_), d * c_);
    Rational g_minus = rational_gcd(d * (a_ - b_), d * c_);
    return {g_plus, g_minus};
}

std::pair<long, long> GroupRingIdeal::localize_odd(const Integer& p) const {
    require_nonzero("localize_odd");
    if (p == 2 || !is_prime(p))
        throw std::domain_error("localize_odd: p must be an odd prime");
    ComponentPair g = extend_to_maximal_order();
    return {valuation(g.plus, p), valuation(g.minus, p)};
}

LocalIdealData2 GroupRingIdeal::localize_2() const {
    require_nonzero("localize_2");
    if (den_ % 2 == 0)
        throw std::domain_error("localize_2: ideal has even denominator");
    // The odd denominator is a 2-adic unit, so the valuations can be read
    // off the integral lattice directly.
    LocalIdealData2 data;
    data.v_plus = v2(gcd(a_ + b_, c_));
    data.v_minus = v2(gcd(a_ - b_, c_));
    data.principal = v2(a_ * c_) == data.v_plus + data.v_minus;
    return data;
}

GroupRingElement GroupRingIdeal::principal_generator_at_2() const {
    require_nonzero("principal_generator_at_2");
    if (den_ != 1)
        throw std::domain_error("principal_generator_at_2: fractional ideal");
    LocalIdealData2 data = localize_2();
    Rational p(pow2(data.v_plus));
    Rational m(pow2(data.v_minus));
    return GroupRingElement::from_components({p, m});
}

std::optional<Integer> GroupRingIdeal::smallest_odd_multiplier(const GroupRingElement& x) const {
    require_nonzero("smallest_odd_multiplier");
    if (den_ != 1)
        throw std::domain_error("smallest_odd_multiplier: fractional ideal");
    Integer bound = odd_part(index_in_group_ring());
    std::vector<Integer> divisors{1};
    Integer rest = bound;
    for (Integer d = 3; d * d <= rest; d += 2) {
        if (rest % d != 0) continue;
        std::vector<Integer> extended = divisors;
        Integer power = 1;
        while (rest % d == 0) {
            rest /= d;
            power *= d;
            for (const Integer& v : divisors) extended.push_back(v * power);
        }
        divisors = std::move(extended);
    }
    if (rest > 1) {
        std::vector<Integer> extended = divisors;
        for (const Integer& v : divisors) extended.push_back(v * rest);
        divisors = std::move(extended);
    }
    std::sort(divisors.begin(), divisors.end());
    for (const Integer& t : divisors)
        if (contains(Rational(t) * x)) return t;
    return std::nullopt;
}

std::string GroupRingIdeal::str() const {
    if (zero_) return "0";
    std::ostringstream os;
    os << "[[" << a_ << ", " << b_ << "], [0, " << c_ << "]] / " << den_;
    return os.str();
}

GroupRingIdeal GroupRingIdeal::parse(std::string_view text) {
    std::string body(text);
    std::string trimmed;
    for (char ch : body)
        if (ch != ' ' && ch != '\t') trimmed += ch;
    if (trimmed == "0") return zero();

    auto fail = [&] {
        return ValidationError("malformed ideal literal: '" + body + "'");
    };
    auto take_int = [&](std::string_view& s) {
        std::size_t len = 0;
        if (len < s.size() && s[len] == '-') ++len;
        while (len < s.size() && std::isdigit(static_cast<unsigned char>(s[len]))) ++len;
        if (len == 0 || (s[0] == '-' && len == 1)) throw fail();
        Integer v(std::string(s.substr(0, len)), 10);
        s.remove_prefix(len);
        return v;
    };
    auto expect = [&](std::string_view& s, std::string_view lit) {
        if (!s.starts_with(lit)) throw fail();
        s.remove_prefix(lit.size());
    };

    std::string_view s = trimmed;
    expect(s, "[[");
    Integer a = take_int(s);
    expect(s, ",");
    Integer b = take_int(s);
    expect(s, "],[0,");
    Integer c = take_int(s);
    expect(s, "]]");
    Integer den = 1;
    if (!s.empty()) {
        expect(s, "/");
        den = take_int(s);
    }
    if (!s.empty()) throw fail();
    try {
        return from_hnf(std::move(a), std::move(b), std::move(c), std::move(den));
    } catch (const std::invalid_argument& e) {
        throw ValidationError(std::string(e.what()) + " in '" + body + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const GroupRingIdeal& ideal) {
    return os << ideal.str();
}

}  // namespace tamefit
