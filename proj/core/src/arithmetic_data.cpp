#include "tamefit/arithmetic_data.hpp"

#include <algorithm>

namespace tamefit {

bool is_fundamental_discriminant(const Integer& d) {
    if (d <= 1) return false;
    Integer r4 = d % 4;
    if (r4 == 1) return is_squarefree(d);
    if (r4 == 0) {
        Integer q = d / 4;
        Integer qr = q % 4;
        return (qr == 2 || qr == 3) && is_squarefree(q);
    }
    return false;
}

QuadraticFieldData::QuadraticFieldData(Integer d) : discriminant(std::move(d)) {
    if (!is_fundamental_discriminant(discriminant))
        throw ValidationError(to_string(discriminant) +
                              " is not a fundamental discriminant > 1");
}

SplittingType splitting_type(const QuadraticFieldData& field, const Integer& p) {
    if (!is_prime(p)) throw ValidationError("splitting_type: p is not prime");
    if (field.discriminant % p == 0) return SplittingType::ramified;
    int symbol = mpz_kronecker(field.discriminant.get_mpz_t(), p.get_mpz_t());
    return symbol == 1 ? SplittingType::split : SplittingType::inert;
}

PrimeSetS::PrimeSetS(const QuadraticFieldData& field, std::vector<Integer> extra_primes) {
    Integer rest = field.discriminant;
    for (Integer p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        primes_.push_back(p);
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1) primes_.push_back(rest);

    for (Integer& p : extra_primes) {
        if (!is_prime(p))
            throw ValidationError("extra prime " + to_string(p) + " is not prime");
        if (field.discriminant % p == 0)
            throw ValidationError("extra prime " + to_string(p) +
                                  " already ramifies (divides the discriminant)");
        primes_.push_back(std::move(p));
    }
    std::sort(primes_.begin(), primes_.end());
    auto dup = std::adjacent_find(primes_.begin(), primes_.end());
    if (dup != primes_.end())
        throw ValidationError("duplicate prime " + to_string(*dup) + " in S");
}

bool PrimeSetS::contains(const Integer& p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
}

Rational siegel_zeta_minus1(const QuadraticFieldData& field) {
    const Integer& d = field.discriminant;
    // both signs of b contribute; b runs over b^2 < D with b = D mod 2
    Integer total = 0;
    for (Integer b = (d % 2 == 0) ? 0 : 1; b * b < d; b += 2) {
        Integer s = sigma1((d - b * b) / 4);
        total += (b == 0) ? s : 2 * s;
    }
    Rational z(total, 60);
    z.canonicalize();
    return z;
}

namespace {

// Exponent of Gal(E(mu_q)/E) divides 2? The group is (Z/q)* when the
// discriminant does not divide q, and the kernel of the quadratic character
// attached to the discriminant otherwise. disc == 1 encodes the base field Q.
bool exponent_divides_two(const Integer& disc, const Integer& q) {
    bool cut_by_character = disc != 1 && q % disc == 0;
    for (Integer a = 1; a < q; ++a) {
        if (gcd(a, q) != 1) continue;
        if (cut_by_character &&
            mpz_kronecker(disc.get_mpz_t(), a.get_mpz_t()) != 1)
            continue;
        if ((a * a) % q != 1) return false;
    }
    return true;
}

// Largest power of ell, drawn from the given candidate list (ascending),
// whose Galois group passes the exponent test. Valid powers are downward
// closed, so the scan can stop at the first failure.
Integer best_prime_power(const Integer& disc, const std::vector<Integer>& candidates) {
    Integer best = 1;
    for (const Integer& q : candidates) {
        if (!exponent_divides_two(disc, q)) break;
        best = q;
    }
    return best;
}

Integer w2_impl(const Integer& disc) {
    Integer result = best_prime_power(disc, {2, 4, 8, 16, 32, 64});
    result *= best_prime_power(disc, {3, 9});
    result *= best_prime_power(disc, {5, 25});
    result *= best_prime_power(disc, {7});
    return result;
}

}  // namespace

Integer w2_rational_field() { return w2_impl(1); }

Integer w2_field(const QuadraticFieldData& field) { return w2_impl(field.discriminant); }

Integer w2_field_bruteforce(const Integer& disc_or_1, unsigned long bound) {
    Integer result = 1;
    for (Integer p = 2; p <= static_cast<long>(bound); ++p) {
        if (!is_prime(p)) continue;
        std::vector<Integer> powers;
        for (Integer q = p; q <= static_cast<long>(bound); q *= p) powers.push_back(q);
        result *= best_prime_power(disc_or_1, powers);
    }
    return result;
}

bool is_first_layer(const QuadraticFieldData& field) {
    return field.discriminant == 8;
}

Integer tau_unit(const Integer& w_f, const Integer& w_e, bool first_layer) {
    if (w_f < 1 || w_e < 1 || w_e % w_f != 0)
        throw std::invalid_argument("tau_unit: w_f must divide w_e");
    if (w_f % 8 != 0)
        throw std::invalid_argument("tau_unit: w_f must be divisible by 8");
    long beta = v2(w_f), alpha = v2(w_e);
    if (first_layer ? alpha != beta + 1 : alpha != beta)
        throw std::invalid_argument(
            "tau_unit: 2-parts of the orders are inconsistent with the "
            "first-layer flag");

    Integer u = first_layer ? 1 + pow2(beta) : Integer(1);
    Integer modulus = pow2(alpha);

    Integer rest = odd_part(w_e);
    Integer odd_f = odd_part(w_f);
    for (Integer p = 3; rest > 1; p += 2) {
        if (rest % p != 0) continue;
        Integer q = 1;
        while (rest % p == 0) {
            rest /= p;
            q *= p;
        }
        long in_f = valuation(odd_f, p);
        Integer residue;
        if (in_f == valuation(q, p)) {
            residue = 1;
        } else if (in_f == 0) {
            residue = q - 1;
        } else {
            throw std::invalid_argument(
                "tau_unit: the " + to_string(p) +
                "-part of w_f is a proper nontrivial divisor of that of w_e; "
                "impossible for genuine field data");
        }
        u = crt_combine(u, modulus, residue, q);
        modulus *= q;
    }
    return u;
}

GroupRingElement theta_minus1(const QuadraticFieldData& field, const PrimeSetS& s) {
    const Integer& d = field.discriminant;
    Rational ramified_product = 1;
    Integer rest = d;
    for (const Integer& p : s.finite_primes()) {
        if (d % p != 0) continue;
        ramified_product *= Rational(1 - p);
        while (rest % p == 0) rest /= p;
    }
    if (rest != 1) throw ValidationError("theta_minus1: S omits a ramified prime");

    Rational plus = Rational(-1, 12) * ramified_product;
    Rational minus = siegel_zeta_minus1(field) * ramified_product / plus;
    for (const Integer& p : s.finite_primes()) {
        if (d % p == 0) continue;
        if (splitting_type(field, p) == SplittingType::split) {
            plus *= Rational(1 - p);
            minus *= Rational(1 - p);
        } else {
            plus *= Rational(1 - p);
            minus *= Rational(1 + p);
        }
    }
    return GroupRingElement::from_components({plus, minus});
}

ExtensionInvariants assemble_invariants(const Integer& w_f, const Integer& w_e,
                                        const Rational& zeta_f_s,
                                        const Rational& zeta_e_s, int size_s,
                                        int size_se, bool first_layer) {
    ExtensionInvariants inv;
    inv.w_f = w_f;
    inv.w_e = w_e;
    inv.zeta_f_s = zeta_f_s;
    inv.zeta_e_s = zeta_e_s;
    inv.size_s = size_s;
    inv.size_se = size_se;
    inv.first_layer = first_layer;
    inv.u = tau_unit(w_f, w_e, first_layer);
    inv.w_plus = w_f;
    inv.w_minus = gcd(inv.u + 1, w_e);

    Rational k_plus = (size_s % 2 == 0 ? 1 : -1) * zeta_f_s * w_f;
    if (!is_integer(k_plus) || k_plus <= 0)
        throw BirchTateViolation("Birch-Tate expression for |K2(O_F^S)| is not a "
                                 "positive integer: " + to_string(k_plus));
    Rational k_e = (size_se % 2 == 0 ? 1 : -1) * zeta_e_s * w_e;
    if (!is_integer(k_e) || k_e <= 0)
        throw BirchTateViolation("Birch-Tate expression for |K2(O_E^S)| is not a "
                                 "positive integer: " + to_string(k_e));
    inv.k_plus = k_plus.get_num();
    inv.k_e = k_e.get_num();
    if (inv.k_e % inv.k_plus != 0)
        throw BirchTateViolation("|K2(O_F^S)| = " + to_string(inv.k_plus) +
                                 " does not divide |K2(O_E^S)| = " + to_string(inv.k_e));
    inv.k_minus = (inv.k_e / inv.k_plus) * (first_layer ? 1 : 2);
    return inv;
}

ExtensionInvariants birch_tate_invariants(const QuadraticFieldData& field,
                                          const PrimeSetS& s) {
    Rational zeta_f_s = Rational(-1, 12);  // zeta_Q(-1)
    Rational zeta_e_s = siegel_zeta_minus1(field);
    int size_s = 1;  // the archimedean place of Q
    int size_se = 2; // both archimedean places of E
    for (const Integer& p : s.finite_primes()) {
        ++size_s;
        zeta_f_s *= Rational(1 - p);
        switch (splitting_type(field, p)) {
            case SplittingType::ramified:
                size_se += 1;
                zeta_e_s *= Rational(1 - p);
                break;
            case SplittingType::inert:
                size_se += 1;
                zeta_e_s *= Rational(1 - p * p);
                break;
            case SplittingType::split:
                size_se += 2;
                zeta_e_s *= Rational(1 - p) * Rational(1 - p);
                break;
        }
    }
    return assemble_invariants(w2_rational_field(), w2_field(field), zeta_f_s,
                               zeta_e_s, size_s, size_se, is_first_layer(field));
}

}  // namespace tamefit
