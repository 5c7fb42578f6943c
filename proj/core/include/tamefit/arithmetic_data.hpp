#pragma once

#include "tamefit/group_ring.hpp"

#include <vector>

namespace tamefit {

/// A real quadratic field Q(sqrt(D)) given by its fundamental discriminant:
/// D > 1 and either D = 1 mod 4 squarefree, or D = 4d with d squarefree and
/// d = 2 or 3 mod 4.
struct QuadraticFieldData {
    Integer discriminant;
    explicit QuadraticFieldData(Integer d);
};

bool is_fundamental_discriminant(const Integer& d);

enum class SplittingType { split, inert, ramified };

/// How the rational prime p behaves in Q(sqrt(D)): ramified when p | D,
/// otherwise split or inert by the Kronecker symbol (D/p). The attached
/// Frobenius is the identity for split primes and tau for inert ones.
SplittingType splitting_type(const QuadraticFieldData& field, const Integer& p);

/// The finite part of the prime set S over Q: sorted, distinct, containing
/// every prime dividing the discriminant. Extra primes must be primes not
/// dividing the discriminant; violations raise ValidationError.
class PrimeSetS {
  public:
    PrimeSetS(const QuadraticFieldData& field, std::vector<Integer> extra_primes = {});

    const std::vector<Integer>& finite_primes() const { return primes_; }
    bool contains(const Integer& p) const;

  private:
    std::vector<Integer> primes_;
};

/// zeta_{Q(sqrt(D))}(-1) by the classical divisor-sum formula:
/// (1/60) * sum over integers b with b^2 < D, b = D mod 2, of
/// sigma1((D - b^2)/4). Always positive; denominator divides 60.
Rational siegel_zeta_minus1(const QuadraticFieldData& field);

/// w2 of Q (always 24) and of a real quadratic field: the largest N such
/// that the Galois group of E(mu_N)/E has exponent dividing 2, assembled
/// from prime-power contributions. For a prime power q the group is all of
/// (Z/q)* when D does not divide q and the kernel of the quadratic
/// character attached to D otherwise. The structured search bounds
/// (2-powers to 64; odd prime powers 3, 9, 5, 25, 7) cover every
/// contribution a quadratic field can make.
Integer w2_rational_field();
Integer w2_field(const QuadraticFieldData& field);

/// Same quantity by unstructured search over every prime power up to the
/// given bound. Slower; used to cross-check the production bounds.
Integer w2_field_bruteforce(const Integer& discriminant_or_1, unsigned long bound);

/// Whether E = Q(sqrt(D)) is the first layer of the cyclotomic
/// Z_2-extension of Q, i.e. Q(sqrt(2)).
bool is_first_layer(const QuadraticFieldData& field);

/// The unit u mod w_e describing the action of tau on the cyclic group of
/// order w_e: the unique u with u^2 = 1 mod w_e and gcd(u - 1, w_e) = w_f,
/// built by CRT (at an odd prime: 1 when the parts agree, -1 when the
/// w_f-part is trivial; at 2: 1 when the parts agree, 1 + 2^v2(w_f) on the
/// first layer). Throws std::invalid_argument on order pairs that cannot
/// come from genuine field data.
Integer tau_unit(const Integer& w_f, const Integer& w_e, bool first_layer);

/// The equivariant L-value at -1 for E/Q with the prime set S: plus
/// component zeta_Q^S(-1), minus component zeta_E^S(-1) / zeta_Q^S(-1),
/// assembled from the ramified-only value by multiplying with
/// (1 - p*sigma_p) for every extra prime in S.
GroupRingElement theta_minus1(const QuadraticFieldData& field, const PrimeSetS& s);

/// The exact numeric fingerprint of one verification case.
struct ExtensionInvariants {
    Integer w_f;        // |W2(F)|
    Integer w_e;        // |W2(E)|
    Integer u;          // tau acts on W2(E) as the unit u
    Integer w_plus;     // |W2(E)^G| = w_f
    Integer w_minus;    // |W2(E)^-| = gcd(u + 1, w_e)
    Rational zeta_f_s;  // zeta_F^S(-1)
    Rational zeta_e_s;  // zeta_E^S(-1)
    int size_s = 0;     // |S|, archimedean places included
    int size_se = 0;    // |S_E|
    bool first_layer = false;
    Integer k_plus;   // |K2(O_F^S)| = (-1)^|S| zeta_F^S(-1) w_f
    Integer k_e;      // |K2(O_E^S)|
    Integer k_minus;  // |K2(O_E^S)^-|
};

/// Assembles the full invariant set for E = Q(sqrt(D)). The Birch-Tate
/// expressions for k_plus and k_e must come out as positive integers and
/// k_plus must divide k_e; failures raise BirchTateViolation.
ExtensionInvariants birch_tate_invariants(const QuadraticFieldData& field,
                                          const PrimeSetS& s);

/// The same assembly from externally supplied data (manual mode, where the
/// base field need not be Q). Runs the identical integrality gates.
ExtensionInvariants assemble_invariants(const Integer& w_f, const Integer& w_e,
                                        const Rational& zeta_f_s,
                                        const Rational& zeta_e_s, int size_s,
                                        int size_se, bool first_layer);

}  // namespace tamefit
