#pragma once

#include "tamefit/group_ring.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tamefit {

/// Localization data of a nonzero ideal at the prime 2. Exactly one of two
/// shapes occurs: the extension to the maximal order has a generator alpha
/// with alpha itself generating the localized ideal (principal), or the
/// localized ideal needs both alpha*e+ and alpha*e- (non-principal). The
/// principal case is detected by v2(index) == v_plus + v_minus; in the
/// non-principal case v2(index) == v_plus + v_minus - 1.
struct LocalIdealData2 {
    long v_plus = 0;
    long v_minus = 0;
    bool principal = true;

    friend bool operator==(const LocalIdealData2& x, const LocalIdealData2& y) {
        return x.v_plus == y.v_plus && x.v_minus == y.v_minus &&
               x.principal == y.principal;
    }
};

/// A tau-stable full-rank lattice in Q[G] — equivalently a nonzero
/// fractional ideal of Z[G] — held in canonical form: 1/den times the
/// integral lattice with Hermite basis (a + b*tau, c*tau), where a, c > 0,
/// 0 <= b < c and gcd(a, b, c, den) = 1. Equal ideals have identical field
/// values, so equality is a plain field comparison. The zero ideal is
/// representable but rejected by every valuation and index operation.
class GroupRingIdeal {
  public:
    GroupRingIdeal() = default;  // the zero ideal

    static GroupRingIdeal zero() { return {}; }
    static GroupRingIdeal unit_ideal();
    static GroupRingIdeal principal(const GroupRingElement& g);
    /// Smallest lattice containing g and tau*g for every generator; this is
    /// the fractional ideal the generators span. Throws std::invalid_argument
    /// when the nonzero generators only span a rank-1 lattice (all of them
    /// killed by the same idempotent), since that is not a finite-index
    /// lattice and has no HNF representative.
    static GroupRingIdeal from_generators(const std::vector<GroupRingElement>& gens);
    /// Builds from raw HNF data; validates shape and tau-stability.
    static GroupRingIdeal from_hnf(Integer a, Integer b, Integer c, Integer den = 1);

    bool is_zero() const { return zero_; }
    bool is_integral() const { return zero_ || den_ == 1; }
    const Integer& denominator() const { return den_; }
    const Integer& hnf_a() const { return a_; }
    const Integer& hnf_b() const { return b_; }
    const Integer& hnf_c() const { return c_; }
    /// The two Hermite basis elements ((a + b*tau)/den, c*tau/den); empty
    /// for the zero ideal.
    std::vector<GroupRingElement> basis() const;

    bool contains(const GroupRingElement& x) const;

    /// The lattice { x*y : y in this }. Zero when x == 0; throws
    /// std::invalid_argument when x is a nonzero zero divisor (one character
    /// component vanishing), since the image then has rank 1.
    GroupRingIdeal scaled_by(const GroupRingElement& x) const;

    /// [Z[G] : this] = a*c. Only for nonzero integral ideals.
    Integer index_in_group_ring() const;

    /// Generators (g+, g-) of the two component ideals of the extension to
    /// the maximal order Z*e+ + Z*e-, each the rational gcd of the
    /// corresponding components of the Hermite basis. Nonzero ideals only.
    ComponentPair extend_to_maximal_order() const;

    /// (v_p(g+), v_p(g-)) for an odd prime p; this determines the
    /// localization at p completely because the localized group ring splits.
    std::pair<long, long> localize_odd(const Integer& p) const;

    /// 2-adic data; requires a nonzero ideal with odd denominator.
    LocalIdealData2 localize_2() const;

    /// alpha = 2^v_plus * e+ + 2^v_minus * e-, the normalized generator of
    /// the extension to the localized maximal order. Some odd t <= index has
    /// t*alpha in the ideal; callers assert that via smallest_odd_multiplier.
    /// Integral nonzero ideals only.
    GroupRingElement principal_generator_at_2() const;

    /// Smallest odd t with t*x in the ideal, if one exists. The candidates
    /// are exactly the odd divisors of the index, since index * Z[G] is
    /// contained in the ideal. Integral nonzero ideals only.
    std::optional<Integer> smallest_odd_multiplier(const GroupRingElement& x) const;

    friend bool operator==(const GroupRingIdeal& x, const GroupRingIdeal& y) {
        return x.zero_ == y.zero_ && x.den_ == y.den_ && x.a_ == y.a_ &&
               x.b_ == y.b_ && x.c_ == y.c_;
    }
    friend bool operator!=(const GroupRingIdeal& x, const GroupRingIdeal& y) {
        return !(x == y);
    }

    /// "[[a, b], [0, c]] / den"; the zero ideal renders as "0".
    std::string str() const;
    static GroupRingIdeal parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const GroupRingIdeal& ideal);

  private:
    void normalize();
    void require_nonzero(const char* op) const;

    bool zero_ = true;
    Integer den_ = 1;
    Integer a_ = 0;
    Integer b_ = 0;
    Integer c_ = 0;
};

}  // namespace tamefit
