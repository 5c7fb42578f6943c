#pragma once

#include "tamefit/numeric.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace tamefit {

/// Character coordinates of a group ring element: its values under the
/// trivial and the nontrivial character. Q[G] ~ Q x Q through this pair,
/// and multiplication is componentwise on it.
struct ComponentPair {
    Rational plus;
    Rational minus;

    friend bool operator==(const ComponentPair& x, const ComponentPair& y) {
        return x.plus == y.plus && x.minus == y.minus;
    }
    friend bool operator!=(const ComponentPair& x, const ComponentPair& y) {
        return !(x == y);
    }
};

/// An element a + b*tau of Q[G] for the group G = {1, tau} of order two.
/// Coefficients are exact rationals in lowest terms with positive
/// denominator; there is no floating point anywhere in this layer.
class GroupRingElement {
  public:
    GroupRingElement() : one_(0), tau_(0) {}
    GroupRingElement(Rational coeff_one, Rational coeff_tau)
        : one_(std::move(coeff_one)), tau_(std::move(coeff_tau)) {}

    static GroupRingElement tau() { return {Rational(0), Rational(1)}; }
    /// (1 + tau)/2, the projector onto the plus component.
    static GroupRingElement idempotent_plus();
    /// (1 - tau)/2, the projector onto the minus component.
    static GroupRingElement idempotent_minus();
    static GroupRingElement from_components(const ComponentPair& c);

    const Rational& coeff_one() const { return one_; }
    const Rational& coeff_tau() const { return tau_; }

    ComponentPair components() const;

    bool is_zero() const { return one_ == 0 && tau_ == 0; }
    /// Membership in Z[G]: both coefficients integral.
    bool is_integral() const;
    /// Unit test in the localization of Z[G] at 2: both character
    /// components must have 2-adic valuation zero. Throws std::domain_error
    /// when a coefficient has even denominator (the element is then outside
    /// the localized ring and the question is ill-posed).
    bool is_unit_at_2() const;
    /// Multiplication by tau. Fixes plus components, negates minus
    /// components; applying it twice is the identity.
    GroupRingElement involution() const { return {tau_, one_}; }

    friend GroupRingElement operator+(const GroupRingElement& x, const GroupRingElement& y) {
        return {x.one_ + y.one_, x.tau_ + y.tau_};
    }
    friend GroupRingElement operator-(const GroupRingElement& x, const GroupRingElement& y) {
        return {x.one_ - y.one_, x.tau_ - y.tau_};
    }
    friend GroupRingElement operator-(const GroupRingElement& x) {
        return {-x.one_, -x.tau_};
    }
    friend GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y) {
        return {x.one_ * y.one_ + x.tau_ * y.tau_,
                x.one_ * y.tau_ + x.tau_ * y.one_};
    }
    friend GroupRingElement operator*(const Rational& s, const GroupRingElement& x) {
        return {s * x.one_, s * x.tau_};
    }

    friend bool operator==(const GroupRingElement& x, const GroupRingElement& y) {
        return x.one_ == y.one_ && x.tau_ == y.tau_;
    }
    friend bool operator!=(const GroupRingElement& x, const GroupRingElement& y) {
        return !(x == y);
    }

    /// Renders as "a/b + c/dtau" with the Greek letter, e.g. "-1/30 + 11/30τ".
    std::string str() const;
    /// Parses the rendered form; accepts "tau" as a spelling of the letter.
    static GroupRingElement parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const GroupRingElement& x);

  private:
    Rational one_;
    Rational tau_;
};

}  // namespace tamefit
