#include "tamefit/group_ring.hpp"

#include <cctype>
#include <ostream>

namespace tamefit {

GroupRingElement GroupRingElement::idempotent_plus() {
    return {Rational(1, 2), Rational(1, 2)};
}

GroupRingElement GroupRingElement::idempotent_minus() {
    return {Rational(1, 2), Rational(-1, 2)};
}

GroupRingElement GroupRingElement::from_components(const ComponentPair& c) {
    return {(c.plus + c.minus) / 2, (c.plus - c.minus) / 2};
}

ComponentPair GroupRingElement::components() const {
    return {one_ + tau_, one_ - tau_};
}

bool GroupRingElement::is_integral() const {
    return is_integer(one_) && is_integer(tau_);
}

bool GroupRingElement::is_unit_at_2() const {
    if (v2(one_.get_den()) > 0 || v2(tau_.get_den()) > 0)
        throw std::domain_error(
            "is_unit_at_2: coefficient with even denominator lies outside "
            "the localization at 2");
    ComponentPair c = components();
    if (c.plus == 0 || c.minus == 0) return false;
    return valuation(c.plus, 2) == 0 && valuation(c.minus, 2) == 0;
}

std::string GroupRingElement::str() const {
    if (tau_ == 0) return to_string(one_);
    std::string tau_part = to_string(abs(tau_)) + "\xCF\x84";
    if (one_ == 0) return (tau_ < 0 ? "-" : "") + tau_part;
    return to_string(one_) + (tau_ < 0 ? " - " : " + ") + tau_part;
}

namespace {

void skip_ws(std::string_view& s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
}

// Consumes an optional sign followed by a rational literal. The coefficient
// may be empty before a tau marker ("τ" parses as 1τ).
Rational take_rational(std::string_view& s, bool* had_digits) {
    skip_ws(s);
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
        skip_ws(s);
    }
    std::size_t len = 0;
    while (len < s.size() && (std::isdigit(static_cast<unsigned char>(s[len])) || s[len] == '/'))
        ++len;
    *had_digits = len > 0;
    Rational value = len > 0 ? parse_rational(s.substr(0, len)) : Rational(1);
    s.remove_prefix(len);
    return negative ? Rational(-value) : value;
}

bool take_tau_marker(std::string_view& s) {
    skip_ws(s);
    if (s.starts_with("\xCF\x84")) {
        s.remove_prefix(2);
        return true;
    }
    if (s.starts_with("tau")) {
        s.remove_prefix(3);
        return true;
    }
    return false;
}

}  // namespace

GroupRingElement GroupRingElement::parse(std::string_view text) {
    std::string_view s = text;
    bool had_digits = false;
    Rational first = take_rational(s, &had_digits);
    if (take_tau_marker(s)) {
        skip_ws(s);
        if (!s.empty())
            throw ValidationError("trailing characters in group ring element: '" +
                                  std::string(text) + "'");
        return {Rational(0), first};
    }
    if (!had_digits)
        throw ValidationError("malformed group ring element: '" + std::string(text) + "'");
    skip_ws(s);
    if (s.empty()) return {first, Rational(0)};
    Rational second = take_rational(s, &had_digits);
    if (!take_tau_marker(s))
        throw ValidationError("expected tau term in group ring element: '" +
                              std::string(text) + "'");
    skip_ws(s);
    if (!s.empty())
        throw ValidationError("trailing characters in group ring element: '" +
                              std::string(text) + "'");
    return {first, second};
}

std::ostream& operator<<(std::ostream& os, const GroupRingElement& x) {
    return os << x.str();
}

}  // namespace tamefit
