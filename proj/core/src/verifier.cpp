#include "tamefit/verifier.hpp"

#include "tamefit/finite_modules.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tamefit {

GroupRingIdeal build_stickelberger_ideal(const ExtensionInvariants& inv,
                                         const GroupRingElement& theta) {
    std::vector<GroupRingElement> gens;
    for (const GroupRingElement& g :
         annihilator_generators(inv.w_f, inv.w_e, inv.u, inv.first_layer))
        gens.push_back(g * theta);
    return GroupRingIdeal::from_generators(gens);
}

GroupRingIdeal predicted_fitting_ideal(const ExtensionInvariants& inv) {
    Rational kp(inv.k_plus), km(inv.k_minus);
    if (inv.first_layer) {
        GroupRingElement gen = GroupRingElement::from_components({kp, km});
        if (!gen.is_integral())
            throw BirchTateViolation(
                "predicted principal generator is not integral: " + gen.str());
        return GroupRingIdeal::principal(gen);
    }
    GroupRingElement plus = GroupRingElement::from_components({kp, Rational(0)});
    GroupRingElement minus = GroupRingElement::from_components({Rational(0), km});
    if (!plus.is_integral() || !minus.is_integral())
        throw BirchTateViolation(
            "predicted generators k+e+ and k-e- are not integral; k+ = " +
            to_string(inv.k_plus) + ", k- = " + to_string(inv.k_minus));
    return GroupRingIdeal::from_generators({plus, minus});
}

namespace {

std::vector<Integer> odd_primes_of(const Integer& n) {
    std::vector<Integer> primes;
    Integer rest = odd_part(n);
    for (Integer p = 3; p * p <= rest; p += 2) {
        if (rest % p != 0) continue;
        primes.push_back(p);
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1) primes.push_back(rest);
    return primes;
}

CaseReport run_checks(std::string label, std::optional<Integer> discriminant,
                      std::vector<Integer> s_primes, const ExtensionInvariants& inv,
                      const GroupRingElement& theta) {
    auto start = std::chrono::steady_clock::now();

    CaseReport report;
    report.label = std::move(label);
    report.discriminant = std::move(discriminant);
    report.s_finite_primes = std::move(s_primes);
    report.invariants = inv;
    report.theta = theta;
    report.sticke_ideal = build_stickelberger_ideal(inv, theta);
    report.predicted_ideal = predicted_fitting_ideal(inv);

    CaseChecks& checks = report.checks;
    checks.integral = report.sticke_ideal.is_integral();
    checks.ideals_equal = report.sticke_ideal == report.predicted_ideal;
    checks.maximal_order_match =
        report.sticke_ideal.extend_to_maximal_order() ==
        ComponentPair{Rational(inv.k_plus), Rational(inv.k_minus)};

    ComponentPair theta_components = theta.components();
    checks.lemma72_plus = abs(inv.w_plus * theta_components.plus) == inv.k_plus;
    checks.lemma72_minus = abs(inv.w_minus * theta_components.minus) == inv.k_minus;

    if (checks.integral) {
        report.local2 = report.sticke_ideal.localize_2();
        checks.local2_principal_iff_first_layer =
            report.local2.principal == inv.first_layer;

        std::set<Integer> odd_primes;
        for (const Integer& p : odd_primes_of(report.sticke_ideal.index_in_group_ring()))
            odd_primes.insert(p);
        for (const Integer& p : odd_primes_of(report.predicted_ideal.index_in_group_ring()))
            odd_primes.insert(p);
        checks.odd_local_match = true;
        for (const Integer& p : odd_primes)
            if (report.sticke_ideal.localize_odd(p) != report.predicted_ideal.localize_odd(p))
                checks.odd_local_match = false;
    }

    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

}  // namespace

CaseReport verify_case(const Integer& discriminant,
                       const std::vector<Integer>& extra_primes) {
    QuadraticFieldData field(discriminant);
    PrimeSetS s(field, extra_primes);
    ExtensionInvariants inv = birch_tate_invariants(field, s);
    GroupRingElement theta = theta_minus1(field, s);

    std::ostringstream label;
    label << "D=" << discriminant;
    if (!extra_primes.empty()) {
        label << ":";
        std::vector<Integer> extras = extra_primes;
        std::sort(extras.begin(), extras.end());
        for (std::size_t i = 0; i < extras.size(); ++i)
            label << (i ? "," : "") << extras[i];
    }
    return run_checks(label.str(), discriminant, s.finite_primes(), inv, theta);
}

CaseReport manual_case(const ManualRecord& record) {
    if (record.size_s < 1 || record.size_se < 1)
        throw ValidationError("manual record: place counts must be positive");
    if (record.zeta_f_s == 0 || record.zeta_e_s == 0)
        throw ValidationError("manual record: zeta values must be nonzero");
    ExtensionInvariants inv;
    try {
        inv = assemble_invariants(record.w_f, record.w_e, record.zeta_f_s,
                                  record.zeta_e_s, record.size_s, record.size_se,
                                  record.first_layer);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(std::string("manual record: ") + e.what());
    }
    GroupRingElement theta = GroupRingElement::from_components(
        {record.zeta_f_s, record.zeta_e_s / record.zeta_f_s});
    std::string label = record.label.empty() ? "manual" : record.label;
    return run_checks(std::move(label), std::nullopt, {}, inv, theta);
}

}  // namespace tamefit
