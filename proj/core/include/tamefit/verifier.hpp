#pragma once

#include "tamefit/arithmetic_data.hpp"
#include "tamefit/group_ring.hpp"
#include "tamefit/ideal_lattice.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace tamefit {

/// The named identity checks run for every case. Mathematical failures are
/// recorded here as data, never thrown: a counterexample must surface as a
/// readable report.
struct CaseChecks {
    bool integral = false;
    bool ideals_equal = false;
    bool maximal_order_match = false;
    bool lemma72_plus = false;
    bool lemma72_minus = false;
    bool local2_principal_iff_first_layer = false;
    bool odd_local_match = false;

    bool all() const {
        return integral && ideals_equal && maximal_order_match && lemma72_plus &&
               lemma72_minus && local2_principal_iff_first_layer && odd_local_match;
    }
};

/// Per-case verification record: the assembled invariants, both ideals, the
/// 2-adic data and the verdicts.
struct CaseReport {
    std::string label;
    std::optional<Integer> discriminant;     // absent for manual cases
    std::vector<Integer> s_finite_primes;    // empty for manual cases
    ExtensionInvariants invariants;
    GroupRingElement theta;
    GroupRingIdeal sticke_ideal;
    GroupRingIdeal predicted_ideal;
    LocalIdealData2 local2;
    CaseChecks checks;
    std::chrono::duration<double> elapsed{0};

    bool pass() const { return checks.all(); }
};

/// The L-value side of the identity: the ideal generated by g * theta over
/// the annihilator generators g. The result may a priori be fractional;
/// integrality is one of the recorded checks, not an assumption.
GroupRingIdeal build_stickelberger_ideal(const ExtensionInvariants& inv,
                                         const GroupRingElement& theta);

/// The order side: away from the first layer the ideal generated by
/// k_plus * e+ and k_minus * e-; on the first layer the principal ideal
/// (k_plus * e+ + k_minus * e-). Throws BirchTateViolation when the
/// would-be generators are not integral.
GroupRingIdeal predicted_fitting_ideal(const ExtensionInvariants& inv);

/// Full pipeline for E = Q(sqrt(D)) with S = ramified primes plus the given
/// extras. Input problems throw ValidationError; every mathematical verdict
/// lands in the report.
CaseReport verify_case(const Integer& discriminant,
                       const std::vector<Integer>& extra_primes = {});

/// Externally supplied invariants for a relative quadratic extension of
/// totally real fields; the base field need not be Q. The checklist is the
/// same, minus the steps that derive data from a discriminant.
struct ManualRecord {
    std::string label;
    Integer w_f;
    Integer w_e;
    Rational zeta_f_s;
    Rational zeta_e_s;
    int size_s = 0;
    int size_se = 0;
    bool first_layer = false;
};

CaseReport manual_case(const ManualRecord& record);

}  // namespace tamefit
