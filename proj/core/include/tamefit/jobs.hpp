#pragma once

#include "tamefit/verifier.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace tamefit {

enum class ReportFormat { text, json, csv };

ReportFormat parse_format(const std::string& name);  // "text" | "json" | "csv"

/// A batch of cases: automatic ones given by discriminant plus optional
/// extra primes, and manual records with externally supplied invariants.
struct JobSpec {
    struct AutoCase {
        Integer discriminant;
        std::vector<Integer> extra_primes;
    };
    std::vector<AutoCase> cases;
    std::vector<ManualRecord> manual_records;
    ReportFormat format = ReportFormat::text;
};

/// Job file grammar, one case per line:
///
///   # comment
///   5
///   12:5,7
///   manual
///     label = quartic-example
///     w_F = 24
///     w_E = 120
///     zeta_F_S = 1/3
///     zeta_E_S = -2/15
///     size_S = 2
///     size_SE = 3
///     first_layer = false
///   end
///
/// Rational values are written as num/den. Throws ValidationError on
/// malformed input.
JobSpec parse_job_file(std::istream& in);

/// Runs every case (automatic cases sorted by discriminant then extras,
/// manual records after them in input order), renders the reports to out
/// and a one-line summary to diag. Returns the process exit status:
/// 0 all checks passed, 1 at least one mathematical check failed.
/// Input-class problems (bad discriminants, inconsistent manual data)
/// throw ValidationError / BirchTateViolation; callers map those to 2.
int run_job(const JobSpec& job, std::ostream& out, std::ostream& diag);

std::string render_report(const CaseReport& report, ReportFormat format);
std::string render_reports(const std::vector<CaseReport>& reports, ReportFormat format);

/// The archival table: one CSV row per fundamental discriminant up to
/// d_max with minimal S, listing w_E, both zeta values, k+, k- and the
/// verdict. Returns 0 when every row passes, 1 otherwise.
int write_table(const Integer& d_max, std::ostream& out);

}  // namespace tamefit
