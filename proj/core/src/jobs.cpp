#include "tamefit/jobs.hpp"

#include <json.hpp>

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace tamefit {

using nlohmann::json;

ReportFormat parse_format(const std::string& name) {
    if (name == "text") return ReportFormat::text;
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    throw ValidationError("unknown report format '" + name + "'");
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Integer parse_integer(const std::string& token, const char* what) {
    try {
        return Integer(token, 10);
    } catch (const std::invalid_argument&) {
        throw ValidationError(std::string("malformed ") + what + ": '" + token + "'");
    }
}

bool parse_bool(const std::string& token, const char* what) {
    if (token == "true" || token == "1") return true;
    if (token == "false" || token == "0") return false;
    throw ValidationError(std::string("malformed ") + what + ": '" + token + "'");
}

ManualRecord parse_manual_block(std::istream& in) {
    std::map<std::string, std::string> fields;
    std::string line;
    bool closed = false;
    while (std::getline(in, line)) {
        std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;
        if (body == "end") {
            closed = true;
            break;
        }
        std::size_t eq = body.find('=');
        if (eq == std::string::npos)
            throw ValidationError("manual block: expected 'key = value', got '" + body + "'");
        std::string key = trim(body.substr(0, eq));
        std::string value = trim(body.substr(eq + 1));
        if (!fields.emplace(key, value).second)
            throw ValidationError("manual block: duplicate key '" + key + "'");
    }
    if (!closed) throw ValidationError("manual block: missing 'end'");

    auto take = [&](const char* key) {
        auto it = fields.find(key);
        if (it == fields.end())
            throw ValidationError(std::string("manual block: missing key '") + key + "'");
        std::string v = it->second;
        fields.erase(it);
        return v;
    };

    ManualRecord rec;
    if (auto it = fields.find("label"); it != fields.end()) {
        rec.label = it->second;
        fields.erase(it);
    }
    rec.w_f = parse_integer(take("w_F"), "w_F");
    rec.w_e = parse_integer(take("w_E"), "w_E");
    rec.zeta_f_s = parse_rational(take("zeta_F_S"));
    rec.zeta_e_s = parse_rational(take("zeta_E_S"));
    rec.size_s = static_cast<int>(parse_integer(take("size_S"), "size_S").get_si());
    rec.size_se = static_cast<int>(parse_integer(take("size_SE"), "size_SE").get_si());
    rec.first_layer = parse_bool(take("first_layer"), "first_layer");
    if (!fields.empty())
        throw ValidationError("manual block: unknown key '" + fields.begin()->first + "'");
    return rec;
}

}  // namespace

JobSpec parse_job_file(std::istream& in) {
    JobSpec job;
    std::string line;
    while (std::getline(in, line)) {
        std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;
        if (body == "manual") {
            job.manual_records.push_back(parse_manual_block(in));
            continue;
        }
        JobSpec::AutoCase c;
        std::size_t colon = body.find(':');
        c.discriminant = parse_integer(body.substr(0, colon), "discriminant");
        if (colon != std::string::npos) {
            std::string rest = body.substr(colon + 1);
            std::istringstream ps(rest);
            std::string token;
            while (std::getline(ps, token, ','))
                c.extra_primes.push_back(parse_integer(trim(token), "extra prime"));
            if (c.extra_primes.empty())
                throw ValidationError("empty extra-prime list in '" + body + "'");
        }
        job.cases.push_back(std::move(c));
    }
    return job;
}

namespace {

json json_int(const Integer& n) {
    if (n.fits_slong_p()) return json(n.get_si());
    return json(to_string(n));
}

json ideal_to_json(const GroupRingIdeal& ideal) {
    json j;
    if (ideal.is_zero()) {
        j["zero"] = true;
        return j;
    }
    j["hnf"] = json::array({json::array({json_int(ideal.hnf_a()), json_int(ideal.hnf_b())}),
                            json::array({0, json_int(ideal.hnf_c())})});
    j["denominator"] = json_int(ideal.denominator());
    ComponentPair c = ideal.extend_to_maximal_order();
    j["components"] = json::array({to_string(c.plus), to_string(c.minus)});
    return j;
}

json report_to_json(const CaseReport& r) {
    json j;
    j["label"] = r.label;
    if (r.discriminant) j["D"] = json_int(*r.discriminant);
    json s = json::array();
    for (const Integer& p : r.s_finite_primes) s.push_back(json_int(p));
    j["S"] = s;
    const ExtensionInvariants& inv = r.invariants;
    j["invariants"] = {
        {"w_F", json_int(inv.w_f)},
        {"w_E", json_int(inv.w_e)},
        {"u", json_int(inv.u)},
        {"w_plus", json_int(inv.w_plus)},
        {"w_minus", json_int(inv.w_minus)},
        {"zeta_F_S", to_string(inv.zeta_f_s)},
        {"zeta_E_S", to_string(inv.zeta_e_s)},
        {"size_S", inv.size_s},
        {"size_SE", inv.size_se},
        {"first_layer", inv.first_layer},
        {"k_plus", json_int(inv.k_plus)},
        {"k_E", json_int(inv.k_e)},
        {"k_minus", json_int(inv.k_minus)},
    };
    j["theta"] = r.theta.str();
    j["sticke_ideal"] = ideal_to_json(r.sticke_ideal);
    j["predicted_ideal"] = ideal_to_json(r.predicted_ideal);
    j["local2"] = {{"v_plus", r.local2.v_plus},
                   {"v_minus", r.local2.v_minus},
                   {"principal", r.local2.principal}};
    j["checks"] = {{"integral", r.checks.integral},
                   {"ideals_equal", r.checks.ideals_equal},
                   {"maximal_order_match", r.checks.maximal_order_match},
                   {"lemma72_plus", r.checks.lemma72_plus},
                   {"lemma72_minus", r.checks.lemma72_minus},
                   {"local2_principal_iff_first_layer",
                    r.checks.local2_principal_iff_first_layer},
                   {"odd_local_match", r.checks.odd_local_match}};
    j["pass"] = r.pass();
    return j;
}

const char* verdict(bool b) { return b ? "pass" : "FAIL"; }

std::string ideal_with_components(const GroupRingIdeal& ideal) {
    if (ideal.is_zero()) return "0";
    ComponentPair c = ideal.extend_to_maximal_order();
    return ideal.str() + "  components (" + to_string(c.plus) + ", " +
           to_string(c.minus) + ")";
}

std::string report_to_text(const CaseReport& r) {
    std::ostringstream os;
    const ExtensionInvariants& inv = r.invariants;
    os << "case " << r.label << "\n";
    os << "  S = {";
    for (std::size_t i = 0; i < r.s_finite_primes.size(); ++i)
        os << (i ? ", " : "") << r.s_finite_primes[i];
    os << "}  |S| = " << inv.size_s << "  |S_E| = " << inv.size_se << "\n";
    os << "  w_F = " << inv.w_f << "  w_E = " << inv.w_e << "  u = " << inv.u
       << "  first_layer = " << (inv.first_layer ? "true" : "false") << "\n";
    os << "  w_plus = " << inv.w_plus << "  w_minus = " << inv.w_minus << "\n";
    os << "  zeta_F_S = " << to_string(inv.zeta_f_s)
       << "  zeta_E_S = " << to_string(inv.zeta_e_s) << "\n";
    os << "  k_plus = " << inv.k_plus << "  k_E = " << inv.k_e
       << "  k_minus = " << inv.k_minus << "\n";
    os << "  theta = " << r.theta.str() << "\n";
    os << "  stickelberger_ideal = " << ideal_with_components(r.sticke_ideal) << "\n";
    os << "  predicted_ideal     = " << ideal_with_components(r.predicted_ideal) << "\n";
    os << "  local2: v_plus = " << r.local2.v_plus << "  v_minus = " << r.local2.v_minus
       << "  principal = " << (r.local2.principal ? "true" : "false") << "\n";
    const CaseChecks& c = r.checks;
    os << "  checks: integral=" << verdict(c.integral)
       << " ideals_equal=" << verdict(c.ideals_equal)
       << " maximal_order_match=" << verdict(c.maximal_order_match)
       << " lemma72_plus=" << verdict(c.lemma72_plus)
       << " lemma72_minus=" << verdict(c.lemma72_minus)
       << " local2_principal_iff_first_layer="
       << verdict(c.local2_principal_iff_first_layer)
       << " odd_local_match=" << verdict(c.odd_local_match) << "\n";
    os << "  result = " << (r.pass() ? "pass" : "FAIL") << "\n";
    return os.str();
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

const char* kCsvHeader =
    "label,D,S,w_F,w_E,u,w_plus,w_minus,zeta_F_S,zeta_E_S,size_S,size_SE,"
    "first_layer,k_plus,k_E,k_minus,theta,sticke_ideal,predicted_ideal,"
    "v2_plus,v2_minus,principal_at_2,integral,ideals_equal,"
    "maximal_order_match,lemma72_plus,lemma72_minus,"
    "local2_principal_iff_first_layer,odd_local_match,pass";

std::string report_to_csv_row(const CaseReport& r) {
    const ExtensionInvariants& inv = r.invariants;
    std::string s_joined;
    for (std::size_t i = 0; i < r.s_finite_primes.size(); ++i)
        s_joined += (i ? ";" : "") + to_string(r.s_finite_primes[i]);
    auto b = [](bool v) { return v ? "true" : "false"; };
    std::vector<std::string> cells = {
        r.label,
        r.discriminant ? to_string(*r.discriminant) : "",
        s_joined,
        to_string(inv.w_f),
        to_string(inv.w_e),
        to_string(inv.u),
        to_string(inv.w_plus),
        to_string(inv.w_minus),
        to_string(inv.zeta_f_s),
        to_string(inv.zeta_e_s),
        std::to_string(inv.size_s),
        std::to_string(inv.size_se),
        b(inv.first_layer),
        to_string(inv.k_plus),
        to_string(inv.k_e),
        to_string(inv.k_minus),
        r.theta.str(),
        r.sticke_ideal.str(),
        r.predicted_ideal.str(),
        std::to_string(r.local2.v_plus),
        std::to_string(r.local2.v_minus),
        b(r.local2.principal),
        b(r.checks.integral),
        b(r.checks.ideals_equal),
        b(r.checks.maximal_order_match),
        b(r.checks.lemma72_plus),
        b(r.checks.lemma72_minus),
        b(r.checks.local2_principal_iff_first_layer),
        b(r.checks.odd_local_match),
        r.pass() ? "pass" : "fail",
    };
    std::string row;
    for (std::size_t i = 0; i < cells.size(); ++i)
        row += (i ? "," : "") + csv_escape(cells[i]);
    return row;
}

}  // namespace

std::string render_report(const CaseReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::text:
            return report_to_text(report);
        case ReportFormat::json:
            return report_to_json(report).dump(2) + "\n";
        case ReportFormat::csv:
            return std::string(kCsvHeader) + "\n" + report_to_csv_row(report) + "\n";
    }
    return {};
}

std::string render_reports(const std::vector<CaseReport>& reports, ReportFormat format) {
    switch (format) {
        case ReportFormat::text: {
            std::string out;
            for (const CaseReport& r : reports) out += report_to_text(r) + "\n";
            return out;
        }
        case ReportFormat::json: {
            json arr = json::array();
            for (const CaseReport& r : reports) arr.push_back(report_to_json(r));
            return arr.dump(2) + "\n";
        }
        case ReportFormat::csv: {
            std::string out = std::string(kCsvHeader) + "\n";
            for (const CaseReport& r : reports) out += report_to_csv_row(r) + "\n";
            return out;
        }
    }
    return {};
}

int run_job(const JobSpec& job, std::ostream& out, std::ostream& diag) {
    std::vector<JobSpec::AutoCase> cases = job.cases;
    for (JobSpec::AutoCase& c : cases)
        std::sort(c.extra_primes.begin(), c.extra_primes.end());
    std::sort(cases.begin(), cases.end(),
              [](const JobSpec::AutoCase& x, const JobSpec::AutoCase& y) {
                  if (x.discriminant != y.discriminant)
                      return x.discriminant < y.discriminant;
                  return x.extra_primes < y.extra_primes;
              });

    std::vector<CaseReport> reports;
    double total_seconds = 0;
    for (const JobSpec::AutoCase& c : cases) {
        reports.push_back(verify_case(c.discriminant, c.extra_primes));
        total_seconds += reports.back().elapsed.count();
    }
    for (const ManualRecord& rec : job.manual_records) {
        reports.push_back(manual_case(rec));
        total_seconds += reports.back().elapsed.count();
    }

    out << render_reports(reports, job.format);

    std::size_t failed = 0;
    for (const CaseReport& r : reports)
        if (!r.pass()) ++failed;
    diag << reports.size() << " case(s), " << failed << " failed, "
         << total_seconds << " s\n";
    return failed == 0 ? 0 : 1;
}

int write_table(const Integer& d_max, std::ostream& out) {
    out << "D,w_E,zeta_F_S,zeta_E_S,k_plus,k_minus,result\n";
    bool all_pass = true;
    for (Integer d = 5; d <= d_max; ++d) {
        if (!is_fundamental_discriminant(d)) continue;
        CaseReport r = verify_case(d);
        const ExtensionInvariants& inv = r.invariants;
        out << d << ',' << inv.w_e << ',' << to_string(inv.zeta_f_s) << ','
            << to_string(inv.zeta_e_s) << ',' << inv.k_plus << ',' << inv.k_minus
            << ',' << (r.pass() ? "pass" : "fail") << '\n';
        all_pass = all_pass && r.pass();
    }
    return all_pass ? 0 : 1;
}

}  // namespace tamefit
