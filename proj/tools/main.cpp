#include "tamefit/jobs.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using tamefit::Integer;

std::vector<Integer> parse_prime_list(const std::string& csv) {
    std::vector<Integer> primes;
    if (csv.empty()) return primes;
    std::istringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ','))
        primes.emplace_back(token, 10);
    return primes;
}

int cmd_verify(const std::string& disc, const std::string& extras,
               const std::string& format_name) {
    tamefit::CaseReport report =
        tamefit::verify_case(Integer(disc, 10), parse_prime_list(extras));
    std::cout << tamefit::render_report(report, tamefit::parse_format(format_name));
    std::cerr << report.label << ": " << (report.pass() ? "pass" : "FAIL") << " ("
              << report.elapsed.count() << " s)\n";
    return report.pass() ? 0 : 1;
}

int cmd_batch(const std::string& jobs_path, const std::string& out_path,
              const std::string& format_name) {
    std::ifstream in(jobs_path);
    if (!in) throw tamefit::ValidationError("cannot open job file '" + jobs_path + "'");
    tamefit::JobSpec job = tamefit::parse_job_file(in);
    job.format = tamefit::parse_format(format_name);
    std::ofstream out(out_path);
    if (!out) throw tamefit::ValidationError("cannot open output file '" + out_path + "'");
    return tamefit::run_job(job, out, std::cerr);
}

int cmd_table(const std::string& d_max, const std::string& out_path) {
    if (out_path.empty()) return tamefit::write_table(Integer(d_max, 10), std::cout);
    std::ofstream out(out_path);
    if (!out) throw tamefit::ValidationError("cannot open output file '" + out_path + "'");
    return tamefit::write_table(Integer(d_max, 10), out);
}

int cmd_manual(const std::string& input_path, const std::string& format_name) {
    std::ifstream in(input_path);
    if (!in) throw tamefit::ValidationError("cannot open input file '" + input_path + "'");
    tamefit::JobSpec job = tamefit::parse_job_file(in);
    if (!job.cases.empty())
        throw tamefit::ValidationError(
            "manual mode accepts only manual blocks; found a discriminant case");
    if (job.manual_records.empty())
        throw tamefit::ValidationError("no manual blocks in '" + input_path + "'");
    job.format = tamefit::parse_format(format_name);
    return tamefit::run_job(job, std::cout, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the Stickelberger / tame-kernel Fitting "
                 "ideal identity for real quadratic fields"};
    app.require_subcommand(1);

    std::string disc, extras, format = "text";
    auto* verify = app.add_subcommand("verify", "verify a single discriminant");
    verify->add_option("--disc", disc, "fundamental discriminant")->required();
    verify->add_option("--extra-primes", extras, "comma-separated primes added to S");
    verify->add_option("--format", format, "text | json | csv");

    std::string jobs_path, out_path;
    auto* batch = app.add_subcommand("batch", "run a job file");
    batch->add_option("--jobs", jobs_path, "job file, one case per line")->required();
    batch->add_option("--out", out_path, "report output file")->required();
    batch->add_option("--format", format, "text | json | csv");

    std::string d_max, table_out;
    auto* table = app.add_subcommand("table", "CSV table over all fundamental "
                                              "discriminants up to a bound");
    table->add_option("--dmax", d_max, "largest discriminant")->required();
    table->add_option("--out", table_out, "output file (default stdout)");

    std::string manual_input;
    auto* manual = app.add_subcommand("manual", "verify externally supplied invariants");
    manual->add_option("--input", manual_input, "file of manual blocks")->required();
    manual->add_option("--format", format, "text | json | csv");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(verify)) return cmd_verify(disc, extras, format);
        if (app.got_subcommand(batch)) return cmd_batch(jobs_path, out_path, format);
        if (app.got_subcommand(table)) return cmd_table(d_max, table_out);
        if (app.got_subcommand(manual)) return cmd_manual(manual_input, format);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const tamefit::ValidationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const tamefit::BirchTateViolation& e) {
        std::cerr << "birch-tate violation: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
