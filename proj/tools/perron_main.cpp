// perron: certified spectral analysis of nonnegative integer matrices.
//
// Exit codes are a contract: 0 success, 1 semantic failure (hypothesis does
// not hold / invalid certificate), 2 parse error, 3 precision cap reached
// (partial results are still emitted).

#include "perron/certificate.hpp"
#include "perron/digraph.hpp"
#include "perron/errors.hpp"
#include "perron/family.hpp"
#include "perron/io.hpp"
#include "perron/numeric.hpp"
#include "perron/spectral.hpp"
#include "perron/substitution.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using namespace perron;

constexpr int exit_ok = 0;
constexpr int exit_semantic = 1;
constexpr int exit_parse = 2;
constexpr int exit_gap = 3;

std::string read_input(const std::string &path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file)
        fail(error_kind::parse_error, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

void emit(const std::string &payload, const std::string &output_path) {
    if (output_path.empty() || output_path == "-") {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n')
            std::cout << '\n';
        return;
    }
    std::ofstream file(output_path);
    if (!file)
        fail(error_kind::parse_error, "cannot open '" + output_path + "' for writing");
    file << payload;
    if (!payload.empty() && payload.back() != '\n')
        file << '\n';
}

struct CommonOptions {
    std::string input = "-";
    std::string output;
    std::string format = "text";
    std::string gap_text = "1/1000000000";
    int max_iterations = default_iteration_cap;

    Rat gap() const {
        const Rat value = parse_rat(gap_text);
        if (sgn(value) <= 0)
            fail(error_kind::parse_error, "--gap must be a positive rational");
        return value;
    }
    bool json_mode() const { return format == "json"; }
};

void add_format_flags(CLI::App *cmd, CommonOptions &options) {
    cmd->add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--output,-o", options.output, "Write the report to a file instead of stdout");
}

void add_gap_flags(CLI::App *cmd, CommonOptions &options) {
    cmd->add_option("--gap", options.gap_text, "Requested interval width as a rational p/q")
        ->capture_default_str();
    cmd->add_option("--max-iter", options.max_iterations, "Collatz-Wielandt iteration cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

std::string vertices_1based(const std::vector<int> &vertices) {
    std::string out;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(vertices[i] + 1);
    }
    return out;
}

int cmd_analyze(const CommonOptions &options) {
    const NonNegIntMatrix matrix = parse_matrix(read_input(options.input));
    const SccDecomposition scc = scc_decompose(matrix);
    const bool pf = is_perron_frobenius(matrix);
    const bool above_one = exceeds_one(matrix);

    bool gap_hit = false;
    int cap_reported = options.max_iterations;
    Rat partial_lower, partial_upper;
    SpectralInterval interval;
    try {
        interval = spectral_radius(matrix, options.gap(), options.max_iterations);
    } catch (const gap_not_reached_error &e) {
        gap_hit = true;
        cap_reported = e.iteration_cap;
        partial_lower = e.partial_lower;
        partial_upper = e.partial_upper;
    }

    if (options.json_mode()) {
        json report = scc_report_json(matrix);
        report["n"] = matrix.dim();
        report["perron_frobenius"] = pf;
        report["exceeds_one"] = above_one;
        if (gap_hit)
            report["gap_not_reached"] = json{{"iteration_cap", cap_reported},
                                             {"lower", rat_to_string(partial_lower)},
                                             {"upper", rat_to_string(partial_upper)}};
        else
            report["spectral"] = interval_json(interval);
        emit(report.dump(), options.output);
    } else {
        std::ostringstream out;
        out << "n: " << matrix.dim() << '\n';
        for (int c = 0; c < scc.component_count(); ++c)
            out << "component " << c + 1 << ": vertices {"
                << vertices_1based(scc.components[static_cast<std::size_t>(c)]) << "} class "
                << scc_class_name(classify_component_of(matrix, scc, c)) << '\n';
        out << "condensation order:";
        for (int c : scc.condensation_order)
            out << ' ' << c + 1;
        out << '\n';
        out << "perron_frobenius: " << (pf ? "true" : "false") << '\n';
        out << "exceeds_one: " << (above_one ? "true" : "false") << '\n';
        if (gap_hit) {
            out << "gap_not_reached: iteration cap " << cap_reported << '\n';
            out << "partial_lower: " << rat_to_string(partial_lower) << '\n';
            out << "partial_upper: " << rat_to_string(partial_upper) << '\n';
        } else {
            out << "spectral_lower: " << rat_to_string(interval.lower) << '\n';
            out << "spectral_upper: " << rat_to_string(interval.upper) << '\n';
            out << "spectral_radius ~ " << decimal_string(interval.lower) << '\n';
        }
        emit(out.str(), options.output);
    }
    return gap_hit ? exit_gap : exit_ok;
}

int cmd_certify(const CommonOptions &options) {
    const NonNegIntMatrix matrix = parse_matrix(read_input(options.input));
    const PennerCertificate certificate = certify(matrix);
    if (options.json_mode()) {
        emit(certificate_to_string(certificate), options.output);
    } else {
        std::ostringstream out;
        out << "n: " << certificate.n << '\n';
        out << "dominant_vertices: " << vertices_1based(certificate.dominant_vertices) << '\n';
        out << "n_prime: " << certificate.n_prime << '\n';
        out << "power_column_sums:";
        for (const Int &sum : certificate.power_column_sums)
            out << ' ' << sum.get_str();
        out << '\n';
        out << "exponent_n_prime: " << rat_to_string(certificate.exponent_n_prime()) << '\n';
        out << "certified: radius >= 2^(" << rat_to_string(certificate.exponent_n_prime()) << ") ~ "
            << family_stretch_decimal(certificate.n_prime) << '\n';
        emit(out.str(), options.output);
    }
    return exit_ok;
}

int cmd_check(const std::string &matrix_path, const std::string &cert_path, const CommonOptions &options) {
    const NonNegIntMatrix matrix = parse_matrix(read_input(matrix_path));
    const PennerCertificate certificate = certificate_from_json(read_input(cert_path));
    const bool valid = check(matrix, certificate);
    if (options.json_mode())
        emit(json{{"valid", valid}}.dump(), options.output);
    else
        emit(valid ? "valid certificate" : "invalid certificate", options.output);
    return valid ? exit_ok : exit_semantic;
}

int cmd_bound(long chi_abs, const CommonOptions &options) {
    const BoundReport report = core_bound(chi_abs);
    const Rat log2_over = report.exponent; // radius >= 2^(1/arc_cap)
    const double log_lower = approx_log(Rat(2)) * log2_over.get_d();
    if (options.json_mode()) {
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), "%.10g", log_lower);
        emit(json{{"chi_abs", report.chi_abs},
                  {"arc_cap", report.arc_cap},
                  {"exponent", rat_to_string(report.exponent)},
                  {"log_lambda_lower", std::string(buffer)}}
                 .dump(),
             options.output);
    } else {
        std::ostringstream out;
        out << "chi_abs: " << report.chi_abs << '\n';
        out << "arc_cap: " << report.arc_cap << '\n';
        out << "exponent: " << rat_to_string(report.exponent) << '\n';
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), "%.10g", log_lower);
        out << "bound: log lambda >= log 2 / " << report.arc_cap << " ~ " << buffer << '\n';
        emit(out.str(), options.output);
    }
    return exit_ok;
}

int cmd_family(long d, int k, long chi_abs, const CommonOptions &options) {
    const FamilyStretch stretch = family_stretch(d);
    const SharpnessReport report = sharpness_report(d, chi_abs);

    // The k-truncation is not taken on faith: certify its radius is exactly 2.
    const SpectralInterval interval = spectral_radius(family_operator(k), options.gap(), options.max_iterations);
    if (interval.lower != 2 || interval.upper != 2)
        fail(error_kind::internal_error, "family operator truncation lost the eigenvalue 2");

    if (options.json_mode()) {
        emit(json{{"d", stretch.d},
                  {"k", k},
                  {"lambda_exponent", rat_to_string(stretch.exponent)},
                  {"bound_exponent", rat_to_string(report.bound_exponent)},
                  {"ratio", rat_to_string(report.ratio)}}
                 .dump(),
             options.output);
    } else {
        std::ostringstream out;
        out << "d: " << stretch.d << '\n';
        out << "k: " << k << '\n';
        out << "lambda_exponent: " << rat_to_string(stretch.exponent) << '\n';
        out << "lambda ~ " << family_stretch_decimal(d) << '\n';
        out << "bound_exponent: " << rat_to_string(report.bound_exponent) << '\n';
        out << "ratio: " << rat_to_string(report.ratio) << '\n';
        out << "verified: operator of dimension " << k << " has radius exactly 2" << '\n';
        emit(out.str(), options.output);
    }
    return exit_ok;
}

int cmd_entropy(const CommonOptions &options) {
    const Substitution substitution = parse_substitution_text(read_input(options.input));

    bool gap_hit = false;
    int cap_reported = options.max_iterations;
    Rat partial_lower, partial_upper;
    SpectralInterval interval;
    try {
        interval = entropy_interval(substitution, options.gap(), options.max_iterations);
    } catch (const gap_not_reached_error &e) {
        gap_hit = true;
        cap_reported = e.iteration_cap;
        partial_lower = e.partial_lower;
        partial_upper = e.partial_upper;
    }

    if (options.json_mode()) {
        if (gap_hit)
            emit(json{{"gap_not_reached", json{{"iteration_cap", cap_reported},
                                               {"lower", rat_to_string(partial_lower)},
                                               {"upper", rat_to_string(partial_upper)}}}}
                     .dump(),
                 options.output);
        else
            emit(interval_json(interval).dump(), options.output);
    } else {
        std::ostringstream out;
        out << "alphabet_size: " << substitution.alphabet_size() << '\n';
        if (gap_hit) {
            out << "gap_not_reached: iteration cap " << cap_reported << '\n';
            out << "partial_lower: " << rat_to_string(partial_lower) << '\n';
            out << "partial_upper: " << rat_to_string(partial_upper) << '\n';
        } else {
            out << "lambda_lower: " << rat_to_string(interval.lower) << '\n';
            out << "lambda_upper: " << rat_to_string(interval.upper) << '\n';
            out << "lambda ~ " << decimal_string(interval.lower) << '\n';
            char buffer[64];
            if (sgn(interval.lower) > 0) {
                std::snprintf(buffer, sizeof(buffer), "%.10g", approx_log(interval.lower));
                out << "entropy_lower ~ " << buffer << '\n';
            }
            if (sgn(interval.upper) > 0) {
                std::snprintf(buffer, sizeof(buffer), "%.10g", approx_log(interval.upper));
                out << "entropy_upper ~ " << buffer << '\n';
            }
        }
        emit(out.str(), options.output);
    }
    return gap_hit ? exit_gap : exit_ok;
}

int exit_code_for(const error &e) {
    switch (e.kind()) {
    case error_kind::parse_error: return exit_parse;
    case error_kind::gap_not_reached: return exit_gap;
    default: return exit_semantic;
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"certified spectral analysis of nonnegative integer matrices"};
    app.require_subcommand(1);

    CommonOptions options;
    long chi_abs = 1;
    long degree = 1;
    int truncation = 8;
    std::string matrix_path = "-";
    std::string cert_path;

    CLI::App *analyze = app.add_subcommand(
        "analyze", "SCC structure, PF status, exact radius-above-one verdict, spectral interval");
    analyze->add_option("input", options.input, "Matrix file, or - for stdin")->capture_default_str();
    add_gap_flags(analyze, options);
    add_format_flags(analyze, options);

    CLI::App *certify_cmd =
        app.add_subcommand("certify", "Emit an exact lower-bound certificate radius >= 2^(1/n')");
    certify_cmd->add_option("input", options.input, "Matrix file, or - for stdin")->capture_default_str();
    add_format_flags(certify_cmd, options);

    CLI::App *check_cmd = app.add_subcommand("check", "Verify a certificate against a matrix");
    check_cmd->add_option("matrix", matrix_path, "Matrix file, or - for stdin")->required();
    check_cmd->add_option("certificate", cert_path, "Certificate JSON file, or - for stdin")->required();
    add_format_flags(check_cmd, options);

    CLI::App *bound_cmd =
        app.add_subcommand("bound", "Arc-budget lower bound log lambda >= log 2 / (3 |chi|)");
    bound_cmd->add_option("chi_abs", chi_abs, "Magnitude of the core characteristic")->required();
    add_format_flags(bound_cmd, options);

    CLI::App *family_cmd =
        app.add_subcommand("family", "Stretch law of the example family against the arc-budget bound");
    family_cmd->add_option("d", degree, "Covering degree")->required();
    family_cmd->add_option("k", truncation, "Truncation dimension of the verifying operator")->required();
    family_cmd->add_option("chi_abs", chi_abs, "Magnitude of the core characteristic of the degree-d member")
        ->required();
    add_gap_flags(family_cmd, options);
    add_format_flags(family_cmd, options);

    CLI::App *entropy_cmd =
        app.add_subcommand("entropy", "Spectral interval of a substitution's incidence matrix");
    entropy_cmd->add_option("input", options.input, "Substitution file, or - for stdin")->capture_default_str();
    add_gap_flags(entropy_cmd, options);
    add_format_flags(entropy_cmd, options);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_parse;
    }

    try {
        if (app.got_subcommand(analyze))
            return cmd_analyze(options);
        if (app.got_subcommand(certify_cmd))
            return cmd_certify(options);
        if (app.got_subcommand(check_cmd))
            return cmd_check(matrix_path, cert_path, options);
        if (app.got_subcommand(bound_cmd))
            return cmd_bound(chi_abs, options);
        if (app.got_subcommand(family_cmd))
            return cmd_family(degree, truncation, chi_abs, options);
        if (app.got_subcommand(entropy_cmd))
            return cmd_entropy(options);
    } catch (const error &e) {
        std::cerr << "error [" << error_kind_name(e.kind()) << "]: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_semantic;
    }
    return exit_semantic;
}
