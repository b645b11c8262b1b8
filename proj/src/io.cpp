#include "perron/io.hpp"

#include "perron/errors.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace perron {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string &message) { fail(error_kind::parse_error, message); }

Int int_from_token(const std::string &token, const std::string &where) {
    try {
        return Int(token);
    } catch (const std::invalid_argument &) {
        parse_fail("malformed integer '" + token + "' in " + where);
    }
}

Int int_from_json(const json &value, const std::string &where) {
    if (value.is_number_integer())
        return Int(value.get<long>());
    if (value.is_string())
        return int_from_token(value.get<std::string>(), where);
    parse_fail(where + " must be an integer or a decimal string");
}

NonNegIntMatrix matrix_from_rows_checked(const std::vector<std::vector<Int>> &rows) {
    try {
        return NonNegIntMatrix::from_rows(rows);
    } catch (const error &e) {
        // Bad content in an input file is a parse problem at this boundary.
        parse_fail(e.what());
    }
}

NonNegIntMatrix parse_matrix_json(const std::string &text) {
    json document;
    try {
        document = json::parse(text);
    } catch (const json::exception &e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
    if (!document.is_object() || !document.contains("n") || !document.contains("rows"))
        parse_fail("matrix JSON must be an object with \"n\" and \"rows\"");
    if (!document["n"].is_number_integer())
        parse_fail("\"n\" must be an integer");
    const long long n = document["n"].get<long long>();
    const json &rows = document["rows"];
    if (!rows.is_array() || static_cast<long long>(rows.size()) != n)
        parse_fail("\"rows\" must be an array of exactly n rows");
    std::vector<std::vector<Int>> entries;
    entries.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const json &row = rows[i];
        if (!row.is_array())
            parse_fail("row " + std::to_string(i + 1) + " is not an array");
        std::vector<Int> converted;
        converted.reserve(row.size());
        for (std::size_t j = 0; j < row.size(); ++j)
            converted.push_back(int_from_json(row[j], "entry (" + std::to_string(i + 1) + ", " +
                                                          std::to_string(j + 1) + ")"));
        entries.push_back(std::move(converted));
    }
    return matrix_from_rows_checked(entries);
}

NonNegIntMatrix parse_matrix_text(const std::string &text) {
    std::vector<std::vector<Int>> rows;
    std::istringstream lines(text);
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(lines, line)) {
        ++line_number;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream tokens(line);
        std::vector<Int> row;
        std::string token;
        while (tokens >> token)
            row.push_back(int_from_token(token, "line " + std::to_string(line_number)));
        if (!row.empty())
            rows.push_back(std::move(row));
    }
    if (rows.empty())
        parse_fail("no matrix rows found in input");
    return matrix_from_rows_checked(rows);
}

json int_json(const Int &value) {
    if (value.fits_slong_p())
        return json(static_cast<long long>(value.get_si()));
    return json(value.get_str());
}

} // namespace

NonNegIntMatrix parse_matrix(const std::string &text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        if (c == '{')
            return parse_matrix_json(text);
        break;
    }
    return parse_matrix_text(text);
}

nlohmann::json matrix_json(const NonNegIntMatrix &matrix) {
    json rows = json::array();
    for (int i = 0; i < matrix.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < matrix.dim(); ++j)
            row.push_back(int_json(matrix.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"n", matrix.dim()}, {"rows", std::move(rows)}};
}

std::string matrix_to_text(const NonNegIntMatrix &matrix) {
    std::string out;
    for (int i = 0; i < matrix.dim(); ++i) {
        for (int j = 0; j < matrix.dim(); ++j) {
            if (j > 0)
                out += ' ';
            out += matrix.at(i, j).get_str();
        }
        out += '\n';
    }
    return out;
}

nlohmann::json interval_json(const SpectralInterval &interval) {
    return json{{"lower", rat_to_string(interval.lower)}, {"upper", rat_to_string(interval.upper)}};
}

nlohmann::json scc_report_json(const NonNegIntMatrix &matrix) {
    const SccDecomposition scc = scc_decompose(matrix);
    json components = json::array();
    json circle_flags = json::array();
    json trivial_flags = json::array();
    for (int c = 0; c < scc.component_count(); ++c) {
        json members = json::array();
        for (int v : scc.components[static_cast<std::size_t>(c)])
            members.push_back(v + 1);
        components.push_back(std::move(members));
        const SccClass cls = classify_component_of(matrix, scc, c);
        circle_flags.push_back(cls == SccClass::circle);
        trivial_flags.push_back(cls == SccClass::trivial);
    }
    json order = json::array();
    for (int c : scc.condensation_order)
        order.push_back(c + 1);
    return json{{"components", std::move(components)},
                {"order", std::move(order)},
                {"circle_flags", std::move(circle_flags)},
                {"trivial_flags", std::move(trivial_flags)}};
}

nlohmann::json certificate_json(const PennerCertificate &certificate) {
    json vertices = json::array();
    for (int v : certificate.dominant_vertices)
        vertices.push_back(v + 1);
    json sums = json::array();
    for (const Int &sum : certificate.power_column_sums)
        sums.push_back(sum.get_str());
    return json{{"n", certificate.n},
                {"dominant_vertices", std::move(vertices)},
                {"n_prime", certificate.n_prime},
                {"power_column_sums", std::move(sums)},
                {"exponent_n_prime", rat_to_string(certificate.exponent_n_prime())}};
}

std::string certificate_to_string(const PennerCertificate &certificate) {
    return certificate_json(certificate).dump();
}

PennerCertificate certificate_from_json(const std::string &text) {
    json document;
    try {
        document = json::parse(text);
    } catch (const json::exception &e) {
        parse_fail(std::string("invalid certificate JSON: ") + e.what());
    }
    for (const char *key : {"n", "dominant_vertices", "n_prime", "power_column_sums", "exponent_n_prime"})
        if (!document.is_object() || !document.contains(key))
            parse_fail(std::string("certificate is missing \"") + key + "\"");

    PennerCertificate certificate;
    if (!document["n"].is_number_integer() || !document["n_prime"].is_number_integer())
        parse_fail("certificate \"n\" and \"n_prime\" must be integers");
    certificate.n = document["n"].get<int>();
    certificate.n_prime = document["n_prime"].get<int>();
    if (certificate.n < 1)
        parse_fail("certificate \"n\" must be >= 1");

    if (!document["dominant_vertices"].is_array())
        parse_fail("\"dominant_vertices\" must be an array");
    for (const json &v : document["dominant_vertices"]) {
        if (!v.is_number_integer())
            parse_fail("\"dominant_vertices\" entries must be integers");
        certificate.dominant_vertices.push_back(v.get<int>() - 1);
    }

    if (!document["power_column_sums"].is_array())
        parse_fail("\"power_column_sums\" must be an array");
    for (const json &s : document["power_column_sums"]) {
        if (!s.is_string())
            parse_fail("\"power_column_sums\" entries must be decimal strings");
        certificate.power_column_sums.push_back(int_from_token(s.get<std::string>(), "power_column_sums"));
    }

    if (!document["exponent_n_prime"].is_string())
        parse_fail("\"exponent_n_prime\" must be a rational string");
    if (certificate.n_prime >= 1 &&
        parse_rat(document["exponent_n_prime"].get<std::string>()) != certificate.exponent_n_prime())
        parse_fail("\"exponent_n_prime\" does not equal 1/n_prime");
    return certificate;
}

Substitution parse_substitution_text(const std::string &text) {
    std::vector<std::pair<std::string, std::vector<std::string>>> rules;
    std::istringstream lines(text);
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(lines, line)) {
        ++line_number;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        const auto arrow = line.find("->");
        if (arrow == std::string::npos)
            parse_fail("line " + std::to_string(line_number) + ": expected \"name -> word\"");
        std::istringstream lhs(line.substr(0, arrow));
        std::string name, extra;
        if (!(lhs >> name) || (lhs >> extra))
            parse_fail("line " + std::to_string(line_number) + ": left-hand side must be one symbol");
        std::istringstream rhs(line.substr(arrow + 2));
        std::vector<std::string> word;
        std::string symbol;
        while (rhs >> symbol)
            word.push_back(symbol);
        rules.emplace_back(std::move(name), std::move(word));
    }
    try {
        return Substitution::from_rules(rules);
    } catch (const error &e) {
        parse_fail(e.what());
    }
}

} // namespace perron
