#pragma once

#include "perron/certificate.hpp"
#include "perron/digraph.hpp"
#include "perron/intmatrix.hpp"
#include "perron/spectral.hpp"
#include "perron/substitution.hpp"

#include <json.hpp>

#include <string>

namespace perron {

// Matrix input, auto-detected:
//   * JSON: {"n": <int>, "rows": [[...], ...]} -- entries as JSON integers,
//     or as decimal strings for values beyond 64 bits;
//   * text: whitespace-separated rows, one per line.
// Vertex/row/column numbers in every serialized form are 1-based.
NonNegIntMatrix parse_matrix(const std::string &text);

nlohmann::json matrix_json(const NonNegIntMatrix &matrix);
std::string matrix_to_text(const NonNegIntMatrix &matrix);

// {"lower": "p/q", "upper": "p/q"} with exact rational strings.
nlohmann::json interval_json(const SpectralInterval &interval);

// {"components": [[...], ...], "order": [...], "circle_flags": [...],
//  "trivial_flags": [...]} -- components listed by smallest vertex, `order`
// holding 1-based component indices in condensation order.
nlohmann::json scc_report_json(const NonNegIntMatrix &matrix);

// {"n":, "dominant_vertices": [...], "n_prime":, "power_column_sums":
//  ["..."], "exponent_n_prime": "1/k"} -- column sums as decimal strings.
// The checker consumes exactly this schema.
nlohmann::json certificate_json(const PennerCertificate &certificate);
std::string certificate_to_string(const PennerCertificate &certificate);
PennerCertificate certificate_from_json(const std::string &text);

// One rule per line: "name -> w1 w2 w3"; '#' starts a comment; blank lines
// are skipped. An empty right-hand side maps the symbol to the empty word.
Substitution parse_substitution_text(const std::string &text);

} // namespace perron
