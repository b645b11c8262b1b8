#pragma once

#include <stdexcept>
#include <string>

namespace perron {

enum class error_kind {
    non_square,
    negative_entry,
    index_out_of_range,
    empty_set,
    not_a_component,
    not_irreducible,
    non_positive_witness,
    gap_not_reached,
    acyclic,
    leading_eigenvalue_not_above_one,
    dimension_mismatch,
    non_positive_chi,
    dimension_too_small,
    unknown_symbol,
    duplicate_symbol,
    invalid_cone_vector,
    non_positive_parameter,
    parse_error,
    internal_error,
};

const char *error_kind_name(error_kind kind);

/// Base class of every error thrown by the library. Messages use 1-based
/// vertex/row/column indices, matching the text and JSON interfaces.
class error : public std::runtime_error {
  public:
    error(error_kind kind, const std::string &message)
        : std::runtime_error(message), kind_(kind) {}

    error_kind kind() const { return kind_; }

  private:
    error_kind kind_;
};

[[noreturn]] inline void fail(error_kind kind, const std::string &message) {
    throw error(kind, message);
}

} // namespace perron
