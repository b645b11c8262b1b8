#include "perron/errors.hpp"

namespace perron {

const char *error_kind_name(error_kind kind) {
    switch (kind) {
    case error_kind::non_square: return "NonSquare";
    case error_kind::negative_entry: return "NegativeEntry";
    case error_kind::index_out_of_range: return "IndexOutOfRange";
    case error_kind::empty_set: return "EmptySet";
    case error_kind::not_a_component: return "NotAComponent";
    case error_kind::not_irreducible: return "NotIrreducible";
    case error_kind::non_positive_witness: return "NonPositiveWitness";
    case error_kind::gap_not_reached: return "GapNotReached";
    case error_kind::acyclic: return "Acyclic";
    case error_kind::leading_eigenvalue_not_above_one: return "LeadingEigenvalueNotAboveOne";
    case error_kind::dimension_mismatch: return "DimensionMismatch";
    case error_kind::non_positive_chi: return "NonPositiveChi";
    case error_kind::dimension_too_small: return "DimensionTooSmall";
    case error_kind::unknown_symbol: return "UnknownSymbol";
    case error_kind::duplicate_symbol: return "DuplicateSymbol";
    case error_kind::invalid_cone_vector: return "InvalidConeVector";
    case error_kind::non_positive_parameter: return "NonPositiveParameter";
    case error_kind::parse_error: return "ParseError";
    case error_kind::internal_error: return "InternalError";
    }
    return "UnknownError";
}

} // namespace perron
