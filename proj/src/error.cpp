#include "twindom/error.hpp"

namespace twindom {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::duplicate_or_conflicting_arc: return "DuplicateOrConflictingArc";
    case errc::incomplete_orientation: return "IncompleteOrientation";
    case errc::self_loop: return "SelfLoop";
    case errc::out_of_range_vertex: return "OutOfRangeVertex";
    case errc::not_a_bijection: return "NotABijection";
    case errc::empty_keep_set: return "EmptyKeepSet";
    case errc::order_out_of_range: return "OrderOutOfRange";
    case errc::order_too_large_for_canonicalization: return "OrderTooLargeForCanonicalization";
    case errc::even_order_for_rotational: return "EvenOrderForRotational";
    case errc::malformed_header: return "MalformedHeader";
    case errc::wrong_bit_count: return "WrongBitCount";
    case errc::illegal_character: return "IllegalCharacter";
    case errc::set_not_subset_of_vertices: return "SetNotSubsetOfVertices";
    case errc::order_too_large_for_exact_search: return "OrderTooLargeForExactSearch";
    case errc::no_source_or_sink: return "NoSourceOrSink";
    case errc::wrong_order: return "WrongOrder";
    case errc::degree_condition_unmet: return "DegreeConditionUnmet";
    case errc::odd_order: return "OddOrder";
    case errc::order_below_eight: return "OrderBelowEight";
    case errc::order_too_large: return "OrderTooLarge";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::internal_verification_failure: return "InternalVerificationFailure";
  }
  return "UnknownError";
}

}  // namespace twindom
