#pragma once

#include <stdexcept>
#include <string>

namespace twindom {

// Every failure mode the library reports, one code per contract violation.
enum class errc {
  duplicate_or_conflicting_arc,
  incomplete_orientation,
  self_loop,
  out_of_range_vertex,
  not_a_bijection,
  empty_keep_set,
  order_out_of_range,
  order_too_large_for_canonicalization,
  even_order_for_rotational,
  malformed_header,
  wrong_bit_count,
  illegal_character,
  set_not_subset_of_vertices,
  order_too_large_for_exact_search,
  no_source_or_sink,
  wrong_order,
  degree_condition_unmet,
  odd_order,
  order_below_eight,
  order_too_large,
  invalid_argument,
  internal_verification_failure,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace twindom
