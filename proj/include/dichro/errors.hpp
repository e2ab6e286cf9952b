#pragma once

#include <stdexcept>
#include <string>

namespace dichro {

enum class errc {
  loop_arc,
  duplicate_arc,
  vertex_out_of_range,
  empty_digraph,
  degree_too_high,
  invalid_k,
  precondition_violated,
  not_found,
  digirth_too_small,
  incomplete_coloring,
  too_large,
  bad_n,
  bad_step,
  parse_error,
};

/// Single exception type for the toolkit; `code()` identifies the condition.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace dichro
