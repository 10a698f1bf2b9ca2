#pragma once

#include <stdexcept>
#include <string>

namespace ffzeta {

enum class errc {
  division_by_zero,
  spec_mismatch,
  not_irreducible,
  invalid_index,
  invalid_input,
  truncation_insufficient,
  precision_exceeds_digits,
  ramified_place,
  unsupported_place_degree,
  invalid_pair,
  not_a_trivial_zero,
  parse_error,
  io_error,
  config_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc c, const std::string& msg) { throw error(c, msg); }

} // namespace ffzeta
