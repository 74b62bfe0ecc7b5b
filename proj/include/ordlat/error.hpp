#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ordlat {

enum class ErrorKind {
  antisymmetry_violation,
  cap_exceeded,
  empty_poset,
  not_a_lattice,
  not_distributive,
  degenerate_bounds,
  unbounded,
  not_homomorphism,
  not_order_preserving,
  invalid_argument,
  parse_error,
  internal_error,
};

std::string_view to_string(ErrorKind kind);

// All library failures. `what()` carries the kind name followed by the
// witness (offending pair, triple, cap, ...) in human-readable form.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& detail);

// Throws cap_exceeded when value > cap.
void check_cap(std::string_view what, std::size_t value, std::size_t cap);

}  // namespace ordlat
