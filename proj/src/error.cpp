#include "ordlat/error.hpp"

namespace ordlat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::antisymmetry_violation: return "AntisymmetryViolation";
    case ErrorKind::cap_exceeded: return "CapExceeded";
    case ErrorKind::empty_poset: return "EmptyPoset";
    case ErrorKind::not_a_lattice: return "NotALattice";
    case ErrorKind::not_distributive: return "NotDistributive";
    case ErrorKind::degenerate_bounds: return "DegenerateBounds";
    case ErrorKind::unbounded: return "Unbounded";
    case ErrorKind::not_homomorphism: return "NotHomomorphism";
    case ErrorKind::not_order_preserving: return "NotOrderPreserving";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::internal_error: return "InternalError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

void raise(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

void check_cap(std::string_view what, std::size_t value, std::size_t cap) {
  if (value > cap)
    raise(ErrorKind::cap_exceeded,
          std::string(what) + " " + std::to_string(value) + " exceeds cap " + std::to_string(cap));
}

}  // namespace ordlat
