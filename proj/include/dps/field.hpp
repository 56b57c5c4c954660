#pragma once

#include <string>
#include <string_view>

#include "dps/errors.hpp"

namespace dps {

/// Base field of the general linear group. Non-archimedean fields carry no
/// further data: every statement we implement is uniform over them.
enum class FieldKind { Real, Complex, NonArchimedean };

inline bool is_archimedean(FieldKind f) { return f != FieldKind::NonArchimedean; }

inline std::string to_string(FieldKind f) {
  switch (f) {
    case FieldKind::Real: return "R";
    case FieldKind::Complex: return "C";
    case FieldKind::NonArchimedean: return "NA";
  }
  return "?";
}

inline FieldKind parse_field(std::string_view s) {
  if (s == "R" || s == "real" || s == "Real") return FieldKind::Real;
  if (s == "C" || s == "complex" || s == "Complex") return FieldKind::Complex;
  if (s == "NA" || s == "nonarch" || s == "NonArchimedean" || s == "p-adic")
    return FieldKind::NonArchimedean;
  throw validation_error("field: expected one of R, C, NA; got '" + std::string(s) + "'");
}

}  // namespace dps
