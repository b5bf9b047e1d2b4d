#include "igm/error.hpp"

namespace igm {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::ReciprocityViolation: return "ReciprocityViolation";
    case ErrorCode::BadDiagonal: return "BadDiagonal";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ZeroShift: return "ZeroShift";
    case ErrorCode::ZeroShiftOnConsistent: return "ZeroShiftOnConsistent";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     const std::optional<CellLocation>& where) {
  std::string out(to_string(code));
  if (where) {
    out += " at (" + std::to_string(where->row) + "," + std::to_string(where->col) + ")";
  }
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<CellLocation> where)
    : std::runtime_error(decorate(code, message, where)), code_(code), where_(where) {}

}  // namespace igm
