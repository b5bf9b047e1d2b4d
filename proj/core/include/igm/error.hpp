#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace igm {

enum class ErrorCode {
  NonSquare,
  TooSmall,
  NonPositiveEntry,
  ReciprocityViolation,
  BadDiagonal,
  ZeroWeight,
  NotNormalized,
  DimensionMismatch,
  UnsupportedOrder,
  SingularMatrix,
  NoConvergence,
  ZeroShift,
  ZeroShiftOnConsistent,
  Infeasible,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// 1-based (row, column) of the offending matrix cell.
struct CellLocation {
  std::size_t row = 0;
  std::size_t col = 0;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<CellLocation> where = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::optional<CellLocation>& location() const noexcept { return where_; }

 private:
  ErrorCode code_;
  std::optional<CellLocation> where_;
};

}  // namespace igm
