#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "igm/prm.hpp"

namespace igm::cli {

enum class MatrixFormat { Csv, Json };

struct MatrixDocument {
  std::filesystem::path source;
  MatrixFormat format = MatrixFormat::Csv;
  PairwiseReciprocalMatrix prm;
};

/// Decimal literal or ratio "p/q" (both parts decimal literals, surrounding
/// blanks allowed). Throws Error(ParseError).
double parse_ratio_token(std::string_view token);

/// Comma-separated rows. Cells strictly below the diagonal may be blank and
/// are then filled with the reciprocal of the mirrored cell; every other cell
/// is required. Lines that are empty or start with '#' are skipped.
PairwiseReciprocalMatrix parse_matrix_csv(std::string_view text);

/// Either a bare array of rows or {"matrix": [...]}. Cells are numbers or
/// strings holding ratio tokens; null below the diagonal means "reciprocal".
PairwiseReciprocalMatrix parse_matrix_json(std::string_view text);

/// Guesses from the extension: ".json" is JSON, anything else CSV.
MatrixFormat format_from_path(const std::filesystem::path& path);

/// Throws Error(ParseError) for unreadable files, plus any parse or validation
/// error.
MatrixDocument parse_matrix(const std::filesystem::path& path,
                            std::optional<MatrixFormat> format = std::nullopt);

/// Full matrix as CSV with 17 significant digits per entry.
std::string to_csv(const PairwiseReciprocalMatrix& prm);

}  // namespace igm::cli
