#include "matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "igm/error.hpp"

namespace igm::cli {

namespace {

using Cell = std::optional<double>;
using Grid = std::vector<std::vector<Cell>>;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_decimal(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::ParseError, "'" + std::string(whole) + "' is not a number or ratio");
  }
  return value;
}

Cell parse_cell(std::string_view token, std::size_t row, std::size_t col) {
  token = trim(token);
  if (token.empty()) return std::nullopt;
  try {
    return parse_ratio_token(token);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what(), CellLocation{row + 1, col + 1});
  }
}

// Fills blank lower-triangle cells by reciprocity, then validates.
PairwiseReciprocalMatrix assemble(const Grid& grid) {
  const std::size_t n = grid.size();
  for (const auto& row : grid) {
    if (row.size() != n) {
      throw Error(ErrorCode::NonSquare, "expected " + std::to_string(n) + " cells per row, found a row with " +
                                            std::to_string(row.size()));
    }
  }
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (grid[i][j]) {
        m(i, j) = *grid[i][j];
      } else if (i > j && grid[j][i]) {
        m(i, j) = 1.0 / *grid[j][i];
      } else {
        throw Error(ErrorCode::ParseError,
                    i > j ? "cell and its mirror are both blank"
                          : "only cells below the diagonal may be left blank",
                    CellLocation{i + 1, j + 1});
      }
    }
  }
  return validate_prm(m);
}

}  // namespace

double parse_ratio_token(std::string_view token) {
  token = trim(token);
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return parse_decimal(token, token);
  const double num = parse_decimal(token.substr(0, slash), token);
  const double den = parse_decimal(token.substr(slash + 1), token);
  if (den == 0.0) throw Error(ErrorCode::ParseError, "'" + std::string(token) + "' divides by zero");
  return num / den;
}

PairwiseReciprocalMatrix parse_matrix_csv(std::string_view text) {
  Grid grid;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    auto line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const auto line = text.substr(line_start, line_end - line_start);
    line_start = line_end + 1;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;

    std::vector<Cell> row;
    std::size_t cell_start = 0;
    while (true) {
      const auto comma = line.find(',', cell_start);
      const auto token = line.substr(cell_start, comma == std::string_view::npos ? std::string_view::npos
                                                                                 : comma - cell_start);
      row.push_back(parse_cell(token, grid.size(), row.size()));
      if (comma == std::string_view::npos) break;
      cell_start = comma + 1;
    }
    grid.push_back(std::move(row));
  }
  if (grid.empty()) throw Error(ErrorCode::ParseError, "no matrix rows found");
  return assemble(grid);
}

PairwiseReciprocalMatrix parse_matrix_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  const nlohmann::json* rows = &doc;
  if (doc.is_object()) {
    if (!doc.contains("matrix")) throw Error(ErrorCode::ParseError, "JSON object has no \"matrix\" member");
    rows = &doc["matrix"];
  }
  if (!rows->is_array() || rows->empty()) throw Error(ErrorCode::ParseError, "matrix must be a non-empty array of rows");

  Grid grid;
  for (std::size_t i = 0; i < rows->size(); ++i) {
    const auto& row = (*rows)[i];
    if (!row.is_array()) throw Error(ErrorCode::ParseError, "row " + std::to_string(i + 1) + " is not an array");
    std::vector<Cell> cells;
    for (std::size_t j = 0; j < row.size(); ++j) {
      const auto& v = row[j];
      if (v.is_null()) {
        cells.emplace_back(std::nullopt);
      } else if (v.is_number()) {
        cells.emplace_back(v.get<double>());
      } else if (v.is_string()) {
        cells.push_back(parse_cell(v.get<std::string>(), i, j));
      } else {
        throw Error(ErrorCode::ParseError, "cell must be a number, ratio string or null", CellLocation{i + 1, j + 1});
      }
    }
    grid.push_back(std::move(cells));
  }
  return assemble(grid);
}

MatrixFormat format_from_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext == ".json" ? MatrixFormat::Json : MatrixFormat::Csv;
}

MatrixDocument parse_matrix(const std::filesystem::path& path, std::optional<MatrixFormat> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const MatrixFormat fmt = format.value_or(format_from_path(path));
  auto prm = fmt == MatrixFormat::Json ? parse_matrix_json(text) : parse_matrix_csv(text);
  return MatrixDocument{path, fmt, std::move(prm)};
}

std::string to_csv(const PairwiseReciprocalMatrix& prm) {
  std::string out;
  char buf[40];
  for (std::size_t i = 0; i < prm.order(); ++i) {
    for (std::size_t j = 0; j < prm.order(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", prm(i, j));
      if (j > 0) out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace igm::cli
