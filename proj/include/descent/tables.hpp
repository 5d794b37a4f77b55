#ifndef DESCENT_TABLES_HPP
#define DESCENT_TABLES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "descent/engine.hpp"
#include "descent/report.hpp"

namespace descent {

/// One-parameter families y^2 = (x^4 - 1) g_k(x).
enum class TableFamily {
  x2kx1,   ///< g = x^2 + k x + 1
  x3kx21,  ///< g = x^3 + k x^2 + 1
  x3kx1,   ///< g = x^3 + k x + 1
};

std::optional<TableFamily> parse_table_family(std::string_view name) noexcept;
std::string_view table_family_name(TableFamily family) noexcept;
IntegerPolynomial table_polynomial(TableFamily family, long k);

struct TableRow {
  long k = 0;
  /// Points with y > 0.
  std::vector<CurvePoint> points;
  bool complete = true;
  bool skipped = false;
  std::string error;
};

struct TableOptions {
  long kmin = 2;
  long kmax = 200;
  SolveOptions solve;
  unsigned threads = 1;
  /// Keep rows without points (normally only rows with points, skips or errors are kept).
  bool keep_empty = false;
};

/// Solves every k in [kmin, kmax] with the quartic-minus pipeline. Rows are
/// returned in increasing k regardless of how many threads ran.
std::vector<TableRow> reproduce_table(TableFamily family, const TableOptions& options);

std::string format_table(TableFamily family, const std::vector<TableRow>& rows, ReportFormat format);

}  // namespace descent

#endif  // DESCENT_TABLES_HPP
