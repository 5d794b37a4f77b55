#include "descent/tables.hpp"

#include <atomic>
#include <thread>

#include "descent/error.hpp"
#include "json.hpp"

namespace descent {

std::optional<TableFamily> parse_table_family(std::string_view name) noexcept {
  if (name == "x2kx1") return TableFamily::x2kx1;
  if (name == "x3kx21") return TableFamily::x3kx21;
  if (name == "x3kx1") return TableFamily::x3kx1;
  return std::nullopt;
}

std::string_view table_family_name(TableFamily family) noexcept {
  switch (family) {
    case TableFamily::x2kx1: return "x2kx1";
    case TableFamily::x3kx21: return "x3kx21";
    case TableFamily::x3kx1: return "x3kx1";
  }
  return "unknown";
}

IntegerPolynomial table_polynomial(TableFamily family, long k) {
  switch (family) {
    case TableFamily::x2kx1: return IntegerPolynomial{1, k, 1};
    case TableFamily::x3kx21: return IntegerPolynomial{1, 0, k, 1};
    case TableFamily::x3kx1: return IntegerPolynomial{1, k, 0, 1};
  }
  return {};
}

namespace {

TableRow solve_row(TableFamily family, long k, const SolveOptions& options) {
  TableRow row;
  row.k = k;
  try {
    DescentReport r = solve_quartic_family(table_polynomial(family, k), QuarticVariant::minus, options);
    row.points = r.positive_points();
    row.complete = r.complete;
    for (const auto& o : r.twist_outcomes) row.skipped = row.skipped || o.skipped;
  } catch (const Error& e) {
    row.complete = false;
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::vector<TableRow> reproduce_table(TableFamily family, const TableOptions& options) {
  if (options.kmax < options.kmin) return {};
  const std::size_t count = static_cast<std::size_t>(options.kmax - options.kmin + 1);
  std::vector<TableRow> all(count);
  SolveOptions solve = options.solve;
  solve.threads = 1;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;)
      all[i] = solve_row(family, options.kmin + static_cast<long>(i), solve);
  };
  const unsigned workers = std::max(1u, options.threads);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  std::vector<TableRow> rows;
  for (auto& row : all)
    if (options.keep_empty || !row.points.empty() || row.skipped || !row.error.empty()) rows.push_back(std::move(row));
  return rows;
}

std::string format_table(TableFamily family, const std::vector<TableRow>& rows, ReportFormat format) {
  const std::string g = family == TableFamily::x2kx1    ? "x^2+kx+1"
                        : family == TableFamily::x3kx21 ? "x^3+kx^2+1"
                                                        : "x^3+kx+1";
  auto points_text = [](const TableRow& row) {
    std::string s;
    for (const auto& pt : row.points) s += (s.empty() ? "" : ", ") + ("(" + pt.x.get_str() + "," + pt.y.get_str() + ")");
    return s;
  };
  auto status = [](const TableRow& row) -> std::string {
    if (!row.error.empty()) return "error: " + row.error;
    if (row.skipped) return "skipped (digit budget)";
    return row.complete ? "" : "incomplete";
  };
  switch (format) {
    case ReportFormat::json: {
      nlohmann::ordered_json j;
      j["family"] = table_family_name(family);
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& row : rows) {
        nlohmann::ordered_json r;
        r["k"] = row.k;
        nlohmann::ordered_json pts = nlohmann::ordered_json::array();
        for (const auto& pt : row.points) pts.push_back({pt.x.get_str(), pt.y.get_str()});
        r["points"] = std::move(pts);
        r["complete"] = row.complete;
        r["status"] = status(row);
        arr.push_back(std::move(r));
      }
      j["rows"] = std::move(arr);
      return j.dump() + "\n";
    }
    case ReportFormat::csv: {
      std::string s = "k,x,y,status\n";
      for (const auto& row : rows) {
        if (row.points.empty()) s += std::to_string(row.k) + ",,," + status(row) + "\n";
        for (const auto& pt : row.points)
          s += std::to_string(row.k) + "," + pt.x.get_str() + "," + pt.y.get_str() + "," + status(row) + "\n";
      }
      return s;
    }
    case ReportFormat::text: {
      std::string s = "y^2 = (x^4-1)(" + g + "), k | integer points (x,y), y>0\n";
      for (const auto& row : rows) {
        std::string line = std::to_string(row.k) + " | " + points_text(row);
        if (auto st = status(row); !st.empty()) line += (row.points.empty() ? "" : "  ") + st;
        s += line + "\n";
      }
      return s;
    }
  }
  return {};
}

}  // namespace descent
