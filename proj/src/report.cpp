#include "descent/report.hpp"

#include <sstream>

#include "json.hpp"

namespace descent {

namespace {

using nlohmann::ordered_json;

ordered_json strings(const std::vector<Integer>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

ordered_json twist_json(const TwistEquation& t) {
  ordered_json j;
  j["kind"] = twist_kind_name(t.kind);
  j["d"] = t.d.get_str();
  j["p"] = t.p;
  j["f"] = strings(t.f.coeffs());
  if (t.model) j["model"] = {{"a2", t.model->a2.get_str()}, {"a4", t.model->a4.get_str()}, {"a6", t.model->a6.get_str()}};
  return j;
}

std::string join(const std::vector<Integer>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x.get_str();
  return s;
}

std::string emit_json(const DescentReport& r) {
  ordered_json j;
  j["pipeline"] = pipeline_name(r.pipeline);
  j["problem"] = {{"p", r.problem.p},
                  {"f", strings(r.problem.f.coeffs())},
                  {"g", strings(r.problem.g.coeffs())},
                  {"D", r.problem.D.get_str()},
                  {"equation", curve_equation(r.problem)}};
  j["c"] = r.c.get_str();
  j["divisor_set"] = strings(r.divisor_set);
  ordered_json outs = ordered_json::array();
  for (const auto& o : r.twist_outcomes) {
    ordered_json t;
    t["twist"] = twist_json(o.twist);
    t["backend"] = o.backend;
    t["complete"] = o.complete;
    t["skipped"] = o.skipped;
    if (o.backend == "bounded") t["height"] = o.height;
    t["x_candidates"] = strings(o.x_candidates);
    t["diagnostics"] = o.diagnostics;
    outs.push_back(std::move(t));
  }
  j["twist_outcomes"] = std::move(outs);
  ordered_json pts = ordered_json::array();
  for (const auto& pt : r.points) pts.push_back({pt.x.get_str(), pt.y.get_str()});
  j["points"] = std::move(pts);
  j["point_sources"] = r.point_sources;
  j["complete"] = r.complete;
  j["completeness"] = completeness_label(r);
  j["bound"] = r.bound ? ordered_json(r.bound->get_str()) : ordered_json(nullptr);
  if (r.closed_form_c) j["closed_form_c"] = r.closed_form_c->get_str();
  j["notes"] = r.notes;
  return j.dump() + "\n";
}

std::string emit_text(const DescentReport& r) {
  std::ostringstream os;
  os << "curve:       " << curve_equation(r.problem) << "\n";
  os << "pipeline:    " << pipeline_name(r.pipeline) << "\n";
  os << "resultant:   |c| = " << r.c << "\n";
  os << "divisors:    " << r.divisor_set.size() << " [" << join(r.divisor_set) << "]\n";
  for (const auto& o : r.twist_outcomes) {
    os << "  twist d=" << o.twist.d << " " << twist_kind_name(o.twist.kind) << " via " << o.backend;
    if (o.skipped) os << " skipped";
    os << (o.complete ? " complete" : "") << " x: [" << join(o.x_candidates) << "]\n";
  }
  os << "points:      " << r.points.size() << "\n";
  for (std::size_t i = 0; i < r.points.size(); ++i)
    os << "  (" << r.points[i].x << ", " << r.points[i].y << ")  from " << r.point_sources[i] << "\n";
  os << "bound:       " << (r.bound ? r.bound->get_str() : "none") << "\n";
  if (r.closed_form_c) os << "closed-form: " << *r.closed_form_c << "\n";
  os << "status:      " << completeness_label(r) << "\n";
  for (const auto& n : r.notes) os << "note:        " << n << "\n";
  return os.str();
}

std::string emit_csv(const DescentReport& r) {
  std::string s = "x,y,d_source,complete\n";
  for (std::size_t i = 0; i < r.points.size(); ++i)
    s += r.points[i].x.get_str() + "," + r.points[i].y.get_str() + "," + r.point_sources[i] + "," +
         (r.complete ? "true" : "false") + "\n";
  return s;
}

std::string factor_text(const IntegerPolynomial& p) {
  std::string s = p.to_string();
  return p.degree() >= 1 && p.coeffs().size() > 1 ? "(" + s + ")" : s;
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view name) noexcept {
  if (name == "text") return ReportFormat::text;
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  return std::nullopt;
}

std::string completeness_label(const DescentReport& r) {
  if (r.complete) return "certified complete";
  bool skipped = false, unbounded_incomplete = false;
  for (const auto& o : r.twist_outcomes) {
    skipped = skipped || o.skipped;
    if (!o.complete && o.backend != "bounded") unbounded_incomplete = true;
  }
  if (!skipped && !unbounded_incomplete && r.bounded_height)
    return "complete up to height " + std::to_string(*r.bounded_height);
  return std::string("not certified") + (skipped ? " (twists skipped)" : "");
}

std::string curve_equation(const CurveProblem& p) {
  std::string lhs = p.D == 1 ? "" : p.D.get_str() + "*";
  lhs += "y^" + std::to_string(p.p);
  return lhs + " = " + factor_text(p.f) + factor_text(p.g);
}

std::string emit_report(const DescentReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::text: return emit_text(report);
    case ReportFormat::json: return emit_json(report);
    case ReportFormat::csv: return emit_csv(report);
  }
  return {};
}

}  // namespace descent
