#include "pixtopo/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace pixtopo {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* adjacency_key(Adjacency a) { return a == Adjacency::zero ? "0" : "1"; }

ordered_json curve_json(const CurveVerdict& v) {
  ordered_json out;
  out["simple_closed"] = v.is_simple_closed;
  out["simple_arc"] = v.is_simple_arc;
  out["general_curve"] = v.is_general_curve;
  ordered_json checks = ordered_json::array();
  for (const IdentityCheck& c : v.identity_checks) {
    ordered_json item;
    item["identity"] = c.name;
    item["lhs"] = c.lhs;
    item["rhs"] = c.rhs;
    item["holds"] = c.holds;
    checks.push_back(std::move(item));
  }
  out["identities"] = std::move(checks);
  return out;
}

std::string emit_json(const ReportDocument& doc) {
  const InvariantReport& r = doc.report;
  ordered_json out;
  out["p"] = r.p;
  out["v"] = r.v;
  out["c0"] = r.c;
  out["c1"] = r.c1 ? ordered_json(*r.c1) : ordered_json(nullptr);
  out["h"] = r.h;
  out["b"] = r.b;
  out["t_direct"] = r.t_direct;
  out["t_formula"] = r.t_formula;
  out["consistent"] = r.consistent;
  out["source"] = doc.source;
  out["format_version"] = doc.format_version;
  if (!doc.curves.empty()) {
    ordered_json curves;
    for (const CurveVerdict& v : doc.curves) curves[adjacency_key(v.alpha)] = curve_json(v);
    out["curve"] = std::move(curves);
  }
  return out.dump();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string emit_text(const ReportDocument& doc) {
  const InvariantReport& r = doc.report;
  std::ostringstream os;
  const auto row = [&os](const std::string& key, const std::string& value) {
    os << "  " << std::left << std::setw(14) << key << value << '\n';
  };
  os << "source: " << doc.source << '\n';
  row("p", std::to_string(r.p));
  row("v", std::to_string(r.v));
  row("c", std::to_string(r.c));
  row("c1", r.c1 ? std::to_string(*r.c1) : "-");
  row("h", std::to_string(r.h));
  row("b", std::to_string(r.b));
  row("t", std::to_string(r.t_direct));
  row("t (formula)", std::to_string(r.t_formula) + "   t = v - 2(p + c - h) + b");
  row("consistent", yes_no(r.consistent));
  for (const CurveVerdict& v : doc.curves) {
    os << "curve (" << adjacency_key(v.alpha) << "-adjacency):\n";
    row("simple closed", yes_no(v.is_simple_closed));
    row("simple arc", yes_no(v.is_simple_arc));
    row("general curve", yes_no(v.is_general_curve));
    for (const IdentityCheck& c : v.identity_checks) {
      os << "    " << std::left << std::setw(22) << c.name << c.lhs << " vs " << c.rhs
         << (c.holds ? "  holds" : "  FAILS") << '\n';
    }
  }
  return os.str();
}

}  // namespace

std::string emit_report(const ReportDocument& doc, ReportFormat format) {
  return format == ReportFormat::json ? emit_json(doc) : emit_text(doc);
}

}  // namespace pixtopo
