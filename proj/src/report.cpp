#include <cmath>
#include <cstdio>
#include "json.hpp"
#include <sstream>

#include "uq2/report.hpp"

namespace uq2 {

Check& Report::check(std::string id, double value, std::string rel, double bound) {
  bool ok = false;
  if (rel == "<") ok = value < bound;
  else if (rel == "<=") ok = value <= bound;
  else if (rel == "==") ok = value == bound;
  else if (rel == ">=") ok = value >= bound;
  else if (rel == ">") ok = value > bound;
  else throw std::invalid_argument("unknown relation " + rel);
  checks.push_back({std::move(id), value, std::move(rel), bound, ok});
  return checks.back();
}

Check& Report::info(std::string id, double value) {
  checks.push_back({std::move(id), value, "info", 0.0, true});
  return checks.back();
}

bool Report::pass() const { return error.empty() && failures() == 0; }

int Report::failures() const {
  int f = 0;
  for (const auto& c : checks) f += !c.pass;
  return f;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "\"nan\"";
  if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_jsonl(const Report& r) {
  auto str = [](const std::string& s) { return nlohmann::json(s).dump(); };
  std::ostringstream os;
  os << "{\"record\":\"suite\",\"suite\":" << str(r.suite) << ",\"params\":{";
  for (std::size_t i = 0; i < r.params.size(); ++i)
    os << (i ? "," : "") << str(r.params[i].first) << ":" << format_number(r.params[i].second);
  os << "}}\n";
  for (const auto& c : r.checks) {
    os << "{\"record\":\"check\",\"id\":" << str(c.id) << ",\"value\":" << format_number(c.value)
       << ",\"rel\":" << str(c.rel);
    if (c.rel != "info") os << ",\"bound\":" << format_number(c.bound);
    os << ",\"pass\":" << (c.pass ? "true" : "false") << "}\n";
  }
  os << "{\"record\":\"end\",\"suite\":" << str(r.suite) << ",\"checks\":" << r.checks.size()
     << ",\"failures\":" << r.failures();
  if (!r.error.empty()) os << ",\"error\":" << str(r.error);
  os << ",\"pass\":" << (r.pass() ? "true" : "false") << "}\n";
  return os.str();
}

std::string summary_table(const std::vector<Report>& reports) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-14s %7s %9s %9s  %s\n", "suite", "checks", "failures", "seconds", "status");
  os << line;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-14s %7zu %9d %9.2f  %s\n", r.suite.c_str(), r.checks.size(), r.failures(),
                  r.wall_seconds, r.pass() ? "PASS" : (r.error.empty() ? "FAIL" : "ERROR"));
    os << line;
    if (!r.error.empty()) os << "  error: " << r.error << "\n";
    for (const auto& c : r.checks)
      if (!c.pass) {
        std::snprintf(line, sizeof line, "  failed %s: %.6g %s %.6g\n", c.id.c_str(), c.value, c.rel.c_str(), c.bound);
        os << line;
      }
  }
  return os.str();
}

}  // namespace uq2
