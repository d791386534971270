#pragma once

#include <string>
#include <utility>
#include <vector>

namespace uq2 {

struct Check {
  std::string id;
  double value = 0.0;
  std::string rel;  // "<", "<=", "==", ">=", ">", or "info"
  double bound = 0.0;
  bool pass = true;
};

struct Report {
  std::string suite;
  std::vector<std::pair<std::string, double>> params;
  std::vector<Check> checks;
  std::string error;         // set when the suite threw
  double wall_seconds = 0.0; // summary only; never written to the report file

  Check& check(std::string id, double value, std::string rel, double bound);
  Check& info(std::string id, double value);
  bool pass() const;
  int failures() const;
};

std::string format_number(double x);
// Line-delimited records: header, one line per check, footer.
std::string to_jsonl(const Report& r);
std::string summary_table(const std::vector<Report>& reports);

}  // namespace uq2
