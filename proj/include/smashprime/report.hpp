#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace smashprime {

/// One failed check: what was tested, where, and the two sides that differ.
struct Violation {
  std::string check;
  std::string location;
  std::string lhs;
  std::string rhs;

  bool operator==(const Violation&) const = default;
};

/// Violation list produced by the verify_* operations; empty means valid.
struct CheckReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string check, std::string location, std::string lhs = {}, std::string rhs = {}) {
    violations.push_back({std::move(check), std::move(location), std::move(lhs), std::move(rhs)});
  }
  void merge(const CheckReport& o) {
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  }
  std::string summary(std::size_t max_items = 5) const;
};

enum class Status { pass, fail, vacuous, unsupported, input_error };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

/// Machine-readable outcome of one CLI command or suite instance. Serialized
/// as one JSON object per line; scalar values are exact strings throughout.
struct Report {
  std::string command;
  std::string instance;
  std::optional<std::uint64_t> seed;
  std::vector<std::pair<std::string, std::string>> hypotheses;  // name -> exact value
  std::string conclusion;
  std::vector<Violation> violations;
  Status status = Status::pass;

  void hypothesis(const std::string& name, const std::string& value) {
    hypotheses.emplace_back(name, value);
  }
  void hypothesis(const std::string& name, bool value) {
    hypotheses.emplace_back(name, value ? "true" : "false");
  }
  /// Sets fail/pass from the violation list (fail iff nonempty).
  void finalize() { status = violations.empty() ? Status::pass : Status::fail; }

  std::string to_json_line() const;
  static Report from_json_line(const std::string& line);

  bool operator==(const Report&) const = default;
};

/// Exit code for a batch of reports: input_error(2) > unsupported(3) > fail(1) > pass(0).
int exit_code(const std::vector<Report>& reports);

}  // namespace smashprime
