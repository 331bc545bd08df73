#include "smashprime/report.hpp"

#include <json.hpp>

#include "smashprime/error.hpp"

namespace smashprime {

using nlohmann::json;

std::string CheckReport::summary(std::size_t max_items) const {
  if (ok()) return "ok";
  std::string s = std::to_string(violations.size()) + " violation(s):";
  for (std::size_t i = 0; i < violations.size() && i < max_items; ++i) {
    const auto& v = violations[i];
    s += " [" + v.check + " @ " + v.location;
    if (!v.lhs.empty() || !v.rhs.empty()) s += ": " + v.lhs + " != " + v.rhs;
    s += "]";
  }
  if (violations.size() > max_items) s += " ...";
  return s;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::vacuous: return "vacuous";
    case Status::unsupported: return "unsupported";
    case Status::input_error: return "input_error";
  }
  throw_internal("bad status");
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "vacuous") return Status::vacuous;
  if (s == "unsupported") return Status::unsupported;
  if (s == "input_error") return Status::input_error;
  throw_input("unknown status '" + s + "'");
}

std::string Report::to_json_line() const {
  json j;
  j["command"] = command;
  j["instance"] = instance;
  if (seed) j["seed"] = *seed;
  json h = json::object();
  for (const auto& [k, v] : hypotheses) h[k] = v;
  j["hypotheses"] = h;
  j["conclusion"] = conclusion;
  json vs = json::array();
  for (const auto& v : violations)
    vs.push_back({{"check", v.check}, {"location", v.location}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  j["violations"] = vs;
  j["status"] = to_string(status);
  return j.dump();
}

Report Report::from_json_line(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw_input(std::string("report parse error: ") + e.what());
  }
  Report r;
  r.command = j.at("command").get<std::string>();
  r.instance = j.at("instance").get<std::string>();
  if (j.contains("seed")) r.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& [k, v] : j.at("hypotheses").items()) r.hypotheses.emplace_back(k, v.get<std::string>());
  r.conclusion = j.at("conclusion").get<std::string>();
  for (const auto& v : j.at("violations"))
    r.violations.push_back({v.at("check").get<std::string>(), v.at("location").get<std::string>(),
                            v.at("lhs").get<std::string>(), v.at("rhs").get<std::string>()});
  r.status = status_from_string(j.at("status").get<std::string>());
  return r;
}

int exit_code(const std::vector<Report>& reports) {
  bool any_fail = false, any_unsupported = false;
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::input_error: return 2;
      case Status::unsupported: any_unsupported = true; break;
      case Status::fail: any_fail = true; break;
      default: break;
    }
  }
  if (any_unsupported) return 3;
  return any_fail ? 1 : 0;
}

}  // namespace smashprime
