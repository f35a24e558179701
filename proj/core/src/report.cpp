#include "strata/report.hpp"

#include <json.hpp>

namespace strata {

using nlohmann::json;

std::string to_json_string(const ValidationReport& rep, int indent) {
  json j;
  j["pass"] = rep.ok();
  j["violations"] = json::array();
  for (const auto& v : rep.violations) {
    j["violations"].push_back({{"kind", v.kind},
                               {"where", v.where},
                               {"degree", v.degree},
                               {"message", v.message}});
  }
  return j.dump(indent);
}

std::string to_json_string(const SuiteReport& rep, int indent) {
  json j;
  j["suite"] = rep.suite;
  j["pass"] = rep.pass();
  j["checks"] = json::array();
  for (const auto& c : rep.checks) {
    json jc;
    jc["name"] = c.name;
    jc["samples"] = c.samples;
    jc["pass"] = c.pass();
    jc["failures"] = json::array();
    for (const auto& f : c.failures) {
      jc["failures"].push_back({{"sample", f.sample},
                                {"element", f.element},
                                {"degree", f.degree},
                                {"detail", f.detail}});
    }
    j["checks"].push_back(std::move(jc));
  }
  return j.dump(indent);
}

}  // namespace strata
