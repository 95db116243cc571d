#include "relsim/report.hpp"

#include <json.hpp>
#include <sstream>

namespace relsim {

std::string to_string(TheoremReport::Status s) {
  switch (s) {
    case TheoremReport::Status::Pass: return "pass";
    case TheoremReport::Status::Fail: return "fail";
    case TheoremReport::Status::Witness: return "witness";
    case TheoremReport::Status::Skipped: return "skipped";
  }
  return "?";
}

ReportBuilder::ReportBuilder(std::string theorem_id, std::uint64_t seed) {
  report_.theorem_id = std::move(theorem_id);
  report_.seed = seed;
}

bool ReportBuilder::check(const std::string& name, bool pass, const std::string& info) {
  report_.details.push_back({name, pass, info});
  if (!pass) any_fail_ = true;
  return pass;
}

void ReportBuilder::note(const std::string& name, const std::string& info) {
  report_.details.push_back({name, true, info});
}

TheoremReport ReportBuilder::finish() {
  report_.status = any_fail_ ? TheoremReport::Status::Fail : TheoremReport::Status::Pass;
  return report_;
}

TheoremReport ReportBuilder::finish_witness(std::string d) {
  report_.status = any_fail_ ? TheoremReport::Status::Fail : TheoremReport::Status::Witness;
  report_.description = std::move(d);
  return report_;
}

TheoremReport ReportBuilder::finish_skipped(std::string reason) {
  report_.status = TheoremReport::Status::Skipped;
  report_.description = std::move(reason);
  return report_;
}

std::string render_text(const std::vector<TheoremReport>& reports) {
  std::ostringstream out;
  for (const TheoremReport& r : reports) {
    out << "[" << (r.ok() ? (r.status == TheoremReport::Status::Skipped ? "SKIP" : "PASS")
                          : "FAIL")
        << "] " << r.theorem_id << " (" << r.details.size() << " checks, "
        << to_string(r.status) << ")";
    if (!r.description.empty()) out << " -- " << r.description;
    out << "\n";
    for (const SubCheck& c : r.details) {
      if (c.pass && r.ok()) continue; // only spell out failures, or all on fail
      out << "    [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
      if (!c.info.empty()) out << ": " << c.info;
      out << "\n";
    }
  }
  return out.str();
}

std::string render_json(const std::vector<TheoremReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const TheoremReport& r : reports) {
    nlohmann::json jr;
    jr["theorem_id"] = r.theorem_id;
    jr["status"] = to_string(r.status);
    jr["description"] = r.description;
    jr["seed"] = r.seed;
    jr["elapsed_us"] = r.elapsed_us;
    nlohmann::json details = nlohmann::json::array();
    for (const SubCheck& c : r.details) {
      nlohmann::json jc;
      jc["name"] = c.name;
      jc["pass"] = c.pass;
      jc["info"] = c.info;
      details.push_back(jc);
    }
    jr["details"] = details;
    arr.push_back(jr);
  }
  return arr.dump(2) + "\n";
}

} // namespace relsim
