#ifndef RELSIM_REPORT_HPP
#define RELSIM_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace relsim {

// One verified sub-claim with its concrete inputs and exact values, so any
// failure is replayable in isolation.
struct SubCheck {
  std::string name;
  bool pass = false;
  std::string info;
};

struct TheoremReport {
  enum class Status { Pass, Fail, Witness, Skipped };

  std::string theorem_id;
  Status status = Status::Fail;
  std::string description; // witness description / skip reason
  std::vector<SubCheck> details;
  std::uint64_t seed = 0;
  std::int64_t elapsed_us = 0;

  bool ok() const { return status != Status::Fail; }
};

std::string to_string(TheoremReport::Status s);

// Helper that accumulates sub-checks and derives the final status.
class ReportBuilder {
public:
  ReportBuilder(std::string theorem_id, std::uint64_t seed);

  // Records the check; returns `pass` for convenient chaining.
  bool check(const std::string& name, bool pass, const std::string& info = "");

  void note(const std::string& name, const std::string& info);

  TheoremReport finish();                      // pass/fail by sub-checks
  TheoremReport finish_witness(std::string d); // witness status unless a check failed
  TheoremReport finish_skipped(std::string reason);

private:
  TheoremReport report_;
  bool any_fail_ = false;
};

std::string render_text(const std::vector<TheoremReport>& reports);
// JSON array of {theorem_id, status, description, seed, elapsed_us, details[]}.
// Deterministic except for the elapsed_us timing fields.
std::string render_json(const std::vector<TheoremReport>& reports);

} // namespace relsim

#endif
