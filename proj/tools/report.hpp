#pragma once

// Plain text reports. Every line is "key: value" or an indented matrix entry,
// so two runs on the same input give the same bytes.

#include <sstream>
#include <string>
#include <vector>

#include "instance.hpp"

namespace cli {

class Report {
 public:
  enum Status { Pass = 0, Fail = 1, Truncated = 2 };

  void line(const std::string& key, const std::string& value) { body_ << key << ": " << value << "\n"; }
  void check(const std::string& id, bool ok, const std::string& detail = "") {
    body_ << "check " << id << ": " << (ok ? "pass" : "fail");
    if (!detail.empty()) body_ << " (" << detail << ")";
    body_ << "\n";
    if (!ok) failed_ = true;
  }
  void axioms(const std::string& id, const AxiomReport& r, bool strict) {
    std::string detail = "checked " + std::to_string(r.checked) + ", skipped " + std::to_string(r.skipped);
    check(id, r.ok(), detail);
    for (const auto& f : r.failures)
      body_ << "  failed " << f.diagram << " at " << f.tuple << (f.detail.empty() ? "" : " " + f.detail) << "\n";
    if (strict && r.skipped > 0) truncated_ = true;
  }
  void truncated(const std::string& what) {
    body_ << "truncated: " << what << "\n";
    truncated_ = true;
  }
  void matrix(const std::string& name, const GradedMap& m) {
    body_ << "matrix " << name << ": " << m.target()->dim() << "x" << m.source()->dim() << " degree " << m.degree()
          << "\n";
    for (int c = 0; c < m.source()->dim(); ++c)
      for (const auto& [r, q] : m.column(c)) body_ << "  " << r << " " << c << " " << to_string(q) << "\n";
  }

  Status status() const { return failed_ ? Fail : truncated_ ? Truncated : Pass; }

  std::string text(const std::string& command, const RunConfig& cfg, const std::vector<std::string>& inputs) const {
    std::ostringstream s;
    s << "opalg-report 1\n";
    s << "command: " << command << "\n";
    s << "config: arity_cap=" << cfg.arity_cap << " weight_cap=" << cfg.weight_cap << " degrees=" << cfg.deg_lo << ":"
      << cfg.deg_hi << " order=" << cfg.order << " strict=" << (cfg.strict ? 1 : 0) << "\n";
    for (const auto& i : inputs) s << "input: " << i << "\n";
    s << body_.str();
    static const char* names[] = {"pass", "fail", "truncation-limited"};
    s << "verdict: " << names[status()] << "\n";
    return s.str();
  }

 private:
  std::ostringstream body_;
  bool failed_ = false;
  bool truncated_ = false;
};

}  // namespace cli
